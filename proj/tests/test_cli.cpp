#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(THETALIFT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("table suite exits 0") {
  const Result r = run("verify table1 --vmax 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("5/5 passed") != std::string::npos);
}

TEST_CASE("borch data JSON for the level-one block") {
  const Result r = run("borch data --u 18 --d 1,1 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["data"]["A"] == "1");
  CHECK(j["data"]["C"] == "1");
  CHECK(j["data"]["D1"] == "0");
  CHECK(j["data"]["weight"] == "10");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("blocks classify --u 18 --d 1,1,3").code == 2);
  CHECK(run("blocks classify --u 18 --d 1,1 --bogus").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("verify table1 --threads zero").code == 2);
  CHECK(run("borch data --u -6 --d 1,1").code == 2);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::string args = "grit --u 12 --d 1^4 --fjmax 2 --trunc 3 --json";
  const Result a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Result c = run("verify section2 --json --threads 1"), d = run("verify section2 --json --threads 3");
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("expansion JSON follows the series layout") {
  const Result r = run("blocks expand --u 18 --d 1,1 --trunc 2 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["series"]["qden"] == 1);
  CHECK(j["series"]["trunc"] == 2);
  CHECK(j["series"]["terms"][0]["num"].is_string());
}

TEST_CASE("comparison and hull commands") {
  CHECK(run("borch compare --u 18 --d 1,1 --against grit --fjmax 2 --trunc 3").code == 0);
  const Result h = run("hull --u 18 --d 1,1 --trunc 3 --check-mul --pairs 50 --json");
  REQUIRE(h.code == 0);
  const auto j = nlohmann::json::parse(h.out);
  CHECK(j["checkMul"]["failures"] == 0);
  CHECK(j["hull"]["recession"] == true);
}

TEST_CASE("config file values yield to flags") {
  const std::string path = "thetalift_test.cfg";
  FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fputs("trunc=1\njson=true\n", f);
  std::fclose(f);
  const Result a = run("--config " + path + " blocks expand --u 18 --d 1,1");
  REQUIRE(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["series"]["trunc"] == 1);
  const Result b = run("--config " + path + " blocks expand --u 18 --d 1,1 --trunc 2");
  CHECK(nlohmann::json::parse(b.out)["series"]["trunc"] == 2);
  std::remove(path.c_str());
}

TEST_CASE("thread count from the environment") {
  const Result r = run("verify table1 --vmax 2");
  CHECK(r.code == 0);
  setenv("THETALIFT_THREADS", "bogus", 1);
  CHECK(run("verify table1 --vmax 2").code == 2);
  setenv("THETALIFT_THREADS", "2", 1);
  CHECK(run("verify table1 --vmax 2").code == 0);
  unsetenv("THETALIFT_THREADS");
}

TEST_CASE("definitions on request") {
  const Result r = run("borch data --u 18 --d 1,1 --refs");
  CHECK(r.code == 0);
  CHECK(r.out.find("D1: sum_{n < 0, r} sigma_1(-n) c(n, r)") != std::string::npos);
}
