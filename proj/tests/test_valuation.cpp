#include <doctest.h>

#include <set>

#include "support.hpp"
#include "thetalift/blocks.hpp"
#include "thetalift/valuation.hpp"
#include "thetalift/verify.hpp"

using namespace thetalift;

namespace {

std::vector<oracle::Pt> to_pts(const std::vector<Point>& pts) {
  std::vector<oracle::Pt> out;
  for (const auto& p : pts) out.push_back({p.n, p.r});
  return out;
}

std::vector<oracle::Pt> sorted_pts(const SupportHull& h) {
  auto v = to_pts(h.extremePoints);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("hull extreme points match the brute-force oracle") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> nd(-4, 4), rd(-4, 4), cnt(1, 14);
  for (int iter = 0; iter < 150; ++iter) {
    std::vector<Point> pts;
    const int c = cnt(rng);
    for (int i = 0; i < c; ++i) pts.push_back({Rational(nd(rng)), frac(rd(rng), 1 + iter % 2)});
    for (bool ray : {false, true}) {
      auto want = oracle::brute_extreme_points(to_pts(pts), ray);
      std::sort(want.begin(), want.end());
      CHECK(sorted_pts(hull_of_points(pts, ray)) == want);
    }
  }
}

TEST_CASE("hull of a product is the Minkowski sum of the hulls") {
  std::mt19937 rng(32);
  for (int iter = 0; iter < 200; ++iter) {
    const FJSeries f = testsupport::random_laurent(rng), g = testsupport::random_laurent(rng);
    const FJSeries fg = fj_mul(f, g);
    const oracle::Series brute = oracle::multiply(testsupport::to_oracle(f), testsupport::to_oracle(g), 1000);
    std::vector<oracle::Pt> support;
    for (const auto& [key, c] : brute) support.push_back({Rational(key.first), frac(key.second, 2)});
    auto want = oracle::brute_extreme_points(support, false);
    std::sort(want.begin(), want.end());
    const SupportHull sum = minkowski_sum(hull_of_support(f, false), hull_of_support(g, false));
    CHECK(sorted_pts(sum) == want);
    CHECK(hull_of_support(fg, false) == sum);
  }
}

TEST_CASE("extreme points lie in the support") {
  for (const auto& spec : test_corpus(6, 8)) {
    const FJSeries f = build_theta_block(spec, spec.order_int() + 4);
    std::set<std::pair<Rational, Rational>> support;
    for (const auto& p : support_points(f)) support.insert({p.n, p.r});
    for (bool ray : {false, true})
      for (const auto& p : hull_of_support(f, ray).extremePoints) CHECK(support.count({p.n, p.r}) == 1);
  }
}

TEST_CASE("ord via the hull matches the closed formula at breakpoints") {
  for (const auto& spec : test_corpus(8, 9)) {
    INFO(spec.to_string());
    const FJSeries f = build_theta_block(spec, spec.order_int() + spec.index_int() + 2);
    const SupportHull h = hull_of_support(f, true);
    const OrdProfile prof = ord_profile(spec);
    for (const auto& x : prof.breakpoints) CHECK(ord_via_hull(h, x) + spec.index() * x * x == ord_value(spec, x));
  }
}

TEST_CASE("hull utilities") {
  const SupportHull a = hull_of_points({{0, 0}, {1, 1}}, false), b = hull_of_points({{0, 0}}, true);
  CHECK_THROWS_AS(minkowski_sum(a, b), Error);
  CHECK_THROWS_AS(hull_of_points({}, true), Error);
  CHECK_THROWS_AS(hull_of_support(FJSeries(1, 3), true), Error);
  const SupportHull s = hull_scale(a, 2);
  CHECK(s.extremePoints.back().n == 2);
  CHECK_THROWS_AS(hull_scale(a, 0), Error);
  CHECK(series_valuation_1d(FJSeries(24, 48, {{8, ZetaPoly::constant(1)}})) == frac(1, 3));
  // The ray keeps only the lowest point in each column.
  const SupportHull r = hull_of_points({{0, 0}, {3, 0}, {1, 1}, {5, 1}}, true);
  CHECK(r.extremePoints.size() == 2);
}
