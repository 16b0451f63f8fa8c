#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "thetalift/blocks.hpp"
#include "thetalift/borcherds.hpp"

namespace thetalift {

struct VerificationReport {
  std::string caseId;
  std::string expected;
  std::string computed;
  bool pass = false;
  double runtimeMs = 0;
};

struct VerifyOptions {
  std::int64_t trunc = 6;
  std::int64_t fjmax = 3;
  std::int64_t vmax = 10;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// A reference example: theta block, singular part as (n, r, c) with both
/// signs of r, and divisor as (D, r, multiplicity).
struct GoldenCase {
  std::string id;
  int u;
  std::vector<int> d;
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> singular;
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> divisor;
};

struct Table1Row {
  std::int64_t v;
  std::string weight;
  std::string multiplicity;
};

const std::vector<GoldenCase>& golden_cases();
const std::vector<Table1Row>& table1_rows();

struct FamilyCase {
  std::string id;
  ThetaBlockSpec spec;
  /// Nonempty for products of theta quarks: the (a, b) pairs.
  std::vector<std::pair<int, int>> quarks;
};
std::vector<FamilyCase> family_cases();

/// Spec list used for corpus-wide invariants: the golden cases, the family
/// cases, level-one orders 2..4 and seeded random valid specs.
std::vector<ThetaBlockSpec> test_corpus(unsigned randomCount = 12, unsigned seed = 20240601);

/// Random spec with 24 | u + 3l, even sum of d, order in [1, vmax] and a
/// holomorphic block when the order is odd.
ThetaBlockSpec random_valid_spec(std::mt19937& rng, int vmax = 3, int maxEll = 6, int maxD = 3);

/// Runs fn(i) for i in [0, n) on up to `threads` workers; results keep index order.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);
unsigned resolve_threads(unsigned requested);

/// Grit(phi) for a theta block, entries m t for m = 1..M through q^trunc.
FJExpansion grit_of_spec(const ThetaBlockSpec& spec, std::int64_t M, std::int64_t trunc);
/// Borch(psi) for psi = (-1)^v (phi|V_2)/phi, entries C..C + M t through q^trunc.
FJExpansion borch_of_spec(const ThetaBlockSpec& spec, std::int64_t M, std::int64_t trunc);
std::string describe(const FJComparison& cmp);

std::vector<VerificationReport> verify_table1(const VerifyOptions& opts);
std::vector<VerificationReport> verify_section2(const VerifyOptions& opts);
std::vector<VerificationReport> verify_zagier37(std::int64_t nmax, std::int64_t rmax, std::int64_t trunc,
                                                const VerifyOptions& opts);
std::vector<VerificationReport> verify_families(const VerifyOptions& opts);

/// Zagier sums: for each (n, r) with |n| <= nmax, |r| <= rmax, the value of
/// sum over alpha of c(6 alpha^2 + n alpha, 30 alpha + r; f).
struct ZagierResult {
  std::int64_t n, r;
  std::string sum;
  std::int64_t terms;
};
struct ZagierRun {
  std::vector<ZagierResult> sums;
  std::int64_t windowUsed = 0;
  bool bandMatchesGeneric = false;
  bool nonpositiveVanish = false;
};
ZagierRun zagier37_sums(std::int64_t nmax, std::int64_t rmax, std::int64_t trunc);

}  // namespace thetalift
