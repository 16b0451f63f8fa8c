#include <functional>

#include "thetalift/arith.hpp"
#include "thetalift/borcherds.hpp"

namespace thetalift {

namespace {

// Parity of sum over partitions of h into odd parts (multiplicity r_i of
// part i) of prod C(top, r_i).
int odd_partition_binomial_parity(std::int64_t h, std::int64_t top) {
  if (h < 0) return 0;
  int total = 0;
  std::function<void(std::int64_t, std::int64_t, int)> walk = [&](std::int64_t part,
                                                                   std::int64_t left, int acc) {
    if (left == 0) {
      total ^= acc;
      return;
    }
    if (part > left) return;
    for (std::int64_t r = 0; r * part <= left; ++r) {
      const int b = mpz_odd_p(binomial(Integer(top), r).get_mpz_t()) ? 1 : 0;
      if (b == 0) continue;
      walk(part + 2, left - r * part, acc & b);
    }
  };
  walk(1, h, 1);
  return total;
}

}  // namespace

ParityReduction d0_parity_reduced(std::int64_t v) {
  if (v < 1) throw Error("parity reduction needs v >= 1");
  ParityReduction out;
  out.v = v;
  out.w = v;
  while (out.w % 2 == 0) {
    out.w /= 2;
    ++out.beta;
  }
  out.closedForm = (out.beta % 2 == 1 && out.w == 1) ? 1 : 0;

  // D0 = sum over n >= 1 of c(-n^2, 0) mod 2, each via odd partitions of v/2 - n^2.
  if (v % 2 == 0) {
    for (std::int64_t n = 1; n * n <= v / 2; ++n)
      out.tSum ^= odd_partition_binomial_parity(v / 2 - n * n, 12 * v);
  }

  if (out.beta % 2 == 1 && out.w % 8 == 1) {
    const std::int64_t mu = (out.w - 1) / 8;
    out.mu = mu;
    for (std::int64_t lambda = 0; lambda * (lambda + 1) / 2 <= mu; ++lambda)
      out.hRoute ^= odd_partition_binomial_parity(mu - lambda * (lambda + 1) / 2, 3 + 24 * mu);
  }

  if (out.closedForm != out.tSum || out.closedForm != out.hRoute)
    throw Error("parity routes disagree for v = " + std::to_string(v));
  out.parity = out.closedForm;
  return out;
}

namespace {

std::vector<std::int64_t> signed_entries(const std::vector<int>& d) {
  std::vector<std::int64_t> e;
  for (auto it = d.rbegin(); it != d.rend(); ++it) e.push_back(-*it);
  for (int x : d) e.push_back(x);
  return e;
}

std::vector<std::int64_t> subset_sums(const std::vector<std::int64_t>& e, int size) {
  std::vector<std::int64_t> out;
  const unsigned n = static_cast<unsigned>(e.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::int64_t s = 0;
    for (unsigned i = 0; i < n; ++i)
      if (mask >> i & 1u) s += e[i];
    out.push_back(s);
  }
  return out;
}

std::int64_t sum_squares(const std::vector<std::int64_t>& e) {
  std::int64_t s = 0;
  for (auto x : e) s += x * x;
  return s;
}

}  // namespace

bool comb_identity_subset_sum(const std::vector<int>& d, int a) {
  const auto e = signed_entries(d);
  const std::int64_t ell = static_cast<std::int64_t>(d.size());
  if (a < 1 || a > 2 * ell) throw Error("subset size out of range");
  Integer lhs = 0;
  for (auto s : subset_sums(e, a)) lhs += Integer(s) * s;
  const Integer rhs = binomial(Integer(2 * ell - 2), a - 1) * sum_squares(e);
  return lhs == rhs;
}

bool comb_identity_profile(const std::vector<int>& d, const std::vector<int>& b) {
  const auto e = signed_entries(d);
  const std::int64_t ell = static_cast<std::int64_t>(d.size());
  std::vector<std::vector<std::int64_t>> sums;
  for (int bi : b) {
    if (bi < 1 || bi > 2 * ell) throw Error("subset size out of range");
    sums.push_back(subset_sums(e, bi));
  }
  Integer total = 0;
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t acc) {
    if (i == sums.size()) {
      total += Integer(acc) * acc;
      return;
    }
    for (auto s : sums[i]) walk(i + 1, acc + s);
  };
  walk(0, 0);
  return total % sum_squares(e) == 0;
}

}  // namespace thetalift
