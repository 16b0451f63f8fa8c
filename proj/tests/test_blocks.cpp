#include <doctest.h>

#include "support.hpp"
#include "thetalift/arith.hpp"
#include "thetalift/blocks.hpp"
#include "thetalift/verify.hpp"

using namespace thetalift;

namespace {

Rational direct_ord(const FJSeries& f, const Rational& t, const Rational& x) {
  bool first = true;
  Rational best;
  for (const auto& [q, p] : f.rows())
    for (const auto& [z2, c] : p.terms()) {
      const Rational v = frac(q, f.qden()) + frac(z2, 2) * x + t * x * x;
      if (first || v < best) best = v;
      first = false;
    }
  return best;
}

}  // namespace

TEST_CASE("spec accessors") {
  const ThetaBlockSpec s(-6, {5, 1, 2, 1, 3, 2, 4, 1, 2, 3});
  CHECK(s.d().front() == 1);
  CHECK(s.weight() == 2);
  CHECK(s.index_int() == 37);
  CHECK(s.order_int() == 1);
  CHECK(s.to_string() == "(-6; 1,1,1,2,2,2,3,3,4,5)");
  CHECK(ThetaBlockSpec(11, {1, 1, 1}).index() == frac(3, 2));
  CHECK_THROWS_AS(ThetaBlockSpec(11, {1, 1, 1}).index_int(), Error);
  CHECK_THROWS_AS(ThetaBlockSpec(12, {1, 1, 1}), Error);
  CHECK_THROWS_AS(ThetaBlockSpec(18, {1, 1, 3}), Error);
  CHECK_THROWS_AS(ThetaBlockSpec(18, {0, 2}), Error);
  CHECK_THROWS_AS(ThetaBlockSpec(2, {1, 1}).order_int(), Error);
}

TEST_CASE("d-list parsing") {
  CHECK(parse_d_list("1^4,2") == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(parse_d_list(" 3, 1 ") == std::vector<int>{3, 1});
  CHECK_THROWS_AS(parse_d_list("1,,2"), Error);
  CHECK_THROWS_AS(parse_d_list("a"), Error);
  CHECK_THROWS_AS(parse_d_list("2^0"), Error);
}

TEST_CASE("theta blocks agree with lacunary theta sums and the pentagonal eta") {
  for (const auto& spec : test_corpus(6, 7)) {
    const std::int64_t trunc = spec.order_int() + 4;
    const FJSeries got = build_theta_block(spec, trunc);
    const oracle::Series want = oracle::theta_block(spec.u(), spec.d(), trunc);
    INFO(spec.to_string());
    CHECK(testsupport::to_oracle(got) == want);
  }
}

TEST_CASE("eta^24 is the discriminant function") {
  const FJSeries delta = build_theta_block(ThetaBlockSpec(24, {}), 6);
  const std::vector<int> tau = {0, 1, -24, 252, -1472, 4830, -6048};
  for (int n = 0; n <= 6; ++n) CHECK(delta.coeff_scaled(n, 0) == tau[static_cast<std::size_t>(n)]);
}

TEST_CASE("blocks have order v, odd symmetry and multiply factorwise") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 25; ++iter) {
    const ThetaBlockSpec a = random_valid_spec(rng, 2, 4, 3), b = random_valid_spec(rng, 2, 4, 3);
    const FJSeries fa = build_theta_block(a, 5), fb = build_theta_block(b, 5);
    CHECK(fa.min_q() == a.order_int());
    for (const auto& [q, p] : fa.rows())
      for (const auto& [z2, c] : p.terms()) CHECK(p.coeff(-z2) == (a.ell() % 2 == 0 ? c : -c));
    std::vector<int> d = a.d();
    d.insert(d.end(), b.d().begin(), b.d().end());
    const ThetaBlockSpec ab(a.u() + b.u(), d);
    const FJSeries prod = fj_mul(fa, fb);
    CHECK(fj_equal_through(build_theta_block(ab, prod.trunc()), prod, prod.trunc()));
  }
}

TEST_CASE("classification") {
  CHECK(classify_theta_block(ThetaBlockSpec(18, {1, 1})) == Classification::Cusp);
  CHECK(classify_theta_block(ThetaBlockSpec(0, {1, 1, 1, 1, 1, 1, 1, 1})) == Classification::Holomorphic);
  CHECK(classify_theta_block(ThetaBlockSpec(-6, {1, 1, 1, 2, 2, 2, 3, 3, 4, 5})) == Classification::Cusp);
  CHECK(classify_theta_block(ThetaBlockSpec(-6, {1, 1})) == Classification::Weak);
  CHECK(classify_theta_block(ThetaBlockSpec(-30, {1, 1})) == Classification::WeaklyHolomorphic);
  CHECK(to_string(Classification::Cusp) == "cusp");
}

TEST_CASE("ord minimum of the level-one block") {
  const OrdProfile p = ord_profile(ThetaBlockSpec(18, {1, 1}));
  CHECK(p.minimum == frac(3, 4));
  CHECK(p.argmin == std::vector<Rational>{frac(1, 2)});
  CHECK(bar_B2(frac(3, 2)) == bar_B2(frac(1, 2)));
  CHECK(bar_B2(0) == frac(1, 6));
}

TEST_CASE("ord profile matches the direct minimum over the support") {
  for (const auto& spec : test_corpus(8, 3)) {
    const std::int64_t trunc = spec.order_int() + spec.index_int() + 2;
    const FJSeries f = build_theta_block(spec, trunc);
    const OrdProfile prof = ord_profile(spec);
    INFO(spec.to_string());
    for (const auto& x : prof.argmin) CHECK(direct_ord(f, spec.index(), x) == prof.minimum);
    for (const auto& x : prof.breakpoints) CHECK(direct_ord(f, spec.index(), x) == ord_value(spec, x));
    for (int j = 0; j <= 12; ++j) CHECK(direct_ord(f, spec.index(), frac(j, 12)) == ord_value(spec, frac(j, 12)));
  }
}

TEST_CASE("support respects the classification") {
  for (const auto& spec : test_corpus(8, 4)) {
    const Classification c = classify_theta_block(spec);
    const FJSeries f = build_theta_block(spec, spec.order_int() + 5);
    for (const auto& [q, p] : f.rows())
      for (const auto& [z2, coef] : p.terms()) {
        const std::int64_t disc = 2 * spec.index2() * q - (z2 / 2) * (z2 / 2);
        INFO(spec.to_string());
        if (c == Classification::Cusp) CHECK(disc > 0);
        if (c == Classification::Holomorphic) CHECK(disc >= 0);
      }
  }
}

TEST_CASE("theta quarks") {
  CHECK(quark_index(1, 2) == 7);
  CHECK(quark_index(1, 1) == 3);
  const FJSeries q11 = build_theta_quark(1, 1, 4 * 24);
  CHECK(q11.qden() == 24);
  // theta_1 theta_1 theta_2 / eta starts at q^(3/8 - 1/24) = q^(1/3).
  CHECK(q11.min_q() == 8);
  const FJSeries cube = fj_normalize_qden(fj_mul(fj_mul(q11, q11), q11));
  REQUIRE(cube.qden() == 1);
  CHECK(cube.trunc() >= 4);
  const ThetaBlockSpec spec(-3, {1, 1, 1, 1, 1, 1, 2, 2, 2});
  CHECK(spec.weight() == 3);
  CHECK(spec.index_int() == 9);
  CHECK(fj_equal_through(cube, build_theta_block(spec, cube.trunc()), cube.trunc()));
}

TEST_CASE("fractional-order products") {
  // eta theta_1 has order 1/6 and integral weight 1.
  const FJSeries f = eta_theta_product(1, {1}, 24, 3 * 24);
  CHECK(f.min_q() == 4);
  CHECK(f.coeff(frac(1, 6), frac(1, 2)) == 1);
  CHECK(f.coeff(frac(1, 6), frac(-1, 2)) == -1);
  CHECK_THROWS_AS(eta_theta_product(1, {1}, 1, 3), Error);
  CHECK_THROWS_AS(build_theta_block(ThetaBlockSpec(1, {1}), 3), Error);
}
