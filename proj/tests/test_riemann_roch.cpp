#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgap/catalog.hpp"
#include "pgap/error.hpp"
#include "pgap/json_io.hpp"
#include "pgap/local_series.hpp"
#include "pgap/riemann_roch.hpp"
#include "pgap/suites.hpp"

using namespace pgap;

namespace {

const RiemannRochOracle& oracle_for(int n) {
  static const RiemannRochOracle o3(Curve(standard_curve(3)));
  static const RiemannRochOracle o4(Curve(standard_curve(4)));
  static const RiemannRochOracle o5(Curve(standard_curve(5)));
  return n == 3 ? o3 : n == 4 ? o4 : o5;
}

void expect_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    CAPTURE(c.suite);
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

bool in_L(int n, const ThreePointDivisor& d, int u, int v) {
  const auto val = monomial_valuations(n, u, v);
  return val[0] + d.a >= 0 && val[1] + d.b >= 0 && val[2] + d.c >= 0;
}

}  // namespace

TEST_CASE("oracle dimension examples") {
  const auto& o4 = oracle_for(4);
  CHECK(o4.dimension({0, 0, 0}) == 1);
  CHECK(o4.dimension({-1, 0, 0}) == 0);
  CHECK(o4.dimension({3, -2, -4}) == 0);
  CHECK(o4.dimension({3, 0, 0}) == 1);
  CHECK(o4.dimension(canonical_divisor(4)) == 6);
  CHECK(canonical_divisor(4) == ThreePointDivisor{8, 2, 0});
}

TEST_CASE("basis examples") {
  const auto& o4 = oracle_for(4);
  const RRSpace zero = o4.basis({0, 0, 0});
  CHECK(zero.dimension == 1);
  CHECK(zero.basis.size() == 1);
  // 5P1: dimension 2 and the monomials 1, x lie in it, so they form a basis.
  CHECK(o4.dimension({5, 0, 0}) == 2);
  CHECK(in_L(4, {5, 0, 0}, 0, 0));
  CHECK(in_L(4, {5, 0, 0}, 1, 0));
  // 4P2: dimension 2 with 1 and y/x.
  CHECK(o4.dimension({0, 4, 0}) == 2);
  CHECK(in_L(4, {0, 4, 0}, -1, 1));
  for (const ThreePointDivisor& d : {ThreePointDivisor{5, 0, 0}, ThreePointDivisor{0, 4, 0}, ThreePointDivisor{9, 4, 0},
                                     ThreePointDivisor{-3, 7, 5}}) {
    const RRSpace s = o4.basis(d);
    CHECK(static_cast<int>(s.basis.size()) == o4.dimension(d));
    for (std::size_t i = 0; i < s.basis.size(); ++i) CHECK(o4.satisfies_divisor(s, i));
    const json j = rr_space_to_json(s);
    CHECK(j["dimension"] == s.dimension);
  }
}

TEST_CASE("closed-form examples") {
  CHECK(dim_mP_formula(4, 3, PointId::P1) == 1);
  CHECK(dim_mP_formula(4, 5, PointId::P2) == 2);
  CHECK(dim_mP_formula(5, 10, PointId::P3) == 4);
  CHECK(dim_shifted_formula(4, 3, ShiftedVariant::P2_minus_P1) == 0);
  CHECK(dim_shifted_formula(4, 8, ShiftedVariant::P3_minus_P2) == 2);
  CHECK(dim_shifted_formula(5, 9, ShiftedVariant::P1_minus_P3) == 1);
  CHECK(dim_Md_Nd(4, 1, 1) == 1);
  CHECK(dim_Md_Nd(4, 2, 1) == 3);
  CHECK(dim_Md_Nd(5, 2, 2) == 5);
  CHECK(dim_Sd(4, -1, 0, 0) == 0);
  CHECK(dim_Sd(4, 1, 1, 0) == 6);
  CHECK(dim_Sd(4, 1, 1, 1) == 10);
  CHECK(dim_Sd_plus_e(4, 0, 0, 0, 2) == 1);
  CHECK(dim_Sd_plus_e(4, 1, 1, 0, 0) == 6);
  CHECK(dim_Sd_plus_e(5, 1, 0, 0, 2) == 3);
  CHECK(canonical_divisor(3) == ThreePointDivisor{3, 1, 0});
  CHECK(canonical_divisor(5) == ThreePointDivisor{15, 3, 0});
  for (int n = 3; n <= 8; ++n) CHECK(canonical_divisor(n).degree() == n * (n - 1) - 2);
}

TEST_CASE("ell(mP) from an independent semigroup count") {
  // l(mP) = #{s in H(P) : s <= m}, with H(P) generated by s(n-1)+1.
  for (int n = 3; n <= 5; ++n) {
    const int g = n * (n - 1) / 2;
    std::vector<bool> member(2 * g + 1, false);
    member[0] = true;
    for (int v = 1; v <= 2 * g; ++v)
      for (int s = 1; s <= n; ++s) {
        const int gen = s * (n - 1) + 1;
        if (gen <= v && member[v - gen]) member[v] = true;
      }
    int count = 0;
    for (int m = 0; m <= 2 * g - 2; ++m) {
      count += member[m];
      if (m >= 1)
        for (int k = 0; k < 3; ++k) CHECK(dim_mP_formula(n, m, static_cast<PointId>(k)) == count);
    }
  }
}

TEST_CASE("closed forms = oracle, n = 3, 4, 5") {
  for (int n = 3; n <= 5; ++n) expect_passed(dimension_sweep_checks(oracle_for(n)));
}

TEST_CASE("Riemann-Roch identity, stability, monotonicity and basis constraints") {
  for (int n = 3; n <= 4; ++n) {
    const auto& o = oracle_for(n);
    expect_passed({riemann_roch_identity_check(o, 50, 11), n_stability_check(o, 50, 12), monotonicity_check(o, 50, 13),
                   basis_constraint_check(o, 20, 14)});
  }
}

TEST_CASE("large degrees follow Riemann-Roch") {
  const auto& o = oracle_for(4);
  for (const ThreePointDivisor& d : {ThreePointDivisor{11, 0, 0}, ThreePointDivisor{4, 4, 4}, ThreePointDivisor{-5, 10, 8}})
    CHECK(o.dimension(d) == d.degree() + 1 - 6);
}

TEST_CASE("degree cap") {
  OracleOptions opts;
  opts.degree_cap = 8;
  const RiemannRochOracle small(Curve(standard_curve(4)), opts);
  try {
    small.dimension({60, 0, 0});
    FAIL("expected budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}
