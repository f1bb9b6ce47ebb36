#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pgap/catalog.hpp"
#include "pgap/local_series.hpp"

using namespace pgap;

namespace {

std::vector<Curve> test_curves() {
  return {Curve(catalog_curve("klein_gf8").spec), Curve(catalog_curve("q16").spec),
          Curve(catalog_curve("q27").spec), Curve(catalog_curve("q49_record").spec)};
}

Form monomial_form(const FieldPtr& f, Exponents e) { return Form(f, {{e, 1}}); }

}  // namespace

TEST_CASE("monomial valuations") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(monomial_valuations(n, 1, 0) == std::array<int, 3>{-n, n - 1, 1});
    CHECK(monomial_valuations(n, 0, 0) == std::array<int, 3>{0, 0, 0});
    CHECK(monomial_valuations(n, 1, n - 1)[0] == -(n * (n - 1) + 1));
    for (int u = -3 * n; u <= 3 * n; ++u)
      for (int v = -3 * n; v <= 3 * n; ++v) {
        const auto val = monomial_valuations(n, u, v);
        REQUIRE(val[0] + val[1] + val[2] == 0);
      }
  }
}

TEST_CASE("chart residuals vanish") {
  for (const Curve& c : test_curves())
    for (int k = 0; k < 3; ++k) {
      const LocalData local = expand_at(c, static_cast<PointId>(k), 40);
      const PowerSeries r = chart_residual(c, local);
      CHECK_FALSE(r.valuation().has_value());
    }
}

TEST_CASE("series valuations of x^u y^v match the closed form") {
  std::mt19937 rng(5);
  for (const Curve& c : test_curves()) {
    const int n = c.n();
    std::uniform_int_distribution<int> pick(-3 * n, 3 * n);
    std::array<LocalData, 3> locals{expand_at(c, PointId::P1, 80), expand_at(c, PointId::P2, 80),
                                    expand_at(c, PointId::P3, 80)};
    for (int t = 0; t < 40; ++t) {
      const int u = pick(rng), v = pick(rng);
      const auto want = monomial_valuations(n, u, v);
      for (int k = 0; k < 3; ++k) {
        const PowerSeries s = monomial_series(locals[k], u, v);
        const auto val = s.valuation();
        REQUIRE(val.has_value());
        CAPTURE(u);
        CAPTURE(v);
        CHECK(*val == want[k]);
      }
    }
  }
}

TEST_CASE("order_of_form on line sections") {
  for (const Curve& c : test_curves()) {
    const int n = c.n();
    const FieldPtr& f = c.field();
    const LocalData l1 = expand_at(c, PointId::P1, 60), l2 = expand_at(c, PointId::P2, 60),
                    l3 = expand_at(c, PointId::P3, 60);
    const Form Z = monomial_form(f, {0, 0, 1}), X = monomial_form(f, {1, 0, 0});
    CHECK(order_of_form(l1, Z).value == n);
    CHECK(order_of_form(l2, Z).value == 1);
    CHECK(order_of_form(l3, Z).value == 0);
    CHECK(order_of_form(l2, X).value == n);
    for (int N = 1; N <= 4; ++N) {
      const Form ZN = monomial_form(f, {0, 0, N});
      CHECK(order_of_form(l1, ZN).value == N * n);
      CHECK(order_of_form(l2, ZN).value == N);
      CHECK(order_of_form(l3, ZN).value == 0);
    }
  }
}

TEST_CASE("order of the curve equation itself is unbounded") {
  const Curve c(catalog_curve("q16").spec);
  const LocalData l = expand_at(c, PointId::P3, 30);
  const FormOrder o = order_of_form(l, c.equation());
  CHECK(o.at_least);
}

TEST_CASE("power series arithmetic") {
  const FieldPtr f = Field::create(3, 2);
  const PowerSeries a(f, 0, {1, 2, 3, 4}, 10);
  const PowerSeries inv = a.inverse();
  const PowerSeries one = a * inv;
  CHECK(one.coeff(0) == 1);
  for (int k = 1; k < std::min(one.precision(), 4); ++k) CHECK(one.coeff(k) == 0);
  const PowerSeries t = PowerSeries::monomial(f, 1, 10);
  CHECK(t.shifted(3).valuation() == 4);
  CHECK((a.pow(3) - a * a * a).valuation() == std::nullopt);
  // Products of exact constants stay small.
  const PowerSeries c = a.pow(0) * a.pow(0);
  CHECK(c.coeff(0) == 1);
  CHECK(c.coefficients().size() == 1);
  const PowerSeries exact = PowerSeries::monomial(f, -2, 1 << 28).inverse();
  CHECK(exact.valuation() == 2);
  CHECK(exact.coefficients().size() == 1);
}
