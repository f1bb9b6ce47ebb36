#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pgap/catalog.hpp"
#include "pgap/commands.hpp"
#include "pgap/error.hpp"
#include "pgap/local_series.hpp"
#include "pgap/suites.hpp"
#include "pgap/weierstrass.hpp"

using namespace pgap;

namespace {

const RiemannRochOracle& oracle_for(int n) {
  static const RiemannRochOracle o3(Curve(catalog_curve("klein_gf8").spec));
  static const RiemannRochOracle o4(Curve(catalog_curve("q16").spec));
  static const RiemannRochOracle o5(Curve(catalog_curve("q49_record").spec));
  return n == 3 ? o3 : n == 4 ? o4 : o5;
}

// Gaps of the numerical semigroup generated by gens, by dynamic programming.
std::vector<int> dp_gaps(const std::vector<int>& gens) {
  const int bound = 4 * (*std::max_element(gens.begin(), gens.end())) * (*std::max_element(gens.begin(), gens.end()));
  std::vector<bool> member(bound + 1, false);
  member[0] = true;
  for (int v = 1; v <= bound; ++v)
    for (int g : gens)
      if (g <= v && member[v - g]) member[v] = true;
  std::vector<int> out;
  for (int v = 1; v <= bound; ++v)
    if (!member[v]) out.push_back(v);
  return out;
}

std::set<std::vector<int>> tuples(const std::vector<PureGapRecord>& records) {
  std::set<std::vector<int>> out;
  for (const auto& r : records) out.insert(r.tuple);
  return out;
}

void expect_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    CAPTURE(c.suite);
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

ThreePointDivisor on_pair(int first, int second, int a, int b) {
  int v[3] = {0, 0, 0};
  v[first] = a;
  v[second] = b;
  return {v[0], v[1], v[2]};
}

}  // namespace

TEST_CASE("gap sequences and generators") {
  CHECK(gaps_closed_form(3).gaps == std::vector<int>{1, 2, 4});
  CHECK(gaps_closed_form(4).gaps == std::vector<int>{1, 2, 3, 5, 6, 9});
  CHECK(semigroup_generators(3) == std::vector<int>{3, 5, 7});
  CHECK(semigroup_generators(4) == std::vector<int>{4, 7, 10, 13});
  CHECK_THROWS_AS(gaps_closed_form(2), Error);
  for (int n = 3; n <= 12; ++n) {
    const auto gaps = gaps_closed_form(n).gaps;
    CHECK(static_cast<int>(gaps.size()) == n * (n - 1) / 2);
    CHECK(gaps == dp_gaps(semigroup_generators(n)));
    CHECK(semigroup_complement(semigroup_generators(n), n * (n - 1)) == gaps);
  }
}

TEST_CASE("oracle gaps at every point") {
  for (int n = 3; n <= 5; ++n) expect_passed(gap_checks(oracle_for(n)));
  CHECK(gaps_oracle(oracle_for(3), PointId::P1).gaps == std::vector<int>{1, 2, 4});
  CHECK(gaps_oracle(oracle_for(4), PointId::P2).gaps == std::vector<int>{1, 2, 3, 5, 6, 9});
  CHECK(gaps_oracle(oracle_for(4), PointId::P3).gaps == std::vector<int>{1, 2, 3, 5, 6, 9});
}

TEST_CASE("Kim index map is a bijection of order three") {
  for (int n = 3; n <= 12; ++n) {
    std::set<IndexPair> seen;
    for (int i = 1; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const IndexPair ij{i, j};
        const IndexPair b = kim_index_map(n, ij);
        CHECK(gap_index(n, gap_from_index(n, b)) == b);
        seen.insert(b);
        CHECK(kim_index_map(n, kim_index_map(n, b)) == ij);
        CHECK(kim_index_inverse(n, b) == ij);
      }
    CHECK(static_cast<int>(seen.size()) == n * (n - 1) / 2);
  }
}

TEST_CASE("Kim map tables agree with least exact pole orders") {
  // beta(a) = least t such that some function has pole divisor a*P + t*Q.
  const std::array<std::pair<KimPair, std::array<int, 2>>, 3> pairs{
      {{KimPair::P1_P2, {0, 1}}, {KimPair::P2_P3, {1, 2}}, {KimPair::P1_P3, {0, 2}}}};
  for (int n = 3; n <= 4; ++n) {
    const auto& o = oracle_for(n);
    for (const auto& [pair, pts] : pairs) {
      const KimMapTable t = kim_map(n, pair);
      CHECK(t.entries.size() == gaps_closed_form(n).gaps.size());
      for (const auto& e : t.entries) {
        int least = -1;
        for (int s = 0; s <= n * (n - 1) && least < 0; ++s)
          if (exact_pole_divisor_oracle(o, on_pair(pts[0], pts[1], e.gap, s))) least = s;
        CAPTURE(kim_pair_name(pair));
        CAPTURE(e.gap);
        CHECK(e.image == least);
        // The witness x^u y^v has exactly this pole divisor.
        const auto v = monomial_valuations(n, e.witness[0], e.witness[1]);
        CHECK(-v[pts[0]] == e.gap);
        CHECK(-v[pts[1]] == e.image);
        CHECK(v[3 - pts[0] - pts[1]] >= 0);
      }
    }
  }
  // (1, 9) for n = 4 is realized by y^3/x^2.
  const auto v = monomial_valuations(4, -2, 3);
  CHECK(v == std::array<int, 3>{-1, -9, 10});
  CHECK(kim_pair_from_string("P3,P1") == KimPair::P1_P3);
  CHECK_THROWS_AS(kim_pair_from_string("P1,P1"), Error);
}

TEST_CASE("pure gap pairs") {
  CHECK(tuples(pure_gaps_pair(3)) == std::set<std::vector<int>>{{1, 1}, {1, 2}});
  CHECK(pure_gaps_pair(4).size() == 10);
  CHECK(pure_gaps_pair(5).size() == 30);
  for (int n = 3; n <= 8; ++n) {
    const int g = n * (n - 1) / 2;
    CHECK(static_cast<long long>(pure_gaps_pair(n).size()) == (g - 1) * g / 3);
    std::set<std::vector<int>> hk;
    for (const auto& p : pure_gaps_pair_via_homma_kim(n)) hk.insert({p[0], p[1]});
    CHECK(hk == tuples(pure_gaps_pair(n)));
  }
  for (int n = 3; n <= 4; ++n) expect_passed(pure_pair_checks(oracle_for(n), 1));
}

TEST_CASE("pure gap pair dimensions, n = 4") {
  const auto& o = oracle_for(4);
  for (const auto& r : pure_gaps_pair(4)) {
    const ThreePointDivisor d{r.tuple[0], r.tuple[1], 0};
    const int want = (r.d - 1) * (r.d - 2) / 2 + r.i;
    CHECK(r.predicted_dimension == want);
    CHECK(o.dimension(d) == want);
    CHECK(o.dimension(d - ThreePointDivisor{1, 1, 0}) == want);
  }
}

TEST_CASE("pure gap pairs are the same for every cyclic pair of points") {
  const auto& o = oracle_for(4);
  const auto expected = tuples(pure_gaps_pair(4));
  for (const auto& pts : {std::array<int, 2>{1, 2}, std::array<int, 2>{2, 0}}) {
    std::set<std::vector<int>> found;
    for (int a = 1; a <= 11; ++a)
      for (int b = 1; b <= 11; ++b)
        if (o.dimension(on_pair(pts[0], pts[1], a, b)) == o.dimension(on_pair(pts[0], pts[1], a - 1, b - 1)))
          found.insert({a, b});
    CHECK(found == expected);
  }
}

TEST_CASE("gap pairs") {
  CHECK(gap_pair_count(3) == 12);
  CHECK(gap_pair_count(4) == 42);
  CHECK(gap_pairs_oracle(oracle_for(4)).size() == 42);
  CHECK(gap_pairs_oracle(oracle_for(3)).size() == 12);
  CHECK(pair_membership_oracle(oracle_for(3), 0, 0));
  CHECK_FALSE(pair_membership_oracle(oracle_for(3), 1, 1));
  CHECK(pair_membership_oracle(oracle_for(3), 3, 0));
}

TEST_CASE("pure gap triples") {
  CHECK(tuples(pure_gaps_triple(3)) == std::set<std::vector<int>>{{1, 1, 1}});
  CHECK(pure_gaps_triple(4).size() == 11);
  CHECK(pure_gaps_triple(5).size() == 57);
  for (int n = 3; n <= 10; ++n) {
    const long long g = n * (n - 1) / 2;
    const auto records = pure_gaps_triple(n);
    CHECK(static_cast<long long>(records.size()) == (g - 1) * g * (2 * g - 1) / 30);
    for (const auto& r : records)
      for (int c : r.tuple) CHECK(c % (n - 1) != 0);
  }
  for (int n = 3; n <= 5; ++n) expect_passed(pure_triple_checks(oracle_for(n), 1));
  CHECK(pure_gap_oracle(oracle_for(3), {1, 1, 1}));
  CHECK_FALSE(pure_gap_oracle(oracle_for(3), {3, 1, 1}));
  CHECK(pure_gap_oracle(oracle_for(4), {1, 1, 1}));
  CHECK(oracle_for(4).dimension({1, 1, 1}) == 1);
  CHECK(oracle_for(4).dimension({0, 0, 0}) == 1);
}

TEST_CASE("Kim witnesses on the oracle") {
  for (int n = 3; n <= 5; ++n) expect_passed(kim_witness_checks(oracle_for(n)));
}

TEST_CASE("structural checks up to n = 12") { expect_passed(structural_checks(12, 10)); }
