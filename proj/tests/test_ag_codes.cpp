#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "pgap/ag_codes.hpp"
#include "pgap/catalog.hpp"
#include "pgap/error.hpp"
#include "pgap/json_io.hpp"

using namespace pgap;

namespace {

struct Setup {
  Curve curve;
  RiemannRochOracle oracle;
  PointSet points;
  explicit Setup(const std::string& name)
      : curve(catalog_curve(name).spec), oracle(curve), points(rational_points(curve)) {}
};

const Setup& q16() {
  static const Setup s("q16");
  return s;
}

// Minimum weight over all nonzero codewords spanned by the rows of gen.
int brute_force_distance(const Matrix& gen) {
  const Field& f = *gen.field();
  const std::size_t k = gen.rows(), m = gen.cols();
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;
  int best = static_cast<int>(m) + 1;
  std::vector<Elem> word(m);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::fill(word.begin(), word.end(), 0);
    std::uint64_t rest = idx;
    for (std::size_t r = 0; r < k; ++r, rest /= q) {
      const Elem c = static_cast<Elem>(rest % q);
      if (c == 0) continue;
      for (std::size_t j = 0; j < m; ++j) word[j] = f.add(word[j], f.mul(c, gen.at(r, j)));
    }
    int w = 0;
    for (Elem e : word) w += e != 0;
    best = std::min(best, w);
  }
  return best;
}

std::string error_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("design hypotheses") {
  const CodeSpecPair s = make_code_spec_pair(4, 2, 1);
  CHECK(s.divisor == ThreePointDivisor{9, 4, 0});
  CHECK(s.divisor.degree() == 13);
  CHECK(pair_box_is_pure(s));
  CHECK(error_message([] { make_code_spec_pair(4, 1, 1); }).find("(n+2)/2 <= i+j <= n-1") != std::string::npos);
  CHECK(error_message([] { make_code_spec_pair(4, 3, 3); }).find("(n+2)/2 <= i+j <= n-1") != std::string::npos);
  // n = 5 admits d = 2 only; n = 4 admits d = 1 only.
  CHECK_NOTHROW(make_code_spec_triple(5, 1, 1, 0));
  CHECK_THROWS_AS(make_code_spec_triple(5, 1, 0, 0), Error);
  CHECK_NOTHROW(make_code_spec_triple(4, 1, 0, 0));
  CHECK_THROWS_AS(make_code_spec_triple(4, 0, 0, 0), Error);
  CHECK(error_message([] { make_code_spec_triple(4, 1, 1, 0); }).find("(n-2)^2/(2n-1) < i+j+k <= n-3") !=
        std::string::npos);
  for (int n = 4; n <= 9; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
          const int d = i + j + k;
          if ((n - 2) * (n - 2) >= d * (2 * n - 1) || d > n - 3) continue;
          const CodeSpecTriple t = make_code_spec_triple(n, i, j, k);
          CHECK(triple_box_is_pure(t));
          CHECK(t.divisor.degree() == (2 * d + 3) * n - d - 6);
        }
}

TEST_CASE("predicted parameters") {
  auto eq = [](PredictedParams p, int len, int dim, int dist) {
    return p.length == len && p.dimension == dim && p.distance_bound == dist;
  };
  CHECK(eq(predict_pair_params(4, 2, 1, 57), 57, 49, 6));
  CHECK(eq(predict_pair_params(4, 2, 1, 37), 37, 29, 6));
  CHECK(eq(predict_pair_params(4, 2, 1, 197), 197, 189, 6));
  CHECK(eq(predict_triple_params(6, 1, 1, 1, 100), 100, 69, 20));
  for (int m = 107; m <= 113; ++m) CHECK(eq(predict_pair_params(5, 3, 1, m), m, m - 18, 12));
  CHECK(error_message([] { predict_pair_params(4, 2, 1, 10); }).find("m >= 2n^2-4n-2") != std::string::npos);
}

TEST_CASE("distance bounds") {
  CHECK(goppa_bound(13, 6) == 3);
  const CodeSpecPair s = make_code_spec_pair(4, 2, 1);
  CHECK(carvalho_torres_bound(13, 6, box_of(s)) == 6);
  CHECK(carvalho_torres_bound(13, 6, {{5, 5}, {2, 2}}) == goppa_bound(13, 6) + 2);
}

TEST_CASE("evaluation codes") {
  const Setup& s = q16();
  const auto ev = evaluation_points(s.points, false);
  CHECK(ev.points.size() == 36);
  CHECK(ev.excluded.size() == 3);
  const auto ev3 = evaluation_points(s.points, true);
  CHECK(ev3.points.size() == 37);
  // G = 0: constants.
  const Matrix c0 = build_CL(s.oracle, ev.points, {0, 0, 0});
  CHECK(c0.rows() == 1);
  CHECK(build_COmega(s.oracle, ev.points, {0, 0, 0}).dimension() == 35);
  // 2g - 2 < deg G < m: rank deg G - g + 1.
  for (const ThreePointDivisor& g : {ThreePointDivisor{11, 0, 0}, ThreePointDivisor{5, 5, 5}, ThreePointDivisor{-2, 20, 4}})
    CHECK(static_cast<int>(build_CL(s.oracle, ev.points, g).rows()) == g.degree() - 6 + 1);
  // P3 may not be in D when G has a P3 part.
  CHECK_THROWS_AS(build_CL(s.oracle, ev3.points, {5, 5, 5}), Error);
}

TEST_CASE("duality of C_L and C_Omega") {
  const Setup& s = q16();
  const auto ev = evaluation_points(s.points, true);
  for (const ThreePointDivisor& g : {ThreePointDivisor{9, 4, 0}, ThreePointDivisor{0, 0, 0}, ThreePointDivisor{20, 3, 0}}) {
    const DualCode code = build_COmega(s.oracle, ev.points, g);
    CHECK((code.parity_check * code.generator.transpose()).is_zero());
    CHECK(code.dimension() + static_cast<int>(code.parity_check.rows()) == 37);
  }
}

TEST_CASE("GF(16) example code [37, 29, 6]") {
  const Setup& s = q16();
  const CodeSpecPair design = make_code_spec_pair(4, 2, 1);
  CodeOptions co;
  co.include_p3 = true;
  co.certify_w = 5;
  co.search_trials = 2000;
  const CodeReport r = make_code_report(s.oracle, s.points, design.divisor, box_of(design), co);
  CHECK(r.length == 37);
  CHECK(r.dimension == 29);
  CHECK(r.l_G == 8);
  CHECK(r.pure_gap_bound == 6);
  CHECK(r.goppa_bound == 3);
  CHECK(r.certification_passed);
  CHECK(r.verified_distance_floor == 6);
  REQUIRE(r.distance_upper_estimate.has_value());
  CHECK(*r.distance_upper_estimate >= 6);
  CHECK(r.discrepancies.empty());
  CHECK(verify_distance_floor(r.parity_check, 5));
  // Some 6 columns are dependent, so the distance is exactly 6.
  CHECK_FALSE(verify_distance_floor(r.parity_check, 6));
}

TEST_CASE("q = 27 example code [57, 49]") {
  const Setup s("q27");
  CHECK(s.points.points.size() == 59);
  const CodeSpecPair design = make_code_spec_pair(4, 2, 1);
  CodeOptions co;
  co.include_p3 = true;
  const CodeReport r = make_code_report(s.oracle, s.points, design.divisor, box_of(design), co);
  CHECK(r.length == 57);
  CHECK(r.dimension == 49);
  CHECK(r.pure_gap_bound == 6);
  CHECK(*r.pure_gap_bound > r.goppa_bound);
}

TEST_CASE("distance certification against brute force") {
  const Setup s("klein_gf8");
  const auto ev = evaluation_points(s.points, false);
  REQUIRE(ev.points.size() == 21);
  for (const ThreePointDivisor& g : {ThreePointDivisor{19, 0, 0}, ThreePointDivisor{6, 6, 6}, ThreePointDivisor{9, 9, 0}}) {
    const DualCode code = build_COmega(s.oracle, ev.points, g);
    REQUIRE(code.dimension() <= 5);
    const int d = brute_force_distance(code.generator);
    CAPTURE(d);
    CHECK(verify_distance_floor(code.parity_check, d - 1));
    CHECK_FALSE(verify_distance_floor(code.parity_check, d));
    CHECK(verify_distance_floor(code.parity_check, d - 1, 10'000'000, 3));
    CHECK_FALSE(verify_distance_floor(code.parity_check, d, 10'000'000, 3));
    const auto found = low_weight_search(code.generator, 300, 9);
    CHECK(found.weight >= d);
    CHECK(d >= goppa_bound(g.degree(), 3));
  }
}

TEST_CASE("verify_distance_floor edge cases") {
  const FieldPtr f = Field::create(3, 1);
  Matrix ones(f, 1, 5);
  for (std::size_t j = 0; j < 5; ++j) ones.at(0, j) = 1;
  CHECK(verify_distance_floor(ones, 0));
  CHECK(verify_distance_floor(ones, 1));
  CHECK_FALSE(verify_distance_floor(ones, 2));
  try {
    verify_distance_floor(ones, 2, 3);
    FAIL("expected budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}

TEST_CASE("low weight search") {
  const FieldPtr f = Field::create(2, 3);
  Matrix id(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(low_weight_search(id, 10, 1).weight == 1);
  const Setup& s = q16();
  const auto ev = evaluation_points(s.points, false);
  const DualCode rep = build_COmega(s.oracle, ev.points, {0, 0, 0});
  CHECK(low_weight_search(rep.generator, 200, 3).weight == 2);
  CHECK(low_weight_search(rep.generator, 200, 3).weight == low_weight_search(rep.generator, 200, 3).weight);
}

TEST_CASE("point counts of the Hurwitz and maximal families") {
  CHECK(hurwitz_count(2) == 24);
  CHECK(hurwitz_count(3) == 55);
  CHECK(hurwitz_count(4) == 108);
  CHECK(hermitian_maximal_count(2) == 81);
  CHECK(hermitian_maximal_count(3) == 892);
  CHECK_THROWS_AS(hurwitz_count(6), Error);
  for (std::int64_t q : {2, 3, 4, 5, 7, 8}) {
    const std::int64_t g = q * (q - 1) / 2, q3 = q * q * q;
    CHECK(hermitian_maximal_count(q) == q3 * q3 + 1 + 2 * g * q3);
  }
  CHECK(rational_points(Curve(g_zero_curve(3, 2, 3))).points.size() == 24);
  CHECK(rational_points(Curve(g_zero_curve(4, 3, 3))).points.size() == 55);
  const FieldPtr f64 = Field::create(2, 6);
  const Form hermitian(f64, {{{1, 2, 0}, 1}, {{0, 1, 2}, 1}, {{2, 0, 1}, 1}});
  CHECK(plane_curve_points(hermitian).points.size() == 81);
}

TEST_CASE("curve search") {
  const FieldPtr f8 = Field::create(2, 3);
  SearchOptions so;
  so.min_points = 24;
  std::vector<SearchRecord> found;
  const SearchSummary sum = curve_search(f8, 3, so, [&](const SearchRecord& r) { found.push_back(r); });
  CHECK(sum.exhaustive);
  CHECK(sum.candidates == 512);
  CHECK(sum.matches == found.size());
  REQUIRE_FALSE(found.empty());
  CHECK(found.front().candidate == 0);
  CHECK(found.front().spec.g_coeffs.empty());
  for (const auto& r : found) CHECK(rational_points(Curve(r.spec)).points.size() == r.points);

  // Sampling is reproducible and independent of the thread count.
  SearchOptions rs;
  rs.exhaustive = false;
  rs.samples = 300;
  rs.seed = 42;
  const FieldPtr f16 = Field::create(2, 4);
  auto run = [&](unsigned jobs) {
    rs.jobs = jobs;
    std::vector<std::pair<std::uint64_t, std::size_t>> out;
    curve_search(f16, 4, rs, [&](const SearchRecord& r) { out.emplace_back(r.candidate, r.points); });
    return out;
  };
  const auto a = run(1);
  CHECK(a == run(3));
  CHECK_FALSE(a.empty());
}

TEST_CASE("record curve over GF(49)") {
  const Setup s("q49_record");
  CHECK(s.points.points.size() == 115);
  const CodeSpecPair design = make_code_spec_pair(5, 3, 1);
  CHECK(pair_box_is_pure(design));
  for (int m = 107; m <= 113; ++m) {
    CodeOptions co;
    co.include_p3 = true;
    co.length = m;
    co.materialize_dual = false;
    const CodeReport r = make_code_report(s.oracle, s.points, design.divisor, box_of(design), co);
    CHECK(r.dimension == m - 18);
    CHECK(r.pure_gap_bound == 12);
  }
}

TEST_CASE("matrix CSV export") {
  const Setup& s = q16();
  const auto ev = evaluation_points(s.points, true);
  const Matrix h = build_CL(s.oracle, ev.points, {9, 4, 0});
  const std::string csv = matrix_to_csv(h);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  CHECK(std::count(csv.begin(), csv.end(), ',') == 8 * 36);
}
