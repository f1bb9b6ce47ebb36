#pragma once

// Algebraic-geometry codes from divisors supported on P1, P2, P3: evaluation
// codes, their duals, closed-form parameters, distance bounds and exact
// distance certification.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pgap/linalg.hpp"
#include "pgap/riemann_roch.hpp"

namespace pgap {

/// Design from a pair (i, j): pure-gap corners alpha, beta and the divisor F1.
struct CodeSpecPair {
  int n = 0, i = 0, j = 0;
  std::array<int, 2> alpha{}, beta{};
  ThreePointDivisor divisor;
};

/// Design from a triple (i, j, k): corners lower, upper and the divisor F2.
struct CodeSpecTriple {
  int n = 0, i = 0, j = 0, k = 0;
  std::array<int, 3> lower{}, upper{};
  ThreePointDivisor divisor;
  int d() const noexcept { return i + j + k; }
};

/// Throws invalid_argument naming the violated inequality.
CodeSpecPair make_code_spec_pair(int n, int i, int j);
CodeSpecTriple make_code_spec_triple(int n, int i, int j, int k);

struct BoxSide {
  int a = 0, b = 0;
};

/// Every lattice point of the box is a pure gap of the closed-form enumeration.
bool pair_box_is_pure(const CodeSpecPair& spec);
bool triple_box_is_pure(const CodeSpecTriple& spec);
std::vector<BoxSide> box_of(const CodeSpecPair& spec);
std::vector<BoxSide> box_of(const CodeSpecTriple& spec);

struct PredictedParams {
  int length = 0;
  int dimension = 0;
  int distance_bound = 0;
};

int min_length_for_design(int n);
PredictedParams predict_pair_params(int n, int i, int j, int m);
PredictedParams predict_triple_params(int n, int i, int j, int k, int m);

int goppa_bound(int g_degree, int genus);
int carvalho_torres_bound(int g_degree, int genus, const std::vector<BoxSide>& box);

/// Rational points usable for D, in canonical order. P3 is admitted only when
/// include_p3 is set; P1 and P2 never are.
struct EvaluationPoints {
  std::vector<ProjectivePoint> points;
  std::vector<PointId> excluded;  // fundamental points on the curve left out of D
};
EvaluationPoints evaluation_points(const PointSet& all, bool include_p3);

/// Full-rank generator of C_L(D, G): basis functions of L(G) evaluated on D.
Matrix build_CL(const RiemannRochOracle& oracle, const std::vector<ProjectivePoint>& D, const ThreePointDivisor& G);

struct DualCode {
  Matrix generator;     // C_Omega(D, G), the dual of C_L(D, G)
  Matrix parity_check;  // generator of C_L(D, G)
  int dimension() const noexcept { return static_cast<int>(generator.rows()); }
};
DualCode build_COmega(const RiemannRochOracle& oracle, const std::vector<ProjectivePoint>& D,
                      const ThreePointDivisor& G);

/// C(m, w) saturating at UINT64_MAX.
std::uint64_t binomial(int m, int w);

/// True iff every w columns of H are linearly independent (so d >= w+1 for
/// the code with parity-check H). Throws budget_exceeded when C(m, w) > budget.
bool verify_distance_floor(const Matrix& H, int w, std::uint64_t budget = 10'000'000, unsigned jobs = 1);

struct LowWeightResult {
  int weight = 0;  // 0 when the code is trivial
  std::vector<Elem> codeword;
};
/// Minimum row weight over random information sets; an upper bound on d.
LowWeightResult low_weight_search(const Matrix& generator, int trials, std::uint64_t seed);

struct CodeReport {
  std::uint32_t q = 0;
  int length = 0;
  int dimension = 0;       // of C_Omega(D, G), by rank
  int dual_dimension = 0;  // of C_L(D, G)
  int l_G = 0;             // l(G) from the oracle
  int goppa_bound = 0;
  std::optional<int> pure_gap_bound;
  std::optional<int> verified_distance_floor;
  std::optional<int> certified_w;  // w passed to verify_distance_floor
  bool certification_passed = false;
  std::optional<int> distance_upper_estimate;
  /// Any bound contradicted by a certification or a found codeword.
  std::vector<std::string> discrepancies;
  ThreePointDivisor divisor;
  std::vector<PointId> excluded_points;
  Matrix generator;
  Matrix parity_check;
};

struct CodeOptions {
  bool include_p3 = false;
  std::optional<int> length;        // take the first m points of D
  /// Indices into the default D (canonical order); overrides length.
  std::optional<std::vector<int>> subset;
  std::optional<int> certify_w;     // run verify_distance_floor with this w
  int search_trials = 0;            // low_weight_search trials (0 = skip)
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
  /// Keep the C_Omega generator (m - rank rows). Off for long codes where only
  /// the parameters are wanted.
  bool materialize_dual = true;
};

/// Builds C_Omega(D, G) and fills every bound. box, when given, must already be
/// certified pure; it enables the Carvalho-Torres bound.
CodeReport make_code_report(const RiemannRochOracle& oracle, const PointSet& points, const ThreePointDivisor& G,
                            const std::optional<std::vector<BoxSide>>& box, const CodeOptions& options);

std::int64_t hurwitz_count(std::int64_t q);
std::int64_t hermitian_maximal_count(std::int64_t q);

// Curve search over G coefficients.

struct SearchOptions {
  bool exhaustive = true;       // otherwise seeded random sampling
  std::uint64_t samples = 1000;  // random mode
  std::uint64_t seed = 1;
  std::uint64_t max_candidates = 1'000'000;
  std::size_t min_points = 0;
  std::optional<std::size_t> exact_points;
  int probe_extension = 1;  // smoothness probe depth for matches
  unsigned jobs = 1;
};

struct SearchRecord {
  CurveSpec spec;
  std::size_t points = 0;
  std::uint64_t candidate = 0;  // index in the enumeration order
};

struct SearchSummary {
  std::uint64_t candidates = 0;
  std::uint64_t matches = 0;
  std::uint64_t rejected_singular = 0;
  bool exhaustive = false;  // false when sampling was used
};

/// Monomials of G (exponent triples summing to n-2), canonical order.
std::vector<Exponents> g_monomials(int n);

SearchSummary curve_search(const FieldPtr& field, int n, const SearchOptions& options,
                           const std::function<void(const SearchRecord&)>& sink);

}  // namespace pgap
