#pragma once

// Weierstrass gaps, Kim maps and pure gaps at P1, P2, P3: closed forms and
// their recomputation from Riemann-Roch dimensions.

#include <array>
#include <string>
#include <vector>

#include "pgap/riemann_roch.hpp"

namespace pgap {

struct GapSet {
  int n = 0;
  PointId point = PointId::P1;
  std::vector<int> gaps;  // sorted
};

GapSet gaps_closed_form(int n, PointId point = PointId::P1);
std::vector<int> semigroup_generators(int n);

/// Ordered point pairs carrying a Kim map. P1_P3 is the inverse map read from P1.
enum class KimPair { P1_P2, P2_P3, P1_P3 };
const char* kim_pair_name(KimPair pair);
KimPair kim_pair_from_string(const std::string& s);

using IndexPair = std::array<int, 2>;

struct KimEntry {
  int gap = 0;
  int image = 0;
  IndexPair source_index{};  // gap = (i-1)(n-1) + j
  IndexPair target_index{};
  std::array<int, 2> witness{};  // x^u y^v with pole divisor gap*source + image*target
};

struct KimMapTable {
  int n = 0;
  KimPair pair = KimPair::P1_P2;
  std::vector<KimEntry> entries;  // sorted by gap
};

/// (i, j) with 1 <= i <= j <= n-1 and gap = (i-1)(n-1) + j.
IndexPair gap_index(int n, int gap);
int gap_from_index(int n, IndexPair ij);
/// The Kim map on index pairs: (i, j) -> (n-j, n-1+i-j).
IndexPair kim_index_map(int n, IndexPair ij);
IndexPair kim_index_inverse(int n, IndexPair ij);

KimMapTable kim_map(int n, KimPair pair);

struct PureGapRecord {
  std::vector<int> tuple;
  // Parametrization. For pairs k and t are unused (zero).
  int i = 0, j = 0, k = 0, d = 0, r = 0, s = 0, t = 0;
  int predicted_dimension = 0;
};

std::vector<PureGapRecord> pure_gaps_pair(int n);
/// Pure gaps at (P1, P2) from the inversion set of the Kim permutation.
std::vector<std::array<int, 2>> pure_gaps_pair_via_homma_kim(int n);
int gap_pair_count(int n);
std::vector<PureGapRecord> pure_gaps_triple(int n);

long long pure_gap_pair_count_formula(int n);
long long pure_gap_triple_count_formula(int n);

// Oracle-side recomputation.

GapSet gaps_oracle(const RiemannRochOracle& oracle, PointId point);
/// Some function has pole divisor exactly D (D >= 0).
bool exact_pole_divisor_oracle(const RiemannRochOracle& oracle, const ThreePointDivisor& d);
/// (a, b) is the exact pole divisor of some function.
bool pair_membership_oracle(const RiemannRochOracle& oracle, int a, int b);
/// Pairs in [0, 2g]^2 outside the two-point semigroup.
std::vector<std::array<int, 2>> gap_pairs_oracle(const RiemannRochOracle& oracle);
/// l(sum a_s P_s) == l(sum (a_s - 1) P_s); tuple of size 2 (P1, P2) or 3.
bool pure_gap_oracle(const RiemannRochOracle& oracle, const std::vector<int>& tuple);

/// Pure gaps found by sweeping [1, 2g-1]^2.
std::vector<std::array<int, 2>> pure_gaps_pair_oracle(const RiemannRochOracle& oracle, unsigned jobs = 1);
/// Pure gaps among triples whose coordinates are single-point gaps.
std::vector<std::array<int, 3>> pure_gaps_triple_oracle(const RiemannRochOracle& oracle, unsigned jobs = 1);

}  // namespace pgap
