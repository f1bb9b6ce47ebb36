#pragma once

// Formula-versus-oracle checks shared by the `verify` command and the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "pgap/riemann_roch.hpp"

namespace pgap {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<CheckResult>& checks);

/// Field axioms by exhaustion (q <= 64) or on seeded random triples.
std::vector<CheckResult> field_axiom_checks(const Field& field, std::uint64_t seed = 1);

/// Curve structure: the three points, tangent lines, and a bounded smoothness probe.
std::vector<CheckResult> curve_checks(const Curve& curve, int probe_extension);

/// Oracle gaps equal the closed form at P1, P2, P3.
std::vector<CheckResult> gap_checks(const RiemannRochOracle& oracle);

/// Kim witnesses have the claimed pole divisors, by valuations and by the oracle.
std::vector<CheckResult> kim_witness_checks(const RiemannRochOracle& oracle);

/// Closed form = Homma-Kim = oracle sweep; per-record dimensions; gap-pair count.
std::vector<CheckResult> pure_pair_checks(const RiemannRochOracle& oracle, unsigned jobs);

/// Closed form = oracle sweep over gap triples; per-record dimensions.
std::vector<CheckResult> pure_triple_checks(const RiemannRochOracle& oracle, unsigned jobs);

/// Every closed-form dimension family against the oracle.
std::vector<CheckResult> dimension_sweep_checks(const RiemannRochOracle& oracle);

/// Random divisors with |a|, |b|, |c| <= 2g.
std::vector<ThreePointDivisor> random_divisors(int n, int count, std::uint64_t seed);

CheckResult riemann_roch_identity_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed);
/// Dimensions unchanged when the form degree grows by 1 and by 2.
CheckResult n_stability_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed);
CheckResult monotonicity_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed);
/// Basis functions re-verified through local orders.
CheckResult basis_constraint_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed);

/// Kim-map bijectivity and beta^3 = id for 3 <= n <= kim_n_max; pure-gap
/// triples avoid multiples of n-1 for 3 <= n <= div_n_max; enumeration counts.
std::vector<CheckResult> structural_checks(int kim_n_max, int div_n_max);

}  // namespace pgap
