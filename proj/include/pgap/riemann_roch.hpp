#pragma once

// Riemann-Roch dimensions for divisors supported on {P1, P2, P3}.
//
// Two independent routes: closed-form dimension formulas for the special
// divisor families of the curve, and a linear-algebra oracle on homogeneous
// forms constrained by local vanishing orders.

#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "pgap/curve.hpp"
#include "pgap/linalg.hpp"
#include "pgap/local_series.hpp"

namespace pgap {

struct ThreePointDivisor {
  int a = 0;  // at P1
  int b = 0;  // at P2
  int c = 0;  // at P3

  int degree() const noexcept { return a + b + c; }
  int at(PointId id) const noexcept;
  ThreePointDivisor operator+(const ThreePointDivisor& o) const { return {a + o.a, b + o.b, c + o.c}; }
  ThreePointDivisor operator-(const ThreePointDivisor& o) const { return {a - o.a, b - o.b, c - o.c}; }
  auto operator<=>(const ThreePointDivisor&) const = default;
};

ThreePointDivisor single_point_divisor(PointId id, int m);

/// A function h / (Z^N x^u y^v) given by the coefficients of the degree-N
/// form h over monomials_of_degree(N); (u, v) is the space's shift.
struct RRBasisFunction {
  std::vector<Elem> form;
};

struct RRSpace {
  ThreePointDivisor divisor;
  int dimension = 0;
  int form_degree = 0;
  std::array<int, 2> shift{};  // (u, v): exponents of x and y in the denominator
  std::vector<Exponents> monomials;
  std::vector<RRBasisFunction> basis;
};

/// Monomials X^a Y^b Z^c of degree N in canonical order (a descending, then b).
std::vector<Exponents> monomials_of_degree(int degree);

Form basis_form(const RRSpace& space, std::size_t index, const FieldPtr& field);

struct OracleOptions {
  int extra_degree = 0;  // added to the form degree (stability checks)
  int degree_cap = 60;
};

class RiemannRochOracle {
 public:
  explicit RiemannRochOracle(Curve curve, OracleOptions options = {});

  const Curve& curve() const noexcept { return curve_; }
  const OracleOptions& options() const noexcept { return options_; }

  /// l(D); memoized, thread safe.
  int dimension(const ThreePointDivisor& d) const;
  RRSpace basis(const ThreePointDivisor& d) const;

  /// Form degree used for D (after the shift).
  int form_degree(const ThreePointDivisor& d) const;

  /// Checks div(f) + D >= 0 at P1, P2, P3 for f = h / (Z^N x^u y^v).
  bool satisfies_divisor(const RRSpace& space, std::size_t index) const;

 private:
  struct System {
    int form_degree = 0;
    std::array<int, 2> shift{};
    std::vector<Exponents> monomials;
    Matrix constraints;
  };
  struct Shifted {
    std::array<int, 2> shift{};
    int a = 0, b = 0;  // D - div(x^u y^v), which has no P3 part
    int form_degree = 0;
  };
  Shifted shifted(const ThreePointDivisor& d) const;
  System build_system(const ThreePointDivisor& d) const;
  /// Powers 0..max_power of the solved chart series at the point, mod t^precision.
  std::vector<std::vector<Elem>> solved_powers(PointId id, int max_power, int precision) const;
  const LocalData& local(PointId id, int precision) const;

  Curve curve_;
  OracleOptions options_;
  mutable std::mutex mutex_;
  mutable std::map<ThreePointDivisor, int> memo_;
  mutable std::map<int, LocalData> locals_;  // keyed by point index
  struct PowerCache {
    int precision = 0;
    std::vector<std::vector<Elem>> powers;
  };
  mutable std::map<int, PowerCache> power_cache_;
};

int dim_L_oracle(const RiemannRochOracle& oracle, const ThreePointDivisor& d);
RRSpace basis_L_oracle(const RiemannRochOracle& oracle, const ThreePointDivisor& d);

// Closed forms. m = d(n-1) + r with 0 <= r <= n-2, 1 <= m <= 2g-2.

int dim_mP_formula(int n, int m, PointId point);
enum class ShiftedVariant { P2_minus_P1, P3_minus_P2, P1_minus_P3 };
int dim_shifted_formula(int n, int m, ShiftedVariant variant);
/// The divisor mP2 - dP1 (and cyclic variants).
ThreePointDivisor shifted_divisor(int n, int m, ShiftedVariant variant);

int dim_Md_Nd(int n, int i, int j);
ThreePointDivisor divisor_Md(int n, int i, int j);
ThreePointDivisor divisor_Nd(int n, int i, int j);

int dim_Sd(int n, int i, int j, int k);
ThreePointDivisor divisor_Sd(int n, int i, int j, int k);
int dim_Sd_plus_e(int n, int i, int j, int k, int e);

ThreePointDivisor canonical_divisor(int n);

}  // namespace pgap
