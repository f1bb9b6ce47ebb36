#pragma once

// Truncated Laurent series in a local parameter t, and the expansions of the
// curve at P1, P2, P3.
//
// Charts (the solved coordinate has linear term 1 in the chart equation, so
// Newton's iteration starting from 0 is well defined):
//   P1: X = 1, parameter u = Y/X, solve z' = Z/X
//   P2: Y = 1, parameter s = Z/Y, solve x'' = X/Y
//   P3: Z = 1, parameter t = X/Z, solve y = Y/Z

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pgap/curve.hpp"

namespace pgap {

class PowerSeries {
 public:
  PowerSeries() = default;
  /// coefficients[i] multiplies t^(valuation_offset + i); known mod t^precision.
  PowerSeries(FieldPtr field, int valuation_offset, std::vector<Elem> coefficients, int precision);

  static PowerSeries zero(FieldPtr field, int precision);
  static PowerSeries constant(FieldPtr field, Elem c, int precision);
  /// t^k, exact up to the given precision.
  static PowerSeries monomial(FieldPtr field, int k, int precision);

  const FieldPtr& field() const noexcept { return field_; }
  int offset() const noexcept { return offset_; }
  int precision() const noexcept { return precision_; }
  const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^k (zero outside the stored range; k must be < precision).
  Elem coeff(int k) const;
  /// Index of the first nonzero coefficient, or nullopt if all known ones vanish.
  std::optional<int> valuation() const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(Elem c) const;
  /// Multiplication by t^k.
  PowerSeries shifted(int k) const;
  PowerSeries truncated(int precision) const;
  /// Inverse of t^v * unit; throws if the valuation cannot be determined.
  PowerSeries inverse() const;
  PowerSeries pow(int e) const;

 private:
  void normalize();
  FieldPtr field_;
  int offset_ = 0;
  std::vector<Elem> coeffs_;
  int precision_ = 0;
};

struct LocalData {
  PointId point = PointId::P3;
  std::string parameter;    // e.g. "u = Y/X"
  std::string solved_name;  // e.g. "z' = Z/X"
  PowerSeries solved;       // chart coordinate vanishing at the point
  PowerSeries x;            // X/Z
  PowerSeries y;            // Y/Z
  int precision = 0;
};

LocalData expand_at(const Curve& curve, PointId point, int precision);

/// Chart equation with the solved series substituted; zero to full precision.
PowerSeries chart_residual(const Curve& curve, const LocalData& local);

/// Valuations of x^u y^v at (P1, P2, P3), from div(x) and div(y).
std::array<int, 3> monomial_valuations(int n, int u, int v);

/// Laurent series of x^u y^v at the point, from the stored x and y series.
PowerSeries monomial_series(const LocalData& local, int u, int v);

struct FormOrder {
  int value = 0;
  /// The form vanished to the full available precision; value is a lower bound.
  bool at_least = false;
};

/// Intersection order at the point of the form h with the curve.
FormOrder order_of_form(const LocalData& local, const Form& h);

/// Default working precision for certifying an order of `required`.
int default_series_precision(int n, int required);

}  // namespace pgap
