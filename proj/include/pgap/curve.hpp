#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pgap/finite_field.hpp"

namespace pgap {

using Exponents = std::array<int, 3>;

/// Homogeneous polynomial in X, Y, Z.
class Form {
 public:
  struct Term {
    Exponents e;
    Elem c;
  };

  Form() = default;
  explicit Form(FieldPtr field) : field_(std::move(field)) {}
  Form(FieldPtr field, std::vector<Term> terms);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// -1 for the zero form.
  int degree() const noexcept;
  bool is_zero() const noexcept { return terms_.empty(); }

  Elem evaluate(Elem x, Elem y, Elem z) const;
  /// Formal partial derivative with respect to variable 0 (X), 1 (Y) or 2 (Z).
  Form partial(int var) const;
  Form embedded(const Embedding& emb) const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Term> terms_;
};

/// Member of the family XY^n + YZ^n + ZX^n + XYZ*G(X,Y,Z) = 0.
struct CurveSpec {
  int n = 3;
  FieldPtr field;
  /// Exponent triples summing to n-2; empty means G = 0.
  std::map<Exponents, Elem> g_coeffs;
};

enum class PointId { P1 = 0, P2 = 1, P3 = 2 };

const char* point_name(PointId id);
PointId point_from_index(int index);

class Curve {
 public:
  /// Checks the structural invariants of a curve spec (n >= 3, exponent sums,
  /// coefficient ranges); zero coefficients are dropped.
  explicit Curve(CurveSpec spec);

  const CurveSpec& spec() const noexcept { return spec_; }
  int n() const noexcept { return spec_.n; }
  int genus() const noexcept { return spec_.n * (spec_.n - 1) / 2; }
  const FieldPtr& field() const noexcept { return spec_.field; }
  const Form& equation() const noexcept { return equation_; }

 private:
  CurveSpec spec_;
  Form equation_;
};

int genus(const CurveSpec& spec);

/// First nonzero coordinate is 1.
struct ProjectivePoint {
  std::array<Elem, 3> coords{};
  auto operator<=>(const ProjectivePoint&) const = default;
};

ProjectivePoint normalize_point(const Field& field, Elem x, Elem y, Elem z);
ProjectivePoint fundamental_point(PointId id);
bool is_fundamental(const ProjectivePoint& pt);

Elem evaluate_F(const Curve& curve, const ProjectivePoint& pt);

struct PointSet {
  FieldPtr field;  // GF(q^m)
  std::vector<ProjectivePoint> points;  // canonical order
};

/// Points of an arbitrary plane form over the given field (coefficients must
/// already live there).
PointSet plane_curve_points(const Form& form, unsigned jobs = 1);

PointSet rational_points(const Curve& curve, int ext_degree = 1, unsigned jobs = 1);

struct SmoothnessReport {
  std::vector<std::pair<int, ProjectivePoint>> singular_points;  // (extension degree, point)
  std::vector<int> extensions_checked;
  bool clean() const noexcept { return singular_points.empty(); }
};

/// Largest m with q^m <= 2^20.
int default_probe_extension(const Field& field);

/// Searches GF(q^m) for common zeros of F, F_X, F_Y, F_Z for every m up to
/// max_ext. An empty result means no singularity was found up to the bound;
/// it is not a certificate over the algebraic closure.
SmoothnessReport smoothness_probe(const Curve& curve, int max_ext, unsigned jobs = 1);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const noexcept;
  std::string failures() const;
};

ValidationReport validate_curve(const Curve& curve);

}  // namespace pgap
