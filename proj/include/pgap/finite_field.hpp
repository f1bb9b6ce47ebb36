#pragma once

// Exact arithmetic in GF(p^k).
//
// An element is its coefficient vector in the basis 1, a, a^2, ..., a^(k-1)
// where a is a root of the field modulus. The vector is stored packed as the
// base-p integer sum c_i p^i, so the prime subfield is {0, ..., p-1} and the
// packed value of an element is stable for a fixed modulus.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgap {

using Elem = std::uint32_t;

struct FieldSpec {
  std::uint32_t characteristic = 2;
  std::uint32_t degree = 1;
  /// Monic modulus, low-degree coefficient first, length degree + 1.
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;
  std::string describe() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t value);

/// Trial division by every monic polynomial of degree 1..deg/2 over GF(p).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// comparing coefficients low degree first.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

/// Validates p, k and the modulus; fills in the default modulus when absent.
FieldSpec make_field_spec(std::uint32_t p, std::uint32_t k,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

class Field {
 public:
  /// Largest supported order. Multiplication uses log tables of this size.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  static std::shared_ptr<const Field> create(const FieldSpec& spec);
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t k);

  /// Skips the irreducibility check. Only for small orders; exists so that
  /// diagnostics can exercise a broken modulus.
  static std::shared_ptr<const Field> create_unchecked(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t characteristic() const noexcept { return spec_.characteristic; }
  std::uint32_t degree() const noexcept { return spec_.degree; }
  std::uint32_t order() const noexcept { return q_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    if (p_ == 2) return a ^ b;
    if (spec_.degree == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (a == 0) return b;
    if (b == 0) return a;
    // Zech logarithm: a + b = a (1 + b/a)
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t diff = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::int64_t z = zech_[diff];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }

  Elem neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    return neg_table_.empty() ? neg_slow(a) : neg_table_[a];
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  /// Throws on zero (and on non-units of an unchecked ring).
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
  bool contains(Elem a) const noexcept { return a < q_; }

  /// Nonzero elements with no inverse. Always empty for a checked field.
  bool is_field() const noexcept { return is_field_; }

 private:
  Field() = default;
  void build(bool checked);
  Elem mul_slow(Elem a, Elem b) const;
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;

  FieldSpec spec_;
  std::uint32_t p_ = 2;
  std::uint32_t q_ = 2;
  bool is_field_ = true;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> inv_table_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool same_field(const Field& a, const Field& b) noexcept;

/// GF(q^m) over the same prime, with the default modulus of degree k*m.
FieldPtr extension_field(const Field& base, std::uint32_t m);

/// Field homomorphism GF(q) -> GF(q^m): the generator of the source is sent
/// to the smallest root of the source modulus in the target.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);

  Elem operator()(Elem a) const { return image_.at(a); }
  const FieldPtr& source() const noexcept { return source_; }
  const FieldPtr& target() const noexcept { return target_; }

 private:
  FieldPtr source_;
  FieldPtr target_;
  std::vector<Elem> image_;
};

/// Checked element value tied to its field. Mixed-field operations throw.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  Elem value_;
};

enum class ArithOp { add, sub, mul, div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

FieldElement embed(const FieldElement& e, const FieldPtr& target);

}  // namespace pgap
