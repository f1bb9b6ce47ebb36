#include "pgap/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "pgap/error.hpp"

namespace pgap {

namespace {

constexpr std::uint32_t kTableOrder = 256;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm && !a.empty()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::uint64_t FieldSpec::order() const { return ipow(characteristic, degree); }

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << characteristic;
  if (degree > 1) os << "^" << degree;
  os << ")";
  return os.str();
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Normalize to monic so that remainders by monic trial divisors are exact.
  if (f.back() != 1) {
    std::uint32_t lead = f.back(), inv = 1;
    while (static_cast<std::uint64_t>(lead) * inv % p != 1) ++inv;
    for (auto& c : f) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
  }
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_rem(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
  require(is_prime(p), "characteristic must be prime");
  require(k >= 1, "degree must be at least 1");
  Poly m(k + 1, 0);
  m[k] = 1;
  const std::uint64_t count = ipow(p, k);
  // Counting with c0 as the most significant digit gives the
  // low-degree-first lexicographic order.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(p, m)) return m;
  }
  fail(ErrorCode::internal, "no irreducible polynomial found");
}

FieldSpec make_field_spec(std::uint32_t p, std::uint32_t k,
                          std::optional<std::vector<std::uint32_t>> modulus) {
  require(is_prime(p), "characteristic " + std::to_string(p) + " is not prime");
  require(k >= 1, "field degree must be >= 1");
  require(ipow(p, k) <= Field::kMaxOrder, "field order exceeds supported maximum");
  FieldSpec spec{p, k, {}};
  if (!modulus) {
    spec.modulus = default_modulus(p, k);
    return spec;
  }
  Poly m = *modulus;
  require(m.size() == k + 1, "modulus must have exactly k+1 coefficients");
  require(m.back() == 1, "modulus must be monic");
  for (auto c : m) require(c < p, "modulus coefficient out of range");
  require(is_irreducible(p, m), "modulus is reducible over GF(" + std::to_string(p) + ")");
  spec.modulus = std::move(m);
  return spec;
}

FieldPtr Field::create(const FieldSpec& spec) {
  FieldSpec checked = make_field_spec(spec.characteristic, spec.degree,
                                      spec.modulus.empty() ? std::nullopt
                                                           : std::optional<Poly>(spec.modulus));
  std::shared_ptr<Field> f(new Field());
  f->spec_ = std::move(checked);
  f->build(true);
  return f;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t k) { return create(make_field_spec(p, k)); }

FieldPtr Field::create_unchecked(const FieldSpec& spec) {
  require(is_prime(spec.characteristic), "characteristic must be prime");
  require(spec.modulus.size() == spec.degree + 1 && spec.modulus.back() == 1,
          "modulus must be monic of the stated degree");
  require(spec.order() <= kTableOrder, "unchecked fields are limited to small orders");
  std::shared_ptr<Field> f(new Field());
  f->spec_ = spec;
  f->build(false);
  return f;
}

Elem Field::add_slow(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.degree; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::neg_slow(Elem a) const {
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.degree; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  Poly prod(2 * spec_.degree, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
  }
  Poly r = poly_rem(std::move(prod), spec_.modulus, p_);
  return from_coefficients(r);
}

void Field::build(bool checked) {
  p_ = spec_.characteristic;
  q_ = static_cast<std::uint32_t>(spec_.order());
  if (q_ <= kTableOrder) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
      neg_table_[a] = neg_slow(a);
      for (Elem b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_slow(a, b);
        mul_table_[a * q_ + b] = mul_slow(a, b);
      }
    }
    for (Elem a = 1; a < q_; ++a) {
      for (Elem b = 1; b < q_; ++b) {
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = b;
          break;
        }
      }
      if (inv_table_[a] == 0) is_field_ = false;
    }
    if (checked && !is_field_) fail(ErrorCode::internal, "field tables inconsistent");
    return;
  }
  if (!checked) fail(ErrorCode::invalid_argument, "unchecked fields are limited to small orders");

  // Large field: find a primitive element, then log/exp (and Zech) tables.
  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto pow_slow = [&](Elem base, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return r;
  };
  Elem generator = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool primitive = true;
    for (auto f : factors)
      if (pow_slow(cand, group / f) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      generator = cand;
      break;
    }
  }
  if (generator == 0) fail(ErrorCode::internal, "no primitive element found");
  exp_.resize(2 * group);
  log_.assign(q_, 0);
  Elem e = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = e;
    exp_[i + group] = e;
    log_[e] = static_cast<std::uint32_t>(i);
    e = mul_slow(e, generator);
  }
  if (p_ != 2) {
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) neg_table_[a] = neg_slow(a);
    if (spec_.degree > 1) {
      zech_.resize(group);
      for (std::uint64_t i = 0; i < group; ++i) {
        Elem s = add_slow(1, exp_[i]);
        zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
      }
    }
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "division by zero in " + spec_.describe());
  if (!inv_table_.empty()) {
    Elem r = inv_table_[a];
    if (r == 0) fail(ErrorCode::invariant_failure, "element has no inverse (modulus is reducible)");
    return r;
  }
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(std::int64_t v) const noexcept {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(spec_.degree, 0);
  for (std::uint32_t i = 0; i < spec_.degree; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  require(coeffs.size() <= spec_.degree, "too many coefficients for field degree");
  Elem r = 0, scale = 1;
  for (auto c : coeffs) {
    require(c < p_, "coefficient out of range");
    r += c * scale;
    scale *= p_;
  }
  return r;
}

bool same_field(const Field& a, const Field& b) noexcept { return &a == &b || a.spec() == b.spec(); }

FieldPtr extension_field(const Field& base, std::uint32_t m) {
  require(m >= 1, "extension degree must be >= 1");
  if (m == 1) return Field::create(base.spec());
  static std::mutex cache_mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  const auto key = std::make_pair(base.characteristic(), base.degree() * m);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = Field::create(base.characteristic(), base.degree() * m);
  cache.emplace(key, f);
  return f;
}

Embedding::Embedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  const Field& src = *source_;
  const Field& dst = *target_;
  require(src.characteristic() == dst.characteristic(), "embedding across characteristics");
  require(dst.degree() % src.degree() == 0, "target is not an extension of the source field");
  image_.resize(src.order());
  if (src.spec() == dst.spec()) {
    for (Elem a = 0; a < src.order(); ++a) image_[a] = a;
    return;
  }
  const auto& mod = src.spec().modulus;
  // Root of the source modulus in the target; prime-field coefficients are
  // the same packed values in both fields.
  Elem root = 0;
  bool found = false;
  if (src.degree() == 1) {
    found = true;
  } else {
    for (Elem cand = 0; cand < dst.order() && !found; ++cand) {
      Elem acc = 0;
      for (std::size_t i = mod.size(); i-- > 0;) acc = dst.add(dst.mul(acc, cand), mod[i]);
      if (acc == 0) {
        root = cand;
        found = true;
      }
    }
  }
  if (!found) fail(ErrorCode::internal, "source modulus has no root in target field");
  std::vector<Elem> root_pows(src.degree(), 1);
  for (std::uint32_t i = 1; i < src.degree(); ++i) root_pows[i] = dst.mul(root_pows[i - 1], root);
  for (Elem a = 0; a < src.order(); ++a) {
    auto c = src.coefficients(a);
    Elem acc = 0;
    for (std::uint32_t i = 0; i < src.degree(); ++i) acc = dst.add(acc, dst.mul(c[i], root_pows[i]));
    image_[a] = acc;
  }
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  require(field_ != nullptr, "field element without a field");
  require(field_->contains(value_), "element out of range for " + field_->spec().describe());
}

void FieldElement::check_same(const FieldElement& o) const {
  require(same_field(*field_, *o.field_), "field mismatch: " + field_->spec().describe() + " vs " +
                                              o.field_->spec().describe());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(*field_, *o.field_) && value_ == o.value_;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  fail(ErrorCode::invalid_argument, "unknown arithmetic operation");
}

FieldElement embed(const FieldElement& e, const FieldPtr& target) {
  Embedding emb(e.field(), target);
  return {target, emb(e.value())};
}

}  // namespace pgap
