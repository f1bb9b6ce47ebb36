#include "pgap/local_series.hpp"

#include <algorithm>
#include <climits>

#include "pgap/error.hpp"

namespace pgap {

PowerSeries::PowerSeries(FieldPtr field, int valuation_offset, std::vector<Elem> coefficients,
                         int precision)
    : field_(std::move(field)),
      offset_(valuation_offset),
      coeffs_(std::move(coefficients)),
      precision_(precision) {
  normalize();
}

PowerSeries PowerSeries::zero(FieldPtr field, int precision) { return {std::move(field), 0, {}, precision}; }

PowerSeries PowerSeries::constant(FieldPtr field, Elem c, int precision) {
  return {std::move(field), 0, {c}, precision};
}

PowerSeries PowerSeries::monomial(FieldPtr field, int k, int precision) {
  return {std::move(field), k, {1}, precision};
}

void PowerSeries::normalize() {
  const long known = static_cast<long>(precision_) - offset_;
  if (known <= 0) {
    coeffs_.clear();
  } else if (static_cast<long>(coeffs_.size()) > known) {
    coeffs_.resize(static_cast<std::size_t>(known));
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = precision_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    offset_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem PowerSeries::coeff(int k) const {
  if (k >= precision_) fail(ErrorCode::insufficient_precision, "series coefficient beyond precision");
  const long idx = static_cast<long>(k) - offset_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

std::optional<int> PowerSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return offset_;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const int prec = std::min(precision_, o.precision_);
  const int lo = std::min(offset_, o.offset_);
  if (prec <= lo) return zero(field_, prec);
  std::vector<Elem> c(static_cast<std::size_t>(prec - lo), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long k = offset_ + static_cast<long>(i) - lo;
    if (k < static_cast<long>(c.size())) c[static_cast<std::size_t>(k)] = coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    const long k = o.offset_ + static_cast<long>(i) - lo;
    if (k < static_cast<long>(c.size()))
      c[static_cast<std::size_t>(k)] = field_->add(c[static_cast<std::size_t>(k)], o.coeffs_[i]);
  }
  return {field_, lo, std::move(c), prec};
}

PowerSeries PowerSeries::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return {field_, offset_, std::move(out), precision_};
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  return *this + o.scaled(field_->neg(1));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const long p1 = static_cast<long>(precision_) + o.offset_;
  const long p2 = static_cast<long>(o.precision_) + offset_;
  const int prec = static_cast<int>(std::min(p1, p2));
  const int val = offset_ + o.offset_;
  if (coeffs_.empty() || o.coeffs_.empty() || prec <= val) return zero(field_, prec);
  // Exact factors (such as x^0) carry huge precision; store only the nonzero span.
  const std::size_t len = std::min(static_cast<std::size_t>(prec - val), coeffs_.size() + o.coeffs_.size() - 1);
  std::vector<Elem> c(len, 0);
  const Field& f = *field_;
  for (std::size_t i = 0; i < coeffs_.size() && i < len; ++i) {
    const Elem a = coeffs_[i];
    if (a == 0) continue;
    const std::size_t lim = std::min(o.coeffs_.size(), len - i);
    for (std::size_t j = 0; j < lim; ++j) c[i + j] = f.add(c[i + j], f.mul(a, o.coeffs_[j]));
  }
  return {field_, val, std::move(c), prec};
}

PowerSeries PowerSeries::shifted(int k) const { return {field_, offset_ + k, coeffs_, precision_ + k}; }

PowerSeries PowerSeries::truncated(int precision) const {
  return {field_, offset_, coeffs_, std::min(precision, precision_)};
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_.empty())
    fail(ErrorCode::insufficient_precision, "cannot invert a series with unknown valuation");
  const int rel = precision_ - offset_;
  const Field& f = *field_;
  const Elem lead_inv = f.inv(coeffs_[0]);
  if (coeffs_.size() == 1) return {field_, -offset_, {lead_inv}, -offset_ + rel};
  std::vector<Elem> inv(static_cast<std::size_t>(rel), 0);
  inv[0] = lead_inv;
  for (int k = 1; k < rel; ++k) {
    Elem acc = 0;
    const int lim = std::min<int>(k, static_cast<int>(coeffs_.size()) - 1);
    for (int i = 1; i <= lim; ++i) acc = f.add(acc, f.mul(coeffs_[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(k - i)]));
    inv[static_cast<std::size_t>(k)] = f.neg(f.mul(acc, lead_inv));
  }
  return {field_, -offset_, std::move(inv), -offset_ + rel};
}

PowerSeries PowerSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  PowerSeries result = constant(field_, 1, INT_MAX / 4);
  PowerSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

struct Chart {
  int param;
  int solved;
  int fixed;
};

Chart chart_for(PointId id) {
  switch (id) {
    case PointId::P1: return {1, 2, 0};
    case PointId::P2: return {2, 0, 1};
    case PointId::P3: return {0, 1, 2};
  }
  fail(ErrorCode::invalid_argument, "unknown point");
}

// Dense truncated polynomial arithmetic mod t^prec for the Newton loop.
using Dense = std::vector<Elem>;

Dense dense_mul(const Field& f, const Dense& a, const Dense& b, std::size_t prec) {
  Dense c(prec, 0);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i] == 0) continue;
    const std::size_t lim = std::min(b.size(), prec - i);
    for (std::size_t j = 0; j < lim; ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

// Sum of c * t^a * w^b over the terms, mod t^prec, using precomputed powers.
Dense substitute(const Field& f, const std::vector<std::pair<std::array<int, 2>, Elem>>& terms,
                 const std::vector<Dense>& wpow, std::size_t prec) {
  Dense out(prec, 0);
  for (const auto& [e, c] : terms) {
    const auto& pw = wpow[static_cast<std::size_t>(e[1])];
    const std::size_t shift = static_cast<std::size_t>(e[0]);
    for (std::size_t k = 0; k + shift < prec && k < pw.size(); ++k)
      if (pw[k] != 0) out[k + shift] = f.add(out[k + shift], f.mul(c, pw[k]));
  }
  return out;
}

std::vector<Dense> powers(const Field& f, const Dense& w, int max_power, std::size_t prec) {
  std::vector<Dense> pw(static_cast<std::size_t>(max_power) + 1);
  pw[0] = Dense(prec, 0);
  if (prec > 0) pw[0][0] = 1;
  for (int b = 1; b <= max_power; ++b) pw[static_cast<std::size_t>(b)] = dense_mul(f, pw[static_cast<std::size_t>(b) - 1], w, prec);
  return pw;
}

std::vector<std::pair<std::array<int, 2>, Elem>> chart_terms(const Form& form, const Chart& ch) {
  std::vector<std::pair<std::array<int, 2>, Elem>> out;
  for (const auto& t : form.terms())
    out.push_back({{t.e[static_cast<std::size_t>(ch.param)], t.e[static_cast<std::size_t>(ch.solved)]}, t.c});
  return out;
}

}  // namespace

LocalData expand_at(const Curve& curve, PointId point, int precision) {
  const int n = curve.n();
  require(precision >= 2 * n, "series precision must be at least 2n");
  const Field& f = *curve.field();
  const Chart ch = chart_for(point);
  const auto terms = chart_terms(curve.equation(), ch);
  std::vector<std::pair<std::array<int, 2>, Elem>> dterms;
  int max_b = 0;
  for (const auto& [e, c] : terms) {
    max_b = std::max(max_b, e[1]);
    if (e[1] > 0) {
      const Elem dc = f.mul(f.from_int(e[1]), c);
      if (dc != 0) dterms.push_back({{e[0], e[1] - 1}, dc});
    }
  }

  // Newton iteration w <- w - f(t,w) / f_w(t,w), doubling the precision.
  Dense w(1, 0);
  std::size_t prec = 1;
  const std::size_t target = static_cast<std::size_t>(precision);
  while (prec < target) {
    prec = std::min(2 * prec, target);
    w.resize(prec, 0);
    const auto wp = powers(f, w, max_b, prec);
    const Dense val = substitute(f, terms, wp, prec);
    const Dense der = substitute(f, dterms, wp, prec);
    if (der.empty() || der[0] == 0)
      fail(ErrorCode::invariant_failure,
           std::string("Newton iteration failed at ") + point_name(point) + " (singular point?)");
    PowerSeries ratio = PowerSeries(curve.field(), 0, val, static_cast<int>(prec)) *
                        PowerSeries(curve.field(), 0, der, static_cast<int>(prec)).inverse();
    for (std::size_t k = 0; k < prec; ++k) {
      const int idx = static_cast<int>(k);
      if (idx >= ratio.offset()) w[k] = f.sub(w[k], ratio.coeff(idx));
    }
  }

  LocalData out;
  out.point = point;
  out.precision = precision;
  const FieldPtr& fp = curve.field();
  PowerSeries ws(fp, 0, w, precision);
  out.solved = ws;
  switch (point) {
    case PointId::P1:
      out.parameter = "u = Y/X";
      out.solved_name = "z' = Z/X";
      out.x = ws.inverse();
      out.y = out.x.shifted(1);
      break;
    case PointId::P2:
      out.parameter = "s = Z/Y";
      out.solved_name = "x'' = X/Y";
      out.x = ws.shifted(-1);
      out.y = PowerSeries::monomial(fp, -1, INT_MAX / 4);
      break;
    case PointId::P3:
      out.parameter = "t = X/Z";
      out.solved_name = "y = Y/Z";
      out.x = PowerSeries::monomial(fp, 1, INT_MAX / 4);
      out.y = ws;
      break;
  }
  return out;
}

PowerSeries chart_residual(const Curve& curve, const LocalData& local) {
  const Chart ch = chart_for(local.point);
  const auto terms = chart_terms(curve.equation(), ch);
  PowerSeries acc = PowerSeries::zero(curve.field(), local.solved.precision());
  for (const auto& [e, c] : terms) acc = acc + local.solved.pow(e[1]).shifted(e[0]).scaled(c);
  return acc;
}

std::array<int, 3> monomial_valuations(int n, int u, int v) {
  return {-u * n - v * (n - 1), u * (n - 1) - v, u + v * n};
}

PowerSeries monomial_series(const LocalData& local, int u, int v) {
  return local.x.pow(u) * local.y.pow(v);
}

FormOrder order_of_form(const LocalData& local, const Form& h) {
  const Chart ch = chart_for(local.point);
  const int prec = local.solved.precision();
  PowerSeries acc = PowerSeries::zero(local.solved.field(), prec);
  for (const auto& t : h.terms()) {
    acc = acc + local.solved.pow(t.e[static_cast<std::size_t>(ch.solved)])
                    .shifted(t.e[static_cast<std::size_t>(ch.param)])
                    .scaled(t.c);
  }
  acc = acc.truncated(prec);
  if (auto v = acc.valuation()) return {*v, false};
  return {prec, true};
}

int default_series_precision(int n, int required) { return 2 * required + n + 5; }

}  // namespace pgap
