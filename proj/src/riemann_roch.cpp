#include "pgap/riemann_roch.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pgap/error.hpp"

namespace pgap {

int ThreePointDivisor::at(PointId id) const noexcept {
  switch (id) {
    case PointId::P1: return a;
    case PointId::P2: return b;
    case PointId::P3: return c;
  }
  return 0;
}

ThreePointDivisor single_point_divisor(PointId id, int m) {
  ThreePointDivisor d;
  switch (id) {
    case PointId::P1: d.a = m; break;
    case PointId::P2: d.b = m; break;
    case PointId::P3: d.c = m; break;
  }
  return d;
}

std::vector<Exponents> monomials_of_degree(int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  return out;
}

Form basis_form(const RRSpace& space, std::size_t index, const FieldPtr& field) {
  const auto& coeffs = space.basis.at(index).form;
  std::vector<Form::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({space.monomials[i], coeffs[i]});
  return Form(field, std::move(terms));
}

namespace {

int ceil_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && ((a > 0) == (b > 0))) ? q + 1 : q;
}

// Reduced rows with distinct pivots; used to extend a basis of a subspace.
class IncrementalSpan {
 public:
  IncrementalSpan(const Field& field, std::size_t dim) : f_(field), dim_(dim) {}

  bool add(std::vector<Elem> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem factor = v[pivots_[i]];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (rows_[i][j] != 0) v[j] = f_.sub(v[j], f_.mul(factor, rows_[i][j]));
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Elem inv = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    for (auto& row : rows_) {
      const Elem factor = row[p];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (v[j] != 0) row[j] = f_.sub(row[j], f_.mul(factor, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  const Field& f_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

RiemannRochOracle::RiemannRochOracle(Curve curve, OracleOptions options)
    : curve_(std::move(curve)), options_(options) {}

RiemannRochOracle::Shifted RiemannRochOracle::shifted(const ThreePointDivisor& d) const {
  // f -> f x^u y^v with u + vn = c moves D to D - div(x^u y^v), which vanishes
  // at P3. Each unit of v trades n^2-n+1 between the P1 and P2 parts, so v is
  // chosen to minimize the form degree; c = 0 keeps the identity shift.
  const int n = curve_.n();
  const int step = n * n - n + 1;
  auto degree_for = [&](int v, int& a, int& b) {
    a = d.a + d.c * n - v * step;
    b = d.b - d.c * (n - 1) + v * step;
    return std::max({n, ceil_div(a, n), b}) + 2 + options_.extra_degree;
  };
  Shifted best;
  best.form_degree = degree_for(0, best.a, best.b);
  best.shift = {d.c, 0};
  if (d.c != 0) {
    const int reach = (std::abs(d.a) + std::abs(d.b) + std::abs(d.c) * n) / step + 2;
    for (int mag = 1; mag <= reach; ++mag)
      for (int v : {mag, -mag}) {
        int a = 0, b = 0;
        const int N = degree_for(v, a, b);
        if (N < best.form_degree) best = {{d.c - v * n, v}, a, b, N};
      }
  }
  return best;
}

int RiemannRochOracle::form_degree(const ThreePointDivisor& d) const {
  const int N = shifted(d).form_degree;
  if (N > options_.degree_cap)
    fail(ErrorCode::budget_exceeded, "form degree " + std::to_string(N) + " exceeds cap " +
                                         std::to_string(options_.degree_cap));
  return N;
}

const LocalData& RiemannRochOracle::local(PointId id, int precision) const {
  const int key = static_cast<int>(id);
  auto it = locals_.find(key);
  if (it != locals_.end() && it->second.precision >= precision) return it->second;
  int prec = std::max(precision, 2 * curve_.n());
  if (it != locals_.end()) prec = std::max(prec, 2 * it->second.precision);
  locals_[key] = expand_at(curve_, id, prec);
  return locals_[key];
}

std::vector<std::vector<Elem>> RiemannRochOracle::solved_powers(PointId id, int max_power,
                                                               int precision) const {
  const int key = static_cast<int>(id);
  auto& cache = power_cache_[key];
  if (cache.precision < precision || static_cast<int>(cache.powers.size()) <= max_power) {
    const int prec = std::max(precision, cache.precision);
    const int top = std::max(max_power, static_cast<int>(cache.powers.size()) - 1);
    const LocalData& ld = local(id, prec);
    const PowerSeries w = ld.solved.truncated(prec);
    std::vector<std::vector<Elem>> powers;
    PowerSeries acc = PowerSeries::constant(curve_.field(), 1, prec);
    for (int e = 0; e <= top; ++e) {
      std::vector<Elem> dense(static_cast<std::size_t>(prec), 0);
      for (int k = 0; k < prec; ++k) dense[static_cast<std::size_t>(k)] = acc.coeff(k);
      powers.push_back(std::move(dense));
      acc = (acc * w).truncated(prec);
    }
    cache.precision = prec;
    cache.powers = std::move(powers);
  }
  return cache.powers;
}

RiemannRochOracle::System RiemannRochOracle::build_system(const ThreePointDivisor& d) const {
  const int n = curve_.n();
  System sys;
  // f in L(D)  <=>  f x^u y^v in L(D'), D' = A P1 + B P2.
  const Shifted sh = shifted(d);
  const int A = sh.a;
  const int B = sh.b;
  const int N = form_degree(d);
  sys.shift = sh.shift;
  sys.form_degree = N;
  sys.monomials = monomials_of_degree(N);
  // h / Z^N in L(D') iff ord_P1(h) >= Nn - A and ord_P2(h) >= N - B.
  const int t1 = std::max(0, N * n - A);
  const int t2 = std::max(0, N - B);
  const std::size_t cols = sys.monomials.size();
  sys.constraints = Matrix(curve_.field(), static_cast<std::size_t>(t1 + t2), cols);
  std::lock_guard<std::mutex> lock(mutex_);
  if (t1 > 0) {
    // Chart X = 1: h(1, u, z'(u)) = sum h_abc u^b z'^c.
    const auto zp = solved_powers(PointId::P1, N, t1);
    for (std::size_t col = 0; col < cols; ++col) {
      const auto& e = sys.monomials[col];
      const auto& pw = zp[static_cast<std::size_t>(e[2])];
      for (int t = e[1]; t < t1; ++t)
        sys.constraints.at(static_cast<std::size_t>(t), col) = pw[static_cast<std::size_t>(t - e[1])];
    }
  }
  if (t2 > 0) {
    // Chart Y = 1: h(x''(s), 1, s) = sum h_abc x''^a s^c.
    const auto xp = solved_powers(PointId::P2, N, t2);
    for (std::size_t col = 0; col < cols; ++col) {
      const auto& e = sys.monomials[col];
      const auto& pw = xp[static_cast<std::size_t>(e[0])];
      for (int t = e[2]; t < t2; ++t)
        sys.constraints.at(static_cast<std::size_t>(t1 + t), col) = pw[static_cast<std::size_t>(t - e[2])];
    }
  }
  return sys;
}

int RiemannRochOracle::dimension(const ThreePointDivisor& d) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
  }
  const System sys = build_system(d);
  const int n = curve_.n();
  const int N = sys.form_degree;
  const int solutions = static_cast<int>(sys.monomials.size() - rank(sys.constraints));
  // Forms divisible by F vanish on the curve.
  const int multiples_of_F = (N - n + 1) * (N - n) / 2;
  const int dim = solutions - multiples_of_F;
  if (dim < 0) fail(ErrorCode::internal, "negative Riemann-Roch dimension");
  std::lock_guard<std::mutex> lock(mutex_);
  memo_[d] = dim;
  return dim;
}

RRSpace RiemannRochOracle::basis(const ThreePointDivisor& d) const {
  const System sys = build_system(d);
  const Field& f = *curve_.field();
  const int n = curve_.n();
  const int N = sys.form_degree;
  const Matrix kernel = nullspace(sys.constraints);

  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < sys.monomials.size(); ++i) index[sys.monomials[i]] = i;

  IncrementalSpan span(f, sys.monomials.size());
  for (const auto& m : monomials_of_degree(N - n - 1)) {
    std::vector<Elem> v(sys.monomials.size(), 0);
    for (const auto& t : curve_.equation().terms()) {
      const Exponents e{t.e[0] + m[0], t.e[1] + m[1], t.e[2] + m[2]};
      auto& slot = v[index.at(e)];
      slot = f.add(slot, t.c);
    }
    span.add(std::move(v));
  }

  RRSpace out;
  out.divisor = d;
  out.form_degree = N;
  out.shift = sys.shift;
  out.monomials = sys.monomials;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    std::vector<Elem> v(kernel.row(r), kernel.row(r) + kernel.cols());
    if (span.add(v)) out.basis.push_back({std::move(v)});
  }
  out.dimension = static_cast<int>(out.basis.size());
  const int expected = dimension(d);
  if (out.dimension != expected)
    fail(ErrorCode::internal, "basis size " + std::to_string(out.dimension) + " != dimension " +
                                  std::to_string(expected));
  return out;
}

bool RiemannRochOracle::satisfies_divisor(const RRSpace& space, std::size_t index) const {
  const int n = curve_.n();
  const Form h = basis_form(space, index, curve_.field());
  const std::array<int, 3> ord_z{n, 1, 0};
  const auto vs = monomial_valuations(n, space.shift[0], space.shift[1]);
  for (int k = 0; k < 3; ++k) {
    const auto id = static_cast<PointId>(k);
    const int idx = k;
    // v(f) = ord(h) - N ord(Z) - v(x^u y^v) >= -D  <=>  ord(h) >= threshold
    const int threshold = -space.divisor.at(id) + space.form_degree * ord_z[static_cast<std::size_t>(idx)] +
                          vs[static_cast<std::size_t>(idx)];
    if (threshold <= 0) continue;
    const LocalData ld = expand_at(curve_, id, std::max(2 * n, default_series_precision(n, threshold)));
    const FormOrder ord = order_of_form(ld, h);
    if (ord.value < threshold) return false;
  }
  return true;
}

int dim_L_oracle(const RiemannRochOracle& oracle, const ThreePointDivisor& d) { return oracle.dimension(d); }

RRSpace basis_L_oracle(const RiemannRochOracle& oracle, const ThreePointDivisor& d) { return oracle.basis(d); }

namespace {

struct Split {
  int d;
  int r;
};

Split split_m(int n, int m) {
  require(n >= 3, "n must be >= 3");
  const int g = n * (n - 1) / 2;
  require(m >= 1 && m <= 2 * g - 2, "m must lie in [1, 2g-2] = [1, " + std::to_string(2 * g - 2) + "]");
  return {m / (n - 1), m % (n - 1)};
}

}  // namespace

int dim_mP_formula(int n, int m, PointId) {
  const auto [d, r] = split_m(n, m);
  return (d * d - d + 2) / 2 + std::min(r, d);
}

int dim_shifted_formula(int n, int m, ShiftedVariant) {
  const auto [d, r] = split_m(n, m);
  return (d - 1) * (d - 2) / 2 + std::min(r, d);
}

ThreePointDivisor shifted_divisor(int n, int m, ShiftedVariant variant) {
  const int d = split_m(n, m).d;
  switch (variant) {
    case ShiftedVariant::P2_minus_P1: return {-d, m, 0};
    case ShiftedVariant::P3_minus_P2: return {0, -d, m};
    case ShiftedVariant::P1_minus_P3: return {m, 0, -d};
  }
  fail(ErrorCode::invalid_argument, "unknown variant");
}

namespace {
void check_md(int n, int i, int j) {
  require(i >= 1 && j >= 1, "i, j must be >= 1");
  require(i + j >= 2 && i + j <= n - 1, "need 2 <= i+j <= n-1");
}
}  // namespace

int dim_Md_Nd(int n, int i, int j) {
  check_md(n, i, j);
  const int d = i + j;
  return (d - 1) * (d - 2) / 2 + i;
}

ThreePointDivisor divisor_Md(int n, int i, int j) {
  check_md(n, i, j);
  return {i * n - (i + j), j * (n - 1), 0};
}

ThreePointDivisor divisor_Nd(int n, int i, int j) {
  check_md(n, i, j);
  return {(i - 1) * n, (j - 1) * n + i - 1, 0};
}

int dim_Sd(int n, int i, int j, int k) {
  const int d = i + j + k;
  const int g = n * (n - 1) / 2;
  if (d < 0) return 0;
  if (d <= n - 2) return (d + 2) * (d + 1) / 2;
  return (n + 1) * d - g + 1;
}

ThreePointDivisor divisor_Sd(int n, int i, int j, int k) { return {k * n + j, i * n + k, j * n + i}; }

int dim_Sd_plus_e(int n, int i, int j, int k, int e) {
  const int d = i + j + k;
  require(d >= 0 && d <= n - 2, "need 0 <= d <= n-2");
  require(d + e == n - 2, "need d + e = n-2");
  return (d + 2) * (d + 1) / 2;
}

ThreePointDivisor canonical_divisor(int n) {
  require(n >= 3, "n must be >= 3");
  return {(n - 2) * n, n - 2, 0};
}

}  // namespace pgap
