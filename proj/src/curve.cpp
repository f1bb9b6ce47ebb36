#include "pgap/curve.hpp"

#include <algorithm>
#include <sstream>

#include "pgap/error.hpp"
#include "pgap/local_series.hpp"
#include "pgap/parallel.hpp"

namespace pgap {

Form::Form(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)), terms_(std::move(terms)) {
  normalize();
}

void Form::normalize() {
  std::map<Exponents, Elem> merged;
  for (const auto& t : terms_) {
    auto& slot = merged[t.e];
    slot = field_->add(slot, t.c);
  }
  terms_.clear();
  for (const auto& [e, c] : merged)
    if (c != 0) terms_.push_back({e, c});
}

int Form::degree() const noexcept {
  if (terms_.empty()) return -1;
  const auto& e = terms_.front().e;
  return e[0] + e[1] + e[2];
}

Elem Form::evaluate(Elem x, Elem y, Elem z) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (const auto& t : terms_) {
    Elem v = f.mul(t.c, f.pow(x, static_cast<std::uint64_t>(t.e[0])));
    v = f.mul(v, f.pow(y, static_cast<std::uint64_t>(t.e[1])));
    v = f.mul(v, f.pow(z, static_cast<std::uint64_t>(t.e[2])));
    acc = f.add(acc, v);
  }
  return acc;
}

Form Form::partial(int var) const {
  require(var >= 0 && var < 3, "partial derivative variable must be 0, 1 or 2");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.e[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Term d = t;
    d.e[static_cast<std::size_t>(var)] -= 1;
    d.c = field_->mul(t.c, field_->from_int(e));
    out.push_back(d);
  }
  return Form(field_, std::move(out));
}

Form Form::embedded(const Embedding& emb) const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.e, emb(t.c)});
  return Form(emb.target(), std::move(out));
}

const char* point_name(PointId id) {
  switch (id) {
    case PointId::P1: return "P1";
    case PointId::P2: return "P2";
    case PointId::P3: return "P3";
  }
  return "?";
}

PointId point_from_index(int index) {
  require(index >= 1 && index <= 3, "point index must be 1, 2 or 3");
  return static_cast<PointId>(index - 1);
}

Curve::Curve(CurveSpec spec) : spec_(std::move(spec)) {
  require(spec_.field != nullptr, "curve spec has no field");
  require(spec_.n >= 3, "n must be >= 3 (curve degree n+1 > 3)");
  const int n = spec_.n;
  for (auto it = spec_.g_coeffs.begin(); it != spec_.g_coeffs.end();) {
    const auto& [e, c] = *it;
    require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0, "G exponents must be nonnegative");
    require(e[0] + e[1] + e[2] == n - 2, "G monomials must have degree n-2");
    require(spec_.field->contains(c), "G coefficient out of field range");
    it = (c == 0) ? spec_.g_coeffs.erase(it) : std::next(it);
  }
  std::vector<Form::Term> terms{
      {{1, n, 0}, 1},
      {{0, 1, n}, 1},
      {{n, 0, 1}, 1},
  };
  for (const auto& [e, c] : spec_.g_coeffs) terms.push_back({{e[0] + 1, e[1] + 1, e[2] + 1}, c});
  equation_ = Form(spec_.field, std::move(terms));
}

int genus(const CurveSpec& spec) { return spec.n * (spec.n - 1) / 2; }

ProjectivePoint normalize_point(const Field& field, Elem x, Elem y, Elem z) {
  const std::array<Elem, 3> c{x, y, z};
  for (std::size_t i = 0; i < 3; ++i) {
    if (c[i] == 0) continue;
    const Elem inv = field.inv(c[i]);
    ProjectivePoint p;
    for (std::size_t j = 0; j < 3; ++j) p.coords[j] = field.mul(c[j], inv);
    return p;
  }
  fail(ErrorCode::invalid_argument, "(0:0:0) is not a projective point");
}

ProjectivePoint fundamental_point(PointId id) {
  ProjectivePoint p;
  p.coords[static_cast<std::size_t>(id)] = 1;
  return p;
}

bool is_fundamental(const ProjectivePoint& pt) {
  int nonzero = 0;
  for (auto c : pt.coords) nonzero += c != 0;
  return nonzero == 1;
}

Elem evaluate_F(const Curve& curve, const ProjectivePoint& pt) {
  for (auto c : pt.coords) require(curve.field()->contains(c), "point coordinates outside the curve field");
  return curve.equation().evaluate(pt.coords[0], pt.coords[1], pt.coords[2]);
}

namespace {

// For the chart Z = 1: coefficients of the form as a polynomial in y, with
// x fixed. Index j holds sum of c x^a over terms X^a Y^j Z^*.
struct YPolyBuilder {
  std::vector<std::vector<std::pair<int, Elem>>> by_y;  // by_y[j] = [(a, c)]
  int max_x = 0;

  explicit YPolyBuilder(const Form& form) {
    int max_y = 0;
    for (const auto& t : form.terms()) {
      max_y = std::max(max_y, t.e[1]);
      max_x = std::max(max_x, t.e[0]);
    }
    by_y.resize(static_cast<std::size_t>(max_y) + 1);
    for (const auto& t : form.terms()) by_y[static_cast<std::size_t>(t.e[1])].push_back({t.e[0], t.c});
  }

  void at(const Field& f, const std::vector<Elem>& xpow, std::vector<Elem>& out) const {
    out.assign(by_y.size(), 0);
    for (std::size_t j = 0; j < by_y.size(); ++j)
      for (const auto& [a, c] : by_y[j]) out[j] = f.add(out[j], f.mul(c, xpow[static_cast<std::size_t>(a)]));
  }
};

Elem horner(const Field& f, const std::vector<Elem>& poly, Elem y) {
  Elem acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, y), poly[i]);
  return acc;
}

void poly_trim(std::vector<Elem>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Monic gcd by Euclid.
std::vector<Elem> poly_gcd(const Field& f, std::vector<Elem> a, std::vector<Elem> b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    const Elem lead_inv = f.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      const Elem factor = f.mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
      poly_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

std::vector<Elem> x_powers(const Field& f, Elem x, int max_x) {
  std::vector<Elem> xp(static_cast<std::size_t>(max_x) + 1, 1);
  for (int i = 1; i <= max_x; ++i) xp[static_cast<std::size_t>(i)] = f.mul(xp[static_cast<std::size_t>(i) - 1], x);
  return xp;
}

}  // namespace

PointSet plane_curve_points(const Form& form, unsigned jobs) {
  require(form.field() != nullptr, "form has no field");
  const Field& f = *form.field();
  const std::uint32_t q = f.order();
  const YPolyBuilder builder(form);
  const std::size_t chunks = chunk_count(q, jobs);
  std::vector<std::vector<ProjectivePoint>> found(chunks);
  parallel_chunks(q, jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::vector<Elem> poly;
    for (std::size_t xi = begin; xi < end; ++xi) {
      const Elem x = static_cast<Elem>(xi);
      builder.at(f, x_powers(f, x, builder.max_x), poly);
      for (Elem y = 0; y < q; ++y)
        if (horner(f, poly, y) == 0) found[chunk].push_back(normalize_point(f, x, y, 1));
    }
  });
  PointSet out{form.field(), {}};
  for (auto& v : found) out.points.insert(out.points.end(), v.begin(), v.end());
  // Line Z = 0.
  for (Elem y = 0; y < q; ++y)
    if (form.evaluate(1, y, 0) == 0) out.points.push_back(normalize_point(f, 1, y, 0));
  if (form.evaluate(0, 1, 0) == 0) out.points.push_back(normalize_point(f, 0, 1, 0));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

PointSet rational_points(const Curve& curve, int ext_degree, unsigned jobs) {
  require(ext_degree >= 1, "extension degree must be >= 1");
  if (ext_degree == 1) return plane_curve_points(curve.equation(), jobs);
  auto target = extension_field(*curve.field(), static_cast<std::uint32_t>(ext_degree));
  Embedding emb(curve.field(), target);
  return plane_curve_points(curve.equation().embedded(emb), jobs);
}

int default_probe_extension(const Field& field) {
  int m = 1;
  std::uint64_t order = field.order();
  while (order * field.order() <= (std::uint64_t{1} << 20)) {
    order *= field.order();
    ++m;
  }
  return m;
}

SmoothnessReport smoothness_probe(const Curve& curve, int max_ext, unsigned jobs) {
  require(max_ext >= 1, "max_ext must be >= 1");
  SmoothnessReport report;
  for (int m = 1; m <= max_ext; ++m) {
    FieldPtr target = m == 1 ? curve.field() : extension_field(*curve.field(), static_cast<std::uint32_t>(m));
    Embedding emb(curve.field(), target);
    const Form F = curve.equation().embedded(emb);
    const std::array<Form, 4> forms{F, F.partial(0), F.partial(1), F.partial(2)};
    const Field& f = *target;
    const std::uint32_t q = f.order();
    std::vector<YPolyBuilder> builders;
    int max_x = 0;
    for (const auto& form : forms) {
      builders.emplace_back(form);
      max_x = std::max(max_x, builders.back().max_x);
    }
    auto singular_at = [&](Elem x, Elem y, Elem z) {
      for (const auto& form : forms)
        if (form.evaluate(x, y, z) != 0) return false;
      return true;
    };
    const std::size_t chunks = chunk_count(q, jobs);
    std::vector<std::vector<ProjectivePoint>> found(chunks);
    parallel_chunks(q, jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      std::vector<Elem> poly;
      for (std::size_t xi = begin; xi < end; ++xi) {
        const Elem x = static_cast<Elem>(xi);
        const auto xp = x_powers(f, x, max_x);
        std::vector<Elem> g;
        for (std::size_t k = 0; k < builders.size(); ++k) {
          builders[k].at(f, xp, poly);
          g = k == 0 ? poly : poly_gcd(f, g, poly);
          poly_trim(g);
          if (g.size() == 1) break;
        }
        // A zero polynomial (all four vanish identically in y) also needs the sweep.
        if (g.size() == 1) continue;
        for (Elem y = 0; y < q; ++y)
          if (singular_at(x, y, 1)) found[chunk].push_back(normalize_point(f, x, y, 1));
      }
    });
    std::vector<ProjectivePoint> pts;
    for (auto& v : found) pts.insert(pts.end(), v.begin(), v.end());
    for (Elem y = 0; y < q; ++y)
      if (singular_at(1, y, 0)) pts.push_back(normalize_point(f, 1, y, 0));
    if (singular_at(0, 1, 0)) pts.push_back(normalize_point(f, 0, 1, 0));
    std::sort(pts.begin(), pts.end());
    for (const auto& p : pts) report.singular_points.push_back({m, p});
    report.extensions_checked.push_back(m);
  }
  return report;
}

bool ValidationReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!out.empty()) out += "; ";
    out += c.name + ": " + c.detail;
  }
  return out;
}

ValidationReport validate_curve(const Curve& curve) {
  ValidationReport report;
  const int n = curve.n();
  const Form& F = curve.equation();
  const std::array<Form, 3> grad{F.partial(0), F.partial(1), F.partial(2)};
  const std::array<PointId, 3> ids{PointId::P1, PointId::P2, PointId::P3};

  for (auto id : ids) {
    const auto pt = fundamental_point(id);
    const Elem v = evaluate_F(curve, pt);
    report.checks.push_back({std::string(point_name(id)) + " lies on the curve", v == 0,
                             v == 0 ? "F = 0" : "F = " + std::to_string(v)});
  }
  for (auto id : ids) {
    const auto pt = fundamental_point(id);
    bool nonzero = false;
    for (const auto& g : grad) nonzero |= g.evaluate(pt.coords[0], pt.coords[1], pt.coords[2]) != 0;
    report.checks.push_back({std::string("nonsingular at ") + point_name(id), nonzero,
                             nonzero ? "gradient nonzero" : "gradient vanishes"});
  }

  // Lines Z = 0, X = 0, Y = 0 must cut nP1 + P2, nP2 + P3, nP3 + P1.
  struct LineCheck {
    const char* name;
    int var;
    std::array<int, 3> expected;
  };
  const std::array<LineCheck, 3> lines{{
      {"line Z=0 cuts nP1+P2", 2, {n, 1, 0}},
      {"line X=0 cuts nP2+P3", 0, {0, n, 1}},
      {"line Y=0 cuts nP3+P1", 1, {1, 0, n}},
  }};
  std::array<std::optional<LocalData>, 3> locals;
  std::string expansion_error;
  for (auto id : ids) {
    try {
      locals[static_cast<std::size_t>(id)] = expand_at(curve, id, default_series_precision(n, n + 1));
    } catch (const Error& e) {
      expansion_error = e.what();
    }
  }
  for (const auto& line : lines) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(line.var)] = 1;
    const Form h(curve.field(), {{e, 1}});
    bool pass = true;
    std::ostringstream detail;
    detail << "orders (";
    for (auto id : ids) {
      const auto& local = locals[static_cast<std::size_t>(id)];
      if (!local) {
        pass = false;
        detail << "?";
      } else {
        const auto ord = order_of_form(*local, h);
        pass &= !ord.at_least && ord.value == line.expected[static_cast<std::size_t>(id)];
        detail << ord.value << (ord.at_least ? "+" : "");
      }
      if (id != PointId::P3) detail << ",";
    }
    detail << ")";
    if (!expansion_error.empty()) detail << " " << expansion_error;
    report.checks.push_back({line.name, pass, detail.str()});
  }
  return report;
}

}  // namespace pgap
