#include "pgap/ag_codes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <set>

#include "pgap/error.hpp"
#include "pgap/parallel.hpp"
#include "pgap/weierstrass.hpp"

namespace pgap {

namespace {

std::string str(int v) { return std::to_string(v); }

}  // namespace

CodeSpecPair make_code_spec_pair(int n, int i, int j) {
  require(n >= 3, "n must be >= 3");
  require(i >= 1 && j >= 1, "need i >= 1 and j >= 1");
  const int d = i + j;
  if (2 * d < n + 2 || d > n - 1)
    fail(ErrorCode::invalid_argument, "design violates (n+2)/2 <= i+j <= n-1: n=" + str(n) + ", i+j=" + str(d));
  CodeSpecPair s;
  s.n = n;
  s.i = i;
  s.j = j;
  s.alpha = {(i - 1) * n + 1, (j - 1) * n + i};
  s.beta = {i * n - i - j, j * n - j};
  s.divisor = {s.alpha[0] + s.beta[0] - 1, s.alpha[1] + s.beta[1] - 1, 0};
  return s;
}

CodeSpecTriple make_code_spec_triple(int n, int i, int j, int k) {
  require(n >= 3, "n must be >= 3");
  require(i >= 0 && j >= 0 && k >= 0, "need i, j, k >= 0");
  const int d = i + j + k;
  if ((n - 2) * (n - 2) >= d * (2 * n - 1) || d > n - 3)
    fail(ErrorCode::invalid_argument,
         "design violates (n-2)^2/(2n-1) < i+j+k <= n-3: n=" + str(n) + ", i+j+k=" + str(d));
  CodeSpecTriple s;
  s.n = n;
  s.i = i;
  s.j = j;
  s.k = k;
  s.lower = {k * n + j + 1, i * n + k + 1, j * n + i + 1};
  s.upper = {(k + 1) * n - k - i - 2, (i + 1) * n - i - j - 2, (j + 1) * n - j - k - 2};
  s.divisor = {s.lower[0] + s.upper[0] - 1, s.lower[1] + s.upper[1] - 1, s.lower[2] + s.upper[2] - 1};
  if (s.divisor.degree() != (2 * d + 3) * n - d - 6)
    fail(ErrorCode::invariant_failure, "deg F2 differs from (2d+3)n - d - 6");
  return s;
}

std::vector<BoxSide> box_of(const CodeSpecPair& s) {
  return {{s.alpha[0], s.beta[0]}, {s.alpha[1], s.beta[1]}};
}

std::vector<BoxSide> box_of(const CodeSpecTriple& s) {
  return {{s.lower[0], s.upper[0]}, {s.lower[1], s.upper[1]}, {s.lower[2], s.upper[2]}};
}

bool pair_box_is_pure(const CodeSpecPair& s) {
  std::set<std::vector<int>> pure;
  for (const auto& r : pure_gaps_pair(s.n)) pure.insert(r.tuple);
  for (int a = s.alpha[0]; a <= s.beta[0]; ++a)
    for (int b = s.alpha[1]; b <= s.beta[1]; ++b)
      if (!pure.count({a, b})) return false;
  return s.alpha[0] <= s.beta[0] && s.alpha[1] <= s.beta[1];
}

bool triple_box_is_pure(const CodeSpecTriple& s) {
  std::set<std::vector<int>> pure;
  for (const auto& r : pure_gaps_triple(s.n)) pure.insert(r.tuple);
  for (int x = 0; x < 3; ++x)
    if (s.lower[static_cast<std::size_t>(x)] > s.upper[static_cast<std::size_t>(x)]) return false;
  for (int a = s.lower[0]; a <= s.upper[0]; ++a)
    for (int b = s.lower[1]; b <= s.upper[1]; ++b)
      for (int c = s.lower[2]; c <= s.upper[2]; ++c)
        if (!pure.count({a, b, c})) return false;
  return true;
}

int min_length_for_design(int n) { return 2 * n * n - 4 * n - 2; }

PredictedParams predict_pair_params(int n, int i, int j, int m) {
  make_code_spec_pair(n, i, j);
  if (m < min_length_for_design(n))
    fail(ErrorCode::invalid_argument, "length violates m >= 2n^2-4n-2: m=" + str(m) + ", n=" + str(n));
  PredictedParams p;
  p.length = m;
  p.dimension = m + (n * n + 3 * n) / 2 - 2 * (i + j) * n + 2 * j;
  p.distance_bound = (2 * (i + j) + 1) * n - n * n - 2 * i - 4 * j + 2;
  return p;
}

PredictedParams predict_triple_params(int n, int i, int j, int k, int m) {
  make_code_spec_triple(n, i, j, k);
  if (m < min_length_for_design(n))
    fail(ErrorCode::invalid_argument, "length violates m >= 2n^2-4n-2: m=" + str(m) + ", n=" + str(n));
  const int d = i + j + k;
  PredictedParams p;
  p.length = m;
  p.dimension = m + (n * n - 7 * n) / 2 - 2 * d * n + d + 5;
  p.distance_bound = (2 * d + 7) * n - n * n - 4 * d - 10;
  return p;
}

int goppa_bound(int g_degree, int genus) { return g_degree - (2 * genus - 2); }

int carvalho_torres_bound(int g_degree, int genus, const std::vector<BoxSide>& box) {
  int bound = goppa_bound(g_degree, genus);
  for (const auto& side : box) {
    require(side.a <= side.b, "box side needs a <= b");
    bound += side.b - side.a + 1;
  }
  return bound;
}

EvaluationPoints evaluation_points(const PointSet& all, bool include_p3) {
  EvaluationPoints out;
  for (const auto& pt : all.points) {
    if (!is_fundamental(pt)) {
      out.points.push_back(pt);
      continue;
    }
    const PointId id = pt == fundamental_point(PointId::P1)   ? PointId::P1
                       : pt == fundamental_point(PointId::P2) ? PointId::P2
                                                              : PointId::P3;
    if (id == PointId::P3 && include_p3)
      out.points.push_back(pt);
    else
      out.excluded.push_back(id);
  }
  std::sort(out.excluded.begin(), out.excluded.end());
  return out;
}

Matrix build_CL(const RiemannRochOracle& oracle, const std::vector<ProjectivePoint>& D, const ThreePointDivisor& G) {
  const Curve& curve = oracle.curve();
  const FieldPtr& fp = curve.field();
  const Field& f = *fp;
  for (const auto& q : D) {
    if (!is_fundamental(q)) continue;
    if (q != fundamental_point(PointId::P3))
      fail(ErrorCode::invalid_argument, "D contains P1 or P2, which carry the support of G");
    if (G.c != 0) fail(ErrorCode::invalid_argument, "D contains P3 but G has P3 in its support");
  }
  const RRSpace space = oracle.basis(G);
  Matrix raw(fp, space.basis.size(), D.size());
  for (std::size_t r = 0; r < space.basis.size(); ++r) {
    const Form h = basis_form(space, r, fp);
    for (std::size_t c = 0; c < D.size(); ++c) {
      const auto& q = D[c];
      if (evaluate_F(curve, q) != 0) fail(ErrorCode::invalid_argument, "D contains a point off the curve");
      const auto [X, Y, Z] = q.coords;
      // f = h / (Z^N x^u y^v) with x = X/Z, y = Y/Z
      Elem numer = h.evaluate(X, Y, Z);
      Elem denom = f.pow(Z, static_cast<std::uint64_t>(space.form_degree));
      const Elem xy[2] = {f.div(X, Z), f.div(Y, Z)};
      for (int s = 0; s < 2; ++s) {
        const int e = space.shift[static_cast<std::size_t>(s)];
        if (e > 0)
          denom = f.mul(denom, f.pow(xy[s], static_cast<std::uint64_t>(e)));
        else if (e < 0)
          numer = f.mul(numer, f.pow(xy[s], static_cast<std::uint64_t>(-e)));
      }
      raw.at(r, c) = f.div(numer, denom);
    }
  }
  return row_basis(raw);
}

DualCode build_COmega(const RiemannRochOracle& oracle, const std::vector<ProjectivePoint>& D,
                      const ThreePointDivisor& G) {
  DualCode out;
  out.parity_check = build_CL(oracle, D, G);
  out.generator = nullspace(out.parity_check);
  return out;
}

std::uint64_t binomial(int m, int w) {
  if (w < 0 || w > m) return 0;
  w = std::min(w, m - w);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= w; ++i) {
    acc = acc * static_cast<unsigned>(m - w + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

class ColumnDfs {
 public:
  ColumnDfs(const Matrix& H, int w, std::atomic<bool>& dependent)
      : f_(*H.field()), rows_(H.rows()), m_(static_cast<int>(H.cols())), w_(w), dependent_(dependent) {
    cols_.assign(H.cols(), std::vector<Elem>(rows_));
    for (std::size_t c = 0; c < H.cols(); ++c)
      for (std::size_t r = 0; r < rows_; ++r) cols_[c][r] = H.at(r, c);
  }

  // Explores subsets whose smallest column is `first`.
  void run_from(int first) {
    basis_.clear();
    pivots_.clear();
    if (!push(first)) {
      dependent_ = true;
      return;
    }
    if (!dfs(1, first + 1)) dependent_ = true;
  }

 private:
  bool push(int c) {
    std::vector<Elem> v = cols_[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Elem factor = v[pivots_[i]];
      if (factor == 0) continue;
      const auto& b = basis_[i];
      for (std::size_t r = 0; r < rows_; ++r)
        if (b[r] != 0) v[r] = f_.sub(v[r], f_.mul(factor, b[r]));
    }
    std::size_t p = 0;
    while (p < rows_ && v[p] == 0) ++p;
    if (p == rows_) return false;
    const Elem inv = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  void pop() {
    basis_.pop_back();
    pivots_.pop_back();
  }

  bool dfs(int depth, int start) {
    if (depth == w_) return true;
    if (dependent_.load(std::memory_order_relaxed)) return false;
    for (int c = start; c <= m_ - (w_ - depth); ++c) {
      if (!push(c)) return false;
      const bool ok = dfs(depth + 1, c + 1);
      pop();
      if (!ok) return false;
    }
    return true;
  }

  const Field& f_;
  std::size_t rows_;
  int m_;
  int w_;
  std::atomic<bool>& dependent_;
  std::vector<std::vector<Elem>> cols_;
  std::vector<std::vector<Elem>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

bool verify_distance_floor(const Matrix& H, int w, std::uint64_t budget, unsigned jobs) {
  require(w >= 0, "w must be nonnegative");
  const int m = static_cast<int>(H.cols());
  if (w == 0 || w > m) return true;
  const std::uint64_t subsets = binomial(m, w);
  if (subsets > budget)
    fail(ErrorCode::budget_exceeded,
         "C(" + str(m) + "," + str(w) + ") = " + std::to_string(subsets) + " exceeds budget " + std::to_string(budget));
  if (w > static_cast<int>(H.rows())) return false;
  std::atomic<bool> dependent{false};
  const std::size_t firsts = static_cast<std::size_t>(m - w + 1);
  // Interleave first columns across workers; early columns carry most subsets.
  const std::size_t workers = chunk_count(firsts, jobs);
  parallel_chunks(workers, static_cast<unsigned>(workers), [&](std::size_t, std::size_t begin, std::size_t end) {
    ColumnDfs dfs(H, w, dependent);
    for (std::size_t worker = begin; worker < end; ++worker)
      for (std::size_t first = worker; first < firsts && !dependent; first += workers)
        dfs.run_from(static_cast<int>(first));
  });
  return !dependent;
}

LowWeightResult low_weight_search(const Matrix& generator, int trials, std::uint64_t seed) {
  LowWeightResult best;
  const std::size_t m = generator.cols();
  if (generator.rows() == 0 || generator.is_zero()) return best;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  best.weight = static_cast<int>(m) + 1;
  for (int trial = 0; trial <= trials; ++trial) {
    if (trial > 0)
      for (std::size_t i = m - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    Matrix permuted(generator.field(), generator.rows(), m);
    for (std::size_t r = 0; r < generator.rows(); ++r)
      for (std::size_t c = 0; c < m; ++c) permuted.at(r, c) = generator.at(r, perm[c]);
    const Echelon e = row_reduce(std::move(permuted));
    for (std::size_t r = 0; r < e.reduced.rows(); ++r) {
      int weight = 0;
      for (std::size_t c = 0; c < m; ++c) weight += e.reduced.at(r, c) != 0;
      if (weight < best.weight) {
        best.weight = weight;
        best.codeword.assign(m, 0);
        for (std::size_t c = 0; c < m; ++c) best.codeword[perm[c]] = e.reduced.at(r, c);
      }
    }
  }
  return best;
}

CodeReport make_code_report(const RiemannRochOracle& oracle, const PointSet& points, const ThreePointDivisor& G,
                            const std::optional<std::vector<BoxSide>>& box, const CodeOptions& options) {
  const Curve& curve = oracle.curve();
  EvaluationPoints ev = evaluation_points(points, options.include_p3);
  if (options.subset) {
    std::vector<ProjectivePoint> chosen;
    std::vector<bool> used(ev.points.size(), false);
    for (int idx : *options.subset) {
      require(idx >= 0 && idx < static_cast<int>(ev.points.size()),
              "point index " + str(idx) + " outside 0.." + std::to_string(ev.points.size() - 1));
      require(!used[static_cast<std::size_t>(idx)], "point index " + str(idx) + " repeated");
      used[static_cast<std::size_t>(idx)] = true;
      chosen.push_back(ev.points[static_cast<std::size_t>(idx)]);
    }
    require(!chosen.empty(), "point subset is empty");
    ev.points = std::move(chosen);
  } else if (options.length) {
    require(*options.length >= 1 && *options.length <= static_cast<int>(ev.points.size()),
            "requested length " + str(*options.length) + " but only " + std::to_string(ev.points.size()) +
                " evaluation points are available");
    ev.points.resize(static_cast<std::size_t>(*options.length));
  }
  DualCode code;
  code.parity_check = build_CL(oracle, ev.points, G);
  if (options.materialize_dual) code.generator = nullspace(code.parity_check);
  CodeReport rep;
  rep.q = curve.field()->order();
  rep.length = static_cast<int>(ev.points.size());
  rep.dual_dimension = static_cast<int>(code.parity_check.rows());
  rep.dimension = options.materialize_dual ? code.dimension() : rep.length - rep.dual_dimension;
  rep.l_G = oracle.dimension(G);
  rep.divisor = G;
  rep.excluded_points = ev.excluded;
  rep.goppa_bound = goppa_bound(G.degree(), curve.genus());
  if (rep.dimension + rep.dual_dimension != rep.length)
    fail(ErrorCode::invariant_failure, "code and dual dimensions do not add up to the length");
  if (G.degree() < rep.length && rep.dual_dimension != rep.l_G)
    fail(ErrorCode::invariant_failure, "evaluation map is not injective although deg G < m");
  if (box) rep.pure_gap_bound = carvalho_torres_bound(G.degree(), curve.genus(), *box);
  const int claimed = rep.pure_gap_bound.value_or(rep.goppa_bound);
  if (options.certify_w) {
    rep.certified_w = *options.certify_w;
    rep.certification_passed = verify_distance_floor(code.parity_check, *options.certify_w, options.budget, options.jobs);
    if (rep.certification_passed) {
      rep.verified_distance_floor = *options.certify_w + 1;
    } else if (*options.certify_w < claimed) {
      rep.discrepancies.push_back("found " + str(*options.certify_w) +
                                  " dependent parity-check columns, contradicting the bound " + str(claimed));
    }
  }
  if (options.search_trials > 0 && rep.dimension > 0 && options.materialize_dual) {
    rep.distance_upper_estimate = low_weight_search(code.generator, options.search_trials, options.seed).weight;
    if (*rep.distance_upper_estimate < claimed)
      rep.discrepancies.push_back("codeword of weight " + str(*rep.distance_upper_estimate) +
                                  " is below the bound " + str(claimed));
  }
  rep.generator = code.generator;
  rep.parity_check = code.parity_check;
  return rep;
}

namespace {
bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}
}  // namespace

std::int64_t hurwitz_count(std::int64_t q) {
  require(is_prime_power(q), "q must be a prime power");
  const std::int64_t eps = (q + 1) % 3;
  return 2 * q * q * q + 1 + (1 - eps) * (q * q + q + 1);
}

std::int64_t hermitian_maximal_count(std::int64_t q) {
  require(is_prime_power(q), "q must be a prime power");
  const std::int64_t q2 = q * q, q4 = q2 * q2;
  return q4 * q2 + q4 * q - q4 + 1;
}

std::vector<Exponents> g_monomials(int n) { return monomials_of_degree(n - 2); }

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SearchSummary curve_search(const FieldPtr& field, int n, const SearchOptions& options,
                           const std::function<void(const SearchRecord&)>& sink) {
  require(n >= 3, "n must be >= 3");
  const auto monos = g_monomials(n);
  const std::uint64_t q = field->order();
  // Total size of the coefficient space, saturated.
  std::uint64_t total = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (total > options.max_candidates) {
      overflow = true;
      break;
    }
    total *= q;
  }
  const bool exhaustive = options.exhaustive && !overflow && total <= options.max_candidates;
  const std::uint64_t count = exhaustive ? total : options.samples;

  auto coefficients = [&](std::uint64_t index) {
    std::map<Exponents, Elem> coeffs;
    if (exhaustive) {
      std::uint64_t rest = index;
      for (const auto& e : monos) {
        coeffs[e] = static_cast<Elem>(rest % q);
        rest /= q;
      }
    } else {
      std::uint64_t state = splitmix(options.seed ^ splitmix(index));
      for (const auto& e : monos) {
        state = splitmix(state);
        coeffs[e] = static_cast<Elem>(state % q);
      }
    }
    return coeffs;
  };

  struct Partial {
    std::vector<SearchRecord> records;
    std::uint64_t rejected = 0;
  };
  std::vector<Partial> parts(chunk_count(count, options.jobs));
  parallel_chunks(count, options.jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      CurveSpec spec{n, field, coefficients(idx)};
      Curve curve(spec);
      const std::size_t pts = rational_points(curve, 1, 1).points.size();
      if (pts < options.min_points) continue;
      if (options.exact_points && pts != *options.exact_points) continue;
      if (!validate_curve(curve).ok() || !smoothness_probe(curve, options.probe_extension, 1).clean()) {
        ++parts[chunk].rejected;
        continue;
      }
      parts[chunk].records.push_back({curve.spec(), pts, idx});
    }
  });
  SearchSummary summary;
  summary.candidates = count;
  summary.exhaustive = exhaustive;
  for (const auto& part : parts) {
    summary.rejected_singular += part.rejected;
    for (const auto& rec : part.records) {
      sink(rec);
      ++summary.matches;
    }
  }
  return summary;
}

}  // namespace pgap
