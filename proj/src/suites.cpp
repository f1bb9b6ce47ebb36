#include "pgap/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pgap/error.hpp"
#include "pgap/local_series.hpp"
#include "pgap/weierstrass.hpp"

namespace pgap {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::string divisor_str(const ThreePointDivisor& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + "," + std::to_string(d.c) + ")";
}

std::string curve_label(const Curve& c) {
  return "n=" + std::to_string(c.n()) + " over " + c.field()->spec().describe();
}

// Collects the first few mismatches of a sweep into one result.
class Tally {
 public:
  Tally(std::string suite, std::string name) : suite_(std::move(suite)), name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failures_ < 5) detail_ += (detail_.empty() ? "" : "; ") + what;
    ++failures_;
  }

  CheckResult result() const {
    CheckResult r{suite_, name_, failures_ == 0, {}};
    r.detail = std::to_string(total_ - failures_) + "/" + std::to_string(total_) + " agree";
    if (failures_) r.detail += "; first mismatches: " + detail_;
    return r;
  }

 private:
  std::string suite_, name_, detail_;
  int total_ = 0, failures_ = 0;
};

}  // namespace

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> field_axiom_checks(const Field& f, std::uint64_t seed) {
  const std::string suite = "field " + f.spec().describe();
  const Elem q = f.order();
  std::vector<CheckResult> out;

  Tally inverses(suite, "every nonzero element is invertible");
  std::vector<Elem> non_units;
  for (Elem a = 1; a < q && a < 4096; ++a) {
    bool ok = true;
    try {
      ok = f.mul(a, f.inv(a)) == 1;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) non_units.push_back(a);
    inverses.expect(ok, "no inverse for " + std::to_string(a));
  }
  out.push_back(inverses.result());

  Tally zero_div(suite, "no zero divisors");
  for (Elem a = 1; a < q && a < 256; ++a)
    for (Elem b = a; b < q && b < 256; ++b)
      zero_div.expect(f.mul(a, b) != 0, std::to_string(a) + "*" + std::to_string(b) + " = 0");
  out.push_back(zero_div.result());

  Tally ring(suite, "associativity, commutativity, distributivity");
  auto check = [&](Elem a, Elem b, Elem c) {
    const std::string t = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    ring.expect(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "add assoc " + t);
    ring.expect(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "mul assoc " + t);
    ring.expect(f.mul(a, b) == f.mul(b, a), "mul comm " + t);
    ring.expect(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "distributive " + t);
  };
  if (q <= 64) {
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b)
        for (Elem c = 0; c < q; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20000; ++i) check(rng() % q, rng() % q, rng() % q);
  }
  out.push_back(ring.result());

  Tally frob(suite, "Frobenius is additive and a^q = a");
  std::mt19937_64 rng(seed + 1);
  for (int i = 0; i < 2000; ++i) {
    const Elem a = rng() % q, b = rng() % q;
    frob.expect(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)), "Frobenius additivity");
    frob.expect(f.pow(a, q) == a, "a^q = a for " + std::to_string(a));
  }
  out.push_back(frob.result());
  return out;
}

std::vector<CheckResult> curve_checks(const Curve& curve, int probe_extension) {
  const std::string suite = "curve " + curve_label(curve);
  std::vector<CheckResult> out;
  const ValidationReport v = validate_curve(curve);
  for (const auto& c : v.checks) out.push_back({suite, c.name, c.passed, c.detail});
  const SmoothnessReport s = smoothness_probe(curve, probe_extension);
  std::string detail = "extensions checked: " + std::to_string(s.extensions_checked.size());
  if (!s.clean()) detail += ", singular points found: " + std::to_string(s.singular_points.size());
  out.push_back({suite, "no singular point over GF(q^m), m <= " + std::to_string(probe_extension), s.clean(), detail});
  return out;
}

std::vector<CheckResult> gap_checks(const RiemannRochOracle& oracle) {
  const Curve& c = oracle.curve();
  const std::string suite = "gaps " + curve_label(c);
  std::vector<CheckResult> out;
  const auto expected = gaps_closed_form(c.n()).gaps;
  for (int k = 0; k < 3; ++k) {
    const auto id = static_cast<PointId>(k);
    const auto got = gaps_oracle(oracle, id).gaps;
    out.push_back({suite, std::string("closed form = oracle at ") + point_name(id), got == expected,
                   "oracle " + join(got) + ", closed form " + join(expected)});
  }
  return out;
}

std::vector<CheckResult> kim_witness_checks(const RiemannRochOracle& oracle) {
  const Curve& c = oracle.curve();
  const int n = c.n();
  const std::string suite = "kim " + curve_label(c);
  std::vector<CheckResult> out;
  for (KimPair pair : {KimPair::P1_P2, KimPair::P2_P3, KimPair::P1_P3}) {
    const auto table = kim_map(n, pair);
    const PointId src = pair == KimPair::P2_P3 ? PointId::P2 : PointId::P1;
    const PointId dst = pair == KimPair::P1_P2 ? PointId::P2 : PointId::P3;
    Tally t(suite, std::string("witness pole divisors for ") + kim_pair_name(pair));
    for (const auto& e : table.entries) {
      const auto v = monomial_valuations(n, e.witness[0], e.witness[1]);
      ThreePointDivisor expected;
      expected = expected + single_point_divisor(src, e.gap) + single_point_divisor(dst, e.image);
      const ThreePointDivisor poles{std::max(0, -v[0]), std::max(0, -v[1]), std::max(0, -v[2])};
      t.expect(poles == expected, "gap " + std::to_string(e.gap) + ": valuations give " + divisor_str(poles));
      t.expect(exact_pole_divisor_oracle(oracle, expected),
               "gap " + std::to_string(e.gap) + ": oracle finds no function with poles " + divisor_str(expected));
    }
    out.push_back(t.result());
  }
  return out;
}

std::vector<CheckResult> pure_pair_checks(const RiemannRochOracle& oracle, unsigned jobs) {
  const Curve& c = oracle.curve();
  const int n = c.n();
  const std::string suite = "pure gap pairs " + curve_label(c);
  std::vector<CheckResult> out;
  const auto records = pure_gaps_pair(n);
  std::vector<std::array<int, 2>> closed;
  for (const auto& r : records) closed.push_back({r.tuple[0], r.tuple[1]});
  const auto hk = pure_gaps_pair_via_homma_kim(n);
  const auto sweep = pure_gaps_pair_oracle(oracle, jobs);
  const auto expected_count = pure_gap_pair_count_formula(n);
  out.push_back({suite, "count = (g-1)g/3", static_cast<long long>(closed.size()) == expected_count,
                 std::to_string(closed.size()) + " vs " + std::to_string(expected_count)});
  out.push_back({suite, "closed form = Homma-Kim inversion set", closed == hk,
                 std::to_string(closed.size()) + " vs " + std::to_string(hk.size()) + " pairs"});
  out.push_back({suite, "closed form = oracle sweep over [1,2g-1]^2", closed == sweep,
                 std::to_string(closed.size()) + " vs " + std::to_string(sweep.size()) + " pairs"});
  Tally dims(suite, "predicted dimensions");
  for (const auto& r : records) {
    const int l = oracle.dimension({r.tuple[0], r.tuple[1], 0});
    const int lower = oracle.dimension({r.tuple[0] - 1, r.tuple[1] - 1, 0});
    dims.expect(l == r.predicted_dimension && lower == r.predicted_dimension,
                "(" + std::to_string(r.tuple[0]) + "," + std::to_string(r.tuple[1]) + "): " + std::to_string(l) +
                    "/" + std::to_string(lower) + " vs " + std::to_string(r.predicted_dimension));
  }
  out.push_back(dims.result());
  const auto gp = gap_pairs_oracle(oracle);
  out.push_back({suite, "gap pairs counted by the oracle = g(g+1)",
                 static_cast<int>(gp.size()) == gap_pair_count(n),
                 std::to_string(gp.size()) + " vs " + std::to_string(gap_pair_count(n))});
  return out;
}

std::vector<CheckResult> pure_triple_checks(const RiemannRochOracle& oracle, unsigned jobs) {
  const Curve& c = oracle.curve();
  const int n = c.n();
  const std::string suite = "pure gap triples " + curve_label(c);
  std::vector<CheckResult> out;
  const auto records = pure_gaps_triple(n);
  std::vector<std::array<int, 3>> closed;
  for (const auto& r : records) closed.push_back({r.tuple[0], r.tuple[1], r.tuple[2]});
  const auto expected_count = pure_gap_triple_count_formula(n);
  out.push_back({suite, "count = (g-1)g(2g-1)/30", static_cast<long long>(closed.size()) == expected_count,
                 std::to_string(closed.size()) + " vs " + std::to_string(expected_count)});
  const auto sweep = pure_gaps_triple_oracle(oracle, jobs);
  out.push_back({suite, "closed form = oracle sweep over gap triples", closed == sweep,
                 std::to_string(closed.size()) + " vs " + std::to_string(sweep.size()) + " triples"});
  Tally dims(suite, "both dimensions = (d+1)(d+2)/2");
  for (const auto& r : records) {
    const ThreePointDivisor d{r.tuple[0], r.tuple[1], r.tuple[2]};
    const int l = oracle.dimension(d);
    const int lower = oracle.dimension(d - ThreePointDivisor{1, 1, 1});
    dims.expect(l == r.predicted_dimension && lower == r.predicted_dimension,
                divisor_str(d) + ": " + std::to_string(l) + "/" + std::to_string(lower) + " vs " +
                    std::to_string(r.predicted_dimension));
  }
  out.push_back(dims.result());
  return out;
}

std::vector<CheckResult> dimension_sweep_checks(const RiemannRochOracle& oracle) {
  const Curve& c = oracle.curve();
  const int n = c.n();
  const int g = c.genus();
  const std::string suite = "dimensions " + curve_label(c);
  std::vector<CheckResult> out;

  Tally single(suite, "l(mP) for m in [1, 2g-2], all three points");
  for (int k = 0; k < 3; ++k)
    for (int m = 1; m <= 2 * g - 2; ++m) {
      const auto id = static_cast<PointId>(k);
      const int got = oracle.dimension(single_point_divisor(id, m));
      const int want = dim_mP_formula(n, m, id);
      single.expect(got == want, std::string(point_name(id)) + " m=" + std::to_string(m) + ": " +
                                     std::to_string(got) + " vs " + std::to_string(want));
    }
  out.push_back(single.result());

  Tally shifted(suite, "shifted divisors mP' - dP, all three variants");
  for (auto v : {ShiftedVariant::P2_minus_P1, ShiftedVariant::P3_minus_P2, ShiftedVariant::P1_minus_P3})
    for (int m = 1; m <= 2 * g - 2; ++m) {
      const auto d = shifted_divisor(n, m, v);
      const int got = oracle.dimension(d);
      const int want = dim_shifted_formula(n, m, v);
      shifted.expect(got == want, divisor_str(d) + ": " + std::to_string(got) + " vs " + std::to_string(want));
    }
  out.push_back(shifted.result());

  Tally md(suite, "M_d and N_d");
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; i + j <= n - 1; ++j) {
      const int want = dim_Md_Nd(n, i, j);
      for (const auto& d : {divisor_Md(n, i, j), divisor_Nd(n, i, j)}) {
        const int got = oracle.dimension(d);
        md.expect(got == want, divisor_str(d) + ": " + std::to_string(got) + " vs " + std::to_string(want));
      }
    }
  out.push_back(md.result());

  Tally sd(suite, "S_d for i, j, k in [-3, n+1], |d| <= n+1");
  for (int i = -3; i <= n + 1; ++i)
    for (int j = -3; j <= n + 1; ++j)
      for (int k = -3; k <= n + 1; ++k) {
        const int d = i + j + k;
        if (d < -(n + 1) || d > n + 1) continue;
        const auto div = divisor_Sd(n, i, j, k);
        const int got = oracle.dimension(div);
        const int want = dim_Sd(n, i, j, k);
        sd.expect(got == want, divisor_str(div) + ": " + std::to_string(got) + " vs " + std::to_string(want));
      }
  out.push_back(sd.result());

  Tally sde(suite, "S_d + e(P1+P2+P3) with d + e = n-2");
  for (int d = 0; d <= n - 2; ++d) {
    const int e = n - 2 - d;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) {
        const int k = d - i - j;
        const auto div = divisor_Sd(n, i, j, k) + ThreePointDivisor{e, e, e};
        const int got = oracle.dimension(div);
        const int want = dim_Sd_plus_e(n, i, j, k, e);
        sde.expect(got == want, divisor_str(div) + ": " + std::to_string(got) + " vs " + std::to_string(want));
      }
  }
  out.push_back(sde.result());

  const auto w = canonical_divisor(n);
  const int lw = oracle.dimension(w);
  out.push_back({suite, "l(W) = g", lw == g, std::to_string(lw) + " vs " + std::to_string(g)});
  return out;
}

std::vector<ThreePointDivisor> random_divisors(int n, int count, std::uint64_t seed) {
  const int g = n * (n - 1) / 2;
  std::mt19937_64 rng(seed);
  auto coord = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(4 * g + 1)) - 2 * g; };
  std::vector<ThreePointDivisor> out;
  for (int i = 0; i < count; ++i) {
    const int a = coord(), b = coord(), c = coord();
    out.push_back({a, b, c});
  }
  return out;
}

CheckResult riemann_roch_identity_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed) {
  const Curve& c = oracle.curve();
  const int g = c.genus();
  const auto w = canonical_divisor(c.n());
  Tally t("riemann-roch " + curve_label(c), "l(D) - l(W-D) = deg D + 1 - g on random divisors");
  for (const auto& d : random_divisors(c.n(), count, seed)) {
    const int lhs = oracle.dimension(d) - oracle.dimension(w - d);
    t.expect(lhs == d.degree() + 1 - g, divisor_str(d) + ": " + std::to_string(lhs));
  }
  return t.result();
}

CheckResult n_stability_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed) {
  const Curve& c = oracle.curve();
  OracleOptions plus1 = oracle.options(), plus2 = oracle.options();
  plus1.extra_degree += 1;
  plus2.extra_degree += 2;
  const RiemannRochOracle o1(c, plus1), o2(c, plus2);
  Tally t("riemann-roch " + curve_label(c), "dimension stable when the form degree grows by 1 and 2");
  for (const auto& d : random_divisors(c.n(), count, seed)) {
    const int base = oracle.dimension(d);
    const int a = o1.dimension(d), b = o2.dimension(d);
    t.expect(base == a && base == b,
             divisor_str(d) + ": " + std::to_string(base) + "/" + std::to_string(a) + "/" + std::to_string(b));
  }
  return t.result();
}

CheckResult monotonicity_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed) {
  const Curve& c = oracle.curve();
  Tally t("riemann-roch " + curve_label(c), "l(D) <= l(D+P) <= l(D)+1");
  for (const auto& d : random_divisors(c.n(), count, seed)) {
    const int l = oracle.dimension(d);
    for (int k = 0; k < 3; ++k) {
      const int up = oracle.dimension(d + single_point_divisor(static_cast<PointId>(k), 1));
      t.expect(l <= up && up <= l + 1, divisor_str(d) + " + P" + std::to_string(k + 1));
    }
  }
  return t.result();
}

CheckResult basis_constraint_check(const RiemannRochOracle& oracle, int count, std::uint64_t seed) {
  const Curve& c = oracle.curve();
  Tally t("riemann-roch " + curve_label(c), "basis functions satisfy div(f) + D >= 0");
  for (const auto& d : random_divisors(c.n(), count, seed)) {
    const RRSpace space = oracle.basis(d);
    for (std::size_t i = 0; i < space.basis.size(); ++i)
      t.expect(oracle.satisfies_divisor(space, i), divisor_str(d) + " basis " + std::to_string(i));
  }
  return t.result();
}

std::vector<CheckResult> structural_checks(int kim_n_max, int div_n_max) {
  std::vector<CheckResult> out;
  Tally kim("structure", "Kim map bijective with beta^3 = id, n <= " + std::to_string(kim_n_max));
  for (int n = 3; n <= kim_n_max; ++n) {
    const auto gaps = gaps_closed_form(n).gaps;
    for (KimPair pair : {KimPair::P1_P2, KimPair::P2_P3, KimPair::P1_P3}) {
      std::vector<int> images;
      for (const auto& e : kim_map(n, pair).entries) images.push_back(e.image);
      std::sort(images.begin(), images.end());
      kim.expect(images == gaps, "n=" + std::to_string(n) + " " + kim_pair_name(pair) + " not a bijection");
    }
    for (int gap : gaps) {
      const IndexPair ij = gap_index(n, gap);
      const IndexPair once = kim_index_map(n, ij);
      const IndexPair thrice = kim_index_map(n, kim_index_map(n, once));
      kim.expect(thrice == ij, "n=" + std::to_string(n) + " gap " + std::to_string(gap) + ": beta^3 != id");
      kim.expect(kim_index_inverse(n, once) == ij, "n=" + std::to_string(n) + " inverse mismatch");
    }
  }
  out.push_back(kim.result());

  Tally div("structure", "pure-gap triple coordinates avoid multiples of n-1, n <= " + std::to_string(div_n_max));
  for (int n = 3; n <= div_n_max; ++n) {
    try {
      for (const auto& r : pure_gaps_triple(n))
        for (int v : r.tuple) div.expect(v % (n - 1) != 0, "n=" + std::to_string(n) + " coordinate " + std::to_string(v));
    } catch (const Error& e) {
      div.expect(false, e.what());
    }
  }
  out.push_back(div.result());

  Tally counts("structure", "enumeration counts match (g-1)g/3 and (g-1)g(2g-1)/30");
  for (int n = 3; n <= div_n_max; ++n) {
    counts.expect(static_cast<long long>(pure_gaps_pair(n).size()) == pure_gap_pair_count_formula(n),
                  "pairs n=" + std::to_string(n));
    counts.expect(static_cast<long long>(pure_gaps_triple(n).size()) == pure_gap_triple_count_formula(n),
                  "triples n=" + std::to_string(n));
  }
  out.push_back(counts.result());
  return out;
}

}  // namespace pgap
