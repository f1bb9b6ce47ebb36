#include "pgap/weierstrass.hpp"

#include <algorithm>
#include <set>

#include "pgap/error.hpp"
#include "pgap/parallel.hpp"

namespace pgap {

namespace {

void require_n(int n) { require(n >= 3, "n must be >= 3 (got " + std::to_string(n) + ")"); }

int genus_of(int n) { return n * (n - 1) / 2; }

}  // namespace

GapSet gaps_closed_form(int n, PointId point) {
  require_n(n);
  GapSet out{n, point, {}};
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) out.gaps.push_back((i - 1) * (n - 1) + j);
  std::sort(out.gaps.begin(), out.gaps.end());
  return out;
}

std::vector<int> semigroup_generators(int n) {
  require_n(n);
  std::vector<int> out;
  for (int s = 1; s <= n; ++s) out.push_back(s * (n - 1) + 1);
  return out;
}

const char* kim_pair_name(KimPair pair) {
  switch (pair) {
    case KimPair::P1_P2: return "P1,P2";
    case KimPair::P2_P3: return "P2,P3";
    case KimPair::P1_P3: return "P1,P3";
  }
  return "?";
}

KimPair kim_pair_from_string(const std::string& s) {
  if (s == "P1,P2" || s == "12") return KimPair::P1_P2;
  if (s == "P2,P3" || s == "23") return KimPair::P2_P3;
  if (s == "P1,P3" || s == "13" || s == "P3,P1" || s == "31") return KimPair::P1_P3;
  fail(ErrorCode::invalid_argument, "unknown point pair '" + s + "' (expected P1,P2 | P2,P3 | P1,P3)");
}

IndexPair gap_index(int n, int gap) {
  require_n(n);
  for (int i = 1; i <= n - 1; ++i) {
    const int j = gap - (i - 1) * (n - 1);
    if (j >= i && j <= n - 1) return {i, j};
  }
  fail(ErrorCode::invalid_argument, std::to_string(gap) + " is not a gap for n = " + std::to_string(n));
}

int gap_from_index(int n, IndexPair ij) { return (ij[0] - 1) * (n - 1) + ij[1]; }

IndexPair kim_index_map(int n, IndexPair ij) { return {n - ij[1], n - 1 + ij[0] - ij[1]}; }

IndexPair kim_index_inverse(int n, IndexPair ij) { return {ij[1] - ij[0] + 1, n - ij[0]}; }

KimMapTable kim_map(int n, KimPair pair) {
  require_n(n);
  KimMapTable table{n, pair, {}};
  for (int gap : gaps_closed_form(n).gaps) {
    KimEntry e;
    e.gap = gap;
    e.source_index = gap_index(n, gap);
    const int i = e.source_index[0], j = e.source_index[1];
    switch (pair) {
      case KimPair::P1_P2:
        e.target_index = kim_index_map(n, e.source_index);
        e.witness = {-(n - j - 1), n - j + i - 1};
        break;
      case KimPair::P2_P3:
        e.target_index = kim_index_map(n, e.source_index);
        e.witness = {-i, -(n - j - 1)};
        break;
      case KimPair::P1_P3:
        e.target_index = kim_index_inverse(n, e.source_index);
        e.witness = {j, -(j + 1 - i)};
        break;
    }
    e.image = gap_from_index(n, e.target_index);
    table.entries.push_back(e);
  }
  return table;
}

std::vector<PureGapRecord> pure_gaps_pair(int n) {
  require_n(n);
  std::vector<PureGapRecord> out;
  for (int d = 2; d <= n - 1; ++d)
    for (int i = 1; i <= d - 1; ++i) {
      const int j = d - i;
      for (int r = 0; r <= n - d - 1; ++r)
        for (int s = 0; s <= n - d; ++s) {
          PureGapRecord rec;
          rec.tuple = {(i - 1) * n + r + 1, (j - 1) * n + i + s};
          rec.i = i;
          rec.j = j;
          rec.d = d;
          rec.r = r;
          rec.s = s;
          rec.predicted_dimension = (d - 1) * (d - 2) / 2 + i;
          out.push_back(rec);
        }
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tuple < b.tuple; });
  const auto last = std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tuple == b.tuple; });
  out.erase(last, out.end());
  return out;
}

std::vector<std::array<int, 2>> pure_gaps_pair_via_homma_kim(int n) {
  const auto table = kim_map(n, KimPair::P1_P2);
  const auto source = gaps_closed_form(n, PointId::P1).gaps;
  const auto target = gaps_closed_form(n, PointId::P2).gaps;
  const std::size_t g = source.size();
  // sigma(i): position of beta(n_i) among the gaps at P2.
  std::vector<std::size_t> sigma(g);
  for (std::size_t i = 0; i < g; ++i) {
    const auto it = std::lower_bound(target.begin(), target.end(), table.entries[i].image);
    if (it == target.end() || *it != table.entries[i].image) fail(ErrorCode::internal, "Kim map image is not a gap");
    sigma[i] = static_cast<std::size_t>(it - target.begin());
  }
  std::vector<std::array<int, 2>> out;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (sigma[i] > sigma[j]) out.push_back({source[i], target[sigma[j]]});
  std::sort(out.begin(), out.end());
  return out;
}

int gap_pair_count(int n) {
  require_n(n);
  const int g = genus_of(n);
  return g * (g + 1);
}

std::vector<PureGapRecord> pure_gaps_triple(int n) {
  require_n(n);
  std::vector<PureGapRecord> out;
  for (int d = 0; d <= n - 3; ++d)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d - i; ++j) {
        const int k = d - i - j;
        for (int r = 0; r <= n - 3 - d; ++r)
          for (int s = 0; s <= n - 3 - d; ++s)
            for (int t = 0; t <= n - 3 - d; ++t) {
              PureGapRecord rec;
              rec.tuple = {k * n + j + r + 1, i * n + k + s + 1, j * n + i + t + 1};
              rec.i = i;
              rec.j = j;
              rec.k = k;
              rec.d = d;
              rec.r = r;
              rec.s = s;
              rec.t = t;
              rec.predicted_dimension = (d + 1) * (d + 2) / 2;
              for (int c : rec.tuple)
                if (c % (n - 1) == 0)
                  fail(ErrorCode::invariant_failure, "pure-gap triple coordinate divisible by n-1");
              out.push_back(rec);
            }
      }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tuple < b.tuple; });
  const auto last = std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tuple == b.tuple; });
  out.erase(last, out.end());
  return out;
}

long long pure_gap_pair_count_formula(int n) {
  const long long g = genus_of(n);
  return (g - 1) * g / 3;
}

long long pure_gap_triple_count_formula(int n) {
  const long long g = genus_of(n);
  return (g - 1) * g * (2 * g - 1) / 30;
}

GapSet gaps_oracle(const RiemannRochOracle& oracle, PointId point) {
  const int n = oracle.curve().n();
  const int g = genus_of(n);
  GapSet out{n, point, {}};
  int prev = oracle.dimension(single_point_divisor(point, 0));
  for (int a = 1; a <= 2 * g - 1; ++a) {
    const int cur = oracle.dimension(single_point_divisor(point, a));
    if (cur == prev) out.gaps.push_back(a);
    prev = cur;
  }
  return out;
}

bool exact_pole_divisor_oracle(const RiemannRochOracle& oracle, const ThreePointDivisor& d) {
  require(d.a >= 0 && d.b >= 0 && d.c >= 0, "pole divisor coefficients must be nonnegative");
  const int l = oracle.dimension(d);
  // f must avoid the hyperplanes L(D - P) for each P with positive
  // coefficient. A zero coefficient only asks for no pole, which L(D) already
  // enforces.
  std::vector<ThreePointDivisor> drops;
  for (int k = 0; k < 3; ++k) {
    const auto id = static_cast<PointId>(k);
    if (d.at(id) == 0) continue;
    if (oracle.dimension(d - single_point_divisor(id, 1)) == l) return false;
    drops.push_back(single_point_divisor(id, 1));
  }
  // Fewer than q+1 hyperplanes never cover a vector space over GF(q). The only
  // coverable case here is three hyperplanes over GF(2), which happens exactly
  // when the three leading-coefficient functionals have rank 2 and are
  // pairwise independent (then the third is the sum of the other two).
  if (drops.size() < 3 || oracle.curve().field()->order() > 2) return true;
  const ThreePointDivisor all{1, 1, 1};
  if (l - oracle.dimension(d - all) != 2) return true;
  for (int k = 0; k < 3; ++k) {
    const ThreePointDivisor pair = all - drops[static_cast<std::size_t>(k)];
    if (l - oracle.dimension(d - pair) != 2) return true;
  }
  return false;
}

bool pair_membership_oracle(const RiemannRochOracle& oracle, int a, int b) {
  require(a >= 0 && b >= 0, "pair coordinates must be nonnegative");
  return exact_pole_divisor_oracle(oracle, {a, b, 0});
}

std::vector<std::array<int, 2>> gap_pairs_oracle(const RiemannRochOracle& oracle) {
  const int g = genus_of(oracle.curve().n());
  std::vector<std::array<int, 2>> out;
  for (int a = 0; a <= 2 * g; ++a)
    for (int b = 0; b <= 2 * g; ++b)
      if (!pair_membership_oracle(oracle, a, b)) out.push_back({a, b});
  return out;
}

bool pure_gap_oracle(const RiemannRochOracle& oracle, const std::vector<int>& tuple) {
  require(tuple.size() == 2 || tuple.size() == 3, "pure-gap tuple must have 2 or 3 entries");
  for (int v : tuple) require(v >= 1, "pure-gap tuple entries must be >= 1");
  ThreePointDivisor d{tuple[0], tuple[1], tuple.size() == 3 ? tuple[2] : 0};
  ThreePointDivisor lower{d.a - 1, d.b - 1, tuple.size() == 3 ? d.c - 1 : 0};
  return oracle.dimension(d) == oracle.dimension(lower);
}

std::vector<std::array<int, 2>> pure_gaps_pair_oracle(const RiemannRochOracle& oracle, unsigned jobs) {
  const int top = 2 * genus_of(oracle.curve().n()) - 1;
  std::vector<std::array<int, 2>> candidates;
  for (int a = 1; a <= top; ++a)
    for (int b = 1; b <= top; ++b) candidates.push_back({a, b});
  std::vector<std::vector<std::array<int, 2>>> found(chunk_count(candidates.size(), jobs));
  parallel_chunks(candidates.size(), jobs, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx)
      if (pure_gap_oracle(oracle, {candidates[idx][0], candidates[idx][1]})) found[c].push_back(candidates[idx]);
  });
  std::vector<std::array<int, 2>> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<std::array<int, 3>> pure_gaps_triple_oracle(const RiemannRochOracle& oracle, unsigned jobs) {
  const auto g1 = gaps_oracle(oracle, PointId::P1).gaps;
  const auto g2 = gaps_oracle(oracle, PointId::P2).gaps;
  const auto g3 = gaps_oracle(oracle, PointId::P3).gaps;
  std::vector<std::array<int, 3>> candidates;
  for (int a : g1)
    for (int b : g2)
      for (int c : g3) candidates.push_back({a, b, c});
  std::vector<std::vector<std::array<int, 3>>> found(chunk_count(candidates.size(), jobs));
  parallel_chunks(candidates.size(), jobs, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto& t = candidates[idx];
      if (pure_gap_oracle(oracle, {t[0], t[1], t[2]})) found[c].push_back(t);
    }
  });
  std::vector<std::array<int, 3>> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace pgap
