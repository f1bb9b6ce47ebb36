#include "pgap/catalog.hpp"

#include "pgap/error.hpp"

namespace pgap {

namespace {

struct Entry {
  const char* name;
  const char* description;
  std::uint32_t p, k;
  int n;
  std::vector<std::pair<Exponents, std::uint32_t>> g;  // X^e1 Y^e2 Z^e3 -> prime-field coefficient
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {"klein_gf8", "Klein quartic XY^3 + YZ^3 + ZX^3 over GF(8)", 2, 3, 3, {}},
      {"q16", "n = 4, G = X^2 + Y^2 over GF(16)", 2, 4, 4, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}}},
      {"q27", "n = 4, G = X^2 + XY - Y^2 - YZ over GF(27)", 3, 3, 4,
       {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 2, 0}, 2}, {{0, 1, 1}, 2}}},
      {"q49", "n = 4, G = 2X^2 + 2Y^2 + 3XZ + 6YZ + 2Z^2 over GF(49)", 7, 2, 4,
       {{{2, 0, 0}, 2}, {{0, 2, 0}, 2}, {{1, 0, 1}, 3}, {{0, 1, 1}, 6}, {{0, 0, 2}, 2}}},
      {"q81", "n = 4, G = 2X^2 + XY + Y^2 + XZ + 2Z^2 over GF(81)", 3, 4, 4,
       {{{2, 0, 0}, 2}, {{1, 1, 0}, 1}, {{0, 2, 0}, 1}, {{1, 0, 1}, 1}, {{0, 0, 2}, 2}}},
      {"q128", "n = 4, G = XY + Y^2 + XZ + YZ over GF(128)", 2, 7, 4,
       {{{1, 1, 0}, 1}, {{0, 2, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}}},
      {"q49_record",
       "n = 5, G = 5Y^3 + 4Y^2X + 4YX^2 + 6X^3 + 5Y^2Z + 3X^2Z + 3XZ^2 + 2Z^3 over GF(49)", 7, 2, 5,
       {{{0, 3, 0}, 5},
        {{1, 2, 0}, 4},
        {{2, 1, 0}, 4},
        {{3, 0, 0}, 6},
        {{0, 2, 1}, 5},
        {{2, 0, 1}, 3},
        {{1, 0, 2}, 3},
        {{0, 0, 3}, 2}}},
  };
  return table;
}

}  // namespace

CatalogCurve catalog_curve(const std::string& name) {
  for (const auto& e : entries()) {
    if (name != e.name) continue;
    CurveSpec spec;
    spec.n = e.n;
    spec.field = Field::create(e.p, e.k);
    for (const auto& [exps, c] : e.g) spec.g_coeffs[exps] = spec.field->from_int(c);
    return {e.name, e.description, spec};
  }
  fail(ErrorCode::invalid_argument, "unknown catalog curve '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

CurveSpec g_zero_curve(int n, std::uint32_t p, std::uint32_t k) {
  CurveSpec spec;
  spec.n = n;
  spec.field = Field::create(p, k);
  return spec;
}

CurveSpec standard_curve(int n) {
  require(n >= 3, "n must be >= 3");
  if (n == 3) return catalog_curve("klein_gf8").spec;
  if (n == 4) return catalog_curve("q16").spec;
  if (n == 5) return catalog_curve("q49_record").spec;
  std::uint32_t p = 2;
  while (n % static_cast<int>(p) != 0) ++p;
  return g_zero_curve(n, p, 1);
}

}  // namespace pgap
