#pragma once

// Named curves used by the reproduction and verification runs.

#include <string>
#include <vector>

#include "pgap/curve.hpp"

namespace pgap {

struct CatalogCurve {
  std::string name;
  std::string description;
  CurveSpec spec;
};

/// Names: klein_gf8, q16, q27, q49, q81, q128, q49_record.
CatalogCurve catalog_curve(const std::string& name);
std::vector<std::string> catalog_names();

/// A smooth member with the given n: a catalog curve for n = 3, 4, 5,
/// otherwise G = 0 over GF(p) for the smallest prime p dividing n.
CurveSpec standard_curve(int n);

/// XY^n + YZ^n + ZX^n = 0 over GF(p^k) (G = 0).
CurveSpec g_zero_curve(int n, std::uint32_t p, std::uint32_t k);

}  // namespace pgap
