#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewlim/types.hpp"

namespace skewlim {

enum class MapKind : std::uint8_t { ContractSine, ExpandSine, Rotation };

// Per-symbol circle diffeomorphisms y -> g_s(y) with closed-form derivatives.
//   ContractSine: y - (beta/2pi) sin(2pi y)   g' = 1 - beta cos(2pi y)
//   ExpandSine:   y + (beta/2pi) sin(2pi y)   g' = 1 + beta cos(2pi y)
//   Rotation:     y + alpha                   g' = 1
struct FiberMapFamily {
  double beta = 0.5;
  double alpha = 0.6180339887498949;
  std::vector<MapKind> kinds;

  FiberMapFamily() = default;
  FiberMapFamily(double beta_, double alpha_, std::vector<MapKind> kinds_);

  int alphabet() const { return static_cast<int>(kinds.size()); }

  // Lift of g_s to the real line (degree one, strictly increasing).
  double lift(Symbol s, double y) const;
  double apply(Symbol s, double y) const { return wrap01(lift(s, y)); }
  double deriv(Symbol s, double y) const;

  // construction-time sanity: g' > 0 on a grid and finite differences of the
  // map match the closed-form derivative to 1e-6 at 10^3 points
  void validate() const;
};

struct SkewProductSystem {
  FiberMapFamily family;
  std::string name;

  int alphabet() const { return family.alphabet(); }
  Point step(const Point& p) const;
  std::vector<Point> trajectory(const Point& p, long n) const;

  std::uint64_t hash() const;
};

// MODEL-A: alphabet {0,1,2}; g0 contracting sine, g1 expanding sine, g2
// rotation by alpha. Defaults beta = 0.5, alpha = (sqrt(5)-1)/2.
SkewProductSystem model_a(double beta = 0.5, double alpha = 0.6180339887498949);

}  // namespace skewlim
