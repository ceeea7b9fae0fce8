#pragma once

#include <functional>
#include <vector>

#include "skewlim/orbit.hpp"
#include "skewlim/system.hpp"

namespace skewlim {

// Finitely supported probability measure. Construction merges points within
// kMergeTol so bisection round-off cannot split one atom in two.
struct AtomicMeasure {
  std::vector<Point> support;
  std::vector<double> weights;

  static AtomicMeasure from_points(std::vector<Point> pts, std::vector<double> w);
  double total() const;
};

// Finite cylinder-Fourier family: 1_[w](omega) cos(2 pi k y) and the sine
// counterparts, |w| <= L (the empty word included), 0 <= k <= K. The k = 0
// sine members vanish identically and are dropped.
struct TestFamily {
  int L = 4;
  int K = 4;
  int alphabet = 3;

  struct Member {
    std::vector<Symbol> cyl;
    int freq = 0;
    bool sine = false;
    double eval(const Point& p) const;
  };
  std::vector<Member> members() const;
};

AtomicMeasure n_measure(const SkewProductSystem& sys, const Point& x0, long n);
AtomicMeasure orbit_measure(const PeriodicOrbit& orbit);

double integrate(const AtomicMeasure& mu, const TestFamily::Member& phi);
double integrate(const AtomicMeasure& mu, const std::function<double(const Point&)>& phi);

double discrepancy(const AtomicMeasure& mu, const AtomicMeasure& nu, const TestFamily& fam);

double center_exponent_orbit(const SkewProductSystem& sys, const PeriodicOrbit& orbit);
double birkhoff_center_exponent(const SkewProductSystem& sys, const Point& x0, long n);

}  // namespace skewlim
