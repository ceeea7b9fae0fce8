#pragma once

#include <vector>

#include "skewlim/system.hpp"
#include "skewlim/types.hpp"

namespace skewlim {

// Periodic orbit coded by one period of the base itinerary plus a fiber
// fixed point of the composed fiber map. period == word length even when the
// word is a proper power (the Word records primitivity).
struct PeriodicOrbit {
  Word word;
  double fiber0 = 0.0;
  std::vector<double> fibers;  // fiber coordinate of point j, size == period
  double chi = 0.0;            // average log fiber derivative over one period

  int period() const { return word.size(); }
  Point point(int j) const;    // (rotated base, fibers[j])
  double log_multiplier() const { return chi * period(); }
};

// All fixed points of the composed fiber map of w, found by sign-scanning the
// lift displacement over every integer branch on a uniform grid and refining
// by bisection. Sorted by fiber coordinate; empty when the composed map has
// no fixed point.
std::vector<PeriodicOrbit> periodic_orbit_from_word(const SkewProductSystem& sys,
                                                    const Word& w,
                                                    int grid_points = 10000);

// Distance between orbit points i and j of (possibly different) orbits, with
// base comparison over the rotated words truncated at kBaseDepth.
double orbit_point_dist(const PeriodicOrbit& a, int i, const PeriodicOrbit& b, int j);

// Minimal distance over pairs of distinct orbit points. Pairs closer than
// kMergeTol count as coincident and are skipped; period-1 orbits return the
// configured cap.
double min_pairwise_distance(const PeriodicOrbit& orbit, double period1_cap = 1.0);

double solver_residual(const SkewProductSystem& sys, const PeriodicOrbit& orbit);

}  // namespace skewlim
