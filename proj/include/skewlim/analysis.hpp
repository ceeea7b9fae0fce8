#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "skewlim/builder.hpp"

namespace skewlim {

// Cells are (base cylinder of depth L) x (fiber interval of width 1/G),
// A^L * G cells total. Cell ids are cyl_index * G + fiber_index.
struct GridPartition {
  int L = 3;
  int G = 16;
  int alphabet = 3;

  long cell_count() const;
  long cell_of(const Point& p) const;
  long cell_of_orbit_point(const PeriodicOrbit& orbit, int j) const;
  Point cell_center(long cell) const;
  double cell_diameter() const;
};

struct SupportEstimate {
  GridPartition grid;
  std::set<long> cells;
  int k = 1;  // tail start, 1-based stage index
};

// Finite-horizon grid version of the topological limit: cells present in
// every tail union over stages l >= j, intersected over j = k..horizon.
SupportEstimate topological_limit_estimate(const std::vector<StageRecord>& stages,
                                           const GridPartition& grid, int k);

// Max over occupied cells of the distance from the cell center to the
// nearest orbit point; zero iff the orbit meets every cell center exactly.
double density_radius(const PeriodicOrbit& orbit, const SupportEstimate& region);

struct MassBound {
  double bound = 0;     // (prod kappa tail) / period(X_n)
  double radius = 0;    // r_n = sum of gamma over the stored tail
  long atoms_in_ball = 0;
  std::uint64_t window_product = 1;  // exact integer form of the bound * pi_H
  bool verified = false;             // atoms_in_ball >= window_product
};

// Lower bound for the final-stage measure of the closed r_n-ball around an
// orbit point x of stage n, plus its exact atom-count verification. The
// inequality count >= prod(window counts) is the telescoped exact form.
MassBound mass_lower_bound(const std::vector<StageRecord>& stages, int n, int point_index);

}  // namespace skewlim
