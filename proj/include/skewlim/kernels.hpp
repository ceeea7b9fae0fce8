#pragma once

#include <functional>
#include <vector>

#include "skewlim/orbit.hpp"
#include "skewlim/system.hpp"

// Data-parallel inner loops, each with a serial reference implementation kept
// for testing. Reductions use a fixed chunking so results are bit-identical
// no matter how many threads run.

namespace skewlim::kern {

inline constexpr int kChunks = 64;

// Lift displacement of the composed word map at each grid point:
// out[i] = lift_w(i/n) - i/n.
void displacement_grid(const SkewProductSystem& sys, const Word& w, int n,
                       std::vector<double>& out);
void displacement_grid_serial(const SkewProductSystem& sys, const Word& w, int n,
                              std::vector<double>& out);

// Minimal pairwise distance of orbit points, skipping pairs below merge_tol.
double min_pairwise(const PeriodicOrbit& orbit, double merge_tol);
double min_pairwise_serial(const PeriodicOrbit& orbit, double merge_tol);

// Weighted sums of f(i) over i < n with deterministic chunked reduction.
double weighted_sum(long n, const std::function<double(long)>& f);
double weighted_sum_serial(long n, const std::function<double(long)>& f);

// For every pair (start s in Y, alignment a in X): whether the cyclic
// diagonal through (s, a) carries `need` consecutive true values of
// pred(u, v) = dist(Y_u, X_v) < gamma. Output is row-major valid[s*piX + a].
void window_runs(const PeriodicOrbit& X, const PeriodicOrbit& Y, double gamma,
                 int need, std::vector<char>& valid);
void window_runs_serial(const PeriodicOrbit& X, const PeriodicOrbit& Y, double gamma,
                        int need, std::vector<char>& valid);

// max over family members of |sum_i wa[i] fa(member, i) - sum_j wb[j] ...|,
// reduced deterministically.
double family_max_abs_diff(long members,
                           const std::function<double(long)>& per_member);
double family_max_abs_diff_serial(long members,
                                  const std::function<double(long)>& per_member);

}  // namespace skewlim::kern
