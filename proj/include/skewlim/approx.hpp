#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewlim/orbit.hpp"
#include "skewlim/system.hpp"

namespace skewlim {

// Checkable witness that orbit Y approximates orbit X: a union of disjoint
// shadowing windows of length period(X), each mapped bijectively onto X by an
// index alignment. kappa is the exact atom fraction window_count * piX / piY.
struct ApproximationCertificate {
  double gamma = 0.0;
  double kappa = 0.0;
  int pi_x = 0;
  int pi_y = 0;
  std::vector<int> windows;     // start indices into Y, pairwise disjoint mod piY
  std::vector<int> alignments;  // X-index mapped to each window start

  int window_count() const { return static_cast<int>(windows.size()); }
  std::string to_json(std::uint64_t system_hash) const;
};

struct VerifyResult {
  bool ok = false;
  double max_dist = 0.0;
};

// True iff every window point stays gamma-close to its projected X-point for
// a full X-period of iterates, windows are disjoint and bijective onto X, and
// the atom fraction reaches the stored kappa. Throws malformed_certificate on
// structural defects (overlap, bad offsets).
VerifyResult verify_certificate(const SkewProductSystem& sys, const PeriodicOrbit& X,
                                const PeriodicOrbit& Y,
                                const ApproximationCertificate& cert);

// Certificate maximizing kappa over window-based subsets at this gamma:
// every start/alignment pair is scanned, and a maximum packing of disjoint
// valid windows is selected (greedy anchored at each candidate first window,
// earliest start first, ties by smaller alignment). kappa = 0 when no window
// is valid at this gamma.
ApproximationCertificate best_certificate(const SkewProductSystem& sys,
                                          const PeriodicOrbit& X, const PeriodicOrbit& Y,
                                          double gamma);

// Per-transition numbers of a constructed sequence, as needed by the
// summability / product / distance-ratio checks.
struct TransitionCheck {
  int n = 0;              // parent stage index (1-based)
  double chi_parent = 0;  // chi of X_n
  double chi_child = 0;   // chi of X_{n+1}
  double gamma = 0;       // certificate gamma for X_{n+1} approx X_n
  double kappa = 0;
  double kappa_required = 0;  // 1 - C |chi_n|
  bool kappa_vacuous = false; // required bound <= 0
  bool kappa_ok = false;
  double gamma_bound = 0;     // min_{i<=n} d_i / (3 2^n)
  bool gamma_ok = false;
  bool ratio_ok = false;      // |chi_{n+1}| < xi |chi_n|
};

struct SequenceHypothesisReport {
  std::vector<TransitionCheck> transitions;
  std::vector<double> tails;   // r_n = sum_{k>=n} gamma_k within horizon
  double gamma_sum = 0;
  double kappa_product = 1;
  bool gamma_budget_ok = true;
  bool product_floor_ok = true;
  bool all_ok() const;
};

struct StageNumbers {
  double chi = 0;
  double d_min = 0;
  double gamma = 0;  // transition constant into this stage (0 for the seed)
  double kappa = 1;
};

// Checks conditions over an ordered stage list: per transition n the
// certificate constants against 1 - C|chi_n| and min_{i<=n} d_i/(3 2^n), the
// exponent ratio against xi, and the aggregate budget/floor proxies.
SequenceHypothesisReport check_sequence_conditions(const std::vector<StageNumbers>& stages,
                                                   double C, double xi,
                                                   double gamma_budget,
                                                   double product_floor);

}  // namespace skewlim
