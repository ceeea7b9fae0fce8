#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlim {

using Symbol = std::uint8_t;

// Base-sequence comparisons stop at this depth; longer agreement means the
// base part of the distance is below double-precision relevance and the
// distance is fiber-only.
inline constexpr int kBaseDepth = 64;

// Two points closer than this are treated as the same atom.
inline constexpr double kMergeTol = 1e-14;

struct degenerate_derivative : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct malformed_certificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct period_cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct no_progress : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct search_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct malformed_csv : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
  std::string field;
  config_error(std::string f, const std::string& msg)
      : std::runtime_error(msg), field(std::move(f)) {}
};

// Finite word over {0,..,A-1}. Stores whether it is a proper power of a
// shorter word (affects the true period of the orbit it codes).
struct Word {
  std::vector<Symbol> symbols;
  bool is_primitive = true;

  Word() = default;
  explicit Word(std::vector<Symbol> s);
  explicit Word(const std::string& digits);

  int size() const { return static_cast<int>(symbols.size()); }
  Symbol at(long i) const { return symbols[static_cast<size_t>(i % size())]; }
  std::string str() const;
};

// One-sided infinite symbol sequence with eventually-periodic code.
struct BaseCode {
  std::vector<Symbol> pre;   // preperiod, may be empty
  std::vector<Symbol> rep;   // repeating part, never empty

  Symbol symbol(long i) const {
    if (i < static_cast<long>(pre.size())) return pre[static_cast<size_t>(i)];
    i -= static_cast<long>(pre.size());
    return rep[static_cast<size_t>(i % static_cast<long>(rep.size()))];
  }
  BaseCode shifted() const;
  static BaseCode periodic(const Word& w, int rot = 0);
};

struct Point {
  BaseCode base;
  double fiber = 0.0;  // in [0,1)
};

inline double wrap01(double y) {
  y -= std::floor(y);
  if (y >= 1.0) y = 0.0;
  if (y < 0.0) y = 0.0;
  return y;
}

inline double circle_dist(double a, double b) {
  double d = std::fabs(a - b);
  return d <= 0.5 ? d : 1.0 - d;
}

// Index of the first base disagreement, capped at kBaseDepth.
int first_disagreement(const BaseCode& p, const BaseCode& q, int cap = kBaseDepth);

// max(2^-m, circle distance); base part drops out once agreement reaches
// kBaseDepth.
double metric_dist(const Point& p, const Point& q);

}  // namespace skewlim
