#pragma once

#include "rtmp/rat.hpp"

#include <optional>
#include <vector>

namespace rtmp {

// q(x) = a x^2 + b x + c with exact coefficients; a or b may vanish.
struct Quadratic {
  Rat a, b, c;

  Rat operator()(const Rat& x) const { return (a * x + b) * x + c; }
  double eval(double x) const;

  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

// Exact real algebraic number of degree at most two: (p + s * sqrt(d)) / q
// with rational p, s, q (q > 0) and a nonnegative rational radicand d.
struct Surd {
  Rat p;
  Rat s;
  Rat q = 1;
  Rat d = 0;

  static Surd of(const Rat& r) { return Surd{r, 0, 1, 0}; }
  double approx() const;
};

// Exact sign of r + u*sqrt(d1) + v*sqrt(d2).
int sign_of_radical_sum(const Rat& r, const Rat& u, const Rat& d1,
                        const Rat& v, const Rat& d2);

// Exact three-way comparison: sign of (a - b).
int compare(const Surd& a, const Surd& b);
int compare(const Surd& a, const Rat& b);

// Exact sign of g at a surd point.
int sign_at(const Quadratic& g, const Surd& x);

// Real roots of g, ascending; empty for sign-constant g. A double root is
// reported once. Throws on the identically-zero quadratic.
std::vector<Surd> quadratic_roots(const Quadratic& g);

// Interval with exact algebraic endpoints; absent means unbounded.
struct AlgebraicInterval {
  std::optional<Surd> lo;
  std::optional<Surd> hi;
};

// The set { x : g(x) >= 0 for every g } as a sorted union of closed
// intervals, computed exactly by sign analysis on the cells cut out by all
// real roots. Constraints that are identically zero are vacuous; the result
// is empty when the system is infeasible.
std::vector<AlgebraicInterval> feasible_intervals(
    const std::vector<Quadratic>& constraints);

bool feasible_point_exists(const std::vector<Quadratic>& constraints);

}  // namespace rtmp
