#pragma once

#include "rtmp/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtmp {

// One closed interval; an absent endpoint means unbounded on that side.
// Singletons (lo == hi) are allowed.
struct Interval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed subset of the line: a finite union of disjoint closed intervals,
// sorted with strict gaps between consecutive intervals.
class ClosedSet {
 public:
  static ClosedSet whole_line();
  // Validates, sorts, and rejects overlapping or touching intervals.
  static ClosedSet from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }

  bool bounded_below() const;
  bool bounded_above() const;
  bool is_bounded() const { return bounded_below() && bounded_above(); }
  // Least / greatest element when the corresponding side is bounded.
  std::optional<Rat> min() const;
  std::optional<Rat> max() const;

  // Gaps (a, b) between consecutive intervals; both endpoints finite.
  std::vector<std::pair<Rat, Rat>> gaps() const;

  // Isolated points, i.e. singleton intervals.
  std::vector<Rat> isolated_points() const;

  bool contains(const Rat& x) const;
  // Membership with a relative slack of tol * (1 + |x|) at finite endpoints.
  bool contains(double x, double tol) const;

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

enum class GeneratorKind { least_element, greatest_element, gap };

struct Generator {
  Poly f;
  GeneratorKind kind;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// The canonical generators of K: x - a when K has a least element a, b - x
// when it has a greatest element b, and (x - a)(x - b) for each gap (a, b).
// Order: least element, greatest element, gaps left to right.
struct NaturalDescription {
  std::vector<Generator> generators;

  friend bool operator==(const NaturalDescription&, const NaturalDescription&) = default;
};

NaturalDescription natural_description(const ClosedSet& k);

// A product of a subset of the generators.
struct PiProduct {
  Poly f;
  std::vector<int> exponents;   // 0/1 per generator, description order
  int degree = 0;
  bool odd_degree = false;
  int leading_sign = 1;

  friend bool operator==(const PiProduct&, const PiProduct&) = default;
};

// All subset products with degree <= budget, sorted by total degree and then
// lexicographically on the exponent vector. The empty product (constant 1)
// comes first.
std::vector<PiProduct> pi_products(const NaturalDescription& s, int budget);

enum class KClassKind {
  whole_or_halfline,
  bounded,
  one_sided_unbounded,
  two_sided_unbounded,
};

// Shape class of K together with the worst-case atom count for degree-2k
// data. Card(dK) = 2*l1 + l2 with l2 in {0, 1}: the parity decomposition of
// the number of finite boundary points.
struct KClass {
  KClassKind kind;
  int l1 = 0;
  int l2 = 0;
  int atom_bound = 0;

  friend bool operator==(const KClass&, const KClass&) = default;
};

KClass classify(const ClosedSet& k, int half_degree);

}  // namespace rtmp
