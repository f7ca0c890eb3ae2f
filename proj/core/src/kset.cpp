#include "rtmp/kset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rtmp {

ClosedSet ClosedSet::whole_line() {
  ClosedSet k;
  k.intervals_.push_back(Interval{});
  return k;
}

ClosedSet ClosedSet::from_intervals(std::vector<Interval> intervals) {
  if (intervals.empty()) throw std::invalid_argument("ClosedSet: empty set");
  for (const Interval& iv : intervals) {
    if (iv.lo && iv.hi && *iv.lo > *iv.hi)
      throw std::invalid_argument("ClosedSet: interval with lo > hi");
  }
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    if (!a.lo) return static_cast<bool>(b.lo);
    if (!b.lo) return false;
    return *a.lo < *b.lo;
  });
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    const Interval& a = intervals[i];
    const Interval& b = intervals[i + 1];
    if (!a.hi || !b.lo || !(*a.hi < *b.lo))
      throw std::invalid_argument("ClosedSet: intervals must be disjoint with gaps");
  }
  ClosedSet k;
  k.intervals_ = std::move(intervals);
  return k;
}

bool ClosedSet::bounded_below() const { return intervals_.front().lo.has_value(); }
bool ClosedSet::bounded_above() const { return intervals_.back().hi.has_value(); }

std::optional<Rat> ClosedSet::min() const { return intervals_.front().lo; }
std::optional<Rat> ClosedSet::max() const { return intervals_.back().hi; }

std::vector<std::pair<Rat, Rat>> ClosedSet::gaps() const {
  std::vector<std::pair<Rat, Rat>> out;
  for (std::size_t i = 0; i + 1 < intervals_.size(); ++i)
    out.emplace_back(*intervals_[i].hi, *intervals_[i + 1].lo);
  return out;
}

std::vector<Rat> ClosedSet::isolated_points() const {
  std::vector<Rat> out;
  for (const Interval& iv : intervals_)
    if (iv.lo && iv.hi && *iv.lo == *iv.hi) out.push_back(*iv.lo);
  return out;
}

bool ClosedSet::contains(const Rat& x) const {
  for (const Interval& iv : intervals_) {
    const bool above = !iv.lo || *iv.lo <= x;
    const bool below = !iv.hi || x <= *iv.hi;
    if (above && below) return true;
  }
  return false;
}

bool ClosedSet::contains(double x, double tol) const {
  const double slack = tol * (1.0 + std::abs(x));
  for (const Interval& iv : intervals_) {
    const bool above = !iv.lo || to_double(*iv.lo) - slack <= x;
    const bool below = !iv.hi || x <= to_double(*iv.hi) + slack;
    if (above && below) return true;
  }
  return false;
}

NaturalDescription natural_description(const ClosedSet& k) {
  NaturalDescription s;
  if (k.bounded_below())
    s.generators.push_back({Poly::linear_root(*k.min()), GeneratorKind::least_element});
  if (k.bounded_above())
    s.generators.push_back({Poly{*k.max(), Rat(-1)}, GeneratorKind::greatest_element});
  for (const auto& [a, b] : k.gaps())
    s.generators.push_back({Poly::linear_root(a) * Poly::linear_root(b), GeneratorKind::gap});
  return s;
}

std::vector<PiProduct> pi_products(const NaturalDescription& s, int budget) {
  const int m = static_cast<int>(s.generators.size());
  if (m > 24) throw std::invalid_argument("pi_products: too many generators");
  std::vector<PiProduct> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    PiProduct prod;
    prod.f = Poly::one();
    prod.exponents.assign(m, 0);
    for (int g = 0; g < m; ++g) {
      if (mask & (1u << g)) {
        prod.exponents[g] = 1;
        prod.f = prod.f * s.generators[g].f;
      }
    }
    prod.degree = prod.f.degree();
    if (prod.degree > budget) continue;
    prod.odd_degree = (prod.degree % 2) != 0;
    prod.leading_sign = sign(prod.f.leading());
    out.push_back(std::move(prod));
  }
  std::sort(out.begin(), out.end(), [](const PiProduct& a, const PiProduct& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exponents < b.exponents;
  });
  return out;
}

KClass classify(const ClosedSet& k, int half_degree) {
  KClass out;
  int boundary = 0;
  for (const Interval& iv : k.intervals()) {
    if (iv.lo && iv.hi) {
      boundary += (*iv.lo == *iv.hi) ? 1 : 2;
    } else if (iv.lo || iv.hi) {
      boundary += 1;
    }
  }
  out.l2 = boundary % 2;
  out.l1 = boundary / 2;

  const bool below = k.bounded_below();
  const bool above = k.bounded_above();
  if (k.intervals().size() == 1 && (!below || !above)) {
    out.kind = KClassKind::whole_or_halfline;
    out.atom_bound = half_degree + 1;
  } else if (below && above) {
    out.kind = KClassKind::bounded;
    out.atom_bound = half_degree + out.l1 + 1;
  } else if (!below && !above) {
    out.kind = KClassKind::two_sided_unbounded;
    out.atom_bound = half_degree + out.l1 + 2;
  } else {
    out.kind = KClassKind::one_sided_unbounded;
    out.atom_bound = half_degree + out.l1 + out.l2 + 1;
  }
  return out;
}

}  // namespace rtmp
