#include "rtmp/quadsets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rtmp {

double Quadratic::eval(double x) const {
  return (to_double(a) * x + to_double(b)) * x + to_double(c);
}

double Surd::approx() const {
  return (to_double(p) + to_double(s) * std::sqrt(to_double(d))) / to_double(q);
}

namespace {

// Exact sign of A + B * sqrt(E) for rational A, B and E >= 0.
int single_surd_sign(const Rat& A, const Rat& B, const Rat& E) {
  if (B == 0 || E == 0) return sign(A);
  if (A == 0) return sign(B);
  const int sa = sign(A), sb = sign(B);
  if (sa == sb) return sa;
  const Rat diff = A * A - B * B * E;
  if (diff == 0) return 0;
  return diff > 0 ? sa : sb;
}

int sign_at_minus_inf(const Quadratic& g) {
  if (g.a != 0) return sign(g.a);
  if (g.b != 0) return -sign(g.b);
  return sign(g.c);
}

// Sign of the derivative 2 a x + b at a surd point.
int derivative_sign_at(const Quadratic& g, const Surd& x) {
  const Rat A = 2 * g.a * x.p + g.b * x.q;
  const Rat B = 2 * g.a * x.s;
  return single_surd_sign(A, B, x.d);  // q > 0 cancels
}

// Sign of g immediately to the right of a root cell boundary.
int sign_right_of(const Quadratic& g, const Surd& x) {
  const int v = sign_at(g, x);
  if (v != 0) return v;
  const int d1 = derivative_sign_at(g, x);
  if (d1 != 0) return d1;
  return sign(g.a);  // double root
}

}  // namespace

int sign_of_radical_sum(const Rat& r, const Rat& u, const Rat& d1, const Rat& v,
                        const Rat& d2) {
  if (d1 == 0 || u == 0) return single_surd_sign(r, v, d2);
  if (d2 == 0 || v == 0) return single_surd_sign(r, u, d1);
  const int su = sign(u), sv = sign(v);
  int st;  // sign of u sqrt(d1) + v sqrt(d2)
  if (su == sv) {
    st = su;
  } else {
    const Rat diff = u * u * d1 - v * v * d2;
    st = (diff == 0) ? 0 : (diff > 0 ? su : sv);
  }
  if (r == 0) return st;
  if (st == 0) return sign(r);
  if (sign(r) == st) return st;
  // Opposite signs: compare r^2 with t^2 = u^2 d1 + v^2 d2 + 2 u v sqrt(d1 d2).
  const Rat A = r * r - u * u * d1 - v * v * d2;
  const Rat B = -2 * u * v;
  const int cmp = single_surd_sign(A, B, d1 * d2);
  if (cmp == 0) return 0;
  return cmp > 0 ? sign(r) : st;
}

int compare(const Surd& a, const Surd& b) {
  return sign_of_radical_sum(a.p / a.q - b.p / b.q, a.s / a.q, a.d, -b.s / b.q, b.d);
}

int compare(const Surd& a, const Rat& b) {
  return single_surd_sign(a.p - b * a.q, a.s, a.d);
}

int sign_at(const Quadratic& g, const Surd& x) {
  const Rat A = g.a * (x.p * x.p + x.s * x.s * x.d) + g.b * x.p * x.q + g.c * x.q * x.q;
  const Rat B = x.s * (2 * g.a * x.p + g.b * x.q);
  return single_surd_sign(A, B, x.d);
}

std::vector<Surd> quadratic_roots(const Quadratic& g) {
  if (g.a == 0) {
    if (g.b == 0) {
      if (g.c == 0)
        throw std::invalid_argument("quadratic_roots: identically zero");
      return {};
    }
    return {Surd::of(-g.c / g.b)};
  }
  const Rat disc = g.b * g.b - 4 * g.a * g.c;
  if (disc < 0) return {};
  const Rat q = rat_abs(2 * g.a);
  const Rat p = (g.a > 0) ? Rat(-g.b) : g.b;
  if (disc == 0) return {Surd{p, 0, q, 0}};
  return {Surd{p, -1, q, disc}, Surd{p, 1, q, disc}};
}

std::vector<AlgebraicInterval> feasible_intervals(
    const std::vector<Quadratic>& constraints) {
  std::vector<Quadratic> active;
  for (const Quadratic& g : constraints) {
    if (g.a == 0 && g.b == 0) {
      if (g.c < 0) return {};
      continue;  // vacuous
    }
    active.push_back(g);
  }
  if (active.empty()) return {AlgebraicInterval{}};

  std::vector<Surd> breaks;
  for (const Quadratic& g : active) {
    for (Surd& r : quadratic_roots(g)) breaks.push_back(std::move(r));
    // No real roots: constant sign; negative-definite constraints empty the set.
    if (g.a != 0 && g.b * g.b - 4 * g.a * g.c < 0 && g.a < 0) return {};
  }
  if (breaks.empty()) return {AlgebraicInterval{}};
  std::sort(breaks.begin(), breaks.end(),
            [](const Surd& a, const Surd& b) { return compare(a, b) < 0; });
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](const Surd& a, const Surd& b) { return compare(a, b) == 0; }),
               breaks.end());

  // Cells: (-inf, b0), {b0}, (b0, b1), ..., {bt}, (bt, +inf). Every sign is
  // exact; on open cells each constraint has constant nonzero sign.
  const int t = static_cast<int>(breaks.size());
  std::vector<bool> feasible(2 * t + 1, true);
  for (const Quadratic& g : active) {
    if (sign_at_minus_inf(g) < 0) feasible[0] = false;
    for (int i = 0; i < t; ++i) {
      if (sign_at(g, breaks[i]) < 0) feasible[2 * i + 1] = false;
      if (sign_right_of(g, breaks[i]) < 0) feasible[2 * i + 2] = false;
    }
  }

  std::vector<AlgebraicInterval> out;
  int cell = 0;
  while (cell < 2 * t + 1) {
    if (!feasible[cell]) {
      ++cell;
      continue;
    }
    AlgebraicInterval iv;
    if (cell > 0) iv.lo = breaks[(cell - 1) / 2];
    while (cell < 2 * t + 1 && feasible[cell]) ++cell;
    if (cell < 2 * t + 1) iv.hi = breaks[(cell - 1) / 2];
    out.push_back(std::move(iv));
  }
  return out;
}

bool feasible_point_exists(const std::vector<Quadratic>& constraints) {
  return !feasible_intervals(constraints).empty();
}

}  // namespace rtmp
