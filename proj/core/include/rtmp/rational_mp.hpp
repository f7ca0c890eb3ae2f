#pragma once

#include "rtmp/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtmp {

// Denominator shape q(x) = prod_j (x - lambda_j)^(2 k_j) * prod_j (x^2 +
// eta_j)^(l_j), together with the polynomial part ceiling k0: the functional
// acts on f / q with deg f <= 2k, 2k = 2 k0 + sum 2 k_j + sum 2 l_j.
struct RealPole {
  Rat lambda;
  int order = 1;      // k_j >= 1; the factor is (x - lambda)^(2 order)

  friend bool operator==(const RealPole&, const RealPole&) = default;
};

struct ComplexPolePair {
  Rat eta;            // > 0; the factor is (x^2 + eta)^order
  int order = 1;      // l_j >= 1

  friend bool operator==(const ComplexPolePair&, const ComplexPolePair&) = default;
};

struct PoleSpec {
  int k0 = 0;
  std::vector<RealPole> real;
  std::vector<ComplexPolePair> complex;

  // Validates k0 >= 0, orders >= 1, distinct lambdas, distinct positive etas.
  void validate() const;
  int half_degree() const;     // k
  PoleSet pole_set() const;

  friend bool operator==(const PoleSpec&, const PoleSpec&) = default;
};

// prod (x - lambda_j)^(2 k_j) * prod (x^2 + eta_j)^(l_j), exact.
Poly build_q(const PoleSpec& spec);

// Values of the functional on the partial-fraction basis:
//   gamma0[i]       = L(x^i),                    i = 0..2 k0
//   real[j][i-1]    = L((x - lambda_j)^-i),      i = 1..2 k_j
//   complex[j].s0   = L((x^2 + eta_j)^-i),       i = 1..l_j
//   complex[j].s1   = L(x (x^2 + eta_j)^-i),     i = 1..l_j
struct ComplexMomentPair {
  std::vector<Rat> s0, s1;

  friend bool operator==(const ComplexMomentPair&, const ComplexMomentPair&) = default;
};

struct RationalMoments {
  std::vector<Rat> gamma0;
  std::vector<std::vector<Rat>> real;
  std::vector<ComplexMomentPair> complex;

  void validate(const PoleSpec& spec) const;

  friend bool operator==(const RationalMoments&, const RationalMoments&) = default;
};

// Coordinates of a rational function f / q in the partial-fraction basis;
// same shape as RationalMoments.
struct BasisCoefficients {
  std::vector<Rat> a;
  std::vector<std::vector<Rat>> b;
  std::vector<ComplexMomentPair> cd;

  // Pairing <coeffs, data>: the functional value of f / q.
  Rat apply(const RationalMoments& data) const;
};

// Exact partial-fraction decomposition of f / q for deg f <= 2k, via one
// rational linear solve against the basis. Throws when deg f > 2k.
BasisCoefficients partial_fractions(const Poly& f, const PoleSpec& spec);

// Power moments L(x^m), m = 0..2k, of the functional described by the data.
MomentSequence rational_to_power(const RationalMoments& data, const PoleSpec& spec);

// The bijection between measures for the power functional and measures for
// the rational functional: scales each density by q(atom), evaluated in
// factored form so the value keeps full relative accuracy near a pole.
// Throws when an atom sits on a real root of q (within tol).
AtomicMeasure pushforward_q(const AtomicMeasure& mu, const PoleSpec& spec,
                            double tol = 1e-9);
// Inverse direction: divides each density by q(atom).
AtomicMeasure pushforward_q_inverse(const AtomicMeasure& mu, const PoleSpec& spec,
                                    double tol = 1e-9);

// Full pipeline: converts to power moments, solves on K with the poles
// excluded from the support, and pushes the measure forward through q. The
// returned measure represents the rational functional directly.
SolveResult solve_rtmp(const RationalMoments& data, const PoleSpec& spec,
                       const ClosedSet& k, const SolverConfig& cfg = {},
                       SolveLog* log = nullptr);

// Evaluates every basis function on the measure and compares with the data
// to relative tolerance tol; also re-checks pole avoidance. Each basis
// function is integrated through its polynomial numerator against the
// density / q(atom) weights, which stays well conditioned for atoms close
// to a pole where the direct reciprocal sum would amplify atom rounding.
MeasureReport verify_rtmp(const AtomicMeasure& mu, const RationalMoments& data,
                          const PoleSpec& spec, double tol);

}  // namespace rtmp
