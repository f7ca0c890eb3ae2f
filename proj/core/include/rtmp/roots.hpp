#pragma once

#include "rtmp/poly.hpp"

#include <vector>

namespace rtmp {

// Real roots of a polynomial as floating point values.
//
// Invariant: for every root r, |p(r)| <= residual_bound * max|coeff| *
// max(1, |r|)^deg; residual_bound is the largest such ratio observed.
struct RootSet {
  std::vector<double> roots;            // ascending
  std::vector<int> multiplicities;      // parallel to roots
  double residual_bound = 0.0;
};

// Companion-matrix eigenvalues polished by Newton steps in extended
// precision. Complex pairs (|Im| > tol * (1 + |z|)) are discarded; roots
// closer than tol * (1 + |r|) are merged and their multiplicities added.
// Throws on the zero polynomial and when the eigensolver fails to converge.
RootSet real_roots(const Poly& p, double tol = 1e-8);

// Solves sum_j w_j * nodes_j^i = rhs_i for the weights w (dual Vandermonde
// system) with the Bjorck-Pereyra recurrence in double precision.
// Throws when two nodes coincide within sep_tol.
std::vector<double> vandermonde_solve(const std::vector<double>& nodes,
                                      const std::vector<Rat>& rhs,
                                      double sep_tol = 1e-12);

// Same system solved exactly for rational nodes.
std::vector<Rat> vandermonde_solve_exact(const std::vector<Rat>& nodes,
                                         const std::vector<Rat>& rhs);

}  // namespace rtmp
