#pragma once

#include "rtmp/rational_mp.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rtmp {

// Functional on spans of x^i and x^-i with a single (even-order) pole at the
// origin over the whole line: a pole spec with one real pole lambda = 0 of
// order k1. Delegates to the rational solver with K = R.
SolveResult strong_hamburger_solve(const RationalMoments& data, const PoleSpec& spec,
                                   const SolverConfig& cfg = {},
                                   SolveLog* log = nullptr);

// Truncated bivariate sequence beta_{i,j}, complete for i + j <= 2k.
class BivariateSequence {
 public:
  BivariateSequence(int k, std::map<std::pair<int, int>, Rat> values);

  int k() const { return k_; }
  const Rat& at(int i, int j) const;

  // L_beta(p) for a bivariate polynomial given as (i, j) -> coefficient,
  // total degree <= 2k.
  Rat apply(const std::map<std::pair<int, int>, Rat>& poly) const;

 private:
  int k_;
  std::map<std::pair<int, int>, Rat> values_;
};

// Moment matrix in the monomial basis x^a y^b, a + b <= k, ordered by total
// degree and then lexicographically with x before y. Exact classification.
PsdReport bivariate_square_positive(const BivariateSequence& beta);

// Checks the column relations beta_{i+2,j} + beta_{i,j+2} = beta_{i,j} that
// characterize sequences supported on the unit circle. Returns the first
// violated index pair, or nullopt when all hold.
std::optional<std::pair<int, int>> circle_relations_check(const BivariateSequence& beta);

// Pulls the circle data back through the rational parametrization
//   x = (t^2 - 1) / (t^2 + 1),  y = 2 t / (t^2 + 1),
// which covers the circle minus the point (1, 0): rational-moment data for
// the pole spec with one complex pair eta = 1 of order 2k.
std::pair<RationalMoments, PoleSpec> circle_to_univariate(const BivariateSequence& beta);

struct CircleAtom {
  double x = 0.0;
  double y = 0.0;
};

struct CircleMeasure {
  std::vector<CircleAtom> atoms;
  std::vector<double> densities;
};

struct CircleReport {
  bool moments_ok = false;
  bool on_circle = false;
  bool densities_positive = false;
  double max_moment_residual = 0.0;
  std::string detail;

  bool ok() const { return moments_ok && on_circle && densities_positive; }
};

// Measure on the unit circle for degree-2k data, k >= 2. The univariate
// solve runs on the pulled-back data restricted to degree 4k - 1; the mass
// deficit at the top even degree, when positive, is placed at the missing
// point (1, 0) of the parametrization.
std::variant<CircleMeasure, InfeasibleReason> circle_solve(const BivariateSequence& beta,
                                                           const SolverConfig& cfg = {});

CircleReport circle_verify(const CircleMeasure& mu, const BivariateSequence& beta,
                           double tol);

}  // namespace rtmp
