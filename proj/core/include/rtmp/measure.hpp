#pragma once

#include "rtmp/kset.hpp"
#include "rtmp/moments.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtmp {

// Finitely atomic positive measure on the line. Atoms are pairwise distinct
// and densities strictly positive. When `exact` is set the rational vectors
// are authoritative and the doubles are their rounded images.
struct AtomicMeasure {
  std::vector<double> atoms;
  std::vector<double> densities;
  bool exact = false;
  std::vector<Rat> atoms_exact;
  std::vector<Rat> densities_exact;

  std::size_t size() const { return atoms.size(); }
  static AtomicMeasure from_exact(std::vector<Rat> atoms, std::vector<Rat> densities);
  // Power moment sum rho_i * atom_i^m in long double.
  double power_moment(int m) const;
};

// Real points the support must avoid.
struct PoleSet {
  std::vector<Rat> points;

  bool empty() const { return points.empty(); }
  // True when x is within tol * (1 + |pole|) of some pole.
  std::optional<Rat> hit(double x, double tol) const;

  friend bool operator==(const PoleSet&, const PoleSet&) = default;
};

// Verification outcome for a candidate measure against moment data.
struct MeasureReport {
  bool moments_ok = false;
  bool support_in_k = false;
  bool avoids_poles = false;
  bool densities_positive = false;
  double max_moment_residual = 0.0;       // relative, max over entries
  std::vector<double> moment_residuals;
  std::string detail;

  bool ok() const {
    return moments_ok && support_in_k && avoids_poles && densities_positive;
  }
};

// Checks every moment to relative tolerance tol, support membership in K
// within tol, distance > tol * (1 + |pole|) from every pole, and positivity
// of all densities.
MeasureReport verify_measure(const AtomicMeasure& mu, const MomentSequence& gamma,
                             const ClosedSet& k, const PoleSet& poles, double tol);

}  // namespace rtmp
