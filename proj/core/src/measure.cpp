#include "rtmp/measure.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rtmp {

AtomicMeasure AtomicMeasure::from_exact(std::vector<Rat> atoms,
                                        std::vector<Rat> densities) {
  if (atoms.size() != densities.size())
    throw std::invalid_argument("AtomicMeasure: length mismatch");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (atoms[i] == atoms[j]) throw std::invalid_argument("AtomicMeasure: repeated atom");
    if (densities[i] <= 0)
      throw std::invalid_argument("AtomicMeasure: nonpositive density");
  }
  AtomicMeasure mu;
  mu.exact = true;
  mu.atoms_exact = std::move(atoms);
  mu.densities_exact = std::move(densities);
  mu.atoms.reserve(mu.atoms_exact.size());
  mu.densities.reserve(mu.densities_exact.size());
  for (const Rat& a : mu.atoms_exact) mu.atoms.push_back(to_double(a));
  for (const Rat& d : mu.densities_exact) mu.densities.push_back(to_double(d));
  return mu;
}

double AtomicMeasure::power_moment(int m) const {
  long double acc = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    long double p = 1;
    for (int e = 0; e < m; ++e) p *= static_cast<long double>(atoms[i]);
    acc += static_cast<long double>(densities[i]) * p;
  }
  return static_cast<double>(acc);
}

std::optional<Rat> PoleSet::hit(double x, double tol) const {
  for (const Rat& lam : points) {
    const double l = to_double(lam);
    if (std::abs(x - l) <= tol * (1.0 + std::abs(l))) return lam;
  }
  return std::nullopt;
}

MeasureReport verify_measure(const AtomicMeasure& mu, const MomentSequence& gamma,
                             const ClosedSet& k, const PoleSet& poles, double tol) {
  MeasureReport report;
  std::ostringstream detail;

  if (mu.atoms.size() != mu.densities.size())
    throw std::invalid_argument("verify_measure: malformed measure");

  report.moments_ok = true;
  report.moment_residuals.resize(gamma.size());
  for (int i = 0; i <= gamma.degree(); ++i) {
    const double want = to_double(gamma[i]);
    const double got = mu.power_moment(i);
    const double resid = std::abs(got - want) / (1.0 + std::abs(want));
    report.moment_residuals[i] = resid;
    report.max_moment_residual = std::max(report.max_moment_residual, resid);
    if (!(resid <= tol)) {
      report.moments_ok = false;
    }
  }
  if (!report.moments_ok)
    detail << "moment residual " << report.max_moment_residual << " exceeds " << tol << "; ";

  report.support_in_k = true;
  for (double a : mu.atoms) {
    if (!std::isfinite(a) || !k.contains(a, tol)) {
      report.support_in_k = false;
      detail << "atom " << a << " outside K; ";
      break;
    }
  }

  report.avoids_poles = true;
  for (double a : mu.atoms) {
    if (auto lam = poles.hit(a, tol)) {
      report.avoids_poles = false;
      detail << "atom " << a << " touches forbidden point " << rat_str(*lam) << "; ";
      break;
    }
  }

  report.densities_positive = true;
  for (double d : mu.densities) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      report.densities_positive = false;
      detail << "nonpositive density " << d << "; ";
      break;
    }
  }

  report.detail = detail.str();
  return report;
}

}  // namespace rtmp
