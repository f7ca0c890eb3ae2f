#include "rtmp/roots.hpp"

#include "rtmp/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rtmp {

RootSet real_roots(const Poly& p, double tol) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  const int n = p.degree();
  RootSet out;
  if (n == 0) return out;

  // Monic normalization in double precision for the companion matrix.
  const Poly pm = p.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -to_double(pm.coeff(i));
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("real_roots: eigensolver failed to converge on " + p.str());

  const Poly dp = p.derivative();
  std::vector<double> candidates;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> z = solver.eigenvalues()[i];
    if (std::abs(z.imag()) > tol * (1.0 + std::abs(z))) continue;
    long double r = z.real();
    // Newton polish in extended precision until the residual stops improving;
    // skipped near critical points where the step is unreliable (multiple roots).
    long double best = std::abs(p.eval_long(r));
    for (int it = 0; it < 8; ++it) {
      const long double d = dp.eval_long(r);
      if (!(std::abs(static_cast<double>(d)) >
            1e-12 * (1.0 + std::abs(static_cast<double>(r)))))
        break;
      const long double next = r - p.eval_long(r) / d;
      const long double resid = std::abs(p.eval_long(next));
      if (!(resid < best)) break;
      r = next;
      best = resid;
    }
    candidates.push_back(static_cast<double>(r));
  }
  std::sort(candidates.begin(), candidates.end());

  for (double r : candidates) {
    if (!out.roots.empty() &&
        std::abs(r - out.roots.back()) <= tol * (1.0 + std::abs(r))) {
      ++out.multiplicities.back();
    } else {
      out.roots.push_back(r);
      out.multiplicities.push_back(1);
    }
  }

  double max_coeff = 0.0;
  for (const Rat& c : p.coeffs()) max_coeff = std::max(max_coeff, std::abs(to_double(c)));
  for (double r : out.roots) {
    const double scale = max_coeff * std::pow(std::max(1.0, std::abs(r)), n);
    out.residual_bound = std::max(out.residual_bound, std::abs(p(r)) / scale);
  }
  // Round up so |p(r)| <= residual_bound * scale survives the divide/multiply
  // round trip in double arithmetic.
  out.residual_bound *= 1.0 + 4 * std::numeric_limits<double>::epsilon();
  return out;
}

std::vector<double> vandermonde_solve(const std::vector<double>& nodes,
                                      const std::vector<Rat>& rhs, double sep_tol) {
  const std::size_t n = nodes.size();
  if (rhs.size() != n) throw std::invalid_argument("vandermonde_solve: length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(nodes[i] - nodes[j]) <= sep_tol)
        throw std::runtime_error("vandermonde_solve: coincident nodes");
  if (n == 0) return {};

  // Bjorck-Pereyra for the dual problem sum_j w_j x_j^i = f_i.
  std::vector<long double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = to_long_double(rhs[i]);
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i)
      f[i] -= static_cast<long double>(nodes[k]) * f[i - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    for (std::size_t i = k + 1; i < n; ++i)
      f[i] /= static_cast<long double>(nodes[i]) - static_cast<long double>(nodes[i - k - 1]);
    for (std::size_t i = k; i + 1 < n; ++i) f[i] -= f[i + 1];
  }
  return std::vector<double>(f.begin(), f.end());
}

std::vector<Rat> vandermonde_solve_exact(const std::vector<Rat>& nodes,
                                         const std::vector<Rat>& rhs) {
  const int n = static_cast<int>(nodes.size());
  if (static_cast<int>(rhs.size()) != n)
    throw std::invalid_argument("vandermonde_solve_exact: length mismatch");
  if (n == 0) return {};
  RatMatrix v(n, n);
  for (int j = 0; j < n; ++j) {
    Rat powv = 1;
    for (int i = 0; i < n; ++i) {
      v(i, j) = powv;
      powv *= nodes[j];
    }
  }
  return solve_linear(std::move(v), rhs);
}

}  // namespace rtmp
