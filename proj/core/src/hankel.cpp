#include "rtmp/hankel.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace rtmp {

HankelMatrix build_hankel(const MomentSequence& gamma, std::optional<int> level) {
  const int auto_level = gamma.degree() / 2;
  const int l = level.value_or(auto_level);
  if (l < 0 || 2 * l > gamma.degree())
    throw std::invalid_argument("build_hankel: level exceeds moment data");
  HankelMatrix h;
  h.side = l + 1;
  h.entries = RatMatrix(h.side, h.side);
  for (int i = 0; i < h.side; ++i)
    for (int j = 0; j < h.side; ++j) h.entries(i, j) = gamma[i + j];
  h.source = gamma;
  h.localizer = Poly::one();
  return h;
}

HankelMatrix localizing_hankel(const MomentSequence& gamma, const Poly& f) {
  HankelMatrix h = build_hankel(localize(gamma, f));
  h.localizer = f;
  return h;
}

PsdReport psd_classify(const RatMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("psd_classify: not square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("psd_classify: not symmetric");

  PsdReport report;

  // Float side channel for diagnostics.
  {
    Eigen::MatrixXd md(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) md(i, j) = to_double(m(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(md, Eigen::EigenvaluesOnly);
    report.eigenvalue_estimates.assign(es.eigenvalues().data(),
                                       es.eigenvalues().data() + n);
    std::reverse(report.eigenvalue_estimates.begin(), report.eigenvalue_estimates.end());
    report.min_eigenvalue_estimate =
        report.eigenvalue_estimates.empty() ? 0.0 : report.eigenvalue_estimates.back();
  }

  // Ordered symmetric elimination without pivoting. Diagonal entries of the
  // running Schur complement are examined left to right, so the first zero
  // pivot marks the smallest singular leading block. For a symmetric matrix
  // a zero pivot with a nonzero residual row forces indefiniteness.
  RatMatrix a = m;
  std::vector<int> pivots;
  std::vector<int> nulls;
  bool indefinite = false;
  for (int i = 0; i < n && !indefinite; ++i) {
    const Rat d = a(i, i);
    if (d > 0) {
      pivots.push_back(i);
      for (int r = i + 1; r < n; ++r) {
        if (a(r, i) == 0) continue;
        const Rat factor = a(r, i) / d;
        for (int c = i; c < n; ++c) a(r, c) -= factor * a(i, c);
      }
      for (int r = i + 1; r < n; ++r) a(i, r) = 0;  // keep symmetry explicit
    } else if (d == 0) {
      bool clean = true;
      for (int c = i + 1; c < n; ++c) {
        if (a(i, c) != 0) {
          clean = false;
          break;
        }
      }
      if (clean) {
        nulls.push_back(i);
        for (int r = i + 1; r < n; ++r) a(r, i) = 0;
      } else {
        indefinite = true;
      }
    } else {
      indefinite = true;
    }
  }

  report.rank = static_cast<int>(pivots.size());
  if (indefinite) {
    report.status = PsdStatus::indefinite;
    return report;
  }
  report.status = nulls.empty() ? PsdStatus::positive_definite : PsdStatus::psd_singular;

  // A vanished Schur-complement row means row i of m is an exact combination
  // of the pivot rows before it; solving against that block yields a kernel
  // vector supported on {pivots < i} + {i}.
  for (int i : nulls) {
    std::vector<int> j;
    for (int p : pivots) {
      if (p < i) j.push_back(p);
    }
    std::vector<Rat> v(n, Rat(0));
    v[i] = 1;
    if (!j.empty()) {
      const int s = static_cast<int>(j.size());
      RatMatrix block(s, s);
      std::vector<Rat> rhs(s);
      for (int r = 0; r < s; ++r) {
        for (int c = 0; c < s; ++c) block(r, c) = m(j[r], j[c]);
        rhs[r] = m(j[r], i);
      }
      const std::vector<Rat> coef = solve_linear(std::move(block), std::move(rhs));
      for (int r = 0; r < s; ++r) v[j[r]] = -coef[r];
    }
    for (int r = 0; r < n; ++r) {
      Rat acc = 0;
      for (int c = 0; c < n; ++c) acc += m(r, c) * v[c];
      if (acc != 0) throw std::logic_error("psd_classify: kernel reconstruction failed");
    }
    report.kernel_vectors.push_back(std::move(v));
  }
  return report;
}

PsdReport psd_status(const HankelMatrix& h) { return psd_classify(h.entries); }

std::vector<Poly> kernel_polynomials(const PsdReport& report) {
  std::vector<Poly> out;
  out.reserve(report.kernel_vectors.size());
  for (const auto& v : report.kernel_vectors) out.emplace_back(v);
  return out;
}

std::optional<GeneratingPoly> generating_polynomial(const MomentSequence& gamma) {
  const HankelMatrix h = build_hankel(gamma);
  const PsdReport report = psd_status(h);
  if (report.status == PsdStatus::indefinite)
    throw std::invalid_argument("generating_polynomial: matrix is not psd");
  if (report.status == PsdStatus::positive_definite) return std::nullopt;

  // First kernel vector = relation at the smallest singular level; its top
  // index is that level and the vector is monic there by construction.
  const std::vector<Rat>& v = report.kernel_vectors.front();
  int level = h.side - 1;
  while (level > 0 && v[level] == 0) --level;
  GeneratingPoly g;
  g.first_singular_level = level;
  g.p = Poly(std::vector<Rat>(v.begin(), v.begin() + level + 1));
  return g;
}

bool flat_extension_check(const MomentSequence& gamma) {
  const auto g = generating_polynomial(gamma);
  if (!g) return true;
  const int k = gamma.degree() / 2;
  const Poly shifted = g->p.shifted(k - g->p.degree());
  const HankelMatrix h = build_hankel(gamma);
  for (int r = 0; r < h.side; ++r) {
    Rat acc = 0;
    for (int c = 0; c <= shifted.degree(); ++c) acc += h.entries(r, c) * shifted.coeff(c);
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace rtmp
