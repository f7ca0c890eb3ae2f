#pragma once

#include "rtmp/linalg.hpp"
#include "rtmp/moments.hpp"

#include <optional>
#include <vector>

namespace rtmp {

enum class PsdStatus { positive_definite, psd_singular, indefinite };

// Exact positive-semidefiniteness classification of a symmetric rational
// matrix. The status and kernel are exact; the eigenvalue fields are a
// floating point side channel for reporting only.
//
// Invariant: each kernel vector v satisfies M v = 0 exactly, and rank +
// #kernel vectors equals the matrix side for psd matrices.
struct PsdReport {
  PsdStatus status = PsdStatus::indefinite;
  int rank = 0;
  std::vector<std::vector<Rat>> kernel_vectors;
  std::vector<double> eigenvalue_estimates;   // descending
  double min_eigenvalue_estimate = 0.0;
};

// Hankel matrix of a (possibly localized) moment sequence: entry (i, j) is
// sequence[i + j]. For an even-length source the last moment does not fit a
// square matrix and is dropped; it still participates when the sequence is
// re-localized or extended.
struct HankelMatrix {
  RatMatrix entries;
  int side = 0;
  MomentSequence source;   // the localized sequence the matrix was built from
  Poly localizer;          // f with source = f * gamma (Poly::one() when none)
};

// Builds the Hankel matrix at the given level (side = level + 1); the level
// defaults to floor(degree / 2). Throws when 2 * level > degree.
HankelMatrix build_hankel(const MomentSequence& gamma,
                          std::optional<int> level = std::nullopt);

// build_hankel(localize(gamma, f)) with the localizer recorded.
HankelMatrix localizing_hankel(const MomentSequence& gamma, const Poly& f);

// Ordered symmetric elimination without pivoting: processes diagonal entries
// left to right, so the first zero pivot identifies the smallest singular
// leading block. Exact; eigenvalue estimates come from a double solve.
PsdReport psd_classify(const RatMatrix& m);

PsdReport psd_status(const HankelMatrix& h);

// Kernel vectors of a Hankel matrix read as column relations, i.e. as
// polynomials in the column basis 1, x, ..., x^side-1.
std::vector<Poly> kernel_polynomials(const PsdReport& report);

// Monic generator of the kernel at the first singular level.
struct GeneratingPoly {
  Poly p;                       // monic; Poly::one() when level 0 is singular
  int first_singular_level = 0;
};

// For psd gamma: nullopt when the full Hankel matrix is positive definite,
// otherwise the monic kernel polynomial at the smallest singular level.
// Throws when the matrix is indefinite.
std::optional<GeneratingPoly> generating_polynomial(const MomentSequence& gamma);

// For a psd Hankel matrix: true when a measure on the line is certified
// either by positive definiteness or, in the singular case, by
// x^(k - deg p) * p being a column relation of the full matrix.
// Throws when the matrix is indefinite.
bool flat_extension_check(const MomentSequence& gamma);

}  // namespace rtmp
