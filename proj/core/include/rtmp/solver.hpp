#pragma once

#include "rtmp/hankel.hpp"
#include "rtmp/kset.hpp"
#include "rtmp/measure.hpp"
#include "rtmp/quadsets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rtmp {

enum class CertificateVerdict { strictly_positive, positive_singular, violated };

// Exact psd reports for the localizing matrices of every generator product
// of degree <= 2k, in canonical product order.
struct PositivityCertificate {
  CertificateVerdict verdict = CertificateVerdict::violated;
  std::vector<PiProduct> products;
  std::vector<PsdReport> reports;     // parallel to products
  // violated: first indefinite product; positive_singular: first singular
  // product in canonical order (lowest degree, then lexicographic).
  std::optional<int> witness;
};

PositivityCertificate positivity_certificate(const MomentSequence& gamma,
                                             const ClosedSet& k);

// One scalar bound on the next even moment: y >= q(x) (lower) or y <= q(x)
// (upper), where x is the candidate odd moment gamma_{2k+1}.
struct EvenBound {
  int product_index = 0;     // into ExtensionRegion::products
  Quadratic q;
  bool is_lower = true;
};

// Exact description of the admissible extensions (gamma_{2k+1},
// gamma_{2k+2}) keeping every localizing matrix psd. Odd-degree products
// constrain x to an interval; even-degree products bound y by quadratics
// in x.
struct ExtensionRegion {
  std::vector<PiProduct> products;
  std::optional<Rat> x_lo, x_hi;      // absent = unbounded
  std::vector<EvenBound> bounds;

  std::vector<const EvenBound*> lower_bounds() const;
  std::vector<const EvenBound*> upper_bounds() const;
  bool x_admissible(const Rat& x) const;
};

// Requires a strictly positive certificate.
ExtensionRegion extension_region(const MomentSequence& gamma, const ClosedSet& k);

// The set of x for which the flat choice y = q_j(x) is admissible: q_j
// dominates every other lower bound, stays below every upper bound, is
// nonnegative, and x lies in the odd-moment interval. Exact; reported with
// algebraic endpoints.
std::vector<AlgebraicInterval> flat_choice_intervals(const ExtensionRegion& region,
                                                     int lower_index);

bool flat_choice_feasible(const ExtensionRegion& region, int lower_index);

enum class InfeasibleKind {
  positivity_violated,
  pole_hit,
  unbounded_kernel_condition_failed,
  verification_failed,
};

struct InfeasibleReason {
  InfeasibleKind kind;
  std::string detail;
  std::optional<Poly> witness_product;       // positivity_violated
  std::optional<Rat> pole;                   // pole_hit
  // pole_hit: the unique measure for the power functional, which exists but
  // touches a forbidden point.
  std::optional<AtomicMeasure> line_measure;
};

struct SolverConfig {
  double tol = 1e-9;
  double density_floor = 1e-10;
  int max_retries = 64;
  // Extra degree-2 extension rounds; defaults to l1 + 3 for the given K.
  std::optional<int> max_extension_steps;
  std::uint64_t rng_seed = 0;
};

// Optional trace of what the solver did, for reporting.
struct SolveLog {
  int extension_steps = 0;
  int retries = 0;
  std::optional<Poly> binding_product;
  // Quadratic lower/upper bounds of the first extension region, as
  // (product, quadratic, is_lower), exact.
  std::vector<std::tuple<Poly, Quadratic, bool>> first_bounds;
  // Dominance window of the binding product at the final step, rounded.
  std::optional<std::pair<double, double>> flat_window;
  std::pair<double, double> sampled_pair{0.0, 0.0};
};

using SolveResult = std::variant<AtomicMeasure, InfeasibleReason>;

// Iterated extension solver for strictly positive data: samples the odd
// moment, takes the flat (maximal lower bound) even moment, extracts the
// unique measure of the resulting singular localization, and verifies.
// Retries with perturbed samples, then with further extension rounds.
// `forced` pins the first extension pairs (strict feasibility is checked).
SolveResult solve_nonsingular(const MomentSequence& gamma, const ClosedSet& k,
                              const PoleSet& poles, const SolverConfig& cfg = {},
                              const std::vector<std::pair<Rat, Rat>>& forced = {},
                              SolveLog* log = nullptr);

// Decision procedure for data whose certificate is singular: locates the
// lowest-degree product f0 with singular localizing matrix, extracts the
// generating polynomial p0 of the localized sequence, and checks the pole,
// kernel, and (for unbounded K) highest-degree conditions. The measure, when
// it exists, is unique and supported on Z(f0) union Z(p0).
SolveResult solve_singular(const MomentSequence& gamma, const ClosedSet& k,
                           const PoleSet& poles, const SolverConfig& cfg = {},
                           SolveLog* log = nullptr);

// Dispatch on the certificate verdict.
SolveResult solve_power_tmp(const MomentSequence& gamma, const ClosedSet& k,
                            const PoleSet& poles, const SolverConfig& cfg = {},
                            SolveLog* log = nullptr);

// Quadrature rule with a prescribed node for positive definite data: returns
// the (k+1)-atomic measure containing atom x1 when the pencil
// x1 * H_{1,gamma^(2k-2)} - H_{x,gamma} is invertible, nullopt when that
// matrix is singular (no such rule exists). Throws on numerical failure.
std::optional<AtomicMeasure> prescribed_atom_quadrature(const MomentSequence& gamma,
                                                        double x1,
                                                        const SolverConfig& cfg = {});

}  // namespace rtmp
