#include "rtmp/solver.hpp"

#include "rtmp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rtmp {

namespace {

void check_poles_off_isolated(const ClosedSet& k, const PoleSet& poles) {
  for (const Rat& lam : poles.points)
    for (const Rat& iso : k.isolated_points())
      if (lam == iso)
        throw std::invalid_argument(
            "forbidden point coincides with an isolated point of K: " + rat_str(lam));
}

// Exact rational roots of a generator product, read off the description.
std::vector<Rat> product_roots(const PiProduct& prod, const ClosedSet& k) {
  const NaturalDescription s = natural_description(k);
  const auto gaps = k.gaps();
  std::vector<Rat> out;
  std::size_t gap_index = 0;
  for (std::size_t g = 0; g < s.generators.size(); ++g) {
    const bool used = prod.exponents[g] != 0;
    if (s.generators[g].kind == GeneratorKind::gap) {
      if (used) {
        out.push_back(gaps[gap_index].first);
        out.push_back(gaps[gap_index].second);
      }
      ++gap_index;
    } else if (used) {
      const Poly& f = s.generators[g].f;
      out.push_back(-f.coeff(0) / f.coeff(1));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rat> hankel_solve(const HankelMatrix& h, const std::vector<Rat>& rhs) {
  return solve_linear(h.entries, rhs);
}

}  // namespace

PositivityCertificate positivity_certificate(const MomentSequence& gamma,
                                             const ClosedSet& k) {
  if (gamma.degree() % 2 != 0)
    throw std::invalid_argument("positivity_certificate: even-degree data required");
  PositivityCertificate cert;
  cert.products = pi_products(natural_description(k), gamma.degree());
  cert.reports.reserve(cert.products.size());
  std::optional<int> first_singular;
  std::optional<int> first_indefinite;
  for (std::size_t i = 0; i < cert.products.size(); ++i) {
    const PsdReport report = psd_status(localizing_hankel(gamma, cert.products[i].f));
    if (report.status == PsdStatus::indefinite && !first_indefinite)
      first_indefinite = static_cast<int>(i);
    if (report.status == PsdStatus::psd_singular && !first_singular)
      first_singular = static_cast<int>(i);
    cert.reports.push_back(report);
  }
  if (first_indefinite) {
    cert.verdict = CertificateVerdict::violated;
    cert.witness = first_indefinite;
  } else if (first_singular) {
    cert.verdict = CertificateVerdict::positive_singular;
    cert.witness = first_singular;
  } else {
    cert.verdict = CertificateVerdict::strictly_positive;
    cert.witness = std::nullopt;
  }
  return cert;
}

std::vector<const EvenBound*> ExtensionRegion::lower_bounds() const {
  std::vector<const EvenBound*> out;
  for (const EvenBound& b : bounds)
    if (b.is_lower) out.push_back(&b);
  return out;
}

std::vector<const EvenBound*> ExtensionRegion::upper_bounds() const {
  std::vector<const EvenBound*> out;
  for (const EvenBound& b : bounds)
    if (!b.is_lower) out.push_back(&b);
  return out;
}

bool ExtensionRegion::x_admissible(const Rat& x) const {
  if (x_lo && x < *x_lo) return false;
  if (x_hi && x > *x_hi) return false;
  return true;
}

namespace {

ExtensionRegion region_from_certificate(const MomentSequence& gamma, const ClosedSet& k,
                                        const PositivityCertificate& cert) {
  if (cert.verdict != CertificateVerdict::strictly_positive)
    throw std::invalid_argument("extension_region: data is not strictly positive");
  const int deg = gamma.degree();
  ExtensionRegion region;
  region.products = cert.products;

  for (std::size_t pi = 0; pi < cert.products.size(); ++pi) {
    const Poly& f = cert.products[pi].f;
    const int df = f.degree();
    const HankelMatrix hp = localizing_hankel(gamma, f);
    const int m = hp.side;

    if (cert.products[pi].odd_degree) {
      // Border entries L(f x^(i+m)) stay inside the data; the corner is
      // lead(f) * x + known, so psd-ness of the extended matrix is the
      // half-line lead(f) * x >= u' H^-1 u - known.
      std::vector<Rat> u(m);
      for (int i = 0; i < m; ++i) u[i] = riesz(gamma, f.shifted(i + m));
      Rat c0 = 0;
      for (int j = 0; j < df; ++j) c0 += f.coeff(j) * gamma[j + 2 * m];
      const Rat bound = (dot(u, hankel_solve(hp, u)) - c0) / f.leading();
      if (f.leading() > 0) {
        if (!region.x_lo || bound > *region.x_lo) region.x_lo = bound;
      } else {
        if (!region.x_hi || bound < *region.x_hi) region.x_hi = bound;
      }
    } else {
      // Border u(x) = u0 + lead(f) * x * e_(m-1); corner lead(f) * y +
      // f_(df-1) * x + known. The Schur bound is quadratic in x.
      std::vector<Rat> u0(m, Rat(0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j <= df; ++j) {
          const int idx = j + i + m;
          if (idx <= deg) u0[i] += f.coeff(j) * gamma[idx];
        }
      Rat c0 = 0;
      for (int j = 0; j + 2 <= df; ++j) c0 += f.coeff(j) * gamma[j + 2 * m];
      std::vector<Rat> e(m, Rat(0));
      e[m - 1] = 1;
      const std::vector<Rat> w0 = hankel_solve(hp, u0);
      const std::vector<Rat> we = hankel_solve(hp, e);
      // Raw Schur bound lead * y + f_(df-1) * x + c0 >= u(x)' H^-1 u(x);
      // dividing by lead gives y >= q(x) for lead > 0 and y <= q(x) else.
      const Rat lead = f.leading();
      Quadratic q;
      q.a = lead * we[m - 1];
      q.b = (2 * lead * w0[m - 1] - f.coeff(df - 1)) / lead;
      q.c = (dot(u0, w0) - c0) / lead;
      EvenBound bnd;
      bnd.product_index = static_cast<int>(pi);
      bnd.q = q;
      bnd.is_lower = lead > 0;
      region.bounds.push_back(std::move(bnd));
    }
  }
  return region;
}

}  // namespace

ExtensionRegion extension_region(const MomentSequence& gamma, const ClosedSet& k) {
  return region_from_certificate(gamma, k, positivity_certificate(gamma, k));
}

std::vector<AlgebraicInterval> flat_choice_intervals(const ExtensionRegion& region,
                                                     int lower_index) {
  const EvenBound& chosen = region.bounds.at(lower_index);
  if (!chosen.is_lower)
    throw std::invalid_argument("flat_choice_intervals: index is not a lower bound");
  std::vector<Quadratic> constraints;
  constraints.push_back(chosen.q);  // flat value must be admissible as a moment
  for (const EvenBound& other : region.bounds) {
    if (&other == &chosen) continue;
    const Quadratic& g = other.q;
    if (other.is_lower) {
      constraints.push_back(Quadratic{chosen.q.a - g.a, chosen.q.b - g.b, chosen.q.c - g.c});
    } else {
      constraints.push_back(Quadratic{g.a - chosen.q.a, g.b - chosen.q.b, g.c - chosen.q.c});
    }
  }
  if (region.x_lo) constraints.push_back(Quadratic{Rat(0), Rat(1), -*region.x_lo});
  if (region.x_hi) constraints.push_back(Quadratic{Rat(0), Rat(-1), *region.x_hi});
  return feasible_intervals(constraints);
}

bool flat_choice_feasible(const ExtensionRegion& region, int lower_index) {
  return !flat_choice_intervals(region, lower_index).empty();
}

namespace {

double frac(double x) { return x - std::floor(x); }

constexpr double kGolden = 0.61803398874989484820;

// Deterministic sample ladder inside the admissible x interval: midpoint or
// anchor+1 first, then golden-ratio spread (outward doubling when the
// interval is unbounded). The seed only shifts the golden phase.
Rat sample_x(const ExtensionRegion& region, int attempt, double phase) {
  const bool has_lo = region.x_lo.has_value();
  const bool has_hi = region.x_hi.has_value();
  const double u = frac(0.5 + (attempt + phase) * kGolden);
  if (has_lo && has_hi) {
    const Rat lo = *region.x_lo, hi = *region.x_hi;
    if (lo == hi) return lo;
    const Rat t = (attempt == 0) ? Rat(1, 2) : rat_from_double(u);
    return lo + t * (hi - lo);
  }
  const double mag = std::ldexp(0.5 + u, (attempt + 1) / 2);
  if (has_lo) {
    if (attempt == 0) return *region.x_lo + 1;
    return *region.x_lo + rat_from_double(mag);
  }
  if (has_hi) {
    if (attempt == 0) return *region.x_hi - 1;
    return *region.x_hi - rat_from_double(mag);
  }
  if (attempt == 0) return 0;
  const double s = (attempt % 2 == 1) ? 1.0 : -1.0;
  return rat_from_double(s * mag);
}

struct FlatChoice {
  Rat y;
  int bound_index = -1;  // into region.bounds
};

// Max of the lower quadratics at an exact x; the binding bound is the first
// product (lowest degree, then lexicographic) attaining the max. Returns
// nullopt when an upper bound cuts below the max lower bound at this x.
std::optional<FlatChoice> flat_y_at(const ExtensionRegion& region, const Rat& x) {
  std::optional<FlatChoice> best;
  for (std::size_t b = 0; b < region.bounds.size(); ++b) {
    if (!region.bounds[b].is_lower) continue;
    const Rat val = region.bounds[b].q(x);
    if (!best || val > best->y) {
      best = FlatChoice{val, static_cast<int>(b)};
    }
  }
  if (!best) return std::nullopt;  // no even products: cannot happen (f = 1)
  for (const EvenBound& bd : region.bounds) {
    if (bd.is_lower) continue;
    if (bd.q(x) < best->y) return std::nullopt;
  }
  return best;
}

int f0_bound_index(const ExtensionRegion& region) {
  for (std::size_t b = 0; b < region.bounds.size(); ++b)
    if (region.bounds[b].is_lower &&
        region.products[region.bounds[b].product_index].f.degree() == 0)
      return static_cast<int>(b);
  return -1;
}

// Exact test that the flat choice y = q_b(x) is admissible: q_b attains the
// max of the lower bounds, stays below every upper bound, yields an even
// moment >= 0, and x lies in the odd-moment interval.
bool flat_admissible_at(const ExtensionRegion& region, int bix, const Rat& x) {
  if (!region.x_admissible(x)) return false;
  const Rat y = region.bounds[bix].q(x);
  if (y < 0) return false;
  for (const EvenBound& bd : region.bounds) {
    const Rat v = bd.q(x);
    if (bd.is_lower ? v > y : v < y) return false;
  }
  return true;
}

// Vertex of a lower bound's quadratic: the x minimizing the flat even
// moment. Flat choices near it keep the extension's atoms bounded (the top
// moment bounds max|atom|), so the quadrature stays well conditioned; far
// from it the flat measure grows a distant atom with a vanishing density
// that double precision cannot carry.
std::optional<Rat> bound_anchor(const Quadratic& q) {
  if (q.a <= 0) return std::nullopt;
  return -q.b / (2 * q.a);
}

// Candidate sample points inside a dominance window. Endpoints are algebraic,
// so candidates come from the float picture and are re-checked exactly by the
// caller; preferring low-complexity rationals keeps later levels cheap. The
// anchor ladder leads in unbounded windows, where the fixed defaults carry no
// information about the data's scale; elsewhere it backs up the interior
// points.
std::vector<Rat> window_points(const AlgebraicInterval& w,
                               const std::optional<Rat>& anchor) {
  std::vector<Rat> out;
  auto push = [&out](const Rat& r) {
    for (const Rat& o : out)
      if (o == r) return;
    out.push_back(r);
  };
  auto push_anchor_ladder = [&] {
    if (!anchor) return;
    const Rat vx = rat_from_double(to_double(*anchor));
    for (const Rat& off :
         {Rat(0), Rat(1, 1024), Rat(-1, 1024), Rat(1, 64), Rat(-1, 64), Rat(1, 8),
          Rat(-1, 8), Rat(1, 2), Rat(-1, 2), Rat(1), Rat(-1), Rat(4), Rat(-4)})
      push(vx + off);
    const Rat rel = rat_abs(vx) / 1024;
    if (rel > Rat(1, 256)) {
      push(vx + rel);
      push(vx - rel);
      push(vx + 16 * rel);
      push(vx - 16 * rel);
    }
  };
  const bool has_lo = w.lo.has_value();
  const bool has_hi = w.hi.has_value();
  if (has_lo && has_hi) {
    const double a = w.lo->approx(), b = w.hi->approx();
    const double width = b - a;
    if (width > 0 && std::isfinite(width)) {
      push(rat_simplest_in(rat_from_double(a + 0.25 * width),
                           rat_from_double(b - 0.25 * width)));
      push(rat_from_double(a + 0.5 * width));
      push(rat_simplest_in(rat_from_double(a + 0.05 * width),
                           rat_from_double(b - 0.05 * width)));
    } else {
      push(rat_from_double(0.5 * (a + b)));
    }
    push_anchor_ladder();
  } else if (has_lo) {
    const double a = w.lo->approx();
    const double step = 1.0 + std::abs(a) * 1e-3;
    push(rat_simplest_in(rat_from_double(a + 0.5 * step), rat_from_double(a + 2 * step)));
    push(rat_from_double(a + 8 * step));
    push_anchor_ladder();
  } else if (has_hi) {
    const double b = w.hi->approx();
    const double step = 1.0 + std::abs(b) * 1e-3;
    push(rat_simplest_in(rat_from_double(b - 2 * step), rat_from_double(b - 0.5 * step)));
    push(rat_from_double(b - 8 * step));
    push_anchor_ladder();
  } else {
    push_anchor_ladder();
    push(Rat(0));
    push(Rat(1));
    push(Rat(-1));
  }
  return out;
}

// A strictly feasible extension pair (x, y): max lower bound < y < min upper
// bound at x, with y picked as a simple rational a relative margin above the
// binding bound.
std::optional<std::pair<Rat, Rat>> strict_pair_at(const ExtensionRegion& region,
                                                  const Rat& x, const Rat& rel_margin) {
  if (!region.x_admissible(x)) return std::nullopt;
  const auto choice = flat_y_at(region, x);
  if (!choice) return std::nullopt;
  const Rat ymax = choice->y;
  Rat cap = ymax + (rat_abs(ymax) + 1) * rel_margin;
  for (const EvenBound& bd : region.bounds) {
    if (bd.is_lower) continue;
    const Rat v = bd.q(x);
    if (v < cap) cap = v;
  }
  if (cap <= ymax) return std::nullopt;
  const Rat y = rat_simplest_in(ymax + (cap - ymax) / 100, cap);
  if (y <= ymax || y < 0) return std::nullopt;
  return std::make_pair(x, y);
}

// Extension pairs near the crossings of the lower-bound envelope. When the
// full-Hankel bound never dominates, its dominance window at the next level
// tends to open exactly for pairs chosen where two competing bounds meet, so
// these are tried (several margins each) before blind interior choices.
std::vector<std::pair<Rat, Rat>> crossing_extension_pairs(const ExtensionRegion& region) {
  std::vector<double> crossings;
  const auto lowers = region.lower_bounds();
  for (std::size_t i = 0; i < lowers.size(); ++i)
    for (std::size_t j = i + 1; j < lowers.size(); ++j) {
      const Quadratic diff{lowers[i]->q.a - lowers[j]->q.a,
                           lowers[i]->q.b - lowers[j]->q.b,
                           lowers[i]->q.c - lowers[j]->q.c};
      if (diff.a == 0 && diff.b == 0) continue;
      for (const Surd& r : quadratic_roots(diff)) crossings.push_back(r.approx());
    }
  std::sort(crossings.begin(), crossings.end());
  std::vector<std::pair<Rat, Rat>> out;
  std::vector<Rat> seen_x;
  for (double r : crossings) {
    if (!std::isfinite(r)) continue;
    const double delta = std::max(1.0, std::abs(r)) * 1e-3;
    const Rat x = rat_simplest_in(rat_from_double(r - delta), rat_from_double(r + delta));
    bool dup = false;
    for (const Rat& sx : seen_x)
      if (sx == x) dup = true;
    if (dup) continue;
    seen_x.push_back(x);
    for (const Rat& margin :
         {Rat(1, 10000), Rat(1, 1000000), Rat(1, 100)}) {
      if (auto pair = strict_pair_at(region, x, margin)) out.push_back(*pair);
    }
  }
  return out;
}

// Vandermonde quadrature on a candidate node set, dropping nodes whose
// contribution rho * x^i is below the density floor relative to every moment
// entry. The raw density is the wrong yardstick in both directions: a tiny
// density on a far node can carry the whole top moment, and a moderate
// density near the origin matters for gamma_0 even when the top moments are
// huge. Re-solves until the node set is stable; nullopt when the solve fails
// or a kept density is nonpositive.
std::optional<AtomicMeasure> quadrature_on(std::vector<double> atoms,
                                           const MomentSequence& data,
                                           const SolverConfig& cfg) {
  const int deg = data.degree();
  std::vector<double> entry_scale(deg + 1);
  for (int i = 0; i <= deg; ++i)
    entry_scale[i] = std::max(1.0, std::abs(to_double(data[i])));
  auto negligible = [&](double atom, double dens) {
    double contrib = std::abs(dens);
    for (int i = 0; i <= deg; ++i) {
      if (contrib > cfg.density_floor * entry_scale[i]) return false;
      contrib *= std::abs(atom);
    }
    return true;
  };
  while (!atoms.empty()) {
    std::vector<Rat> rhs(data.values().begin(), data.values().begin() + atoms.size());
    std::vector<double> dens;
    try {
      dens = vandermonde_solve(atoms, rhs);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    std::vector<double> kept_atoms, kept_dens;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (negligible(atoms[i], dens[i])) continue;
      kept_atoms.push_back(atoms[i]);
      kept_dens.push_back(dens[i]);
    }
    if (kept_atoms.size() == atoms.size()) {
      for (double d : kept_dens)
        if (d <= 0) return std::nullopt;
      AtomicMeasure mu;
      mu.atoms = std::move(kept_atoms);
      mu.densities = std::move(kept_dens);
      return mu;
    }
    atoms = std::move(kept_atoms);
  }
  return AtomicMeasure{};
}

// Builds the unique measure of the flat extension (gamma, x, y) determined
// by the binding product: atoms are the product roots plus the roots of the
// generating polynomial of the localized data; densities come from the dual
// Vandermonde solve. Returns the measure only when verification passes.
std::optional<AtomicMeasure> measure_from_flat(const MomentSequence& extended,
                                               const MomentSequence& reference,
                                               const ClosedSet& k, const PoleSet& poles,
                                               const PiProduct& binding,
                                               const SolverConfig& cfg,
                                               MeasureReport* out_report = nullptr) {
  const MomentSequence loc = localize(extended, binding.f);
  const auto gen = generating_polynomial(loc);

  std::vector<double> atoms;
  for (const Rat& r : product_roots(binding, k)) atoms.push_back(to_double(r));
  if (gen && !gen->p.is_zero() && gen->p.degree() > 0) {
    RootSet rs;
    try {
      rs = real_roots(gen->p, cfg.tol);
    } catch (const std::exception&) {
      return std::nullopt;  // eigensolver failure: treat as a failed sample
    }
    for (double r : rs.roots) {
      bool dup = false;
      for (double a : atoms)
        if (std::abs(a - r) <= cfg.tol * (1.0 + std::abs(r))) dup = true;
      if (!dup) atoms.push_back(r);
    }
  }
  std::sort(atoms.begin(), atoms.end());

  auto mu = quadrature_on(std::move(atoms), extended, cfg);
  if (!mu) return std::nullopt;
  const MeasureReport rep = verify_measure(*mu, reference, k, poles, cfg.tol);
  if (out_report) *out_report = rep;
  if (!rep.ok()) return std::nullopt;
  return mu;
}

}  // namespace

SolveResult solve_nonsingular(const MomentSequence& gamma, const ClosedSet& k,
                              const PoleSet& poles, const SolverConfig& cfg,
                              const std::vector<std::pair<Rat, Rat>>& forced,
                              SolveLog* log) {
  check_poles_off_isolated(k, poles);
  if (gamma.degree() % 2 != 0)
    throw std::invalid_argument("solve_nonsingular: even-degree data required");
  const int half = gamma.degree() / 2;
  const int max_steps =
      cfg.max_extension_steps.value_or(classify(k, half).l1 + 3);
  const double phase = static_cast<double>(cfg.rng_seed % 1024) / 1024.0;

  MomentSequence cur = gamma;
  for (int step = 0; step <= max_steps; ++step) {
    const PositivityCertificate cert = positivity_certificate(cur, k);
    if (cert.verdict != CertificateVerdict::strictly_positive) {
      if (step == 0)
        throw std::invalid_argument("solve_nonsingular: data is not strictly positive");
      throw std::runtime_error(
          "solve_nonsingular: extension lost strict positivity at step " +
          std::to_string(step));
    }
    const ExtensionRegion region = region_from_certificate(cur, k, cert);
    if (log && step == 0) {
      for (const EvenBound& b : region.bounds)
        log->first_bounds.emplace_back(region.products[b.product_index].f, b.q,
                                       b.is_lower);
    }

    if (step < static_cast<int>(forced.size())) {
      const auto& [fx, fy] = forced[step];
      if (!region.x_admissible(fx))
        throw std::invalid_argument("solve_nonsingular: forced odd moment out of range");
      const auto choice = flat_y_at(region, fx);
      if (!choice || fy <= choice->y)
        throw std::invalid_argument(
            "solve_nonsingular: forced even moment is not strictly feasible");
      for (const EvenBound& bd : region.bounds)
        if (!bd.is_lower && fy >= bd.q(fx))
          throw std::invalid_argument(
              "solve_nonsingular: forced even moment is not strictly feasible");
      cur = cur.extended(fx).extended(fy);
      if (log) ++log->extension_steps;
      continue;
    }

    auto try_flat = [&](const Rat& x, int bix) -> std::optional<AtomicMeasure> {
      const Rat y = region.bounds[bix].q(x);
      const MomentSequence extended = cur.extended(x).extended(y);
      const PiProduct& binding = region.products[region.bounds[bix].product_index];
      auto mu = measure_from_flat(extended, gamma, k, poles, binding, cfg, nullptr);
      if (mu && log) {
        log->binding_product = binding.f;
        log->sampled_pair = {to_double(x), to_double(y)};
        for (const AlgebraicInterval& w : flat_choice_intervals(region, bix)) {
          const double lo = w.lo ? w.lo->approx() : -HUGE_VAL;
          const double hi = w.hi ? w.hi->approx() : HUGE_VAL;
          const double xd = to_double(x);
          if (lo - 1e-9 <= xd && xd <= hi + 1e-9) {
            log->flat_window = {lo, hi};
            break;
          }
        }
      }
      if (!mu && log) ++log->retries;
      return mu;
    };

    // Window-guided pass: sample inside the exact dominance window of each
    // lower bound, full-Hankel bound first (its flat choice needs no product
    // roots in the support, so it is the usual way to avoid the poles).
    int budget = std::max(1, cfg.max_retries);
    for (std::size_t b = 0; b < region.bounds.size() && budget > 0; ++b) {
      if (!region.bounds[b].is_lower) continue;
      const auto windows = flat_choice_intervals(region, static_cast<int>(b));
      const std::optional<Rat> anchor = bound_anchor(region.bounds[b].q);
      std::vector<Rat> tried;
      for (const AlgebraicInterval& w : windows) {
        for (const Rat& x : window_points(w, anchor)) {
          if (std::find(tried.begin(), tried.end(), x) != tried.end()) continue;
          tried.push_back(x);
          if (!flat_admissible_at(region, static_cast<int>(b), x)) continue;
          if (auto mu = try_flat(x, static_cast<int>(b))) return *mu;
          if (--budget <= 0) break;
        }
        if (budget <= 0) break;
      }
    }

    // Ladder pass: seeded deterministic samples, binding bound by pointwise
    // max. Catches windows the endpoint heuristics missed.
    std::optional<Rat> ladder_x;
    for (int attempt = 0; attempt < budget; ++attempt) {
      const Rat x = sample_x(region, attempt, phase);
      if (!region.x_admissible(x)) continue;
      const auto choice = flat_y_at(region, x);
      if (!choice) {
        if (log) ++log->retries;
        continue;
      }
      if (!ladder_x) ladder_x = x;
      if (auto mu = try_flat(x, choice->bound_index)) return *mu;
    }

    // No flat choice at this level yields a verified measure: extend with a
    // strictly feasible pair and go one level deeper. Crossing pairs are
    // screened by whether the full-Hankel window opens at the next level.
    std::vector<std::pair<Rat, Rat>> candidates = crossing_extension_pairs(region);
    // Strict pairs near the full-Hankel vertex keep the next level's top
    // moment near its minimum, so deeper rounds stay well conditioned.
    if (const int f0b = f0_bound_index(region); f0b >= 0) {
      if (const auto anchor = bound_anchor(region.bounds[f0b].q)) {
        for (const Rat& margin : {Rat(1, 10000), Rat(1, 100)}) {
          if (auto pair = strict_pair_at(region, *anchor, margin))
            candidates.push_back(*pair);
        }
      }
    }
    if (ladder_x) {
      for (const Rat& margin : {Rat(1, 10000), Rat(1)}) {
        if (auto pair = strict_pair_at(region, *ladder_x, margin))
          candidates.push_back(*pair);
      }
    }
    if (candidates.empty())
      throw std::runtime_error(
          "solve_nonsingular: retries exhausted without a feasible odd moment "
          "(step " + std::to_string(step) + ")");
    std::optional<std::pair<Rat, Rat>> chosen;
    for (const auto& cand : candidates) {
      const MomentSequence next = cur.extended(cand.first).extended(cand.second);
      try {
        const PositivityCertificate cert2 = positivity_certificate(next, k);
        if (cert2.verdict != CertificateVerdict::strictly_positive) continue;
        const ExtensionRegion region2 = region_from_certificate(next, k, cert2);
        const int f0b = f0_bound_index(region2);
        if (f0b >= 0 && !flat_choice_intervals(region2, f0b).empty()) {
          chosen = cand;
          break;
        }
      } catch (const std::exception&) {
        continue;
      }
    }
    if (!chosen) chosen = candidates.front();
    cur = cur.extended(chosen->first).extended(chosen->second);
    if (log) ++log->extension_steps;
  }
  throw std::runtime_error("solve_nonsingular: extension budget exhausted after " +
                           std::to_string(max_steps) + " extra rounds");
}

SolveResult solve_singular(const MomentSequence& gamma, const ClosedSet& k,
                           const PoleSet& poles, const SolverConfig& cfg,
                           SolveLog* log) {
  check_poles_off_isolated(k, poles);
  if (gamma.degree() % 2 != 0)
    throw std::invalid_argument("solve_singular: even-degree data required");
  const PositivityCertificate cert = positivity_certificate(gamma, k);
  if (cert.verdict == CertificateVerdict::violated) {
    InfeasibleReason reason;
    reason.kind = InfeasibleKind::positivity_violated;
    reason.witness_product = cert.products[*cert.witness].f;
    reason.detail = "localizing matrix of " + reason.witness_product->str() +
                    " is indefinite";
    return reason;
  }
  if (cert.verdict != CertificateVerdict::positive_singular)
    throw std::invalid_argument("solve_singular: certificate is strictly positive");

  const PiProduct& f0 = cert.products[*cert.witness];
  if (log) log->binding_product = f0.f;
  const MomentSequence loc = localize(gamma, f0.f);
  const auto gen = generating_polynomial(loc);
  const Poly p0 = gen ? gen->p : Poly::one();  // pd localization: empty kernel
  // gen is present by construction (the witness matrix is singular).

  // Existence on unbounded K additionally needs the kernel condition at the
  // top degree: L(f0 * x^d * p0^2) = 0 for d = 2k - deg f0 - 2 deg p0.
  if (!k.is_bounded()) {
    const int d = gamma.degree() - f0.f.degree() - 2 * p0.degree();
    const Poly probe = f0.f * p0 * p0;
    const Rat val = riesz(gamma, probe.shifted(d));
    if (val != 0) {
      InfeasibleReason reason;
      reason.kind = InfeasibleKind::unbounded_kernel_condition_failed;
      reason.detail = "L(x^" + std::to_string(d) + " * " + probe.str() +
                      ") = " + rat_str(val) + " != 0";
      return reason;
    }
  }

  // Unique candidate: atoms are the roots of f0 and of p0. A root carrying
  // no weight is not part of the support, so negligible nodes are dropped
  // before the pole test.
  std::vector<double> atoms;
  std::vector<Rat> f0_roots = product_roots(f0, k);
  for (const Rat& r : f0_roots) atoms.push_back(to_double(r));
  if (p0.degree() > 0) {
    RootSet rs;
    try {
      rs = real_roots(p0, cfg.tol);
    } catch (const std::exception& e) {
      InfeasibleReason reason;
      reason.kind = InfeasibleKind::verification_failed;
      reason.detail = std::string("root extraction failed: ") + e.what();
      return reason;
    }
    for (double r : rs.roots) {
      bool dup = false;
      for (double a : atoms)
        if (std::abs(a - r) <= cfg.tol * (1.0 + std::abs(r))) dup = true;
      if (!dup) atoms.push_back(r);
    }
  }
  std::sort(atoms.begin(), atoms.end());

  auto mu = quadrature_on(std::move(atoms), gamma, cfg);
  if (!mu) {
    InfeasibleReason reason;
    reason.kind = InfeasibleKind::verification_failed;
    reason.detail = "no positive quadrature on the candidate support";
    return reason;
  }

  for (double a : mu->atoms) {
    if (const auto lam = poles.hit(a, cfg.tol)) {
      InfeasibleReason reason;
      reason.kind = InfeasibleKind::pole_hit;
      reason.pole = *lam;
      reason.detail = "support of the unique measure contains " + rat_str(*lam);
      const MeasureReport rep = verify_measure(*mu, gamma, k, PoleSet{}, cfg.tol);
      if (rep.ok()) reason.line_measure = *mu;
      return reason;
    }
  }

  const MeasureReport rep = verify_measure(*mu, gamma, k, poles, cfg.tol);
  if (!rep.ok()) {
    InfeasibleReason reason;
    reason.kind = InfeasibleKind::verification_failed;
    reason.detail = rep.detail;
    return reason;
  }
  return *mu;
}

SolveResult solve_power_tmp(const MomentSequence& gamma, const ClosedSet& k,
                            const PoleSet& poles, const SolverConfig& cfg,
                            SolveLog* log) {
  check_poles_off_isolated(k, poles);
  const PositivityCertificate cert = positivity_certificate(gamma, k);
  switch (cert.verdict) {
    case CertificateVerdict::strictly_positive:
      return solve_nonsingular(gamma, k, poles, cfg, {}, log);
    case CertificateVerdict::positive_singular:
    case CertificateVerdict::violated:
      return solve_singular(gamma, k, poles, cfg, log);
  }
  throw std::logic_error("unreachable");
}

std::optional<AtomicMeasure> prescribed_atom_quadrature(const MomentSequence& gamma,
                                                        double x1,
                                                        const SolverConfig& cfg) {
  const int deg = gamma.degree();
  if (deg % 2 != 0 || deg < 2)
    throw std::invalid_argument("prescribed_atom_quadrature: even degree >= 2 required");
  const int k = deg / 2;
  if (psd_classify(build_hankel(gamma).entries).status != PsdStatus::positive_definite)
    throw std::invalid_argument("prescribed_atom_quadrature: data must be positive definite");

  const Rat x1r = rat_from_double(x1);
  const HankelMatrix h_prev = build_hankel(gamma.truncated(2 * k - 2));
  const HankelMatrix h_x = localizing_hankel(gamma, Poly::x());
  const HankelMatrix h_x2 = localizing_hankel(gamma, Poly::x() * Poly::x());

  // Pencil g(x) = det(x * M + N), M = x1 * H - H_x, N = H_x2 - x1 * H_x.
  RatMatrix m(k, k), n(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      m(i, j) = x1r * h_prev.entries(i, j) - h_x.entries(i, j);
      n(i, j) = h_x2.entries(i, j) - x1r * h_x.entries(i, j);
    }
  if (determinant(m) == 0) return std::nullopt;

  // det(x M + N) has degree exactly k here; recover it by exact evaluation
  // at k+1 integer points and Newton interpolation.
  std::vector<Rat> xs(k + 1), vals(k + 1);
  for (int e = 0; e <= k; ++e) {
    xs[e] = e;
    RatMatrix pencil(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) pencil(i, j) = Rat(e) * m(i, j) + n(i, j);
    vals[e] = determinant(pencil);
  }
  std::vector<Rat> dd = vals;  // divided differences
  for (int lvl = 1; lvl <= k; ++lvl)
    for (int i = k; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
  Poly g = Poly::constant(dd[k]);
  for (int i = k - 1; i >= 0; --i)
    g = g * Poly::linear_root(xs[i]) + Poly::constant(dd[i]);

  const RootSet rs = real_roots(g, cfg.tol);
  int count = 0;
  for (int mult : rs.multiplicities) count += mult;
  if (count < k)
    throw std::runtime_error("prescribed_atom_quadrature: companion polynomial has " +
                             std::to_string(count) + " real roots, expected " +
                             std::to_string(k));

  std::vector<double> atoms{x1};
  for (double r : rs.roots) {
    bool dup = false;
    for (double a : atoms)
      if (std::abs(a - r) <= cfg.tol * (1.0 + std::abs(r))) dup = true;
    if (!dup) atoms.push_back(r);
  }
  std::sort(atoms.begin(), atoms.end());
  std::vector<Rat> rhs(gamma.values().begin(), gamma.values().begin() + atoms.size());
  AtomicMeasure mu;
  mu.atoms = atoms;
  mu.densities = vandermonde_solve(atoms, rhs);

  const MeasureReport rep =
      verify_measure(mu, gamma, ClosedSet::whole_line(), PoleSet{}, cfg.tol);
  bool positive = true;
  for (double d : mu.densities)
    if (d <= 0) positive = false;
  if (!rep.moments_ok || !positive)
    throw std::runtime_error("prescribed_atom_quadrature: verification failed: " +
                             rep.detail);
  return mu;
}

}  // namespace rtmp
