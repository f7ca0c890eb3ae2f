#include "rtmp/special.hpp"

#include "rtmp/roots.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rtmp {

SolveResult strong_hamburger_solve(const RationalMoments& data, const PoleSpec& spec,
                                   const SolverConfig& cfg, SolveLog* log) {
  if (spec.real.size() != 1 || spec.real[0].lambda != 0 || !spec.complex.empty())
    throw std::invalid_argument(
        "strong_hamburger_solve: spec must have exactly one real pole at 0");
  return solve_rtmp(data, spec, ClosedSet::whole_line(), cfg, log);
}

BivariateSequence::BivariateSequence(int k, std::map<std::pair<int, int>, Rat> values)
    : k_(k), values_(std::move(values)) {
  if (k_ < 0) throw std::invalid_argument("BivariateSequence: k must be >= 0");
  for (int i = 0; i <= 2 * k_; ++i)
    for (int j = 0; i + j <= 2 * k_; ++j)
      if (!values_.count({i, j}))
        throw std::invalid_argument("BivariateSequence: missing beta(" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
}

const Rat& BivariateSequence::at(int i, int j) const {
  auto it = values_.find({i, j});
  if (it == values_.end())
    throw std::out_of_range("BivariateSequence: beta(" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range");
  return it->second;
}

Rat BivariateSequence::apply(const std::map<std::pair<int, int>, Rat>& poly) const {
  Rat acc = 0;
  for (const auto& [idx, coeff] : poly) {
    if (coeff == 0) continue;
    if (idx.first < 0 || idx.second < 0 || idx.first + idx.second > 2 * k_)
      throw std::invalid_argument("BivariateSequence: polynomial degree exceeds 2k");
    acc += coeff * at(idx.first, idx.second);
  }
  return acc;
}

namespace {

// Monomials x^a y^b with a + b <= k, graded, higher x power first inside a
// degree block: 1; x, y; x^2, xy, y^2; ...
std::vector<std::pair<int, int>> monomials_up_to(int k) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= k; ++d)
    for (int a = d; a >= 0; --a) out.push_back({a, d - a});
  return out;
}

}  // namespace

PsdReport bivariate_square_positive(const BivariateSequence& beta) {
  const std::vector<std::pair<int, int>> mono = monomials_up_to(beta.k());
  const int n = static_cast<int>(mono.size());
  RatMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = beta.at(mono[r].first + mono[c].first, mono[r].second + mono[c].second);
  return psd_classify(m);
}

std::optional<std::pair<int, int>> circle_relations_check(const BivariateSequence& beta) {
  for (int i = 0; i + 2 <= 2 * beta.k(); ++i)
    for (int j = 0; i + j + 2 <= 2 * beta.k(); ++j)
      if (beta.at(i + 2, j) + beta.at(i, j + 2) != beta.at(i, j))
        return std::pair<int, int>{i, j};
  return std::nullopt;
}

namespace {

// Pullback data v_m = L(t^m / (t^2 + 1)^(2k)), m = 0..4k, from the circle
// functional. On the circle 1 - x = 2 / (t^2 + 1), 1 + x = 2 t^2 / (t^2 + 1)
// and y = 2 t / (t^2 + 1), so
//   t^m / (t^2+1)^(2k) = 2^(-2k) (1-x)^(2k-m) y^m          for m <= 2k,
//   t^m / (t^2+1)^(2k) = 2^(-2k) (1+x)^(m-2k) y^(4k-m)     for m >  2k,
// and the right-hand sides are polynomials of total degree 2k.
std::vector<Rat> pullback_powers(const BivariateSequence& beta) {
  const int k = beta.k();
  const Rat scale = Rat(1) / Rat(Int(1) << (2 * k));
  std::vector<Rat> v(4 * k + 1);
  for (int m = 0; m <= 4 * k; ++m) {
    Rat acc = 0;
    if (m <= 2 * k) {
      for (int a = 0; a <= 2 * k - m; ++a) {
        const Rat c = Rat(binomial(2 * k - m, a)) * (a % 2 ? -1 : 1);
        acc += c * beta.at(a, m);
      }
    } else {
      for (int a = 0; a <= m - 2 * k; ++a)
        acc += Rat(binomial(m - 2 * k, a)) * beta.at(a, 4 * k - m);
    }
    v[m] = scale * acc;
  }
  return v;
}

Rat pair_numerator(const Poly& f, const std::vector<Rat>& v) {
  Rat acc = 0;
  for (int m = 0; m <= f.degree(); ++m) acc += f.coeff(m) * v[m];
  return acc;
}

CircleAtom atom_from_line(double t) {
  const long double tt = static_cast<long double>(t) * t;
  return {static_cast<double>((tt - 1) / (tt + 1)),
          static_cast<double>(2 * static_cast<long double>(t) / (tt + 1))};
}

InfeasibleReason fail(InfeasibleKind kind, std::string detail) {
  InfeasibleReason r;
  r.kind = kind;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

std::pair<RationalMoments, PoleSpec> circle_to_univariate(const BivariateSequence& beta) {
  const int k = beta.k();
  const std::vector<Rat> v = pullback_powers(beta);
  PoleSpec spec;
  spec.k0 = 0;
  spec.complex.push_back({Rat(1), 2 * k});

  const Poly unit{Rat(1), Rat(0), Rat(1)};
  RationalMoments data;
  data.gamma0 = {pair_numerator(unit.pow(2 * k), v)};
  ComplexMomentPair pair;
  for (int i = 1; i <= 2 * k; ++i) {
    const Poly f = unit.pow(2 * k - i);
    pair.s0.push_back(pair_numerator(f, v));
    pair.s1.push_back(pair_numerator(f.shifted(1), v));
  }
  data.complex.push_back(std::move(pair));
  return {std::move(data), std::move(spec)};
}

std::variant<CircleMeasure, InfeasibleReason> circle_solve(const BivariateSequence& beta,
                                                           const SolverConfig& cfg) {
  const int k = beta.k();
  if (k < 2) throw std::invalid_argument("circle_solve: needs k >= 2");

  if (auto bad = circle_relations_check(beta)) {
    std::ostringstream os;
    os << "circle relations fail: beta(" << bad->first + 2 << ", " << bad->second
       << ") + beta(" << bad->first << ", " << bad->second + 2 << ") != beta("
       << bad->first << ", " << bad->second << ")";
    return fail(InfeasibleKind::positivity_violated, os.str());
  }
  const PsdReport biv = bivariate_square_positive(beta);
  if (biv.status == PsdStatus::indefinite)
    return fail(InfeasibleKind::positivity_violated,
                "bivariate moment matrix is not positive semidefinite");

  const std::vector<Rat> v = pullback_powers(beta);
  const MomentSequence gamma(std::vector<Rat>(v.begin(), v.end() - 2));
  const ClosedSet line = ClosedSet::whole_line();

  const PsdReport hank = psd_status(build_hankel(gamma));
  if (hank.status == PsdStatus::indefinite)
    return fail(InfeasibleKind::positivity_violated,
                "pulled-back Hankel matrix is not positive semidefinite");

  AtomicMeasure mu;
  double deficit = 0.0;

  if (hank.status == PsdStatus::positive_definite) {
    // Flat extension at the prescribed odd moment; the exact gap at the top
    // even moment is the mass the parametrization cannot see.
    const ExtensionRegion region = extension_region(gamma, line);
    if (region.bounds.size() != 1 || !region.bounds[0].is_lower)
      throw std::logic_error("circle_solve: unexpected extension region on the line");
    const Rat flat = region.bounds[0].q(v[4 * k - 1]);
    const Rat delta = v[4 * k] - flat;
    if (delta < 0)
      return fail(InfeasibleKind::positivity_violated,
                  "top pulled-back moment sits below the flat extension bound");
    deficit = to_double(delta);

    std::vector<Rat> ext(v.begin(), v.end() - 1);
    ext.push_back(flat);
    const MomentSequence extended(std::move(ext));
    const auto gen = generating_polynomial(extended);
    if (!gen)
      throw std::logic_error("circle_solve: flat extension produced no kernel");
    const RootSet roots = real_roots(gen->p, cfg.tol);
    if (roots.roots.empty())
      return fail(InfeasibleKind::verification_failed,
                  "no real atoms found for the flat extension");
    std::vector<Rat> rhs;
    for (std::size_t i = 0; i < roots.roots.size(); ++i) rhs.push_back(extended[i]);
    std::vector<double> dens;
    try {
      dens = vandermonde_solve(roots.roots, rhs);
    } catch (const std::exception& e) {
      return fail(InfeasibleKind::verification_failed,
                  std::string("density solve failed: ") + e.what());
    }
    mu.atoms = roots.roots;
    mu.densities = std::move(dens);
    const MeasureReport rep = verify_measure(mu, extended, line, PoleSet{}, cfg.tol);
    if (!rep.ok())
      return fail(InfeasibleKind::verification_failed,
                  "flat extension measure failed verification: " + rep.detail);
  } else {
    SolveResult res = solve_singular(gamma, line, PoleSet{}, cfg);
    if (std::holds_alternative<InfeasibleReason>(res))
      return std::get<InfeasibleReason>(res);
    mu = std::get<AtomicMeasure>(res);
    // Singular data extends uniquely, so the prescribed top moments must
    // already agree with the unique line measure.
    const double odd_want = to_double(v[4 * k - 1]);
    const double odd_got = mu.power_moment(4 * k - 1);
    if (std::abs(odd_got - odd_want) > cfg.tol * (1.0 + std::abs(odd_want)))
      return fail(InfeasibleKind::verification_failed,
                  "pulled-back odd moment disagrees with the unique line measure");
    const double top_want = to_double(v[4 * k]);
    deficit = top_want - mu.power_moment(4 * k);
    if (deficit < -cfg.tol * (1.0 + std::abs(top_want)))
      return fail(InfeasibleKind::verification_failed,
                  "top pulled-back moment sits below the unique line measure");
    deficit = std::max(deficit, 0.0);
  }

  CircleMeasure out;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    const long double t = mu.atoms[i];
    long double w = mu.densities[i];
    for (int e = 0; e < 2 * k; ++e) w *= t * t + 1;
    out.atoms.push_back(atom_from_line(mu.atoms[i]));
    out.densities.push_back(static_cast<double>(w));
  }
  if (deficit > cfg.density_floor) {
    out.atoms.push_back({1.0, 0.0});
    out.densities.push_back(deficit);
  }

  const CircleReport rep = circle_verify(out, beta, cfg.tol);
  if (!rep.ok())
    return fail(InfeasibleKind::verification_failed,
                "circle measure failed verification: " + rep.detail);
  return out;
}

CircleReport circle_verify(const CircleMeasure& mu, const BivariateSequence& beta,
                           double tol) {
  CircleReport rep;
  std::ostringstream detail;

  rep.densities_positive = true;
  for (double d : mu.densities)
    if (!(d > 0.0)) {
      rep.densities_positive = false;
      detail << "nonpositive density; ";
      break;
    }

  rep.on_circle = true;
  for (const CircleAtom& a : mu.atoms) {
    const double r = std::abs(a.x * a.x + a.y * a.y - 1.0);
    if (r > tol) {
      rep.on_circle = false;
      detail << "atom (" << a.x << ", " << a.y << ") off the circle by " << r << "; ";
      break;
    }
  }

  rep.moments_ok = true;
  for (int i = 0; i <= 2 * beta.k(); ++i)
    for (int j = 0; i + j <= 2 * beta.k(); ++j) {
      long double acc = 0;
      for (std::size_t t = 0; t < mu.atoms.size(); ++t) {
        long double term = mu.densities[t];
        for (int e = 0; e < i; ++e) term *= mu.atoms[t].x;
        for (int e = 0; e < j; ++e) term *= mu.atoms[t].y;
        acc += term;
      }
      const double want = to_double(beta.at(i, j));
      const double resid = std::abs(static_cast<double>(acc) - want) /
                           (1.0 + std::abs(want));
      rep.max_moment_residual = std::max(rep.max_moment_residual, resid);
      if (!(resid <= tol)) {
        rep.moments_ok = false;
        detail << "beta(" << i << ", " << j << ") residual " << resid << "; ";
      }
    }
  rep.detail = detail.str();
  return rep;
}

}  // namespace rtmp
