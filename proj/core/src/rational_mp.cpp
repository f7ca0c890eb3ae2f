#include "rtmp/rational_mp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rtmp {

void PoleSpec::validate() const {
  if (k0 < 0) throw std::invalid_argument("PoleSpec: k0 must be >= 0");
  for (std::size_t i = 0; i < real.size(); ++i) {
    if (real[i].order < 1) throw std::invalid_argument("PoleSpec: real pole order < 1");
    for (std::size_t j = i + 1; j < real.size(); ++j)
      if (real[i].lambda == real[j].lambda)
        throw std::invalid_argument("PoleSpec: repeated real pole");
  }
  for (std::size_t i = 0; i < complex.size(); ++i) {
    if (complex[i].order < 1)
      throw std::invalid_argument("PoleSpec: complex pole order < 1");
    if (complex[i].eta <= 0)
      throw std::invalid_argument("PoleSpec: complex pole needs eta > 0");
    for (std::size_t j = i + 1; j < complex.size(); ++j)
      if (complex[i].eta == complex[j].eta)
        throw std::invalid_argument("PoleSpec: repeated complex pole");
  }
}

int PoleSpec::half_degree() const {
  int k = k0;
  for (const RealPole& p : real) k += p.order;
  for (const ComplexPolePair& p : complex) k += p.order;
  return k;
}

PoleSet PoleSpec::pole_set() const {
  PoleSet out;
  for (const RealPole& p : real) out.points.push_back(p.lambda);
  return out;
}

Poly build_q(const PoleSpec& spec) {
  spec.validate();
  Poly q = Poly::one();
  for (const RealPole& p : spec.real)
    q = q * Poly::linear_root(p.lambda).pow(2 * static_cast<unsigned>(p.order));
  for (const ComplexPolePair& p : spec.complex)
    q = q * Poly{p.eta, Rat(0), Rat(1)}.pow(static_cast<unsigned>(p.order));
  return q;
}

void RationalMoments::validate(const PoleSpec& spec) const {
  spec.validate();
  if (static_cast<int>(gamma0.size()) != 2 * spec.k0 + 1)
    throw std::invalid_argument("RationalMoments: gamma0 must have 2*k0 + 1 entries");
  if (real.size() != spec.real.size())
    throw std::invalid_argument("RationalMoments: real pole data count mismatch");
  for (std::size_t j = 0; j < real.size(); ++j)
    if (static_cast<int>(real[j].size()) != 2 * spec.real[j].order)
      throw std::invalid_argument("RationalMoments: real pole data length mismatch");
  if (complex.size() != spec.complex.size())
    throw std::invalid_argument("RationalMoments: complex pole data count mismatch");
  for (std::size_t j = 0; j < complex.size(); ++j) {
    if (static_cast<int>(complex[j].s0.size()) != spec.complex[j].order ||
        static_cast<int>(complex[j].s1.size()) != spec.complex[j].order)
      throw std::invalid_argument("RationalMoments: complex pole data length mismatch");
  }
}

Rat BasisCoefficients::apply(const RationalMoments& data) const {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * data.gamma0[i];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < b[j].size(); ++i) acc += b[j][i] * data.real[j][i];
  for (std::size_t j = 0; j < cd.size(); ++j) {
    for (std::size_t i = 0; i < cd[j].s0.size(); ++i)
      acc += cd[j].s0[i] * data.complex[j].s0[i];
    for (std::size_t i = 0; i < cd[j].s1.size(); ++i)
      acc += cd[j].s1[i] * data.complex[j].s1[i];
  }
  return acc;
}

namespace {

// The polynomial multiplied by each basis element when everything is put
// over the common denominator q. Columns, in order:
//   x^i * q                         i = 0..2 k0
//   q / (x - lambda_j)^i            j, i = 1..2 k_j
//   q / (x^2 + eta_j)^i             j, i = 1..l_j
//   x * q / (x^2 + eta_j)^i         j, i = 1..l_j
std::vector<Poly> basis_numerators(const PoleSpec& spec, const Poly& q) {
  std::vector<Poly> cols;
  for (int i = 0; i <= 2 * spec.k0; ++i) cols.push_back(q.shifted(i));
  for (const RealPole& p : spec.real) {
    // base = q with this pole's factor removed; multiply back partial powers.
    Poly factor = Poly::linear_root(p.lambda);
    Poly base = Poly::one();
    for (const RealPole& other : spec.real)
      if (&other != &p)
        base = base * Poly::linear_root(other.lambda).pow(2 * other.order);
    for (const ComplexPolePair& other : spec.complex)
      base = base * Poly{other.eta, Rat(0), Rat(1)}.pow(other.order);
    for (int i = 1; i <= 2 * p.order; ++i)
      cols.push_back(base * factor.pow(2 * p.order - i));
  }
  for (const ComplexPolePair& p : spec.complex) {
    Poly base = Poly::one();
    for (const RealPole& other : spec.real)
      base = base * Poly::linear_root(other.lambda).pow(2 * other.order);
    for (const ComplexPolePair& other : spec.complex)
      if (&other != &p) base = base * Poly{other.eta, Rat(0), Rat(1)}.pow(other.order);
    const Poly factor{p.eta, Rat(0), Rat(1)};
    for (int i = 1; i <= p.order; ++i)
      cols.push_back(base * factor.pow(p.order - i));
    for (int i = 1; i <= p.order; ++i)
      cols.push_back((base * factor.pow(p.order - i)).shifted(1));
  }
  return cols;
}

BasisCoefficients unflatten(const std::vector<Rat>& x, const PoleSpec& spec) {
  BasisCoefficients out;
  std::size_t at = 0;
  out.a.assign(x.begin(), x.begin() + 2 * spec.k0 + 1);
  at += 2 * spec.k0 + 1;
  for (const RealPole& p : spec.real) {
    out.b.emplace_back(x.begin() + at, x.begin() + at + 2 * p.order);
    at += 2 * p.order;
  }
  for (const ComplexPolePair& p : spec.complex) {
    ComplexMomentPair pair;
    pair.s0.assign(x.begin() + at, x.begin() + at + p.order);
    at += p.order;
    pair.s1.assign(x.begin() + at, x.begin() + at + p.order);
    at += p.order;
    out.cd.push_back(std::move(pair));
  }
  return out;
}

}  // namespace

BasisCoefficients partial_fractions(const Poly& f, const PoleSpec& spec) {
  spec.validate();
  const int two_k = 2 * spec.half_degree();
  if (f.degree() > two_k)
    throw std::invalid_argument("partial_fractions: numerator degree exceeds 2k");
  const Poly q = build_q(spec);
  const std::vector<Poly> cols = basis_numerators(spec, q);
  const int n = two_k + 1;
  if (static_cast<int>(cols.size()) != n)
    throw std::logic_error("partial_fractions: basis size mismatch");

  RatMatrix m(n, n);
  std::vector<Rat> rhs(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = cols[c].coeff(r);
    rhs[r] = f.coeff(r);
  }
  const std::vector<Rat> x = solve_linear(std::move(m), std::move(rhs));

  // The basis spans all numerators of degree <= 2k, so the recombination
  // must reproduce f exactly.
  Poly check;
  for (int c = 0; c < n; ++c) check = check + x[c] * cols[c];
  if (!(check == f)) throw std::logic_error("partial_fractions: recombination failed");
  return unflatten(x, spec);
}

MomentSequence rational_to_power(const RationalMoments& data, const PoleSpec& spec) {
  data.validate(spec);
  const int two_k = 2 * spec.half_degree();
  std::vector<Rat> out(two_k + 1);
  Poly xm = Poly::one();
  for (int mdeg = 0; mdeg <= two_k; ++mdeg) {
    out[mdeg] = partial_fractions(xm, spec).apply(data);
    xm = xm.shifted(1);
  }
  return MomentSequence(std::move(out));
}

namespace {

// q(x) in factored form: each real factor is a single subtraction, so the
// value keeps full relative accuracy next to a pole, where Horner on the
// expanded coefficients cancels catastrophically.
long double q_factored(const PoleSpec& spec, long double x) {
  long double acc = 1;
  for (const RealPole& p : spec.real) {
    const long double f = x - to_long_double(p.lambda);
    for (int e = 0; e < 2 * p.order; ++e) acc *= f;
  }
  for (const ComplexPolePair& p : spec.complex) {
    const long double f = x * x + to_long_double(p.eta);
    for (int e = 0; e < p.order; ++e) acc *= f;
  }
  return acc;
}

AtomicMeasure scale_densities(const AtomicMeasure& mu, const PoleSpec& spec,
                              double tol, bool invert) {
  const PoleSet poles = spec.pole_set();
  const Poly q = mu.exact ? build_q(spec) : Poly();
  AtomicMeasure out;
  out.exact = mu.exact;
  out.atoms = mu.atoms;
  out.atoms_exact = mu.atoms_exact;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    const double a = mu.atoms[i];
    if (poles.hit(a, tol))
      throw std::invalid_argument("pushforward_q: atom on a root of q");
    if (mu.exact) {
      const Rat qa = q(mu.atoms_exact[i]);
      if (qa == 0) throw std::invalid_argument("pushforward_q: atom on a root of q");
      out.densities_exact.push_back(invert ? Rat(mu.densities_exact[i] / qa)
                                           : Rat(mu.densities_exact[i] * qa));
      out.densities.push_back(to_double(out.densities_exact.back()));
    } else {
      const long double qa = q_factored(spec, a);
      out.densities.push_back(static_cast<double>(
          invert ? mu.densities[i] / qa : mu.densities[i] * qa));
    }
  }
  return out;
}

}  // namespace

AtomicMeasure pushforward_q(const AtomicMeasure& mu, const PoleSpec& spec, double tol) {
  return scale_densities(mu, spec, tol, /*invert=*/false);
}

AtomicMeasure pushforward_q_inverse(const AtomicMeasure& mu, const PoleSpec& spec,
                                    double tol) {
  return scale_densities(mu, spec, tol, /*invert=*/true);
}

SolveResult solve_rtmp(const RationalMoments& data, const PoleSpec& spec,
                       const ClosedSet& k, const SolverConfig& cfg, SolveLog* log) {
  data.validate(spec);
  const PoleSet poles = spec.pole_set();
  const MomentSequence gamma = rational_to_power(data, spec);
  SolveResult res = solve_power_tmp(gamma, k, poles, cfg, log);
  if (std::holds_alternative<InfeasibleReason>(res)) return res;
  return pushforward_q(std::get<AtomicMeasure>(res), spec, cfg.tol);
}

MeasureReport verify_rtmp(const AtomicMeasure& mu, const RationalMoments& data,
                          const PoleSpec& spec, double tol) {
  data.validate(spec);
  MeasureReport report;
  std::ostringstream detail;

  report.avoids_poles = true;
  for (double a : mu.atoms) {
    if (auto lam = spec.pole_set().hit(a, tol)) {
      report.avoids_poles = false;
      detail << "atom " << a << " touches pole " << rat_str(*lam) << "; ";
      break;
    }
  }
  report.densities_positive = true;
  for (double d : mu.densities)
    if (!(d > 0.0)) {
      report.densities_positive = false;
      detail << "nonpositive density; ";
      break;
    }
  report.support_in_k = true;  // membership is the solver's concern; poles are ours

  report.moments_ok = true;
  auto check = [&](double got, const Rat& want_r, const std::string& what) {
    const double want = to_double(want_r);
    const double resid = std::abs(got - want) / (1.0 + std::abs(want));
    report.moment_residuals.push_back(resid);
    report.max_moment_residual = std::max(report.max_moment_residual, resid);
    if (!(resid <= tol)) {
      report.moments_ok = false;
      detail << what << " residual " << resid << "; ";
    }
  };

  if (!report.avoids_poles) {
    report.detail = detail.str();
    return report;
  }

  // Each basis function is col / q for a polynomial column col, so its moment
  // against mu equals the col moment against the weights density / q(atom).
  // Dividing by the same factored q used in pushforward_q keeps the weights
  // accurate, and polynomial sums do not amplify atom rounding near a pole.
  const Poly q = build_q(spec);
  const std::vector<Poly> cols = basis_numerators(spec, q);
  std::vector<long double> w(mu.atoms.size());
  for (std::size_t t = 0; t < mu.atoms.size(); ++t)
    w[t] = static_cast<long double>(mu.densities[t]) /
           q_factored(spec, static_cast<long double>(mu.atoms[t]));

  std::vector<const Rat*> want;
  std::vector<std::string> label;
  for (int i = 0; i <= 2 * spec.k0; ++i) {
    want.push_back(&data.gamma0[i]);
    label.push_back("x^" + std::to_string(i));
  }
  for (std::size_t j = 0; j < spec.real.size(); ++j)
    for (int i = 1; i <= 2 * spec.real[j].order; ++i) {
      want.push_back(&data.real[j][i - 1]);
      label.push_back("(x - " + rat_str(spec.real[j].lambda) + ")^-" +
                      std::to_string(i));
    }
  for (std::size_t j = 0; j < spec.complex.size(); ++j) {
    for (int i = 1; i <= spec.complex[j].order; ++i) {
      want.push_back(&data.complex[j].s0[i - 1]);
      label.push_back("(x^2 + " + rat_str(spec.complex[j].eta) + ")^-" +
                      std::to_string(i));
    }
    for (int i = 1; i <= spec.complex[j].order; ++i) {
      want.push_back(&data.complex[j].s1[i - 1]);
      label.push_back("x (x^2 + " + rat_str(spec.complex[j].eta) + ")^-" +
                      std::to_string(i));
    }
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    long double acc = 0;
    for (std::size_t t = 0; t < mu.atoms.size(); ++t)
      acc += w[t] * cols[c].eval_long(static_cast<long double>(mu.atoms[t]));
    check(static_cast<double>(acc), *want[c], label[c]);
  }
  report.detail = detail.str();
  return report;
}

}  // namespace rtmp
