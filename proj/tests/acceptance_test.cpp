// Acceptance harness: every shipped guarantee as one [PASS]/[FAIL] line.
// Run with a criterion number (1-9) to execute just that criterion; exit
// code 0 means everything that ran passed.

#include "rtmp/io.hpp"
#include "rtmp/solver.hpp"
#include "rtmp/special.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace rtmp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool pass = true;
  std::string detail;

  void fail(const std::string& msg) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  void expect(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

bool close(double got, double want, double tol) { return std::abs(got - want) <= tol; }

// ---- shared fixtures ------------------------------------------------------

// Two simple poles at 0 and 1 on [0, 1]; the functional with no positive
// representing measure despite a positive singular certificate.
PoleSpec unit_spec() {
  PoleSpec spec;
  spec.k0 = 0;
  spec.real = {{Rat(0), 1}, {Rat(1), 1}};
  return spec;
}

RationalMoments unit_data() {
  RationalMoments data;
  data.gamma0 = {Rat(1, 48)};
  data.real = {{Rat(1, 24), Rat(5, 12)}, {Rat(-1, 24), Rat(5, 12)}};
  return data;
}

ClosedSet unit_interval() {
  return ClosedSet::from_intervals({{Rat(0), Rat(1)}});
}

// Three simple poles at 0, 1, 2 with K = (-inf, 0] u [1, 2] u [3, inf).
PoleSpec gap_spec() {
  PoleSpec spec;
  spec.k0 = 0;
  spec.real = {{Rat(0), 1}, {Rat(1), 1}, {Rat(2), 1}};
  return spec;
}

RationalMoments gap_data() {
  RationalMoments data;
  data.gamma0 = {Rat(1539, 128)};
  data.real = {{Rat(-255, 64), Rat(235, 32)},
               {Rat(3, 64), Rat(313, 96)},
               {Rat(253, 64), Rat(713, 96)}};
  return data;
}

ClosedSet gap_k() {
  Interval left, mid, right;
  left.hi = Rat(0);
  mid.lo = Rat(1);
  mid.hi = Rat(2);
  right.lo = Rat(3);
  return ClosedSet::from_intervals({left, mid, right});
}

const EvenBound* bound_for(const ExtensionRegion& region, const Poly& f) {
  for (const EvenBound& b : region.bounds)
    if (region.products[b.product_index].f == f) return &b;
  return nullptr;
}

int bound_index_for(const ExtensionRegion& region, const Poly& f) {
  for (std::size_t i = 0; i < region.bounds.size(); ++i)
    if (region.products[region.bounds[i].product_index].f == f)
      return static_cast<int>(i);
  return -1;
}

// ---- criteria -------------------------------------------------------------

Check criterion_1() {
  Check c;
  const auto t0 = Clock::now();
  const PoleSpec spec = unit_spec();
  const RationalMoments data = unit_data();
  const ClosedSet k = unit_interval();

  const MomentSequence gamma = rational_to_power(data, spec);
  const std::vector<Rat> want = {Rat(1), Rat(1, 2), Rat(5, 12), Rat(3, 8), Rat(17, 48)};
  c.expect(gamma.values() == want, "converted power moments differ");

  const PositivityCertificate cert = positivity_certificate(gamma, k);
  c.expect(cert.verdict == CertificateVerdict::positive_singular,
           "certificate is not positive_singular");
  if (cert.witness) {
    const Poly& f = cert.products[*cert.witness].f;
    c.expect(f == Poly{Rat(0), Rat(1), Rat(-1)}, "singular witness is not x(1-x)");
    const std::vector<Poly> kp = kernel_polynomials(cert.reports[*cert.witness]);
    c.expect(kp.size() == 1 && kp[0] == Poly{Rat(-1, 2), Rat(1)},
             "kernel of the witness is not x - 1/2");
  } else {
    c.fail("certificate names no singular witness");
  }

  const SolveResult free_res = solve_singular(gamma, k, PoleSet{});
  if (const auto* mu = std::get_if<AtomicMeasure>(&free_res)) {
    std::vector<double> atoms = mu->atoms;
    std::sort(atoms.begin(), atoms.end());
    const bool atoms_ok = atoms.size() == 3 && close(atoms[0], 0.0, 1e-10) &&
                          close(atoms[1], 0.5, 1e-10) && close(atoms[2], 1.0, 1e-10);
    c.expect(atoms_ok, "pole-free atoms are not {0, 1/2, 1}");
    bool dens_ok = mu->densities.size() == 3;
    for (double d : mu->densities) dens_ok = dens_ok && close(d, 1.0 / 3.0, 1e-10);
    c.expect(dens_ok, "pole-free densities are not 1/3 each");
  } else {
    c.fail("pole-free problem did not produce a measure");
  }

  const SolveResult hit = solve_singular(gamma, k, spec.pole_set());
  if (const auto* reason = std::get_if<InfeasibleReason>(&hit))
    c.expect(reason->kind == InfeasibleKind::pole_hit,
             "expected pole_hit, got a different reason");
  else
    c.fail("problem with poles {0, 1} produced a measure");

  const double took = seconds_since(t0);
  c.expect(took < 0.1, "took " + fmt(took) + " s, budget 0.1 s");
  return c;
}

Check criterion_2() {
  Check c;
  const MomentSequence gamma(
      {Rat(1), Rat(1, 2), Rat(5, 12), Rat(3, 8), Rat(17, 48)});
  struct Case {
    const char* name;
    Poly f;
    std::vector<double> want;
  };
  const std::vector<Case> cases = {
      {"H_1", Poly::one(), {1.54, 0.22, 0.007}},
      {"H_x", Poly{Rat(0), Rat(1)}, {0.86, 0.016}},
      {"H_(1-x)", Poly{Rat(1), Rat(-1)}, {0.51, 0.027}},
      {"H_x(1-x)", Poly{Rat(0), Rat(1), Rat(-1)}, {to_double(Rat(5, 48)), 0.0}},
  };
  for (const Case& cs : cases) {
    const PsdReport rep = psd_status(localizing_hankel(gamma, cs.f));
    if (rep.eigenvalue_estimates.size() != cs.want.size()) {
      c.fail(std::string(cs.name) + ": expected " + std::to_string(cs.want.size()) +
             " eigenvalues, got " + std::to_string(rep.eigenvalue_estimates.size()));
      continue;
    }
    for (std::size_t i = 0; i < cs.want.size(); ++i)
      if (!close(rep.eigenvalue_estimates[i], cs.want[i], 0.01))
        c.fail(std::string(cs.name) + " eigenvalue " + std::to_string(i) + " is " +
               fmt(rep.eigenvalue_estimates[i]) + ", expected " + fmt(cs.want[i]));
  }
  return c;
}

Check criterion_3() {
  Check c;
  const MomentSequence gamma = rational_to_power(gap_data(), gap_spec());
  const ExtensionRegion region = extension_region(gamma, gap_k());
  c.expect(region.bounds.size() == 4, "expected four even-product bounds");
  c.expect(!region.x_lo && !region.x_hi, "odd moment should be unconstrained");

  struct Want {
    const char* name;
    Poly f;
    Quadratic q;
  };
  const std::vector<Want> wants = {
      {"1", Poly::one(),
       {Rat(220, 591), Rat(-15971773, 56736), Rat(4733803996639LL, 87146496)}},
      {"(x-2)(x-3)", Poly{Rat(6), Rat(-5), Rat(1)},
       {Rat(376, 369), Rat(-13927589, 17712), Rat(29105958864401LL, 190439424)}},
      {"x(x-1)", Poly{Rat(0), Rat(-1), Rat(1)},
       {Rat(11, 39), Rat(-3154553, 14976), Rat(6505636110821LL, 161021952)}},
      {"x(x-1)(x-2)(x-3)", Poly{Rat(0), Rat(-6), Rat(11), Rat(-6), Rat(1)},
       {Rat(131, 75), Rat(-38902817, 28800), Rat(11603048263019LL, 44236800)}},
  };
  for (const Want& w : wants) {
    const EvenBound* b = bound_for(region, w.f);
    if (!b) {
      c.fail(std::string("no bound for product ") + w.name);
      continue;
    }
    c.expect(b->is_lower, std::string(w.name) + ": bound is not a lower bound");
    if (!(b->q == w.q))
      c.fail(std::string(w.name) + ": quadratic is " + rat_str(b->q.a) + " x^2 + " +
             rat_str(b->q.b) + " x + " + rat_str(b->q.c));
  }
  return c;
}

Check criterion_4() {
  Check c;
  const MomentSequence gamma = rational_to_power(gap_data(), gap_spec());
  const ExtensionRegion region = extension_region(gamma, gap_k());
  const int f0 = bound_index_for(region, Poly::one());
  if (f0 < 0) {
    c.fail("no lower bound for the unit product");
    return c;
  }
  const std::vector<AlgebraicInterval> window = flat_choice_intervals(region, f0);
  c.expect(window.empty(),
           "exact elimination left a nonempty window for the unit product");
  c.expect(!flat_choice_feasible(region, f0),
           "flat choice on the unit product reported feasible");
  return c;
}

Check criterion_5() {
  Check c;
  const auto t0 = Clock::now();
  const PoleSpec spec = gap_spec();
  const RationalMoments data = gap_data();
  const ClosedSet k = gap_k();
  const MomentSequence gamma = rational_to_power(data, spec);

  // Pinned first extension pair, then the admissible window for the next odd
  // moment under the flat choice on the unit product.
  const MomentSequence extended = gamma.extended(Rat(370)).extended(Rat(2000));
  const ExtensionRegion region = extension_region(extended, k);
  const int f0 = bound_index_for(region, Poly::one());
  if (f0 < 0) {
    c.fail("no lower bound for the unit product at the second step");
  } else {
    const std::vector<AlgebraicInterval> window = flat_choice_intervals(region, f0);
    if (window.empty()) {
      c.fail(
          "expected window [-71.50, 845.19], but the unit product admits no "
          "flat choice: its dominance constraints are exactly infeasible");
    } else {
      const AlgebraicInterval& w = window.front();
      const double lo = w.lo ? w.lo->approx() : -std::numeric_limits<double>::infinity();
      const double hi = w.hi ? w.hi->approx() : std::numeric_limits<double>::infinity();
      c.expect(close(lo, -71.50, 0.02),
               "window lower endpoint " + fmt(lo) + ", expected -71.50");
      c.expect(close(hi, 845.19, 0.02),
               "window upper endpoint " + fmt(hi) + ", expected 845.19");
    }
  }

  // The measure construction itself, with the same pinned pair.
  SolverConfig cfg;
  const SolveResult res =
      solve_nonsingular(gamma, k, spec.pole_set(), cfg, {{Rat(370), Rat(2000)}});
  if (const auto* power_mu = std::get_if<AtomicMeasure>(&res)) {
    const AtomicMeasure mu = pushforward_q(*power_mu, spec, cfg.tol);
    const MeasureReport rep = verify_rtmp(mu, data, spec, 1e-8);
    c.expect(rep.ok(), "measure failed verification at 1e-8: " + rep.detail);
    for (double a : mu.atoms)
      for (double pole : {0.0, 1.0, 2.0})
        if (std::abs(a - pole) < 1e-6)
          c.fail("atom " + fmt(a) + " within 1e-6 of pole " + fmt(pole));
  } else {
    c.fail("no measure from the pinned pair: " +
           std::get<InfeasibleReason>(res).detail);
  }

  const double took = seconds_since(t0);
  c.expect(took < 1.0, "took " + fmt(took) + " s, budget 1 s");
  return c;
}

Check criterion_6() {
  Check c;
  const auto t0 = Clock::now();
  int ran = 0, failures = 0;
  std::string first;

  auto note = [&](const std::string& family, int i, const std::string& why) {
    ++failures;
    std::cerr << "  criterion 6: " << family << " instance " << i << ": " << why << "\n";
    if (first.empty())
      first = family + " instance " + std::to_string(i) + ": " + why;
  };
  auto guarded = [&](const std::string& family, int i, auto&& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      note(family, i, std::string("threw: ") + ex.what());
    }
  };

  // Power problem on the unit interval.
  const ClosedSet unit = unit_interval();
  for (int i = 0; i < 200; ++i, ++ran) {
    oracle::Rng g(1000 + i);
    std::uniform_int_distribution<int> kk(1, 3);
    const int k = kk(g);
    std::uniform_int_distribution<int> nn(1, k + 1);
    const oracle::ExactMeasure m = oracle::rand_measure(g, nn(g), Rat(0), Rat(1));
    const MomentSequence gamma = oracle::power_moments(m, 2 * k);
    SolverConfig cfg;
    cfg.rng_seed = i;
    guarded("power", i, [&] {
      const SolveResult res = solve_power_tmp(gamma, unit, PoleSet{}, cfg);
      if (const auto* mu = std::get_if<AtomicMeasure>(&res)) {
        const MeasureReport rep = verify_measure(*mu, gamma, unit, PoleSet{}, 1e-8);
        if (!rep.ok()) note("power", i, rep.detail);
      } else {
        note("power", i, std::get<InfeasibleReason>(res).detail);
      }
    });
  }

  // Rational data with one or two real poles on a bounded K.
  const ClosedSet box = ClosedSet::from_intervals({{Rat(-2), Rat(3)}});
  for (int i = 0; i < 200; ++i, ++ran) {
    oracle::Rng g(2000 + i);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> order(1, 2);
    PoleSpec spec;
    spec.k0 = coin(g);
    spec.real.push_back({Rat(0), order(g)});
    if (coin(g)) spec.real.push_back({Rat(3, 2), order(g)});
    std::vector<Rat> avoid;
    for (const RealPole& p : spec.real) avoid.push_back(p.lambda);
    std::uniform_int_distribution<int> nn(1, spec.half_degree() + 1);
    const oracle::ExactMeasure m = oracle::rand_measure(g, nn(g), Rat(-2), Rat(3), avoid);
    const RationalMoments data = oracle::rational_moments(m, spec);
    SolverConfig cfg;
    cfg.rng_seed = i;
    guarded("real-pole", i, [&] {
      const SolveResult res = solve_rtmp(data, spec, box, cfg);
      if (const auto* mu = std::get_if<AtomicMeasure>(&res)) {
        const MeasureReport rep = verify_rtmp(*mu, data, spec, 1e-8);
        if (!rep.ok()) note("real-pole", i, rep.detail);
      } else {
        note("real-pole", i, std::get<InfeasibleReason>(res).detail);
      }
    });
  }

  // Rational data with one complex pole pair.
  for (int i = 0; i < 200; ++i, ++ran) {
    oracle::Rng g(3000 + i);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> order(1, 2);
    PoleSpec spec;
    spec.k0 = coin(g);
    spec.complex.push_back({Rat(1 + coin(g)), order(g)});
    std::uniform_int_distribution<int> nn(1, spec.half_degree() + 1);
    const oracle::ExactMeasure m = oracle::rand_measure(g, nn(g), Rat(-2), Rat(2));
    const RationalMoments data = oracle::rational_moments(m, spec);
    SolverConfig cfg;
    cfg.rng_seed = i;
    guarded("complex-pole", i, [&] {
      const SolveResult res =
          solve_rtmp(data, spec, ClosedSet::from_intervals({{Rat(-2), Rat(2)}}), cfg);
      if (const auto* mu = std::get_if<AtomicMeasure>(&res)) {
        const MeasureReport rep = verify_rtmp(*mu, data, spec, 1e-8);
        if (!rep.ok()) note("complex-pole", i, rep.detail);
      } else {
        note("complex-pole", i, std::get<InfeasibleReason>(res).detail);
      }
    });
  }

  // Single pole at the origin over the whole line.
  for (int i = 0; i < 200; ++i, ++ran) {
    oracle::Rng g(4000 + i);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> order(1, 2);
    PoleSpec spec;
    spec.k0 = coin(g);
    spec.real.push_back({Rat(0), order(g)});
    std::uniform_int_distribution<int> nn(1, spec.half_degree() + 1);
    const oracle::ExactMeasure m =
        oracle::rand_measure(g, nn(g), Rat(-3), Rat(3), {Rat(0)});
    const RationalMoments data = oracle::rational_moments(m, spec);
    SolverConfig cfg;
    cfg.rng_seed = i;
    guarded("origin-pole", i, [&] {
      const SolveResult res = strong_hamburger_solve(data, spec, cfg);
      if (const auto* mu = std::get_if<AtomicMeasure>(&res)) {
        const MeasureReport rep = verify_rtmp(*mu, data, spec, 1e-8);
        if (!rep.ok()) note("origin-pole", i, rep.detail);
      } else {
        note("origin-pole", i, std::get<InfeasibleReason>(res).detail);
      }
    });
  }

  // Circle data, k = 2 and k = 3.
  for (int i = 0; i < 200; ++i, ++ran) {
    oracle::Rng g(5000 + i);
    const int k = 2 + (i % 2);
    std::uniform_int_distribution<int> nn(1, 2 * k - 2);
    std::uniform_int_distribution<int> coin(0, 1);
    const oracle::ExactMeasure m = oracle::rand_measure(g, nn(g), Rat(-3), Rat(3));
    oracle::CirclePoints pts;
    pts.t = m.atoms;
    pts.densities = m.densities;
    if (coin(g)) pts.mass_at_one = oracle::rand_rat(g, 1, 8, 4);
    const BivariateSequence beta = oracle::circle_moments(pts, k);
    SolverConfig cfg;
    cfg.rng_seed = i;
    guarded("circle", i, [&] {
      const auto res = circle_solve(beta, cfg);
      if (const auto* mu = std::get_if<CircleMeasure>(&res)) {
        const CircleReport rep = circle_verify(*mu, beta, 1e-8);
        if (!rep.ok()) note("circle", i, rep.detail);
      } else {
        note("circle", i, std::get<InfeasibleReason>(res).detail);
      }
    });
  }

  c.expect(failures == 0, std::to_string(failures) + " of " + std::to_string(ran) +
                              " instances failed; first: " + first);
  const double took = seconds_since(t0);
  c.expect(took < 60.0, "took " + fmt(took) + " s, budget 60 s");
  if (c.pass) c.detail = std::to_string(ran) + " instances in " + fmt(took) + " s";
  return c;
}

Check criterion_7() {
  Check c;

  const MomentSequence geometric({Rat(1), Rat(5), Rat(25), Rat(125), Rat(625)});
  const SolveResult violated = solve_power_tmp(geometric, unit_interval(), PoleSet{});
  if (const auto* r = std::get_if<InfeasibleReason>(&violated)) {
    c.expect(r->kind == InfeasibleKind::positivity_violated,
             "geometric data on [0,1]: wrong infeasibility kind");
    c.expect(r->witness_product.has_value(), "positivity violation names no witness");
  } else {
    c.fail("geometric data on [0,1] produced a measure");
  }

  const SolveResult hit = solve_rtmp(unit_data(), unit_spec(), unit_interval());
  if (const auto* r = std::get_if<InfeasibleReason>(&hit)) {
    c.expect(r->kind == InfeasibleKind::pole_hit, "pole data: wrong infeasibility kind");
    c.expect(r->pole == Rat(0) || r->pole == Rat(1), "pole_hit names the wrong pole");
    c.expect(r->line_measure.has_value(),
             "pole_hit does not report the obstructing line measure");
  } else {
    c.fail("pole-touching data produced a measure");
  }

  const MomentSequence flatline(
      {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  const SolveResult kernel =
      solve_power_tmp(flatline, ClosedSet::whole_line(), PoleSet{});
  if (const auto* r = std::get_if<InfeasibleReason>(&kernel))
    c.expect(r->kind == InfeasibleKind::unbounded_kernel_condition_failed,
             "kernel-condition data: wrong infeasibility kind");
  else
    c.fail("kernel-condition data produced a measure");

  return c;
}

Check criterion_8() {
  Check c;
  const MomentSequence gamma({Rat(2), Rat(0), Rat(2)});

  const auto none = prescribed_atom_quadrature(gamma, 0.0);
  c.expect(!none.has_value(), "x1 = 0 should admit no rule (singular pencil)");

  const auto rule = prescribed_atom_quadrature(gamma, 2.0);
  if (!rule) {
    c.fail("x1 = 2 produced no rule");
    return c;
  }
  if (rule->size() != 2) {
    c.fail("x1 = 2: expected two atoms, got " + std::to_string(rule->size()));
    return c;
  }
  bool saw_two = false, saw_half = false;
  for (std::size_t i = 0; i < rule->atoms.size(); ++i) {
    if (close(rule->atoms[i], 2.0, 1e-10) && close(rule->densities[i], 0.4, 1e-10))
      saw_two = true;
    if (close(rule->atoms[i], -0.5, 1e-10) && close(rule->densities[i], 1.6, 1e-10))
      saw_half = true;
  }
  c.expect(saw_two, "missing atom 2 with density 2/5");
  c.expect(saw_half, "missing atom -1/2 with density 8/5");
  return c;
}

Check criterion_9() {
  Check c;

  for (int i = 0; i < 40; ++i) {
    oracle::Rng g(9000 + i);
    std::uniform_int_distribution<int> nn(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    const oracle::ExactMeasure m = oracle::rand_measure(g, nn(g), Rat(-4), Rat(4));
    oracle::CirclePoints pts;
    pts.t = m.atoms;
    pts.densities = m.densities;
    if (coin(g)) pts.mass_at_one = oracle::rand_rat(g, 1, 6, 3);
    const BivariateSequence beta = oracle::circle_moments(pts, 2);
    const auto res = circle_solve(beta);
    if (const auto* mu = std::get_if<CircleMeasure>(&res)) {
      const CircleReport rep = circle_verify(*mu, beta, 1e-8);
      if (!rep.ok()) c.fail("instance " + std::to_string(i) + ": " + rep.detail);
    } else {
      c.fail("instance " + std::to_string(i) + ": " +
             std::get<InfeasibleReason>(res).detail);
    }
  }

  // The point the parametrization misses must come back with its mass.
  oracle::CirclePoints pts;
  pts.t = {Rat(-1), Rat(1, 4), Rat(2)};
  pts.densities = {Rat(1), Rat(1, 2), Rat(5, 4)};
  pts.mass_at_one = Rat(7, 8);
  const BivariateSequence beta = oracle::circle_moments(pts, 2);
  const auto res = circle_solve(beta);
  if (const auto* mu = std::get_if<CircleMeasure>(&res)) {
    c.expect(circle_verify(*mu, beta, 1e-8).ok(), "mass case fails verification");
    bool found = false;
    for (std::size_t i = 0; i < mu->atoms.size(); ++i)
      if (std::hypot(mu->atoms[i].x - 1.0, mu->atoms[i].y) < 1e-9 &&
          close(mu->densities[i], 0.875, 1e-8))
        found = true;
    c.expect(found, "no atom at (1, 0) carrying mass 7/8");
  } else {
    c.fail("mass case infeasible: " + std::get<InfeasibleReason>(res).detail);
  }

  return c;
}

}  // namespace

int main(int argc, char** argv) {
  struct Entry {
    int number;
    const char* title;
    Check (*fn)();
  };
  const std::vector<Entry> entries = {
      {1, "worked example with poles at 0 and 1", criterion_1},
      {2, "eigenvalue report for the worked example", criterion_2},
      {3, "exact extension bounds on the two-gap set", criterion_3},
      {4, "minimal extension exactly ruled out", criterion_4},
      {5, "pinned two-step construction", criterion_5},
      {6, "oracle round trips across all families", criterion_6},
      {7, "infeasible inputs classified", criterion_7},
      {8, "prescribed-atom quadrature", criterion_8},
      {9, "circle round trip with mass at (1, 0)", criterion_9},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 1 && (only < 1 || only > 9)) {
    std::cerr << "usage: " << argv[0] << " [criterion 1-9]\n";
    return 1;
  }

  bool all_pass = true;
  for (const Entry& e : entries) {
    if (only && e.number != only) continue;
    const auto t0 = Clock::now();
    Check c;
    try {
      c = e.fn();
    } catch (const std::exception& ex) {
      c.pass = false;
      c.detail = std::string("exception: ") + ex.what();
    }
    const double took = seconds_since(t0);
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << e.number << ". " << e.title
              << " (" << fmt(took) << " s)";
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
    all_pass = all_pass && c.pass;
  }
  return all_pass ? 0 : 1;
}
