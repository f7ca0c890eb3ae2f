#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtmp/rational_mp.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace rtmp;

namespace {

PoleSpec unit_poles() {
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

RationalMoments operator+(const RationalMoments& a, const RationalMoments& b) {
  RationalMoments out = a;
  for (std::size_t i = 0; i < out.gamma0.size(); ++i) out.gamma0[i] += b.gamma0[i];
  for (std::size_t j = 0; j < out.real.size(); ++j)
    for (std::size_t i = 0; i < out.real[j].size(); ++i) out.real[j][i] += b.real[j][i];
  for (std::size_t j = 0; j < out.complex.size(); ++j) {
    for (std::size_t i = 0; i < out.complex[j].s0.size(); ++i)
      out.complex[j].s0[i] += b.complex[j].s0[i];
    for (std::size_t i = 0; i < out.complex[j].s1.size(); ++i)
      out.complex[j].s1[i] += b.complex[j].s1[i];
  }
  return out;
}

RationalMoments scale(const Rat& c, const RationalMoments& a) {
  RationalMoments out = a;
  for (Rat& v : out.gamma0) v *= c;
  for (auto& row : out.real)
    for (Rat& v : row) v *= c;
  for (auto& pair : out.complex) {
    for (Rat& v : pair.s0) v *= c;
    for (Rat& v : pair.s1) v *= c;
  }
  return out;
}

PoleSpec rand_spec(oracle::Rng& g) {
  std::uniform_int_distribution<int> coin(0, 1);
  PoleSpec spec;
  spec.k0 = coin(g);
  if (coin(g)) spec.real.push_back({Rat(0), 1});
  if (coin(g)) spec.real.push_back({Rat(2), coin(g) + 1});
  if (spec.real.empty()) spec.real.push_back({Rat(-1), 1});
  if (coin(g)) spec.complex.push_back({Rat(1), 1});
  return spec;
}

std::vector<Rat> pole_points(const PoleSpec& spec) {
  std::vector<Rat> out;
  for (const RealPole& p : spec.real) out.push_back(p.lambda);
  return out;
}

}  // namespace

TEST_CASE("pole spec validation") {
  CHECK_THROWS(PoleSpec{-1, {}, {}}.validate());
  CHECK_THROWS(PoleSpec{0, {{Rat(0), 0}}, {}}.validate());
  CHECK_THROWS(PoleSpec{0, {{Rat(0), 1}, {Rat(0), 2}}, {}}.validate());
  CHECK_THROWS(PoleSpec{0, {}, {{Rat(0), 1}}}.validate());
  CHECK_THROWS(PoleSpec{0, {}, {{Rat(-1), 1}}}.validate());
  CHECK_THROWS(PoleSpec{0, {}, {{Rat(1), 1}, {Rat(1), 2}}}.validate());
  CHECK_NOTHROW(unit_poles().validate());

  CHECK(unit_poles().half_degree() == 2);
  CHECK(unit_poles().pole_set().points == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("denominator construction") {
  CHECK(build_q(unit_poles()) ==
        Poly::linear_root(Rat(0)).pow(2) * Poly::linear_root(Rat(1)).pow(2));
  PoleSpec cx;
  cx.k0 = 1;
  cx.complex = {{Rat(2), 2}};
  CHECK(build_q(cx) == Poly{Rat(4), Rat(0), Rat(4), Rat(0), Rat(1)});
  CHECK(cx.half_degree() == 3);
}

TEST_CASE("moment data validation") {
  const PoleSpec spec = unit_poles();
  RationalMoments data = unit_data();
  CHECK_NOTHROW(data.validate(spec));
  data.gamma0.push_back(Rat(1));
  CHECK_THROWS(data.validate(spec));
  data = unit_data();
  data.real[0].pop_back();
  CHECK_THROWS(data.validate(spec));
  data = unit_data();
  data.real.pop_back();
  CHECK_THROWS(data.validate(spec));
}

TEST_CASE("partial fractions on a hand-checked case") {
  PoleSpec spec;
  spec.k0 = 0;
  spec.real = {{Rat(0), 1}};
  // f / x^2 with f = 3x^2 - 2x + 5 splits as 3 - 2/x + 5/x^2.
  const BasisCoefficients c = partial_fractions(Poly{Rat(5), Rat(-2), Rat(3)}, spec);
  REQUIRE(c.a.size() == 1);
  CHECK(c.a[0] == 3);
  REQUIRE(c.b.size() == 1);
  CHECK(c.b[0] == std::vector<Rat>{Rat(-2), Rat(5)});

  CHECK_THROWS(partial_fractions(Poly{Rat(0), Rat(0), Rat(0), Rat(1)}, spec));
}

TEST_CASE("partial fractions evaluate correctly against direct sums") {
  oracle::Rng g(51);
  for (int trial = 0; trial < 30; ++trial) {
    const PoleSpec spec = rand_spec(g);
    const int two_k = 2 * spec.half_degree();
    const oracle::ExactMeasure mu =
        oracle::rand_measure(g, 3, Rat(-3), Rat(3), pole_points(spec));
    const RationalMoments data = oracle::rational_moments(mu, spec);

    std::vector<Rat> coeffs(two_k + 1);
    for (Rat& v : coeffs) v = oracle::rand_rat(g, -5, 5, 3);
    const Poly f(std::move(coeffs));
    if (f.is_zero()) continue;

    // L(f / q) through the basis coordinates vs direct summation.
    const Rat via_basis = partial_fractions(f, spec).apply(data);
    const Poly q = build_q(spec);
    Rat direct = 0;
    for (std::size_t t = 0; t < mu.atoms.size(); ++t)
      direct += mu.densities[t] * f(mu.atoms[t]) / q(mu.atoms[t]);
    CHECK(via_basis == direct);
  }
}

TEST_CASE("conversion to power moments is exact on the worked example") {
  const MomentSequence gamma = rational_to_power(unit_data(), unit_poles());
  CHECK(gamma.values() ==
        std::vector<Rat>{Rat(1), Rat(1, 2), Rat(5, 12), Rat(3, 8), Rat(17, 48)});
}

TEST_CASE("conversion to power moments is linear") {
  oracle::Rng g(52);
  for (int trial = 0; trial < 15; ++trial) {
    const PoleSpec spec = rand_spec(g);
    const oracle::ExactMeasure m1 =
        oracle::rand_measure(g, 2, Rat(-3), Rat(3), pole_points(spec));
    const oracle::ExactMeasure m2 =
        oracle::rand_measure(g, 3, Rat(-3), Rat(3), pole_points(spec));
    const RationalMoments d1 = oracle::rational_moments(m1, spec);
    const RationalMoments d2 = oracle::rational_moments(m2, spec);
    const Rat c = oracle::rand_rat(g, 1, 9, 4);

    const MomentSequence sum = rational_to_power(d1 + scale(c, d2), spec);
    const MomentSequence g1 = rational_to_power(d1, spec);
    const MomentSequence g2 = rational_to_power(d2, spec);
    REQUIRE(sum.size() == g1.size());
    for (int i = 0; i <= sum.degree(); ++i) CHECK(sum[i] == g1[i] + c * g2[i]);
  }
}

TEST_CASE("converted data gives the power moments of the divided measure") {
  // rational_to_power reconstructs L(x^m) = integral of x^m / q, so it must
  // equal the power moments of the measure with densities scaled by 1/q(a).
  oracle::Rng g(53);
  for (int trial = 0; trial < 30; ++trial) {
    const PoleSpec spec = rand_spec(g);
    const oracle::ExactMeasure mu =
        oracle::rand_measure(g, 4, Rat(-3), Rat(3), pole_points(spec));
    const MomentSequence via_rational =
        rational_to_power(oracle::rational_moments(mu, spec), spec);
    const Poly q = build_q(spec);
    oracle::ExactMeasure divided = mu;
    for (std::size_t t = 0; t < divided.densities.size(); ++t)
      divided.densities[t] /= q(mu.atoms[t]);
    const MomentSequence direct = oracle::power_moments(divided, 2 * spec.half_degree());
    CHECK(via_rational == direct);
  }
}

TEST_CASE("pushforward through q scales densities exactly") {
  const PoleSpec spec = unit_poles();
  const AtomicMeasure mu = AtomicMeasure::from_exact({Rat(1, 2), Rat(2)}, {Rat(3), Rat(5)});
  const AtomicMeasure nu = pushforward_q(mu, spec);
  REQUIRE(nu.size() == 2);
  const Poly q = build_q(spec);
  CHECK(nu.densities_exact[0] == Rat(3) * q(Rat(1, 2)));
  CHECK(nu.densities_exact[1] == Rat(5) * q(Rat(2)));
  const AtomicMeasure back = pushforward_q_inverse(nu, spec);
  CHECK(back.densities_exact == mu.densities_exact);

  const AtomicMeasure on_pole = AtomicMeasure::from_exact({Rat(0)}, {Rat(1)});
  CHECK_THROWS(pushforward_q(on_pole, spec));
}

TEST_CASE("rational verification accepts direct-sum data and flags mismatches") {
  oracle::Rng g(54);
  const PoleSpec spec = unit_poles();
  const oracle::ExactMeasure m =
      oracle::rand_measure(g, 3, Rat(-2), Rat(3), pole_points(spec));
  RationalMoments data = oracle::rational_moments(m, spec);

  const AtomicMeasure mu = AtomicMeasure::from_exact(m.atoms, m.densities);
  CHECK(verify_rtmp(mu, data, spec, 1e-9).ok());

  data.gamma0[0] += 1;
  const MeasureReport bad = verify_rtmp(mu, data, spec, 1e-9);
  CHECK_FALSE(bad.moments_ok);

  AtomicMeasure at_pole = mu;
  at_pole.atoms[0] = 1.0;
  CHECK_FALSE(verify_rtmp(at_pole, oracle::rational_moments(m, spec), spec, 1e-9)
                  .avoids_poles);
}

TEST_CASE("rational solve round trips oracle measures") {
  oracle::Rng g(55);
  const ClosedSet k = ClosedSet::from_intervals({{Rat(-3), Rat(3)}});
  int solved = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const PoleSpec spec = rand_spec(g);
    std::uniform_int_distribution<int> n(1, spec.half_degree() + 1);
    const oracle::ExactMeasure mu =
        oracle::rand_measure(g, n(g), Rat(-5, 2), Rat(5, 2), pole_points(spec));
    const RationalMoments data = oracle::rational_moments(mu, spec);
    SolverConfig cfg;
    cfg.rng_seed = trial;
    const SolveResult res = solve_rtmp(data, spec, k, cfg);
    REQUIRE_MESSAGE(std::holds_alternative<AtomicMeasure>(res),
                    "infeasible on trial " << trial);
    const MeasureReport rep =
        verify_rtmp(std::get<AtomicMeasure>(res), data, spec, 1e-8);
    CHECK_MESSAGE(rep.ok(), "trial " << trial << ": " << rep.detail);
    ++solved;
  }
  CHECK(solved == 25);
}
