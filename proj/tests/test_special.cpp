#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtmp/special.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace rtmp;

namespace {

oracle::CirclePoints four_points() {
  oracle::CirclePoints pts;
  pts.t = {Rat(-2), Rat(0), Rat(1, 2), Rat(3)};
  pts.densities = {Rat(1, 2), Rat(2), Rat(3, 4), Rat(1, 3)};
  return pts;
}

// Smallest distance from (x, y) to an atom of mu.
double nearest(const CircleMeasure& mu, double x, double y) {
  double best = 1e300;
  for (const CircleAtom& a : mu.atoms)
    best = std::min(best, std::hypot(a.x - x, a.y - y));
  return best;
}

}  // namespace

TEST_CASE("line parametrization lands on the circle") {
  for (const Rat& t : {Rat(0), Rat(1), Rat(-3), Rat(2, 7), Rat(-11, 4)}) {
    const auto [x, y] = oracle::circle_point(t);
    CHECK(x * x + y * y == 1);
    const Rat d = t * t + 1;
    CHECK((1 - x) / 2 == 1 / d);      // 1 / (t^2 + 1)
    CHECK(y / 2 == t / d);            // t / (t^2 + 1)
    CHECK((1 + x) / 2 == t * t / d);  // t^2 / (t^2 + 1)
  }
}

TEST_CASE("bivariate sequence validates completeness and degree") {
  std::map<std::pair<int, int>, Rat> vals;
  vals[{0, 0}] = 1;
  CHECK_THROWS(BivariateSequence(1, vals));
  CHECK_THROWS(BivariateSequence(-1, {}));

  const BivariateSequence beta = oracle::circle_moments(four_points(), 1);
  CHECK(beta.at(0, 0) == Rat(1, 2) + 2 + Rat(3, 4) + Rat(1, 3));
  CHECK_THROWS(beta.at(3, 0));
  CHECK(beta.apply({{{2, 0}, Rat(1)}, {{0, 2}, Rat(1)}}) == beta.at(0, 0));
  CHECK_THROWS(beta.apply({{{3, 0}, Rat(1)}}));
}

TEST_CASE("circle relations hold exactly for measures on the circle") {
  const BivariateSequence beta = oracle::circle_moments(four_points(), 2);
  CHECK_FALSE(circle_relations_check(beta).has_value());

  // x^2 + y^2 = 1 fails once any entry moves.
  std::map<std::pair<int, int>, Rat> vals;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) vals[{i, j}] = beta.at(i, j);
  vals[{2, 0}] += Rat(1, 100);
  const auto bad = circle_relations_check(BivariateSequence(2, vals));
  REQUIRE(bad.has_value());
  CHECK(*bad == std::pair<int, int>{0, 0});
}

TEST_CASE("bivariate moment matrix of a circle measure is singular psd") {
  const BivariateSequence beta = oracle::circle_moments(four_points(), 2);
  const PsdReport rep = bivariate_square_positive(beta);
  CHECK(rep.status == PsdStatus::psd_singular);
  // Four atoms plus the circle relation leave rank 4 out of 6 monomials.
  CHECK(rep.rank == 4);

  oracle::CirclePoints signed_pts = four_points();
  signed_pts.densities[1] = Rat(-3);
  const PsdReport bad = bivariate_square_positive(oracle::circle_moments(signed_pts, 2));
  CHECK(bad.status == PsdStatus::indefinite);
}

TEST_CASE("pullback through the parametrization matches the t-measure exactly") {
  oracle::CirclePoints pts = four_points();
  for (const Rat& mass : {Rat(0), Rat(7, 8)}) {
    pts.mass_at_one = mass;
    const int k = 2;
    const auto [data, spec] = circle_to_univariate(oracle::circle_moments(pts, k));
    REQUIRE(spec.k0 == 0);
    REQUIRE(spec.real.empty());
    REQUIRE(spec.complex.size() == 1);
    CHECK(spec.complex[0].eta == 1);
    CHECK(spec.complex[0].order == 2 * k);

    // The same densities moved to the parameter line give identical
    // rational moments; the mass at (1, 0) is invisible to every basis
    // function except the constant.
    oracle::ExactMeasure line{pts.t, pts.densities};
    const RationalMoments direct = oracle::rational_moments(line, spec);
    CHECK(data.gamma0[0] == direct.gamma0[0] + mass);
    CHECK(data.complex[0].s0 == direct.complex[0].s0);
    CHECK(data.complex[0].s1 == direct.complex[0].s1);
  }
}

TEST_CASE("circle solve recovers point measures") {
  oracle::CirclePoints pts = four_points();
  for (int k : {2, 3}) {
    const auto res = circle_solve(oracle::circle_moments(pts, k));
    REQUIRE_MESSAGE(std::holds_alternative<CircleMeasure>(res),
                    "k = " << k << ": " << std::get<InfeasibleReason>(res).detail);
    const CircleMeasure mu = std::get<CircleMeasure>(res);
    CHECK(circle_verify(mu, oracle::circle_moments(pts, k), 1e-8).ok());
    CHECK(mu.atoms.size() == pts.t.size());
    for (const Rat& t : pts.t) {
      const auto [x, y] = oracle::circle_point(t);
      CHECK(nearest(mu, to_double(x), to_double(y)) < 1e-7);
    }
  }
}

TEST_CASE("circle solve restores the mass the parametrization cannot see") {
  // Three parameter points leave the singular branch; the remaining mass
  // belongs at (1, 0).
  oracle::CirclePoints pts;
  pts.t = {Rat(-1), Rat(1, 4), Rat(2)};
  pts.densities = {Rat(1), Rat(1, 2), Rat(5, 4)};
  pts.mass_at_one = Rat(7, 8);
  const BivariateSequence beta = oracle::circle_moments(pts, 2);

  const auto res = circle_solve(beta);
  REQUIRE_MESSAGE(std::holds_alternative<CircleMeasure>(res),
                  std::get<InfeasibleReason>(res).detail);
  const CircleMeasure mu = std::get<CircleMeasure>(res);
  CHECK(circle_verify(mu, beta, 1e-8).ok());
  REQUIRE(mu.atoms.size() == 4);
  bool found = false;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i)
    if (std::hypot(mu.atoms[i].x - 1.0, mu.atoms[i].y) < 1e-9 &&
        std::abs(mu.densities[i] - 0.875) < 1e-8)
      found = true;
  CHECK_MESSAGE(found, "no atom carries the mass at (1, 0)");
}

TEST_CASE("circle solve rejects bad data") {
  const BivariateSequence beta = oracle::circle_moments(four_points(), 2);
  CHECK_THROWS_AS(circle_solve(oracle::circle_moments(four_points(), 1)),
                  std::invalid_argument);

  std::map<std::pair<int, int>, Rat> vals;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) vals[{i, j}] = beta.at(i, j);
  vals[{0, 2}] -= Rat(1, 10);
  const auto broken = circle_solve(BivariateSequence(2, vals));
  REQUIRE(std::holds_alternative<InfeasibleReason>(broken));
  CHECK(std::get<InfeasibleReason>(broken).kind == InfeasibleKind::positivity_violated);

  oracle::CirclePoints signed_pts = four_points();
  signed_pts.densities[0] = Rat(-2);
  const auto indef = circle_solve(oracle::circle_moments(signed_pts, 2));
  REQUIRE(std::holds_alternative<InfeasibleReason>(indef));
  CHECK(std::get<InfeasibleReason>(indef).kind == InfeasibleKind::positivity_violated);
}

TEST_CASE("circle verification flags defects") {
  const BivariateSequence beta = oracle::circle_moments(four_points(), 2);
  const auto res = circle_solve(beta);
  REQUIRE(std::holds_alternative<CircleMeasure>(res));
  CircleMeasure mu = std::get<CircleMeasure>(res);

  CircleMeasure off = mu;
  off.atoms[0].x += 1e-3;
  CHECK_FALSE(circle_verify(off, beta, 1e-8).on_circle);

  CircleMeasure wrong = mu;
  wrong.densities[0] *= 1.5;
  CHECK_FALSE(circle_verify(wrong, beta, 1e-8).moments_ok);

  CircleMeasure neg = mu;
  neg.densities[0] = -neg.densities[0];
  CHECK_FALSE(circle_verify(neg, beta, 1e-8).densities_positive);
}

TEST_CASE("strong case delegates to the rational solver on the line") {
  PoleSpec spec;
  spec.k0 = 1;
  spec.real = {{Rat(0), 2}};

  oracle::Rng g(61);
  const oracle::ExactMeasure m = oracle::rand_measure(g, 3, Rat(-3), Rat(3), {Rat(0)});
  const RationalMoments data = oracle::rational_moments(m, spec);

  const SolveResult res = strong_hamburger_solve(data, spec);
  REQUIRE(std::holds_alternative<AtomicMeasure>(res));
  const AtomicMeasure& mu = std::get<AtomicMeasure>(res);
  CHECK(verify_rtmp(mu, data, spec, 1e-8).ok());

  const SolveResult same = solve_rtmp(data, spec, ClosedSet::whole_line());
  REQUIRE(std::holds_alternative<AtomicMeasure>(same));
  CHECK(std::get<AtomicMeasure>(same).atoms == mu.atoms);

  PoleSpec off_origin;
  off_origin.real = {{Rat(1), 1}};
  RationalMoments dummy;
  dummy.gamma0 = {Rat(1)};
  dummy.real = {{Rat(1), Rat(1)}};
  CHECK_THROWS_AS(strong_hamburger_solve(dummy, off_origin), std::invalid_argument);
}
