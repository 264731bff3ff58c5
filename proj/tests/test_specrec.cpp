#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supervol/kdv.hpp"
#include "supervol/specrec.hpp"
#include "supervol/volumes.hpp"

using namespace supervol;

TEST_CASE("recursion prefactor kappa") {
  // theta curve: kappa = 1/(2 cos(2 pi z)) = 1/2 + pi^2 z^2 + ...
  const LaurentSeries kt = recursion_prefactor(SpectralCurve::theta(40), 10);
  CHECK(kt.coeff(0) == PiScalar(Rat(1, 2)));
  CHECK(kt.coeff(2) == PiScalar::pi2pow(Rat(1), 1));
  CHECK(kt.coeff(1) == PiScalar());
  CHECK(kt.is_even());

  // sine curve: kappa = pi/(z sin(2 pi z)) = 1/(2 z^2) + pi^2/3 + ...
  const LaurentSeries ks = recursion_prefactor(SpectralCurve::sine(40), 10);
  CHECK(ks.coeff(-2) == PiScalar(Rat(1, 2)));
  CHECK(ks.coeff(0) == PiScalar::pi2pow(Rat(1, 3), 1));
  CHECK(ks.is_even());

  // Airy: kappa = 1/(2 z^2) exactly
  const LaurentSeries ka = recursion_prefactor(SpectralCurve::airy(40), 10);
  CHECK(ka.coeff(-2) == PiScalar(Rat(1, 2)));
  for (int e = -1; e < 10; ++e) CHECK(ka.coeff(e) == PiScalar());

  // degenerate curve rejected
  LaurentSeries zero(-1, 20);
  CHECK_THROWS_AS((void)recursion_prefactor(SpectralCurve{"bad", zero}, 10), std::domain_error);
}

TEST_CASE("irregularity flags") {
  CHECK(SpectralCurve::theta(20).irregular());
  CHECK(!SpectralCurve::sine(20).irregular());
  CHECK(!SpectralCurve::airy(20).irregular());
}

TEST_CASE("theta-curve correlators") {
  CorrelatorEngine eng(SpectralCurve::theta(200), 5);
  // omega_{1,1} = dz/(8 z^2)
  CorrForm w11{1, 1, {}};
  w11.add_term(Expo{0}, PiScalar(Rat(1, 8)));
  CHECK(eng.correlator(1, 1) == w11);

  // omega_{0,n} vanish
  CHECK(eng.correlator(0, 3).terms.empty());
  CHECK(eng.correlator(0, 4).terms.empty());

  // omega_{2,1} = laplace bridge of V^Theta_{2,1}: 9/128 z^-4 + 9 pi^2/64 z^-2
  const CorrForm& w21 = eng.correlator(2, 1);
  CHECK(w21.terms.at(Expo{1}) == PiScalar(Rat(9, 128)));
  CHECK(w21.terms.at(Expo{0}) == PiScalar::pi2pow(Rat(9, 64), 1));
  CHECK(w21 == laplace_bridge(vol_theta(2, 1), 2));

  // bridge equivalence across the budget
  for (auto [g, n] : {std::pair<unsigned, unsigned>{1, 2}, {1, 3}, {2, 2}, {3, 1}})
    CHECK(eng.correlator(g, n) == laplace_bridge(vol_theta(g, n), g));

  // pole bound: at most 2g per variable on the irregular curve
  CHECK(eng.correlator(3, 1).max_pole_order() <= 6);
}

TEST_CASE("sine-curve correlators match Mirzakhani volumes") {
  CorrelatorEngine eng(SpectralCurve::sine(200), 4);
  CHECK(eng.correlator(0, 3) == laplace_bridge(vol_wp(0, 3), 0));
  CHECK(eng.correlator(1, 1) == laplace_bridge(vol_wp(1, 1), 1));
  CHECK(eng.correlator(0, 4) == laplace_bridge(vol_wp(0, 4), 0));
  CHECK(eng.correlator(1, 2) == laplace_bridge(vol_wp(1, 2), 1));
  CHECK(eng.correlator(2, 1) == laplace_bridge(vol_wp(2, 1), 2));
}

TEST_CASE("Airy classics") {
  CorrelatorEngine eng(SpectralCurve::airy(100), 4);
  CorrForm w03{0, 3, {}};
  w03.add_term(Expo{0, 0, 0}, PiScalar(Rat(1)));
  CHECK(eng.correlator(0, 3) == w03);
  CorrForm w11{1, 1, {}};
  w11.add_term(Expo{1}, PiScalar(Rat(1, 8)));
  CHECK(eng.correlator(1, 1) == w11);
}

TEST_CASE("laplace bridge monomial rule") {
  // V = L^2 -> 3! dz/z^4
  const EvenPoly v = EvenPoly::monomial(1, 0, 1, PiScalar(Rat(1)));
  const CorrForm w = laplace_bridge(v, 0);
  CHECK(w.terms.at(Expo{1}) == PiScalar(Rat(6)));
  // V^Theta_{1,1} = 1/8 -> dz/(8 z^2)
  const CorrForm w2 = laplace_bridge(vol_theta(1, 1), 1);
  CHECK(w2.terms.at(Expo{0}) == PiScalar(Rat(1, 8)));
}

TEST_CASE("TR dilaton equation") {
  CorrelatorEngine theta(SpectralCurve::theta(200), 4);
  auto [lhs, rhs] = theta.dilaton_check(1, 1);
  // both sides equal -dz/(8 z^2)
  CHECK(lhs == rhs);
  CHECK(lhs.terms.at(Expo{0}) == PiScalar(Rat(-1, 8)));

  CorrelatorEngine sine(SpectralCurve::sine(200), 4);
  auto [l2, r2] = sine.dilaton_check(0, 3);
  CHECK(l2 == r2);
  // (2 - 2g - n) = -1 against omega_{0,3}
  CHECK(l2.terms.at(Expo{0, 0, 0}) == PiScalar(Rat(-1)));

  for (auto [g, n] : {std::pair<unsigned, unsigned>{1, 1}, {1, 2}, {2, 1}}) {
    auto [a, b] = theta.dilaton_check(g, n);
    CHECK(a == b);
    auto [c, d] = sine.dilaton_check(g, n);
    CHECK(c == d);
  }
}

TEST_CASE("symplectic invariants reproduce the n = 0 volumes") {
  CorrelatorEngine theta(SpectralCurve::theta(200), 3);
  CHECK(theta.symplectic_invariant(2) == theta_n0(2));
  CorrelatorEngine sine(SpectralCurve::sine(200), 3);
  CHECK(sine.symplectic_invariant(2) == wp_n0(2));
}

TEST_CASE("tr partition equals the volume partition function termwise") {
  const TauBounds b{1, 2, 3};
  CorrelatorEngine theta(SpectralCurve::theta(260), 5);
  const TruncSeries<PiScalar> zs = theta.partition(b.G, b.N, b.K);
  const TruncSeries<PiScalar> zk = kappa_partition(VolFlavor::Theta, b);
  const SeriesRegion r = SeriesRegion::meet(zs.region(), zk.region());
  std::map<SeriesMono, std::pair<PiScalar, PiScalar>> both;
  for (const auto& [m, c] : zs.terms())
    if (r.contains(m)) both[m].first = c;
  for (const auto& [m, c] : zk.terms())
    if (r.contains(m)) both[m].second = c;
  CHECK(!both.empty());
  for (const auto& [m, lr] : both) {
    INFO(m.str());
    CHECK(lr.first == lr.second);
  }
}

TEST_CASE("partition log blocks anchor z^-2 to t_0") {
  CorrelatorEngine theta(SpectralCurve::theta(200), 3);
  const auto block = theta.partition_log_block(1, 1);
  SeriesMono t0;
  t0.t = {1};
  CHECK(block.at(t0) == PiScalar(Rat(1, 8)));
}
