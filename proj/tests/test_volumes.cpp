#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "supervol/parallel.hpp"
#include "supervol/volumes.hpp"

using namespace supervol;

namespace {

EvenPoly sum_L2(unsigned n) {
  EvenPoly s(n);
  for (unsigned i = 0; i < n; ++i) s += EvenPoly::monomial(n, i, 1, PiScalar(Rat(1)));
  return s;
}

EvenPoly const_pi2(unsigned n, const Rat& r, unsigned p) {
  return EvenPoly::constant(n, PiScalar::pi2pow(r, p));
}

}  // namespace

TEST_CASE("Theta base cases and small volumes") {
  CHECK(vol_theta(1, 1) == EvenPoly::constant(1, PiScalar(Rat(1, 8))));
  CHECK(vol_theta(0, 3).is_zero());
  CHECK(vol_theta(0, 5).is_zero());
  CHECK(vol_theta(1, 2) == EvenPoly::constant(2, PiScalar(Rat(1, 8))));
  // (1,3): D-term vanishes, two R-terms each contribute (1/8) L1
  CHECK(vol_theta(1, 3) == EvenPoly::constant(3, PiScalar(Rat(1, 4))));

  // V_{2,1} = (3/256)(L^2 + 12 pi^2)
  EvenPoly v21(1);
  v21.add_term(Expo{1}, PiScalar(Rat(3, 256)));
  v21.add_term(Expo{0}, PiScalar::pi2pow(Rat(9, 64), 1));
  CHECK(vol_theta(2, 1) == v21);

  // V_{3,1} = (24/(2^16*5))(16*5*227 pi^4 + 336*5 pi^2 L^2 + 25 L^4)
  EvenPoly v31(1);
  const Rat pre = Rat(24) / (Rat(65536) * Rat(5));
  v31.add_term(Expo{0}, PiScalar::pi2pow(pre * Rat(16 * 5 * 227), 2));
  v31.add_term(Expo{1}, PiScalar::pi2pow(pre * Rat(336 * 5), 1));
  v31.add_term(Expo{2}, PiScalar(pre * Rat(25)));
  CHECK(vol_theta(3, 1) == v31);
}

TEST_CASE("top part of V_{1,1} x V_{1,1} split feeds V_{2,1}") {
  const EvenPoly prod = vol_theta(1, 1) * vol_theta(1, 1);
  CHECK(prod.coeff(Expo{0}) == PiScalar(Rat(1, 64)));
}

TEST_CASE("Mirzakhani base cases and small volumes") {
  CHECK(vol_wp(0, 3) == EvenPoly::constant(3, PiScalar(Rat(1))));

  EvenPoly v11(1);
  v11.add_term(Expo{0}, PiScalar::pi2pow(Rat(1, 12), 1));
  v11.add_term(Expo{1}, PiScalar(Rat(1, 48)));
  CHECK(vol_wp(1, 1) == v11);

  // V_{0,4} = (1/2)(4 pi^2 + sum L^2)
  const EvenPoly v04 = const_pi2(4, Rat(2), 1) + sum_L2(4) * PiScalar(Rat(1, 2));
  CHECK(vol_wp(0, 4) == v04);

  // V_{1,2} = (1/192)(4 pi^2 + S)(12 pi^2 + S); the recursion output, which
  // also satisfies the string and dilaton identities below
  const EvenPoly s = sum_L2(2);
  const EvenPoly a = const_pi2(2, Rat(4), 1) + s;
  const EvenPoly b = const_pi2(2, Rat(12), 1) + s;
  CHECK(vol_wp(1, 2) == (a * b) * PiScalar(Rat(1, 192)));

  // V_{2,1} = (4pi^2+L^2)(12pi^2+L^2)(6960pi^4+384pi^2 L^2+5L^4)/2211840
  EvenPoly f1(1), f2(1), f3(1);
  f1.add_term(Expo{0}, PiScalar::pi2pow(Rat(4), 1));
  f1.add_term(Expo{1}, PiScalar(Rat(1)));
  f2.add_term(Expo{0}, PiScalar::pi2pow(Rat(12), 1));
  f2.add_term(Expo{1}, PiScalar(Rat(1)));
  f3.add_term(Expo{0}, PiScalar::pi2pow(Rat(6960), 2));
  f3.add_term(Expo{1}, PiScalar::pi2pow(Rat(384), 1));
  f3.add_term(Expo{2}, PiScalar(Rat(5)));
  CHECK(vol_wp(2, 1) == (f1 * f2 * f3) * PiScalar(Rat(1, 2211840)));
}

TEST_CASE("substitution example: V^Theta_{2,1} at L^2 = -4 pi^2") {
  const EvenPoly v = vol_theta(2, 1).substitute_L2(0, PiScalar::pi2pow(Rat(-4), 1));
  CHECK(v.coeff(Expo{}) == PiScalar::pi2pow(Rat(3, 32), 1));
}

TEST_CASE("dilaton evaluation identities") {
  for (unsigned g = 1; g <= 3; ++g)
    for (unsigned n = 1; 2 * g - 1 + n <= 6; ++n) {
      auto [lhs, rhs] = dilaton_eval_theta(g, n);
      CHECK(lhs == rhs);
    }
  CHECK(theta_n0(2) == PiScalar::pi2pow(Rat(3, 64), 1));
}

TEST_CASE("string/dilaton identities for WP") {
  for (auto [g, n] :
       {std::pair<unsigned, unsigned>{0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
    const StringDilatonReport r = string_dilaton_wp(g, n);
    CHECK(r.id1_lhs == r.id1_rhs);
    CHECK(r.id2_lhs == r.id2_rhs);
  }
  CHECK_THROWS_AS((void)string_dilaton_wp(0, 0), std::invalid_argument);
}

TEST_CASE("top recursions match top parts") {
  for (auto [g, n] : {std::pair<unsigned, unsigned>{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    CHECK(vol_theta(g, n).top_part() == vol_theta_top(g, n));
    CHECK(vol_wp(g, n).top_part() == vol_wp_top(g, n));
  }
  // Theta-top (2,1) = (3/256) L^2 ; WP-top (0,4) = (1/2) sum L^2
  CHECK(vol_theta_top(2, 1) == EvenPoly::monomial(1, 0, 1, PiScalar(Rat(3, 256))));
  CHECK(vol_wp_top(0, 4) == sum_L2(4) * PiScalar(Rat(1, 2)));
  // Theta-top (1,n): the constant is its own top part
  CHECK(vol_theta_top(1, 4) == EvenPoly::constant(4, PiScalar(Rat(3, 4))));
}

TEST_CASE("degrees, symmetry, pi-grading across the table") {
  for (unsigned g = 0; g <= 3; ++g)
    for (unsigned n = 1; stable(g, n) && 2 * g - 2 + n <= 5; ++n) {
      if (g >= 1) {
        const EvenPoly& t = vol_theta(g, n);
        CHECK(t.degree() == static_cast<int>(g) - 1);
        CHECK(t.is_symmetric());
        CHECK(t.has_pi_grading(g - 1));
      }
      const EvenPoly& w = vol_wp(g, n);
      CHECK(w.degree() == 3 * static_cast<int>(g) - 3 + static_cast<int>(n));
      CHECK(w.is_symmetric());
      CHECK(w.has_pi_grading(3 * g - 3 + n));
    }
}

TEST_CASE("unstable keys are rejected") {
  CHECK_THROWS_AS((void)vol_theta(0, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)vol_wp(0, 1), std::invalid_argument);
}

TEST_CASE("normalizations") {
  CHECK(normalize_super(1, 1, SuperNorm::VhatWP) ==
        EvenPoly::constant(1, PiScalar(Rat(-1, 16))));
  CHECK(normalize_super(1, 1, SuperNorm::VSW) == EvenPoly::constant(1, PiScalar(Rat(-1, 8))));
  // V^SW_{g,n} = (-1)^n 2^{1-g} V^Theta_{g,n}
  CHECK(normalize_super(2, 2, SuperNorm::VSW) == vol_theta(2, 2) * PiScalar(Rat(1, 2)));
}

TEST_CASE("on-disk cache round trip is bit-identical") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "supervol_cache_test";
  fs::remove_all(dir);
  VolumeEngine& eng = VolumeEngine::instance();
  eng.clear_memory_cache();
  eng.set_cache_dir(dir.string());
  const EvenPoly fresh = vol_wp(1, 3);
  CHECK(fs::exists(dir / "wp_g1_n3.json"));
  eng.clear_memory_cache();
  const EvenPoly reloaded = vol_wp(1, 3);  // served from disk
  CHECK(fresh == reloaded);
  eng.set_cache_dir(std::nullopt);
  eng.clear_memory_cache();
  fs::remove_all(dir);
}

TEST_CASE("parallel kernels agree with the serial reference bit for bit") {
  const bool was = parallel::enabled();
  parallel::set_enabled(false);
  VolumeEngine::instance().clear_memory_cache();
  const EvenPoly serial_v = vol_wp(2, 2);
  parallel::set_enabled(true);
  VolumeEngine::instance().clear_memory_cache();
  const EvenPoly parallel_v = vol_wp(2, 2);
  parallel::set_enabled(was);
  CHECK(serial_v == parallel_v);
}
