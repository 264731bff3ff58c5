#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supervol/kernels.hpp"

using namespace supervol;

namespace {

// Independent oracle for a_n: solve cos(2 pi x) * S(x) = 1 coefficientwise
// with a straight linear pass (no shared code with KernelTable).
PiScalar sec_oracle(unsigned n) {
  std::vector<PiScalar> cosc(n + 1), s(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    Rat c = Rat(4).pow(m) / Rat::factorial(2 * m);
    if (m % 2 == 1) c = -c;
    cosc[m] = PiScalar::pi2pow(c, m);
  }
  for (unsigned m = 0; m <= n; ++m) {
    PiScalar acc = m == 0 ? PiScalar(Rat(1)) : PiScalar();
    for (unsigned r = 1; r <= m; ++r) acc -= cosc[r] * s[m - r];
    s[m] = acc;
  }
  return s[n] * Rat::factorial(2 * n);
}

}  // namespace

TEST_CASE("sec series coefficients a_n") {
  KernelTable& kt = KernelTable::instance();
  CHECK(kt.sec_coeff(0) == PiScalar(Rat(1)));
  CHECK(kt.sec_coeff(1) == PiScalar::pi2pow(Rat(4), 1));
  CHECK(kt.sec_coeff(2) == PiScalar::pi2pow(Rat(80), 2));
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(kt.sec_coeff(n) == sec_oracle(n));
    CHECK(kt.sec_coeff(n).is_pi2_homogeneous(n));
  }
}

TEST_CASE("zeta at even integers") {
  KernelTable& kt = KernelTable::instance();
  CHECK(kt.zeta_even(0) == PiScalar(Rat(-1, 2)));
  CHECK(kt.zeta_even(1) == PiScalar::pi2pow(Rat(1, 6), 1));
  CHECK(kt.zeta_even(2) == PiScalar::pi2pow(Rat(1, 90), 2));
  CHECK(kt.zeta_even(3) == PiScalar::pi2pow(Rat(1, 945), 3));
  for (unsigned i = 1; i <= 8; ++i) CHECK(kt.zeta_even(i).is_pi2_homogeneous(i));
}

TEST_CASE("F_{2k+1}: monic odd with pi-power graded coefficients") {
  KernelTable& kt = KernelTable::instance();
  const RawPoly f0 = kt.F(0);
  CHECK(f0.terms().size() == 1);
  CHECK(f0.coeff(Expo{1}) == PiScalar(Rat(1)));

  const RawPoly f1 = kt.F(1);
  CHECK(f1.coeff(Expo{3}) == PiScalar(Rat(1)));
  CHECK(f1.coeff(Expo{1}) == PiScalar::pi2pow(Rat(12), 1));

  for (unsigned k = 0; k <= 8; ++k) {
    const RawPoly f = kt.F(k);
    CHECK(f.all_exponents_odd());
    CHECK(f.coeff(Expo{2 * k + 1}) == PiScalar(Rat(1)));  // monic
    for (const auto& [e, c] : f.terms()) {
      CHECK(e[0] <= 2 * k + 1);
      CHECK(c.is_pi2_homogeneous((2 * k + 1 - e[0]) / 2));
    }
  }
}

TEST_CASE("F^M_{2k+1}: degree 2k+2 with leading (2k+1)!/(2k+2)") {
  KernelTable& kt = KernelTable::instance();
  const EvenPoly fm0 = kt.FM(0);
  CHECK(fm0.coeff(Expo{1}) == PiScalar(Rat(1, 2)));
  CHECK(fm0.coeff(Expo{0}) == PiScalar::pi2pow(Rat(2, 3), 1));

  // F^M_3 = t^4/4 + 2 pi^2 t^2 + 28 pi^4/15
  const EvenPoly fm1 = kt.FM(1);
  CHECK(fm1.coeff(Expo{2}) == PiScalar(Rat(1, 4)));
  CHECK(fm1.coeff(Expo{1}) == PiScalar::pi2pow(Rat(2), 1));
  CHECK(fm1.coeff(Expo{0}) == PiScalar::pi2pow(Rat(28, 15), 2));

  for (unsigned k = 0; k <= 8; ++k) {
    const EvenPoly fm = kt.FM(k);
    CHECK(fm.degree() == static_cast<int>(k) + 1);
    // leading coefficient t^{2k+2}/(2k+2) per the displayed F^M formula
    CHECK(fm.coeff(Expo{k + 1}) == PiScalar(Rat(1, 2 * static_cast<unsigned long>(k) + 2)));
    for (const auto& [e, c] : fm.terms()) CHECK(c.is_pi2_homogeneous(k + 1 - e[0]));
  }
}

TEST_CASE("intD: x y -> F_3/3! and linearity") {
  KernelTable& kt = KernelTable::instance();
  RawPoly xy(2);
  xy.add_term(Expo{1, 1}, PiScalar(Rat(1)));
  const RawPoly img = kt.intD(xy);
  // L^3/6 + 2 pi^2 L
  CHECK(img.coeff(Expo{3}) == PiScalar(Rat(1, 6)));
  CHECK(img.coeff(Expo{1}) == PiScalar::pi2pow(Rat(2), 1));

  CHECK(kt.intD(RawPoly(2)).is_zero());

  // x^3 y -> (3! 1! / 5!) F_5
  RawPoly x3y(2);
  x3y.add_term(Expo{3, 1}, PiScalar(Rat(1)));
  const RawPoly img2 = kt.intD(x3y);
  const RawPoly f5 = kt.F(2);
  const Rat scale = Rat(6) / Rat(120);
  for (const auto& [e, c] : f5.terms()) CHECK(img2.coeff(e) == c * scale);

  RawPoly even(2);
  even.add_term(Expo{2, 1}, PiScalar(Rat(1)));
  CHECK_THROWS_AS((void)kt.intD(even), std::invalid_argument);
}

TEST_CASE("intR: x -> L1 and x^3 -> L1(L1^2 + 3 Lj^2 + 12 pi^2)") {
  KernelTable& kt = KernelTable::instance();
  RawPoly x(1);
  x.add_term(Expo{1}, PiScalar(Rat(1)));
  const RawPoly r1 = kt.intR(x);
  CHECK(r1.terms().size() == 1);
  CHECK(r1.coeff(Expo{1, 0}) == PiScalar(Rat(1)));

  RawPoly x3(1);
  x3.add_term(Expo{3}, PiScalar(Rat(1)));
  const RawPoly r3 = kt.intR(x3);
  CHECK(r3.coeff(Expo{3, 0}) == PiScalar(Rat(1)));
  CHECK(r3.coeff(Expo{1, 2}) == PiScalar(Rat(3)));
  CHECK(r3.coeff(Expo{1, 0}) == PiScalar::pi2pow(Rat(12), 1));

  // oddness in L1: every monomial carries an odd L1 power
  for (unsigned k = 0; k <= 5; ++k) {
    RawPoly p(1);
    p.add_term(Expo{2 * k + 1}, PiScalar(Rat(1)));
    const RawPoly rp = kt.intR(p);
    for (const auto& [e, c] : rp.terms()) {
      CHECK(e[0] % 2 == 1);
      CHECK(e[1] % 2 == 0);
    }
  }
}

TEST_CASE("intDM / intRM derivative-form transforms") {
  KernelTable& kt = KernelTable::instance();
  RawPoly xy(2);
  xy.add_term(Expo{1, 1}, PiScalar(Rat(1)));
  const RawPoly img = kt.intDM(xy);
  // F^M_3 / 3! = t^4/24 + pi^2 t^2/3 + 14 pi^4/45
  CHECK(img.coeff(Expo{4}) == PiScalar(Rat(1, 24)));
  CHECK(img.coeff(Expo{2}) == PiScalar::pi2pow(Rat(1, 3), 1));
  CHECK(img.coeff(Expo{0}) == PiScalar::pi2pow(Rat(14, 45), 2));

  CHECK(kt.intDM(RawPoly(2)).is_zero());

  RawPoly x(1);
  x.add_term(Expo{1}, PiScalar(Rat(1)));
  const RawPoly rm = kt.intRM(x);
  // (L1^2 + Lj^2)/2 + 2 pi^2/3
  CHECK(rm.coeff(Expo{2, 0}) == PiScalar(Rat(1, 2)));
  CHECK(rm.coeff(Expo{0, 2}) == PiScalar(Rat(1, 2)));
  CHECK(rm.coeff(Expo{0, 0}) == PiScalar::pi2pow(Rat(2, 3), 1));
}
