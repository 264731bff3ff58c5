#ifndef SUPERVOL_KDV_HPP
#define SUPERVOL_KDV_HPP

#include <map>

#include "supervol/trunc_series.hpp"
#include "supervol/virasoro.hpp"
#include "supervol/volumes.hpp"

namespace supervol {

// Weighted homogeneous polynomial p_j(s_1..s_j) of degree j defined by
// 1 - exp(-sum s_i z^i) = sum_j p_j z^j. Exponent slot i-1 holds s_i.
struct PPoly {
  unsigned j = 0;
  std::map<Expo, Rat> terms;
};

PPoly p_poly(unsigned j);
// p_j at s_vec = (s, 0, 0, ...): equals (-1)^{j-1} s^j / j!.
PiScalar p_poly_at_single(unsigned j, const PiScalar& s);

// U = hbar d^2/dt_0^2 log Z; residual of U_{t1} = U U_{t0} + hbar/12 U_{t0t0t0}.
template <typename C>
TruncSeries<C> kdv_residual(const TruncSeries<C>& Z) {
  const TruncSeries<C> U = Z.log_().deriv_t(0).deriv_t(0).mul_hbar(1);
  return U.deriv_t(1) - U * U.deriv_t(0) - U.deriv_t(0).deriv_t(0).deriv_t(0).mul_hbar(1)
                                               .scaled(C(Rat(1, 12)));
}

// U(t_0, 0, 0, ...) - hbar/(8 (1-t_0)^2); identically 0 for Z^Theta.
template <typename C>
TruncSeries<C> bgw_initial(const TruncSeries<C>& Z) {
  TruncSeries<C> U = Z.log_().deriv_t(0).deriv_t(0).mul_hbar(1).specialize_to_t0();
  SeriesRegion r = U.region();
  TruncSeries<C> ref(r);
  for (int m = 0; 3 + m <= r.cap_bound && m <= r.max_deg; ++m) {
    SeriesMono mono;
    mono.h = 1;
    if (m > 0) mono.t.assign(1, static_cast<unsigned>(m));
    ref.add_term(mono, C(Rat(m + 1, 8)));
  }
  return U - ref;
}

// Z built from full (or top-part) volume polynomials through the dictionary
// L_i^{2k} = 2^k k! t_k, including the L^0 -> t_0 rule.
TruncSeries<PiScalar> kappa_partition(VolFlavor flavor, const TauBounds& b);
TruncSeries<PiScalar> kappa_partition_log(VolFlavor flavor, const TauBounds& b);

struct TranslationCheck {
  bool ok = true;
  // per-coefficient diffs on failure: monomial -> (lhs, rhs)
  std::vector<std::tuple<SeriesMono, PiScalar, PiScalar>> diffs;
  SeriesRegion compared;
  size_t coefficients_compared = 0;
};

// Thm (higherWPtrans) at the s = (2 pi^2, 0, ...) slice:
//   Theta: kappa_partition(Theta) == Z^BGW(t_k <- t_k - (-1)^k s^k/k!)
//   WP:    kappa_partition(WP)    == Z^KW (t_j <- t_j + (-1)^j s^{j-1}/(j-1)!, j >= 2)
// compared termwise over the (G, N, K) region of `b`.
TranslationCheck verify_translation(VolFlavor flavor, const TauBounds& b);

}  // namespace supervol

#endif
