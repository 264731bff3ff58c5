#ifndef SUPERVOL_SPECREC_HPP
#define SUPERVOL_SPECREC_HPP

#include <map>
#include <mutex>
#include <string>

#include "supervol/laurent.hpp"
#include "supervol/poly.hpp"
#include "supervol/trunc_series.hpp"

namespace supervol {

// Correlator omega_{g,n} on a one-branch-point curve x = z^2/2: a finite sum
// sum_beta c_beta prod_i dz_i / z_i^{2 beta_i + 2}. Only even pole orders are
// stored, equivalently the form is odd under z_i -> -z_i in every variable.
struct CorrForm {
  unsigned g = 0;
  unsigned n = 0;
  std::map<Expo, PiScalar> terms;  // beta vectors of length n

  void add_term(const Expo& beta, const PiScalar& c);
  CorrForm& operator+=(const CorrForm& o);
  CorrForm scaled(const PiScalar& s) const;
  friend bool operator==(const CorrForm& a, const CorrForm& b) {
    return a.g == b.g && a.n == b.n && a.terms == b.terms;
  }
  friend bool operator!=(const CorrForm& a, const CorrForm& b) { return !(a == b); }
  bool is_symmetric() const;
  unsigned max_pole_order() const;  // max over variables of 2 beta + 2
  std::string str() const;
};

// Local spectral curve x = z^2/2, B = Cauchy kernel, y given as a Laurent
// series with lowest exponent >= -1. Irregular when y has the simple pole.
struct SpectralCurve {
  std::string name;
  LaurentSeries y;
  bool irregular() const;

  static SpectralCurve theta(int order);  // y = cos(2 pi z)/z
  static SpectralCurve sine(int order);   // y = sin(2 pi z)/(2 pi)
  static SpectralCurve airy(int order);   // y = z
};

// kappa(z) = 1/(z (y(z) - y(-z))); even, encodes the recursion kernel.
LaurentSeries recursion_prefactor(const SpectralCurve& curve, int order);

// Memoized topological recursion in principal-part form.
class CorrelatorEngine {
 public:
  // max_euler bounds the keys this engine will serve (sizes the kappa series)
  CorrelatorEngine(SpectralCurve curve, int max_euler);

  const SpectralCurve& curve() const { return curve_; }
  const CorrForm& correlator(unsigned g, unsigned n);

  // Pole-order bound per variable: 2g (irregular) or 6g-4+2n (regular).
  unsigned pole_bound(unsigned g, unsigned n) const;

  // Residue side and (2-2g-n) side of the TR dilaton equation, with
  // Phi = antiderivative of omega_{0,1} = -y dx.
  std::pair<CorrForm, CorrForm> dilaton_check(unsigned g, unsigned n);

  // One log-block of the partition function: hbar^{g-1}/n! omega_{g,n} in the
  // basis xi_k = (2k-1)!! dz/z^{2k}, pole z^{-(2b+2)} -> t_b / (2b+1)!!.
  std::map<SeriesMono, PiScalar> partition_log_block(unsigned g, unsigned n);

  // omega_{g,0} via the dilaton equation: Res Phi omega_{g,1} / (2 - 2g).
  PiScalar symplectic_invariant(unsigned g);

  // Z^S = exp sum_{g,n} hbar^{g-1}/n! omega_{g,n}|_{xi-basis}, n = 0 included
  // through the symplectic invariants; equals the volume partition function.
  TruncSeries<PiScalar> partition(int G, int N, int K);

 private:
  CorrForm compute(unsigned g, unsigned n);

  SpectralCurve curve_;
  int max_euler_;
  LaurentSeries kappa_;
  LaurentSeries phi_;  // antiderivative of -y z dz (odd)
  std::mutex mu_;
  std::map<std::pair<unsigned, unsigned>, CorrForm> memo_;
};

// c_alpha prod L_i^{2 alpha_i} -> c_alpha prod (2 alpha_i + 1)! / z^{2 alpha_i + 2}.
CorrForm laplace_bridge(const EvenPoly& v, unsigned g);

}  // namespace supervol

#endif
