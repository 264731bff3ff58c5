#ifndef SUPERVOL_KERNELS_HPP
#define SUPERVOL_KERNELS_HPP

#include <mutex>
#include <vector>

#include "supervol/poly.hpp"

namespace supervol {

// Closed-form kernel data. The recursions never see the kernels H, D, R,
// H^M, D^M, R^M as functions; only their moment actions below exist (the
// quadrature tests reconstruct the kernels pointwise to cross-check).
//
//   F_{2k+1}(t)   = int_0^inf x^{2k+1} H(x,t) dx    (super kernel)
//   F^M_{2k+1}(t) = int_0^inf x^{2k+1} H^M(x,t) dx  (Mirzakhani kernel)
//
// F_{2k+1}(t) = sum_i C(2k+1,2i+1) a_{k-i} t^{2i+1}, monic odd of degree
// 2k+1, with 1/cos(2pi x) = sum a_n x^{2n}/(2n)!.
// F^M_{2k+1}(t)/(2k+1)! = sum_{i=0}^{k+1} zeta(2i)(2^{2i+1}-4) t^{2k+2-2i}
//                         / (2k+2-2i)!.
class KernelTable {
 public:
  static KernelTable& instance();

  // a_n = rational * pi^{2n}
  PiScalar sec_coeff(unsigned n);
  // zeta(2i) = rational * pi^{2i}; zeta(0) = -1/2
  PiScalar zeta_even(unsigned i);
  // Bernoulli number B_m (B_1 = -1/2 convention; only even m are used).
  Rat bernoulli(unsigned m);

  // F_{2k+1} as an odd polynomial in one variable.
  RawPoly F(unsigned k);
  // F^M_{2k+1} as an even polynomial in one variable (exponents in t^2).
  EvenPoly FM(unsigned k);

  // --- moment transforms -------------------------------------------------
  // Super flavor (exact integrals):
  //   intD:  x^{2i+1} y^{2j+1} -> (2i+1)!(2j+1)!/(2i+2j+3)! F_{2i+2j+3}(L1)
  //   intR:  x^{2k+1}          -> 1/2 F_{2k+1}(L1+Lj) + 1/2 F_{2k+1}(L1-Lj)
  // Mirzakhani flavor (derivative form, antidifferentiated downstream):
  //   intDM: x^{2i+1} y^{2j+1} -> (2i+1)!(2j+1)!/(2i+2j+3)! F^M_{2i+2j+3}(L1)
  //   intRM: x^{2k+1}          -> 1/2 F^M_{2k+1}(L1+Lj) + 1/2 F^M_{2k+1}(L1-Lj)
  // Results are RawPoly in L1 (arity 1) or (L1, Lj) (arity 2).
  RawPoly intD(const RawPoly& p);
  RawPoly intR(const RawPoly& p);
  RawPoly intDM(const RawPoly& p);
  RawPoly intRM(const RawPoly& p);

  // Per-monomial images, memoized; these feed both the transforms above and
  // the volume recursion loops.
  const RawPoly& d_image(unsigned i, unsigned j);        // odd in L1
  const RawPoly& r_image(unsigned k);                    // odd in L1, even in Lj
  const RawPoly& dm_image(unsigned i, unsigned j);       // even in L1
  const RawPoly& rm_image(unsigned k);                   // even in L1 and Lj

 private:
  KernelTable() = default;

  std::mutex mu_;
  std::vector<PiScalar> sec_;
  std::vector<PiScalar> zeta_;
  std::vector<Rat> bern_;
  std::vector<RawPoly> f_;
  std::vector<EvenPoly> fm_;
  std::map<std::pair<unsigned, unsigned>, RawPoly> dimg_, dmimg_;
  std::map<unsigned, RawPoly> rimg_, rmimg_;
};

}  // namespace supervol

#endif
