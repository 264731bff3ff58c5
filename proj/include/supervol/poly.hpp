#ifndef SUPERVOL_POLY_HPP
#define SUPERVOL_POLY_HPP

#include <map>
#include <vector>

#include "supervol/pi_scalar.hpp"

namespace supervol {

using Expo = std::vector<unsigned>;

// Symmetric-friendly sparse multivariate polynomial in the squares of the
// length variables: a term alpha -> c stands for c * prod_i L_i^(2*alpha_i).
// Volumes V^Theta, V^WP and the F^M moment polynomials live here.
class EvenPoly {
 public:
  explicit EvenPoly(unsigned arity = 0) : arity_(arity) {}

  static EvenPoly constant(unsigned arity, const PiScalar& c);
  // c * L_i^(2k)
  static EvenPoly monomial(unsigned arity, unsigned i, unsigned k, const PiScalar& c);

  unsigned arity() const { return arity_; }
  const std::map<Expo, PiScalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  // Total degree in the L_i^2 (max |alpha|); -1 for the zero polynomial.
  int degree() const;

  void add_term(const Expo& e, const PiScalar& c);
  PiScalar coeff(const Expo& e) const;

  EvenPoly operator-() const;
  EvenPoly& operator+=(const EvenPoly& o);
  EvenPoly& operator-=(const EvenPoly& o);
  friend EvenPoly operator+(EvenPoly a, const EvenPoly& b) { return a += b; }
  friend EvenPoly operator-(EvenPoly a, const EvenPoly& b) { return a -= b; }
  friend EvenPoly operator*(const EvenPoly& a, const EvenPoly& b);
  friend EvenPoly operator*(const EvenPoly& a, const PiScalar& s);
  friend bool operator==(const EvenPoly& a, const EvenPoly& b) {
    return a.arity_ == b.arity_ && a.t_ == b.t_;
  }
  friend bool operator!=(const EvenPoly& a, const EvenPoly& b) { return !(a == b); }

  // Widens to `arity` variables, placing the current block at `offset`.
  EvenPoly embed(unsigned arity, unsigned offset) const;

  // Eliminates variable i by substituting L_i^2 := value.
  EvenPoly substitute_L2(unsigned i, const PiScalar& value) const;

  // int_0^{L_k} x * p(..., x, ...) dx where x replaces variable k.
  // The result is even again: L^(2a) integrates against x to L^(2a+2)/(2a+2).
  EvenPoly integrate_xdx(unsigned k) const;

  // dp/dL_k = L_k * Q(L^2); returns Q (arity unchanged).
  EvenPoly derivative_over_L(unsigned k) const;

  // Top-degree homogeneous part (in the L_i^2 grading).
  EvenPoly top_part() const;

  EvenPoly permuted(const std::vector<unsigned>& perm) const;
  bool is_symmetric() const;

  // Every coefficient at |alpha| = d is a rational multiple of
  // pi^(2*(top_degree - d)). Used by the grading invariant checks.
  bool has_pi_grading(unsigned top_degree) const;

  std::string str(const std::string& var = "L") const;

 private:
  unsigned arity_;
  std::map<Expo, PiScalar> t_;
};

// Sparse polynomial with raw exponents in one or two variables; the odd
// intermediates x*V and x*y*P and the moments F_{2k+1} are represented here.
class RawPoly {
 public:
  explicit RawPoly(unsigned arity = 1) : arity_(arity) {}

  unsigned arity() const { return arity_; }
  const std::map<Expo, PiScalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Expo& e, const PiScalar& c);
  PiScalar coeff(const Expo& e) const;

  RawPoly& operator+=(const RawPoly& o);
  friend RawPoly operator*(const RawPoly& a, const PiScalar& s);
  friend bool operator==(const RawPoly& a, const RawPoly& b) {
    return a.arity_ == b.arity_ && a.t_ == b.t_;
  }

  bool all_exponents_odd() const;

  std::string str(const std::string& var = "t") const;

 private:
  unsigned arity_;
  std::map<Expo, PiScalar> t_;
};

}  // namespace supervol

#endif
