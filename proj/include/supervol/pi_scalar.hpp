#ifndef SUPERVOL_PI_SCALAR_HPP
#define SUPERVOL_PI_SCALAR_HPP

#include <vector>

#include "supervol/rat.hpp"

namespace supervol {

// Element of Q[pi^2], stored as c_0 + c_1*pi^2 + c_2*pi^4 + ...
// Trailing zero coefficients are trimmed; the zero element has empty coeffs.
// Every constant appearing in the recursions (zeta(2i), a_n, kernel moments)
// lives in this ring, which keeps all cross-checks exact-equality tests.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(const Rat& r) { if (!r.is_zero()) c_ = {r}; }
  PiScalar(long n) : PiScalar(Rat(n)) {}

  // r * pi^(2*pi2_power)
  static PiScalar pi2pow(const Rat& r, unsigned pi2_power);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Largest j with nonzero pi^(2j) coefficient; -1 for zero.
  int pi2_degree() const { return static_cast<int>(c_.size()) - 1; }
  // True when exactly one pi-power is present (or the value is zero).
  bool is_pi2_homogeneous(unsigned j) const;
  Rat coeff(unsigned j) const { return j < c_.size() ? c_[j] : Rat(); }
  // The purely rational part; throws unless the value is rational.
  Rat rational_part() const;

  PiScalar operator-() const;
  PiScalar& operator+=(const PiScalar& o);
  PiScalar& operator-=(const PiScalar& o);
  PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(const PiScalar& a, const PiScalar& b);

  PiScalar& operator*=(const Rat& r) { return *this = *this * r; }
  friend PiScalar operator*(const PiScalar& a, const Rat& r);
  PiScalar div_rat(const Rat& r) const;

  friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }
  friend bool operator<(const PiScalar& a, const PiScalar& b);

  // Approximate evaluation with a decimal pi^2 -- display/quadrature only.
  double to_double_approx() const;

  // Human form, e.g. "3/256", "9/64*pi^2", "1/8 + 2*pi^2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace supervol

#endif
