#ifndef SUPERVOL_LAURENT_HPP
#define SUPERVOL_LAURENT_HPP

#include <stdexcept>
#include <vector>

#include "supervol/pi_scalar.hpp"

namespace supervol {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One-variable truncated Laurent series over Q[pi^2]: coefficients are known
// exactly for exponents in [lo, order) and nothing is claimed beyond `order`.
class LaurentSeries {
 public:
  LaurentSeries() : lo_(0), order_(0) {}
  LaurentSeries(int lo, int order) : lo_(lo), order_(order) {
    if (order < lo) throw std::invalid_argument("LaurentSeries: order < lo");
    c_.assign(static_cast<size_t>(order - lo), PiScalar());
  }

  static LaurentSeries monomial(int e, const PiScalar& c, int order);

  int lo() const { return lo_; }
  int order() const { return order_; }

  const PiScalar& at(int e) const;
  void set(int e, const PiScalar& c);
  PiScalar coeff(int e) const;  // 0 below lo, throws at/after order

  bool is_zero() const;
  // Lowest exponent with nonzero coefficient; throws if identically 0.
  int valuation() const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(const PiScalar& s) const;
  LaurentSeries shifted(int k) const;  // multiply by z^k

  // Multiplicative inverse; the leading coefficient must be a nonzero
  // rational (the only units of Q[pi^2]).
  LaurentSeries inverse(int order) const;

  LaurentSeries truncated(int order) const;

  // Antiderivative with zero constant; requires no z^{-1} coefficient.
  LaurentSeries antiderivative() const;

  LaurentSeries even_part() const;
  LaurentSeries odd_part() const;
  bool is_even() const { return odd_part().is_zero(); }
  bool is_odd() const { return even_part().is_zero(); }

  // Negative-exponent part filtered by exponent parity.
  LaurentSeries principal_part() const;
  LaurentSeries principal_part_even() const;
  LaurentSeries principal_part_odd() const;

  std::string str() const;

 private:
  int lo_;
  int order_;
  std::vector<PiScalar> c_;
};

}  // namespace supervol

#endif
