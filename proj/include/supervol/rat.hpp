#ifndef SUPERVOL_RAT_HPP
#define SUPERVOL_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supervol {

// Exact rational number. Always reduced, denominator > 0, zero is 0/1.
// Thin value wrapper around GMP's mpq so the rest of the code base never
// touches gmpxx expression templates directly.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, unsigned long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  // Parses "n", "n/d" or decimal-free integer strings of arbitrary size.
  static Rat parse(const std::string& s);

  static Rat factorial(unsigned n);
  static Rat binomial(unsigned n, unsigned k);
  // (2k-1)!! with (-1)!! = 1.
  static Rat double_factorial_odd(long m);

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  // "n" when the denominator is 1, else "n/d".
  std::string str() const;

  double to_double() const { return v_.get_d(); }

  Rat pow(unsigned e) const;

 private:
  mpq_class v_;
};

}  // namespace supervol

#endif
