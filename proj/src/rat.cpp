#include "supervol/rat.hpp"

namespace supervol {

Rat Rat::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return num_str();
  return num_str() + "/" + den_str();
}

Rat Rat::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat Rat::binomial(unsigned n, unsigned k) {
  if (k > n) return Rat();
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

Rat Rat::double_factorial_odd(long m) {
  if (m <= 0) return Rat(1);  // (-1)!! = 1
  mpz_class r(1);
  for (long i = m; i >= 1; i -= 2) r *= i;
  return Rat(r);
}

Rat Rat::pow(unsigned e) const {
  Rat r(1), b(*this);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace supervol
