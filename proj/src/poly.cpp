#include "supervol/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace supervol {

namespace {
unsigned expo_sum(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0u); }
}

EvenPoly EvenPoly::constant(unsigned arity, const PiScalar& c) {
  EvenPoly p(arity);
  p.add_term(Expo(arity, 0), c);
  return p;
}

EvenPoly EvenPoly::monomial(unsigned arity, unsigned i, unsigned k, const PiScalar& c) {
  EvenPoly p(arity);
  Expo e(arity, 0);
  e.at(i) = k;
  p.add_term(e, c);
  return p;
}

int EvenPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(expo_sum(e)));
  return d;
}

void EvenPoly::add_term(const Expo& e, const PiScalar& c) {
  if (e.size() != arity_) throw std::invalid_argument("EvenPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PiScalar EvenPoly::coeff(const Expo& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? PiScalar() : it->second;
}

EvenPoly EvenPoly::operator-() const {
  EvenPoly r(arity_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

EvenPoly& EvenPoly::operator+=(const EvenPoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("EvenPoly: arity mismatch in +");
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

EvenPoly& EvenPoly::operator-=(const EvenPoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("EvenPoly: arity mismatch in -");
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

EvenPoly operator*(const EvenPoly& a, const EvenPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("EvenPoly: arity mismatch in *");
  EvenPoly r(a.arity_);
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      Expo e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

EvenPoly operator*(const EvenPoly& a, const PiScalar& s) {
  EvenPoly r(a.arity_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.t_) r.add_term(e, c * s);
  return r;
}

EvenPoly EvenPoly::embed(unsigned arity, unsigned offset) const {
  if (offset + arity_ > arity) throw std::invalid_argument("EvenPoly: embed out of range");
  EvenPoly r(arity);
  for (const auto& [e, c] : t_) {
    Expo w(arity, 0);
    std::copy(e.begin(), e.end(), w.begin() + offset);
    r.t_.emplace(std::move(w), c);
  }
  return r;
}

EvenPoly EvenPoly::substitute_L2(unsigned i, const PiScalar& value) const {
  if (i >= arity_) throw std::invalid_argument("EvenPoly: substitute index out of range");
  EvenPoly r(arity_ - 1);
  for (const auto& [e, c] : t_) {
    PiScalar v = c;
    for (unsigned p = 0; p < e[i]; ++p) v = v * value;
    Expo w;
    w.reserve(arity_ - 1);
    for (unsigned j = 0; j < arity_; ++j)
      if (j != i) w.push_back(e[j]);
    r.add_term(w, v);
  }
  return r;
}

EvenPoly EvenPoly::integrate_xdx(unsigned k) const {
  EvenPoly r(arity_);
  for (const auto& [e, c] : t_) {
    Expo w(e);
    w[k] += 1;
    r.add_term(w, c.div_rat(Rat(2 * static_cast<long>(w[k]))));
  }
  return r;
}

EvenPoly EvenPoly::derivative_over_L(unsigned k) const {
  EvenPoly r(arity_);
  for (const auto& [e, c] : t_) {
    if (e[k] == 0) continue;
    Expo w(e);
    w[k] -= 1;
    r.add_term(w, c * Rat(2 * static_cast<long>(e[k])));
  }
  return r;
}

EvenPoly EvenPoly::top_part() const {
  EvenPoly r(arity_);
  const int d = degree();
  if (d < 0) return r;
  for (const auto& [e, c] : t_)
    if (static_cast<int>(expo_sum(e)) == d) r.t_.emplace(e, c);
  return r;
}

EvenPoly EvenPoly::permuted(const std::vector<unsigned>& perm) const {
  if (perm.size() != arity_) throw std::invalid_argument("EvenPoly: bad permutation");
  EvenPoly r(arity_);
  for (const auto& [e, c] : t_) {
    Expo w(arity_, 0);
    for (unsigned i = 0; i < arity_; ++i) w[perm[i]] = e[i];
    r.add_term(w, c);
  }
  return r;
}

bool EvenPoly::is_symmetric() const {
  if (arity_ < 2) return true;
  // The transpositions (0 i) generate S_n, so invariance under them is
  // invariance under the whole group.
  for (unsigned i = 1; i < arity_; ++i) {
    std::vector<unsigned> perm(arity_);
    for (unsigned j = 0; j < arity_; ++j) perm[j] = j;
    std::swap(perm[0], perm[i]);
    if (permuted(perm) != *this) return false;
  }
  return true;
}

bool EvenPoly::has_pi_grading(unsigned top_degree) const {
  for (const auto& [e, c] : t_) {
    const unsigned d = expo_sum(e);
    if (d > top_degree) return false;
    if (!c.is_pi2_homogeneous(top_degree - d)) return false;
  }
  return true;
}

std::string EvenPoly::str(const std::string& var) const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : t_) {
    std::string mono;
    for (unsigned i = 0; i < arity_; ++i)
      if (e[i] > 0) {
        if (!mono.empty()) mono += "*";
        mono += var + std::to_string(i + 1) + "^" + std::to_string(2 * e[i]);
      }
    std::string term = "(" + c.str() + ")";
    if (!mono.empty()) term += "*" + mono;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

void RawPoly::add_term(const Expo& e, const PiScalar& c) {
  if (e.size() != arity_) throw std::invalid_argument("RawPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PiScalar RawPoly::coeff(const Expo& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? PiScalar() : it->second;
}

RawPoly& RawPoly::operator+=(const RawPoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("RawPoly: arity mismatch in +");
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

RawPoly operator*(const RawPoly& a, const PiScalar& s) {
  RawPoly r(a.arity_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.t_) r.add_term(e, c * s);
  return r;
}

bool RawPoly::all_exponents_odd() const {
  for (const auto& [e, c] : t_)
    for (unsigned x : e)
      if (x % 2 == 0) return false;
  return true;
}

std::string RawPoly::str(const std::string& var) const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : t_) {
    std::string mono;
    for (unsigned i = 0; i < arity_; ++i)
      if (e[i] > 0) {
        if (!mono.empty()) mono += "*";
        mono += arity_ == 1 ? var : var + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
    std::string term = "(" + c.str() + ")";
    if (!mono.empty()) term += "*" + mono;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

}  // namespace supervol
