#include "supervol/pi_scalar.hpp"

#include <cmath>

namespace supervol {

void PiScalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PiScalar PiScalar::pi2pow(const Rat& r, unsigned pi2_power) {
  PiScalar s;
  if (r.is_zero()) return s;
  s.c_.assign(pi2_power + 1, Rat());
  s.c_[pi2_power] = r;
  return s;
}

bool PiScalar::is_pi2_homogeneous(unsigned j) const {
  for (unsigned i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero() && i != j) return false;
  return true;
}

Rat PiScalar::rational_part() const {
  if (!is_pi2_homogeneous(0))
    throw std::domain_error("PiScalar: value is not rational: " + str());
  return coeff(0);
}

PiScalar PiScalar::operator-() const {
  PiScalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
  PiScalar r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

PiScalar operator*(const PiScalar& a, const Rat& r) {
  PiScalar out;
  if (r.is_zero()) return out;
  out.c_ = a.c_;
  for (auto& x : out.c_) x *= r;
  out.trim();
  return out;
}

PiScalar PiScalar::div_rat(const Rat& r) const {
  PiScalar out(*this);
  for (auto& x : out.c_) x /= r;
  return out;
}

bool operator<(const PiScalar& a, const PiScalar& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

double PiScalar::to_double_approx() const {
  const double pi2 = M_PI * M_PI;
  double v = 0, p = 1;
  for (const auto& x : c_) {
    v += x.to_double() * p;
    p *= pi2;
  }
  return v;
}

std::string PiScalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (unsigned j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    std::string term = c_[j].str();
    if (j > 0) {
      if (term == "1") term.clear();
      else if (term == "-1") term = "-";
      else term += "*";
      term += "pi^" + std::to_string(2 * j);
    }
    if (out.empty()) out = term;
    else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

}  // namespace supervol
