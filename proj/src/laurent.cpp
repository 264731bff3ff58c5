#include "supervol/laurent.hpp"

#include <algorithm>

namespace supervol {

LaurentSeries LaurentSeries::monomial(int e, const PiScalar& c, int order) {
  LaurentSeries s(e, order);
  if (e < order) s.set(e, c);
  return s;
}

const PiScalar& LaurentSeries::at(int e) const {
  static const PiScalar zero;
  if (e < lo_) return zero;
  if (e >= order_) throw TruncationError("LaurentSeries: coefficient beyond truncation order");
  return c_[static_cast<size_t>(e - lo_)];
}

PiScalar LaurentSeries::coeff(int e) const { return at(e); }

void LaurentSeries::set(int e, const PiScalar& c) {
  if (e < lo_ || e >= order_) throw std::out_of_range("LaurentSeries::set out of range");
  c_[static_cast<size_t>(e - lo_)] = c;
}

bool LaurentSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const PiScalar& x) { return x.is_zero(); });
}

int LaurentSeries::valuation() const {
  for (int e = lo_; e < order_; ++e)
    if (!at(e).is_zero()) return e;
  throw std::domain_error("LaurentSeries::valuation of zero series");
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = std::min(a.lo_, b.lo_);
  const int order = std::min(a.order_, b.order_);
  LaurentSeries r(lo, std::max(order, lo));
  for (int e = r.lo_; e < r.order_; ++e) r.set(e, a.coeff(e) + b.coeff(e));
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // truncation: result exponent e = i + j is complete whenever both factor
  // tails are beyond their orders: e < min(a.lo+b.order, b.lo+a.order)
  const int lo = a.lo_ + b.lo_;
  const int order = std::min(a.lo_ + b.order_, b.lo_ + a.order_);
  LaurentSeries r(lo, order);
  for (int i = a.lo_; i < a.order_; ++i) {
    if (a.at(i).is_zero()) continue;
    for (int j = b.lo_; j < b.order_ && i + j < order; ++j) {
      if (b.at(j).is_zero()) continue;
      r.set(i + j, r.at(i + j) + a.at(i) * b.at(j));
    }
  }
  return r;
}

LaurentSeries LaurentSeries::scaled(const PiScalar& s) const {
  LaurentSeries r(*this);
  for (auto& x : r.c_) x = x * s;
  return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r(*this);
  r.lo_ += k;
  r.order_ += k;
  return r;
}

LaurentSeries LaurentSeries::inverse(int order) const {
  const int v = valuation();
  const PiScalar& lead = at(v);
  if (!lead.is_pi2_homogeneous(0))
    throw std::domain_error("LaurentSeries::inverse: leading coefficient not rational");
  const Rat l = lead.coeff(0);
  // write s = lead*z^v * (1 + u), invert the unit part term by term
  const int n = order + v;  // coefficients of (1+u)^{-1} needed up to z^n
  LaurentSeries inv_unit(0, std::max(n, 1));
  inv_unit.set(0, PiScalar(Rat(1)));
  for (int e = 1; e < inv_unit.order(); ++e) {
    // coefficient from sum_{m=1..e} u_m * inv_unit_{e-m} with u_m = a_{v+m}/l
    PiScalar acc;
    for (int m = 1; m <= e; ++m) {
      if (v + m >= order_) throw TruncationError("LaurentSeries::inverse: series too short");
      const PiScalar um = at(v + m).div_rat(l);
      acc += um * inv_unit.at(e - m);
    }
    inv_unit.set(e, -acc);
  }
  LaurentSeries r = inv_unit.shifted(-v).truncated(order);
  return r.scaled(PiScalar(Rat(1) / l));
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order > order_) throw TruncationError("LaurentSeries::truncated: extending not allowed");
  LaurentSeries r(lo_, order);
  for (int e = lo_; e < order; ++e) r.set(e, at(e));
  return r;
}

LaurentSeries LaurentSeries::antiderivative() const {
  if (lo_ <= -1 && order_ > -1 && !at(-1).is_zero())
    throw std::domain_error("LaurentSeries::antiderivative: z^-1 term present");
  LaurentSeries r(lo_ + 1, order_ + 1);
  for (int e = lo_; e < order_; ++e) {
    if (e == -1) continue;
    r.set(e + 1, at(e).div_rat(Rat(e + 1)));
  }
  return r;
}

LaurentSeries LaurentSeries::even_part() const {
  LaurentSeries r(lo_, order_);
  for (int e = lo_; e < order_; ++e)
    if (e % 2 == 0) r.set(e, at(e));
  return r;
}

LaurentSeries LaurentSeries::odd_part() const {
  LaurentSeries r(lo_, order_);
  for (int e = lo_; e < order_; ++e)
    if (e % 2 != 0) r.set(e, at(e));
  return r;
}

LaurentSeries LaurentSeries::principal_part() const {
  if (order_ < 0)
    throw TruncationError("LaurentSeries::principal_part: negative exponents not fully known");
  const int lo = std::min(lo_, 0);
  LaurentSeries r(lo, 0);
  for (int e = lo; e < 0; ++e) r.set(e, coeff(e));
  return r;
}

LaurentSeries LaurentSeries::principal_part_even() const { return principal_part().even_part(); }

LaurentSeries LaurentSeries::principal_part_odd() const { return principal_part().odd_part(); }

std::string LaurentSeries::str() const {
  std::string out;
  for (int e = lo_; e < order_; ++e) {
    if (at(e).is_zero()) continue;
    out += (out.empty() ? "" : " + ") + ("(" + at(e).str() + ")*z^" + std::to_string(e));
  }
  if (out.empty()) out = "0";
  out += " + O(z^" + std::to_string(order_) + ")";
  return out;
}

}  // namespace supervol
