#include "supervol/kernels.hpp"

#include <stdexcept>

namespace supervol {

KernelTable& KernelTable::instance() {
  static KernelTable table;
  return table;
}

Rat KernelTable::bernoulli(unsigned m) {
  std::lock_guard<std::mutex> lock(mu_);
  while (bern_.size() <= m) {
    const unsigned n = static_cast<unsigned>(bern_.size());
    if (n == 0) {
      bern_.push_back(Rat(1));
      continue;
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rat acc;
    for (unsigned j = 0; j < n; ++j) acc += Rat::binomial(n + 1, j) * bern_[j];
    bern_.push_back(-acc / Rat::binomial(n + 1, n));
  }
  return bern_[m];
}

PiScalar KernelTable::sec_coeff(unsigned n) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (n < sec_.size()) return sec_[n];
  }
  // Invert cos(2 pi x) = sum_m (-1)^m (2 pi)^{2m} x^{2m}/(2m)! over Q[pi^2].
  // With s_m := coefficient of x^{2m} in 1/cos(2 pi x):
  //   s_0 = 1,  s_m = -sum_{r=1}^{m} c_r s_{m-r},  c_r = (-1)^r (2pi)^{2r}/(2r)!
  std::vector<PiScalar> s(n + 1);
  s[0] = PiScalar(Rat(1));
  for (unsigned m = 1; m <= n; ++m) {
    PiScalar acc;
    for (unsigned r = 1; r <= m; ++r) {
      const Rat sign = (r % 2 == 0) ? Rat(1) : Rat(-1);
      const Rat c = sign * Rat(4).pow(r) / Rat::factorial(2 * r);
      acc += s[m - r] * PiScalar::pi2pow(c, r);
    }
    s[m] = -acc;
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (unsigned m = static_cast<unsigned>(sec_.size()); m <= n; ++m)
    sec_.push_back(s[m] * Rat::factorial(2 * m));  // a_m = s_m (2m)!
  return sec_[n];
}

PiScalar KernelTable::zeta_even(unsigned i) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (i < zeta_.size()) return zeta_[i];
  }
  std::vector<PiScalar> z;
  for (unsigned m = 0; m <= i; ++m) {
    if (m == 0) {
      z.push_back(PiScalar(Rat(-1, 2)));
      continue;
    }
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
    const Rat sign = (m % 2 == 1) ? Rat(1) : Rat(-1);
    const Rat c = sign * bernoulli(2 * m) * Rat(4).pow(m) / (Rat(2) * Rat::factorial(2 * m));
    z.push_back(PiScalar::pi2pow(c, m));
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (unsigned m = static_cast<unsigned>(zeta_.size()); m <= i; ++m) zeta_.push_back(z[m]);
  return zeta_[i];
}

RawPoly KernelTable::F(unsigned k) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (k < f_.size()) return f_[k];
  }
  std::vector<RawPoly> built;
  for (unsigned kk = 0; kk <= k; ++kk) {
    RawPoly p(1);
    for (unsigned i = 0; i <= kk; ++i)
      p.add_term({2 * i + 1}, sec_coeff(kk - i) * Rat::binomial(2 * kk + 1, 2 * i + 1));
    built.push_back(std::move(p));
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (unsigned kk = static_cast<unsigned>(f_.size()); kk <= k; ++kk)
    f_.push_back(built[kk]);
  return f_[k];
}

EvenPoly KernelTable::FM(unsigned k) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (k < fm_.size()) return fm_[k];
  }
  std::vector<EvenPoly> built;
  for (unsigned kk = 0; kk <= k; ++kk) {
    EvenPoly p(1);
    const Rat fact = Rat::factorial(2 * kk + 1);
    for (unsigned i = 0; i <= kk + 1; ++i) {
      const unsigned e = 2 * kk + 2 - 2 * i;  // power of t, always even
      const Rat scale = fact * (Rat(2) * Rat(4).pow(i) - Rat(4)) / Rat::factorial(e);
      p += EvenPoly::monomial(1, 0, e / 2, zeta_even(i) * scale);
    }
    built.push_back(std::move(p));
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (unsigned kk = static_cast<unsigned>(fm_.size()); kk <= k; ++kk)
    fm_.push_back(built[kk]);
  return fm_[k];
}

namespace {

// 1/2 [ G(L1+Lj) + G(L1-Lj) ] expanded binomially; only even powers of Lj
// survive. G is given by its raw coefficients (exponent -> coeff).
RawPoly pm_average(const std::map<Expo, PiScalar>& g_terms) {
  RawPoly out(2);
  for (const auto& [e, c] : g_terms) {
    const unsigned n = e[0];
    for (unsigned r = 0; r <= n; r += 2)
      out.add_term({n - r, r}, c * Rat::binomial(n, r));
  }
  return out;
}

}  // namespace

const RawPoly& KernelTable::d_image(unsigned i, unsigned j) {
  const auto key = std::make_pair(i, j);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dimg_.find(key);
    if (it != dimg_.end()) return it->second;
  }
  const RawPoly fk = F(i + j + 1);
  const Rat scale =
      Rat::factorial(2 * i + 1) * Rat::factorial(2 * j + 1) / Rat::factorial(2 * i + 2 * j + 3);
  RawPoly img = fk * PiScalar(scale);
  std::lock_guard<std::mutex> lock(mu_);
  return dimg_.emplace(key, std::move(img)).first->second;
}

const RawPoly& KernelTable::r_image(unsigned k) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rimg_.find(k);
    if (it != rimg_.end()) return it->second;
  }
  RawPoly img = pm_average(F(k).terms());
  std::lock_guard<std::mutex> lock(mu_);
  return rimg_.emplace(k, std::move(img)).first->second;
}

const RawPoly& KernelTable::dm_image(unsigned i, unsigned j) {
  const auto key = std::make_pair(i, j);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dmimg_.find(key);
    if (it != dmimg_.end()) return it->second;
  }
  const EvenPoly fm = FM(i + j + 1);
  const Rat scale =
      Rat::factorial(2 * i + 1) * Rat::factorial(2 * j + 1) / Rat::factorial(2 * i + 2 * j + 3);
  RawPoly img(1);
  for (const auto& [e, c] : fm.terms()) img.add_term({2 * e[0]}, c * scale);
  std::lock_guard<std::mutex> lock(mu_);
  return dmimg_.emplace(key, std::move(img)).first->second;
}

const RawPoly& KernelTable::rm_image(unsigned k) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rmimg_.find(k);
    if (it != rmimg_.end()) return it->second;
  }
  std::map<Expo, PiScalar> raw;
  const EvenPoly fmk = FM(k);
  for (const auto& [e, c] : fmk.terms()) raw.emplace(Expo{2 * e[0]}, c);
  RawPoly img = pm_average(raw);
  std::lock_guard<std::mutex> lock(mu_);
  return rmimg_.emplace(k, std::move(img)).first->second;
}

namespace {
void require_odd(const RawPoly& p, const char* op) {
  if (!p.all_exponents_odd())
    throw std::invalid_argument(std::string(op) + ": input polynomial has even exponents");
}
}  // namespace

RawPoly KernelTable::intD(const RawPoly& p) {
  require_odd(p, "intD");
  if (p.arity() != 2) throw std::invalid_argument("intD: expected arity 2");
  RawPoly out(1);
  for (const auto& [e, c] : p.terms()) {
    const RawPoly& img = d_image((e[0] - 1) / 2, (e[1] - 1) / 2);
    out += img * c;
  }
  return out;
}

RawPoly KernelTable::intR(const RawPoly& p) {
  require_odd(p, "intR");
  if (p.arity() != 1) throw std::invalid_argument("intR: expected arity 1");
  RawPoly out(2);
  for (const auto& [e, c] : p.terms()) out += r_image((e[0] - 1) / 2) * c;
  return out;
}

RawPoly KernelTable::intDM(const RawPoly& p) {
  require_odd(p, "intDM");
  if (p.arity() != 2) throw std::invalid_argument("intDM: expected arity 2");
  RawPoly out(1);
  for (const auto& [e, c] : p.terms()) out += dm_image((e[0] - 1) / 2, (e[1] - 1) / 2) * c;
  return out;
}

RawPoly KernelTable::intRM(const RawPoly& p) {
  require_odd(p, "intRM");
  if (p.arity() != 1) throw std::invalid_argument("intRM: expected arity 1");
  RawPoly out(2);
  for (const auto& [e, c] : p.terms()) out += rm_image((e[0] - 1) / 2) * c;
  return out;
}

}  // namespace supervol
