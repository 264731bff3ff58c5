#include "supervol/specrec.hpp"

#include <algorithm>

#include "supervol/kernels.hpp"

namespace supervol {

void CorrForm::add_term(const Expo& beta, const PiScalar& c) {
  if (beta.size() != n) throw std::invalid_argument("CorrForm: arity mismatch");
  if (c.is_zero()) return;
  auto it = terms.find(beta);
  if (it == terms.end()) {
    terms.emplace(beta, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

CorrForm& CorrForm::operator+=(const CorrForm& o) {
  if (o.n != n) throw std::invalid_argument("CorrForm: arity mismatch in +");
  for (const auto& [b, c] : o.terms) add_term(b, c);
  return *this;
}

CorrForm CorrForm::scaled(const PiScalar& s) const {
  CorrForm r{g, n, {}};
  if (s.is_zero()) return r;
  for (const auto& [b, c] : terms) r.add_term(b, c * s);
  return r;
}

bool CorrForm::is_symmetric() const {
  for (unsigned i = 1; i < n; ++i) {
    CorrForm sw{g, n, {}};
    for (const auto& [b, c] : terms) {
      Expo e(b);
      std::swap(e[0], e[i]);
      sw.add_term(e, c);
    }
    if (sw.terms != terms) return false;
  }
  return true;
}

unsigned CorrForm::max_pole_order() const {
  unsigned m = 0;
  for (const auto& [b, c] : terms)
    for (unsigned x : b) m = std::max(m, 2 * x + 2);
  return m;
}

std::string CorrForm::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms) {
    std::string mono;
    for (unsigned i = 0; i < n; ++i) {
      mono += "dz" + std::to_string(i + 1) + "/z" + std::to_string(i + 1) + "^" +
              std::to_string(2 * b[i] + 2);
      if (i + 1 < n) mono += " ";
    }
    out += (out.empty() ? "" : " + ") + ("(" + c.str() + ") " + mono);
  }
  return out;
}

bool SpectralCurve::irregular() const { return !y.at(-1).is_zero(); }

SpectralCurve SpectralCurve::theta(int order) {
  // cos(2 pi z)/z = sum_m (-1)^m (2 pi)^{2m} z^{2m-1} / (2m)!
  LaurentSeries y(-1, order);
  for (int m = 0; 2 * m - 1 < order; ++m) {
    Rat c = Rat(4).pow(static_cast<unsigned>(m)) / Rat::factorial(2 * static_cast<unsigned>(m));
    if (m % 2 == 1) c = -c;
    y.set(2 * m - 1, PiScalar::pi2pow(c, static_cast<unsigned>(m)));
  }
  return {"theta", y};
}

SpectralCurve SpectralCurve::sine(int order) {
  // sin(2 pi z)/(2 pi) = sum_m (-1)^m (2 pi)^{2m} z^{2m+1} / (2m+1)!
  LaurentSeries y(-1, order);
  for (int m = 0; 2 * m + 1 < order; ++m) {
    Rat c = Rat(4).pow(static_cast<unsigned>(m)) / Rat::factorial(2 * static_cast<unsigned>(m) + 1);
    if (m % 2 == 1) c = -c;
    y.set(2 * m + 1, PiScalar::pi2pow(c, static_cast<unsigned>(m)));
  }
  return {"sine", y};
}

SpectralCurve SpectralCurve::airy(int order) {
  LaurentSeries y(-1, order);
  if (order > 1) y.set(1, PiScalar(Rat(1)));
  return {"airy", y};
}

LaurentSeries recursion_prefactor(const SpectralCurve& curve, int order) {
  const LaurentSeries y_odd = curve.y.odd_part();
  if (y_odd.is_zero())
    throw std::domain_error("recursion_prefactor: degenerate curve, y(z)-y(-z) vanishes");
  // kappa = 1 / (z * 2 * y_odd(z))
  const LaurentSeries denom = y_odd.shifted(1).scaled(PiScalar(Rat(2)));
  LaurentSeries k = denom.inverse(order);
  if (!k.is_even()) throw std::logic_error("recursion_prefactor: kappa not even");
  return k;
}

CorrelatorEngine::CorrelatorEngine(SpectralCurve curve, int max_euler)
    : curve_(std::move(curve)), max_euler_(max_euler) {
  // deepest pole any assembled right side can reach within the key budget
  const int g_max = (max_euler_ + 2) / 2 + 1;
  const int pole_max =
      curve_.irregular() ? 4 * g_max + 6 : 2 * (6 * g_max + 2 * (max_euler_ + 2)) + 6;
  if (curve_.y.order() < pole_max + 2)
    throw TruncationError("CorrelatorEngine: y series too short for requested keys");
  kappa_ = recursion_prefactor(curve_, pole_max);
  // Phi with d Phi = omega_{0,1} = -y dx = -y z dz
  phi_ = (-curve_.y.shifted(1)).antiderivative();
  if (!phi_.is_odd()) throw std::logic_error("CorrelatorEngine: Phi not odd");
}

unsigned CorrelatorEngine::pole_bound(unsigned g, unsigned n) const {
  return curve_.irregular() ? std::max(2 * g, 2u)
                            : static_cast<unsigned>(std::max(6 * static_cast<int>(g) - 4 +
                                                                 2 * static_cast<int>(n),
                                                             2));
}

const CorrForm& CorrelatorEngine::correlator(unsigned g, unsigned n) {
  if (n < 1 || 2 * static_cast<int>(g) - 2 + static_cast<int>(n) <= 0)
    throw std::invalid_argument("correlator: unstable key");
  if (2 * static_cast<int>(g) - 2 + static_cast<int>(n) > max_euler_)
    throw std::invalid_argument("correlator: key beyond engine budget");
  const auto key = std::make_pair(g, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  CorrForm v = compute(g, n);
  if (!v.is_symmetric()) throw std::logic_error("correlator: asymmetric output");
  if (v.max_pole_order() > pole_bound(g, n))
    throw std::logic_error("correlator: pole-order bound violated");
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(key, std::move(v)).first->second;
}

// W_{g,n}(z1, zK) = [ kappa(z) ( W_{g-1,n+1}(z,z,zK)
//   + sum_{ordered stable} W_{g1,|I|+1}(z,zI) W_{g2,|J|+1}(z,zJ)
//   + sum_j W_{g,n-1}(z,zK\j) * 2 sum_l (2l+1) z^{2l} / zj^{2l+2} ) ]
// restricted to even exponents <= -2 of z, reread at z1. The (1,1) seed is
// W_{0,2}(z,-z) -> 1/(4z^2); (0,3) reduces to the kappa_{-2} coefficient.
CorrForm CorrelatorEngine::compute(unsigned g, unsigned n) {
  const unsigned nk = n - 1;
  CorrForm out{g, n, {}};

  if (g == 0 && n == 3) {
    const PiScalar k2 = kappa_.at(-2);
    if (!k2.is_zero()) out.add_term(Expo(3, 0), k2 * Rat(2));
    return out;
  }

  // T: z-exponent -> (beta over K -> coeff)
  std::map<int, std::map<Expo, PiScalar>> T;
  auto t_add = [&](int e, const Expo& beta, const PiScalar& c) {
    if (c.is_zero()) return;
    auto& slot = T[e];
    auto it = slot.find(beta);
    if (it == slot.end()) {
      slot.emplace(beta, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) slot.erase(it);
    }
  };

  // A-part: omega_{g-1,n+1}(z, z, zK)
  if (g == 1 && n == 1) {
    t_add(-2, Expo{}, PiScalar(Rat(1, 4)));
  } else if (g >= 1 && 2 * static_cast<int>(g - 1) - 2 + static_cast<int>(n + 1) > 0) {
    const CorrForm& W = correlator(g - 1, n + 1);
    for (const auto& [b, c] : W.terms) {
      const int e = -2 * static_cast<int>(b[0]) - 2 * static_cast<int>(b[1]) - 4;
      t_add(e, Expo(b.begin() + 2, b.end()), c);
    }
  }

  // B-part: ordered stable splittings
  for (unsigned g1 = 0; g1 <= g; ++g1) {
    const unsigned g2 = g - g1;
    for (unsigned mask = 0; mask < (1u << nk); ++mask) {
      const unsigned ni = static_cast<unsigned>(__builtin_popcount(mask));
      const unsigned nj = nk - ni;
      if (2 * static_cast<int>(g1) - 1 + static_cast<int>(ni) <= 0) continue;
      if (2 * static_cast<int>(g2) - 1 + static_cast<int>(nj) <= 0) continue;
      const CorrForm& A = correlator(g1, ni + 1);
      const CorrForm& B = correlator(g2, nj + 1);
      if (A.terms.empty() || B.terms.empty()) continue;
      std::vector<unsigned> amap, bmap;
      for (unsigned t = 0; t < nk; ++t) ((mask >> t) & 1u ? amap : bmap).push_back(t);
      for (const auto& [ba, ca] : A.terms)
        for (const auto& [bb, cb] : B.terms) {
          const int e = -2 * static_cast<int>(ba[0]) - 2 * static_cast<int>(bb[0]) - 4;
          Expo beta(nk, 0);
          for (size_t s = 0; s < amap.size(); ++s) beta[amap[s]] = ba[s + 1];
          for (size_t s = 0; s < bmap.size(); ++s) beta[bmap[s]] = bb[s + 1];
          t_add(e, beta, ca * cb);
        }
    }
  }

  // C-part: omega_{0,2} convolutions, 1/(z-zj)^2 + 1/(z+zj)^2 expanded for
  // |z| < |zj|; only even powers survive.
  if (nk > 0 && 2 * static_cast<int>(g) - 2 + static_cast<int>(n - 1) > 0) {
    const CorrForm& W = correlator(g, n - 1);
    const int kappa_lo = curve_.irregular() ? 0 : -2;
    for (unsigned j = 0; j < nk; ++j) {
      for (const auto& [b, c] : W.terms) {
        const int base = -2 * static_cast<int>(b[0]) - 2;
        for (int l = 0; base + 2 * l <= -2 - kappa_lo; ++l) {
          Expo beta(nk, 0);
          beta[j] = static_cast<unsigned>(l);
          for (unsigned t = 0, s = 1; t < nk; ++t) {
            if (t == j) continue;
            beta[t] += b[s++];
          }
          t_add(base + 2 * l, beta, c * Rat(2 * (2L * l + 1)));
        }
      }
    }
  }

  // multiply by kappa, keep even exponents <= -2, reread at z1
  for (const auto& [e, slot] : T) {
    for (int target = -2;; target -= 2) {
      const int ek = target - e;
      if (ek < kappa_.lo()) break;
      if (ek >= kappa_.order())
        throw TruncationError("correlator: kappa series too short");
      const PiScalar& kc = kappa_.at(ek);
      if (kc.is_zero()) continue;
      const unsigned b1 = static_cast<unsigned>((-target - 2) / 2);
      for (const auto& [beta, c] : slot) {
        Expo full(n, 0);
        full[0] = b1;
        std::copy(beta.begin(), beta.end(), full.begin() + 1);
        out.add_term(full, c * kc);
      }
    }
  }
  return out;
}

std::pair<CorrForm, CorrForm> CorrelatorEngine::dilaton_check(unsigned g, unsigned n) {
  const CorrForm& big = correlator(g, n + 1);
  const CorrForm& small = correlator(g, n);
  CorrForm lhs{g, n, {}};
  for (const auto& [b, c] : big.terms) {
    const int pe = 2 * static_cast<int>(b[0]) + 1;  // phi exponent pairing z^{-(2b0+2)}
    if (pe >= phi_.order()) throw TruncationError("dilaton_check: Phi series too short");
    const PiScalar pc = phi_.coeff(pe);
    if (pc.is_zero()) continue;
    lhs.add_term(Expo(b.begin() + 1, b.end()), c * pc);
  }
  CorrForm rhs = small.scaled(PiScalar(Rat(2 - 2 * static_cast<long>(g) - static_cast<long>(n))));
  return {std::move(lhs), std::move(rhs)};
}

std::map<SeriesMono, PiScalar> CorrelatorEngine::partition_log_block(unsigned g, unsigned n) {
  std::map<SeriesMono, PiScalar> out;
  const CorrForm& w = correlator(g, n);
  const Rat nfact = Rat::factorial(n);
  for (const auto& [b, c] : w.terms) {
    SeriesMono m;
    m.h = static_cast<int>(g) - 1;
    Rat weight = Rat(1) / nfact;
    for (unsigned k : b) {
      weight /= Rat::double_factorial_odd(2L * k + 1);
      if (m.t.size() <= k) m.t.resize(k + 1, 0);
      m.t[k] += 1;
    }
    m.trim();
    const PiScalar add = c * weight;
    auto [it, fresh] = out.emplace(std::move(m), add);
    if (!fresh) {
      it->second += add;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

PiScalar CorrelatorEngine::symplectic_invariant(unsigned g) {
  if (g < 2) throw std::invalid_argument("symplectic_invariant: needs g >= 2");
  const CorrForm& w = correlator(g, 1);
  PiScalar res;
  for (const auto& [b, c] : w.terms) {
    const int pe = 2 * static_cast<int>(b[0]) + 1;
    if (pe >= phi_.order()) throw TruncationError("symplectic_invariant: Phi too short");
    res += c * phi_.coeff(pe);
  }
  return res.div_rat(Rat(2 - 2 * static_cast<long>(g)));
}

TruncSeries<PiScalar> CorrelatorEngine::partition(int G, int N, int K) {
  const SeriesRegion region = SeriesRegion::from_bounds(G, N, K);
  TruncSeries<PiScalar> log_z(region);
  for (unsigned g = 2; 3L * (static_cast<long>(g) - 1) <= region.cap_bound; ++g) {
    if (2 * static_cast<int>(g) - 2 + 1 > max_euler_)
      throw TruncationError("partition: bounds exceed the engine key budget");
    SeriesMono m;
    m.h = static_cast<int>(g) - 1;
    log_z.add_term(m, symplectic_invariant(g));
  }
  for (int n = 1; n <= N; ++n)
    for (unsigned g = 0;; ++g) {
      if (3L * (static_cast<long>(g) - 1) + n > region.cap_bound) break;
      if (2 * static_cast<int>(g) - 2 + n > max_euler_)
        throw TruncationError("partition: bounds exceed the engine key budget");
      if (2 * static_cast<int>(g) - 2 + n <= 0) continue;
      for (const auto& [m, c] : partition_log_block(g, static_cast<unsigned>(n)))
        log_z.add_term(m, c);
    }
  return log_z.exp_();
}

CorrForm laplace_bridge(const EvenPoly& v, unsigned g) {
  CorrForm out{g, v.arity(), {}};
  for (const auto& [a, c] : v.terms()) {
    Rat scale(1);
    for (unsigned k : a) scale *= Rat::factorial(2 * k + 1);
    out.add_term(a, c * scale);
  }
  return out;
}

}  // namespace supervol
