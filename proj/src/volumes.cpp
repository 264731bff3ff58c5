#include "supervol/volumes.hpp"

#include <filesystem>
#include <functional>
#include <fstream>

#include "supervol/json_io.hpp"
#include "supervol/kernels.hpp"
#include "supervol/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supervol {

const char* flavor_name(VolFlavor f) {
  switch (f) {
    case VolFlavor::Theta: return "theta";
    case VolFlavor::WP: return "wp";
    case VolFlavor::ThetaTop: return "theta-top";
    case VolFlavor::WPTop: return "wp-top";
  }
  return "?";
}

bool stable(unsigned g, unsigned n) { return 2 * static_cast<int>(g) - 2 + static_cast<int>(n) > 0; }

VolumeEngine& VolumeEngine::instance() {
  static VolumeEngine e;
  return e;
}

void VolumeEngine::set_cache_dir(std::optional<std::string> dir) {
  std::lock_guard<std::mutex> lock(mu_);
  dir_ = std::move(dir);
}

void VolumeEngine::clear_memory_cache() {
  std::lock_guard<std::mutex> lock(mu_);
  cache_.clear();
}

namespace {

bool theta_like(VolFlavor f) { return f == VolFlavor::Theta || f == VolFlavor::ThetaTop; }
bool top_like(VolFlavor f) { return f == VolFlavor::ThetaTop || f == VolFlavor::WPTop; }

std::string cache_file(const std::string& dir, const VolKey& k) {
  return dir + "/" + flavor_name(k.flavor) + "_g" + std::to_string(k.g) + "_n" +
         std::to_string(k.n) + ".json";
}

// Moment images for the Top flavors: the leading terms of F / F^M.
RawPoly top_d_image(bool theta, unsigned i, unsigned j) {
  RawPoly img(1);
  const unsigned kk = 2 * i + 2 * j + 3;
  if (theta) {
    img.add_term({kk}, PiScalar(Rat::factorial(2 * i + 1) * Rat::factorial(2 * j + 1) /
                                Rat::factorial(kk)));
  } else {
    img.add_term({kk + 1}, PiScalar(Rat::factorial(2 * i + 1) * Rat::factorial(2 * j + 1) /
                                    Rat::factorial(kk + 1)));
  }
  return img;
}

RawPoly top_r_image(bool theta, unsigned k) {
  // 1/2 [(L1+Lj)^m + (L1-Lj)^m], m = 2k+1 (theta) or 2k+2 with 1/(2k+2) (wp)
  RawPoly img(2);
  if (theta) {
    const unsigned m = 2 * k + 1;
    for (unsigned r = 0; r <= m; r += 2) img.add_term({m - r, r}, PiScalar(Rat::binomial(m, r)));
  } else {
    const unsigned m = 2 * k + 2;
    const Rat s = Rat(1, m);
    for (unsigned r = 0; r <= m; r += 2)
      img.add_term({m - r, r}, PiScalar(Rat::binomial(m, r) * s));
  }
  return img;
}

// P_{g,n}(x, y, L_K) as an (n+1)-variable polynomial with slots (x, y, L_K):
// the V_{g-1,n+1} term plus every ordered stable splitting.
EvenPoly assemble_splitting(unsigned g, unsigned n,
                            const std::function<const EvenPoly&(unsigned, unsigned)>& volf) {
  const unsigned nk = n - 1;  // |K|
  EvenPoly P(nk + 2);
  if (g >= 1 && stable(g - 1, n + 1)) {
    // slots already ordered (x, y, L_K)
    P += volf(g - 1, n + 1);
  }
  // collect the stable ordered splittings first (this also forces their
  // sub-volumes into the cache before the parallel region)
  struct Split {
    unsigned g1, mask;
    const EvenPoly* A;
    const EvenPoly* B;
  };
  std::vector<Split> splits;
  for (unsigned g1 = 0; g1 <= g; ++g1) {
    const unsigned g2 = g - g1;
    for (unsigned mask = 0; mask < (1u << nk); ++mask) {
      const unsigned ni = static_cast<unsigned>(__builtin_popcount(mask));
      const unsigned nj = nk - ni;
      if (!stable(g1, ni + 1) || !stable(g2, nj + 1)) continue;
      const EvenPoly& A = volf(g1, ni + 1);
      const EvenPoly& B = volf(g2, nj + 1);
      if (A.is_zero() || B.is_zero()) continue;
      splits.push_back({g1, mask, &A, &B});
    }
  }
  auto split_product = [&](const Split& sp) {
    EvenPoly Aw(nk + 2), Bw(nk + 2);
    std::vector<unsigned> amap{0}, bmap{1};
    for (unsigned t = 0; t < nk; ++t)
      ((sp.mask >> t) & 1u ? amap : bmap).push_back(t + 2);
    for (const auto& [e, c] : sp.A->terms()) {
      Expo w(nk + 2, 0);
      for (size_t s = 0; s < e.size(); ++s) w[amap[s]] = e[s];
      Aw.add_term(w, c);
    }
    for (const auto& [e, c] : sp.B->terms()) {
      Expo w(nk + 2, 0);
      for (size_t s = 0; s < e.size(); ++s) w[bmap[s]] = e[s];
      Bw.add_term(w, c);
    }
    return Aw * Bw;
  };
#ifdef _OPENMP
  if (parallel::enabled() && splits.size() > 4) {
    const int nt = omp_get_max_threads();
    std::vector<EvenPoly> part(static_cast<size_t>(nt), EvenPoly(nk + 2));
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(splits.size()); ++i)
      part[static_cast<size_t>(omp_get_thread_num())] +=
          split_product(splits[static_cast<size_t>(i)]);
    for (const auto& p : part) P += p;
    return P;
  }
#endif
  for (const auto& sp : splits) P += split_product(sp);
  return P;
}

// Accumulator for the assembled right hand side: key = (raw L1 exponent,
// alpha over L_2..L_n), merged under a mutex-free per-thread scheme.
using RhsMap = std::map<std::pair<unsigned, Expo>, PiScalar>;

void rhs_add(RhsMap& m, unsigned e1, const Expo& alpha, const PiScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(e1, alpha);
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void rhs_merge(RhsMap& into, const RhsMap& from) {
  for (const auto& [k, c] : from) {
    auto it = into.find(k);
    if (it == into.end()) {
      into.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

// Applies `body` to every term of `terms`, accumulating into per-thread
// maps when the parallel path is on. Exact coefficients make the merge
// order irrelevant; the serial reference path is the plain loop.
template <typename Terms, typename Body>
RhsMap transform_terms(const Terms& terms, Body body) {
  RhsMap out;
#ifdef _OPENMP
  if (parallel::enabled() && terms.size() > 32) {
    std::vector<const typename Terms::value_type*> v;
    v.reserve(terms.size());
    for (const auto& p : terms) v.push_back(&p);
    const int nt = omp_get_max_threads();
    std::vector<RhsMap> part(static_cast<size_t>(nt));
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < static_cast<long>(v.size()); ++i)
      body(part[static_cast<size_t>(omp_get_thread_num())], v[static_cast<size_t>(i)]->first,
           v[static_cast<size_t>(i)]->second);
    for (const auto& p : part) rhs_merge(out, p);
    return out;
  }
#endif
  for (const auto& [e, c] : terms) body(out, e, c);
  return out;
}

}  // namespace

// L1 V_{g,n} = 1/2 intD(x y P_{g,n}) + sum_j intR(x V_{g,n-1}); direct form,
// every monomial of the right side carries an odd power of L1.
EvenPoly VolumeEngine::recursion_theta_like(VolFlavor f, unsigned g, unsigned n) {
  KernelTable& kt = KernelTable::instance();
  const bool top = top_like(f);
  auto volf = [&](unsigned gg, unsigned nn) -> const EvenPoly& { return vol(f, gg, nn); };

  const unsigned nk = n - 1;
  const EvenPoly P = assemble_splitting(g, n, volf);

  // lock-free image snapshots for the parallel transform loops
  std::map<std::pair<unsigned, unsigned>, RawPoly> dimg;
  for (const auto& [e, c] : P.terms()) {
    const auto key = std::make_pair(e[0], e[1]);
    if (!dimg.count(key))
      dimg.emplace(key, top ? top_d_image(true, e[0], e[1]) : kt.d_image(e[0], e[1]));
  }
  RhsMap rhs = transform_terms(P.terms(), [&](RhsMap& acc, const Expo& e, const PiScalar& c) {
    const RawPoly& img = dimg.at({e[0], e[1]});
    const Expo alpha(e.begin() + 2, e.end());
    for (const auto& [ie, ic] : img.terms())
      rhs_add(acc, ie[0], alpha, c * ic * Rat(1, 2));
  });

  for (unsigned j = 0; j < nk; ++j) {
    if (!stable(g, n - 1)) break;
    const EvenPoly& W = volf(g, n - 1);  // variables (x, K \ {j})
    std::map<unsigned, RawPoly> rimg;
    for (const auto& [e, c] : W.terms())
      if (!rimg.count(e[0])) rimg.emplace(e[0], top ? top_r_image(true, e[0]) : kt.r_image(e[0]));
    RhsMap part = transform_terms(W.terms(), [&](RhsMap& acc, const Expo& e, const PiScalar& c) {
      const RawPoly& img = rimg.at(e[0]);
      for (const auto& [ie, ic] : img.terms()) {
        if (ie[1] % 2 != 0) throw std::logic_error("r_image: odd L_j exponent");
        Expo alpha(nk, 0);
        alpha[j] = ie[1] / 2;
        for (unsigned t = 0, s = 1; t < nk; ++t) {
          if (t == j) continue;
          alpha[t] += e[s++];
        }
        rhs_add(acc, ie[0], alpha, c * ic);
      }
    });
    rhs_merge(rhs, part);
  }

  EvenPoly V(n);
  for (const auto& [key, c] : rhs) {
    const unsigned e1 = key.first;
    if (e1 % 2 != 1) throw std::logic_error("theta recursion: right side not divisible by L1");
    Expo alpha(n, 0);
    alpha[0] = (e1 - 1) / 2;
    std::copy(key.second.begin(), key.second.end(), alpha.begin() + 1);
    V.add_term(alpha, c);
  }
  return V;
}

// d/dL1 (L1 V_{g,n}) = 1/2 intDM(x y P) + sum_j intRM(x V_{g,n-1}), then
// antidifferentiated from L1 = 0 (D^M(0,..) = 0 = R^M(0,..)) and divided by
// L1; every monomial of the derivative form is even in L1.
EvenPoly VolumeEngine::recursion_wp_like(VolFlavor f, unsigned g, unsigned n) {
  KernelTable& kt = KernelTable::instance();
  const bool top = top_like(f);
  auto volf = [&](unsigned gg, unsigned nn) -> const EvenPoly& { return vol(f, gg, nn); };

  const unsigned nk = n - 1;
  const EvenPoly P = assemble_splitting(g, n, volf);

  std::map<std::pair<unsigned, unsigned>, RawPoly> dimg;
  for (const auto& [e, c] : P.terms()) {
    const auto key = std::make_pair(e[0], e[1]);
    if (!dimg.count(key))
      dimg.emplace(key, top ? top_d_image(false, e[0], e[1]) : kt.dm_image(e[0], e[1]));
  }
  RhsMap rhs = transform_terms(P.terms(), [&](RhsMap& acc, const Expo& e, const PiScalar& c) {
    const RawPoly& img = dimg.at({e[0], e[1]});
    const Expo alpha(e.begin() + 2, e.end());
    for (const auto& [ie, ic] : img.terms())
      rhs_add(acc, ie[0], alpha, c * ic * Rat(1, 2));
  });

  for (unsigned j = 0; j < nk; ++j) {
    if (!stable(g, n - 1)) break;
    const EvenPoly& W = volf(g, n - 1);
    std::map<unsigned, RawPoly> rimg;
    for (const auto& [e, c] : W.terms())
      if (!rimg.count(e[0])) rimg.emplace(e[0], top ? top_r_image(false, e[0]) : kt.rm_image(e[0]));
    RhsMap part = transform_terms(W.terms(), [&](RhsMap& acc, const Expo& e, const PiScalar& c) {
      const RawPoly& img = rimg.at(e[0]);
      for (const auto& [ie, ic] : img.terms()) {
        if (ie[1] % 2 != 0) throw std::logic_error("rm_image: odd L_j exponent");
        Expo alpha(nk, 0);
        alpha[j] = ie[1] / 2;
        for (unsigned t = 0, s = 1; t < nk; ++t) {
          if (t == j) continue;
          alpha[t] += e[s++];
        }
        rhs_add(acc, ie[0], alpha, c * ic);
      }
    });
    rhs_merge(rhs, part);
  }

  EvenPoly V(n);
  for (const auto& [key, c] : rhs) {
    const unsigned e1 = key.first;
    if (e1 % 2 != 0) throw std::logic_error("wp recursion: derivative form not even in L1");
    // int_0^{L1}: L1^{e1} -> L1^{e1+1}/(e1+1); division by L1 then lands on
    // the even exponent e1 again.
    Expo alpha(n, 0);
    alpha[0] = e1 / 2;
    std::copy(key.second.begin(), key.second.end(), alpha.begin() + 1);
    V.add_term(alpha, c.div_rat(Rat(static_cast<long>(e1) + 1)));
  }
  return V;
}

EvenPoly VolumeEngine::compute(VolFlavor f, unsigned g, unsigned n) {
  // base cases
  if (g == 0) {
    if (theta_like(f)) return EvenPoly(n);  // deg Theta_{0,n} exceeds dim: zero
    if (n == 3) return EvenPoly::constant(3, PiScalar(Rat(1)));
  }
  if (g == 1 && n == 1) {
    if (theta_like(f)) return EvenPoly::constant(1, PiScalar(Rat(1, 8)));
    // V^WP_{1,1} = (4 pi^2 + L^2)/48
    EvenPoly v(1);
    if (f == VolFlavor::WP) v.add_term({0}, PiScalar::pi2pow(Rat(1, 12), 1));
    v.add_term({1}, PiScalar(Rat(1, 48)));
    return v;
  }
  EvenPoly v = theta_like(f) ? recursion_theta_like(f, g, n) : recursion_wp_like(f, g, n);
  if (!v.is_symmetric())
    throw std::logic_error("volume recursion produced an asymmetric polynomial");
  return v;
}

const EvenPoly& VolumeEngine::vol(VolFlavor f, unsigned g, unsigned n) {
  if (!stable(g, n) || n < 1)
    throw std::invalid_argument(std::string("volume: unstable key (") + flavor_name(f) + "," +
                                std::to_string(g) + "," + std::to_string(n) + ")");
  const VolKey key{f, g, n};
  std::optional<std::string> dir;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    dir = dir_;
  }
  if (dir) {
    std::ifstream in(cache_file(*dir, key));
    if (in) {
      Json j;
      in >> j;
      EvenPoly p = even_poly_from_json(j);
      if (p.arity() == n && p.is_symmetric()) {
        std::lock_guard<std::mutex> lock(mu_);
        return cache_.emplace(key, std::move(p)).first->second;
      }
    }
  }
  EvenPoly v = compute(f, g, n);
  if (dir) {
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    std::ofstream out(cache_file(*dir, key));
    if (out) out << to_json(v).dump(1) << "\n";
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(v)).first->second;  // first writer wins
}

std::pair<EvenPoly, EvenPoly> dilaton_eval_theta(unsigned g, unsigned n) {
  if (!stable(g, n + 1) || (n > 0 && !stable(g, n)))
    throw std::invalid_argument("dilaton_eval_theta: unstable key");
  const PiScalar m4pi2 = PiScalar::pi2pow(Rat(-4), 1);
  EvenPoly lhs = vol_theta(g, n + 1).substitute_L2(n, m4pi2);
  EvenPoly rhs(n);
  if (n == 0) {
    rhs = EvenPoly::constant(0, theta_n0(g) * Rat(2 * static_cast<long>(g) - 2));
  } else {
    rhs = vol_theta(g, n) * PiScalar(Rat(2 * static_cast<long>(g) - 2 + static_cast<long>(n)));
  }
  return {std::move(lhs), std::move(rhs)};
}

PiScalar theta_n0(unsigned g) {
  if (g < 2) throw std::invalid_argument("theta_n0: needs g >= 2");
  const PiScalar m4pi2 = PiScalar::pi2pow(Rat(-4), 1);
  const EvenPoly v = vol_theta(g, 1).substitute_L2(0, m4pi2);
  return v.coeff(Expo{}).div_rat(Rat(2 * static_cast<long>(g) - 2));
}

PiScalar wp_n0(unsigned g) {
  if (g < 2) throw std::invalid_argument("wp_n0: needs g >= 2");
  const PiScalar m4pi2 = PiScalar::pi2pow(Rat(-4), 1);
  const EvenPoly q = vol_wp(g, 1).derivative_over_L(0).substitute_L2(0, m4pi2);
  return q.coeff(Expo{}).div_rat(Rat(2 * static_cast<long>(g) - 2));
}

StringDilatonReport string_dilaton_wp(unsigned g, unsigned n) {
  if (n < 1 || !stable(g, n))
    throw std::invalid_argument("string_dilaton_wp: needs a stable key with n >= 1");
  const PiScalar m4pi2 = PiScalar::pi2pow(Rat(-4), 1);
  const EvenPoly& big = vol_wp(g, n + 1);
  const EvenPoly& small = vol_wp(g, n);
  StringDilatonReport r{EvenPoly(n), EvenPoly(n), EvenPoly(n), EvenPoly(n)};
  r.id1_lhs = big.substitute_L2(n, m4pi2);
  for (unsigned k = 0; k < n; ++k) r.id1_rhs += small.integrate_xdx(k);
  r.id2_lhs = big.derivative_over_L(n).substitute_L2(n, m4pi2);
  r.id2_rhs = small * PiScalar(Rat(2 * static_cast<long>(g) - 2 + static_cast<long>(n)));
  return r;
}

EvenPoly normalize_super(unsigned g, unsigned n, SuperNorm which) {
  // Vhat^WP = (-1)^n 2^{1-g-n} V^Theta ; V^SW = (-1)^n 2^{1-g} V^Theta
  const long e = which == SuperNorm::VhatWP ? 1L - g - n : 1L - g;
  Rat s = e >= 0 ? Rat(2).pow(static_cast<unsigned>(e))
                 : Rat(1, 2).pow(static_cast<unsigned>(-e));
  if (n % 2 == 1) s = -s;
  return vol_theta(g, n) * PiScalar(s);
}

}  // namespace supervol
