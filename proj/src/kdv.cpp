#include "supervol/kdv.hpp"

#include <functional>

namespace supervol {

PPoly p_poly(unsigned j) {
  if (j == 0) throw std::invalid_argument("p_poly: j >= 1");
  // work in Q[s_1..s_j][z] / z^{j+1}; coefficient of z^m is a polynomial in s
  using SPoly = std::map<Expo, Rat>;
  auto mul_into = [&](const SPoly& a, const SPoly& b) {
    SPoly r;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        Expo e(ea);
        for (size_t t = 0; t < e.size(); ++t) e[t] += eb[t];
        auto [it, fresh] = r.emplace(std::move(e), ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    return r;
  };

  std::vector<SPoly> S(j + 1);  // -sum s_i z^i
  for (unsigned i = 1; i <= j; ++i) {
    Expo e(j, 0);
    e[i - 1] = 1;
    S[i].emplace(std::move(e), Rat(-1));
  }
  std::vector<SPoly> E(j + 1);  // exp(S)
  E[0].emplace(Expo(j, 0), Rat(1));
  std::vector<SPoly> power(j + 1);
  power[0].emplace(Expo(j, 0), Rat(1));
  Rat mfact(1);
  for (unsigned m = 1; m <= j; ++m) {
    // power <- power * S (z-graded convolution)
    std::vector<SPoly> next(j + 1);
    for (unsigned a = 0; a <= j; ++a) {
      if (power[a].empty()) continue;
      for (unsigned b = 1; a + b <= j; ++b) {
        if (S[b].empty()) continue;
        SPoly prod = mul_into(power[a], S[b]);
        for (auto& [e, c] : prod) {
          auto [it, fresh] = next[a + b].emplace(e, c);
          if (!fresh) it->second += c;
        }
      }
    }
    power = std::move(next);
    mfact *= Rat(static_cast<long>(m));
    for (unsigned zc = 0; zc <= j; ++zc)
      for (const auto& [e, c] : power[zc]) {
        auto [it, fresh] = E[zc].emplace(e, c / mfact);
        if (!fresh) it->second += c / mfact;
      }
  }
  PPoly out;
  out.j = j;
  for (const auto& [e, c] : E[j])
    if (!c.is_zero()) out.terms.emplace(e, -c);  // p_j = -[z^j] exp(-sum s_i z^i)
  return out;
}

PiScalar p_poly_at_single(unsigned j, const PiScalar& s) {
  // p_j(s,0,...) = (-1)^{j-1} s^j / j!
  PiScalar v(Rat(1));
  for (unsigned t = 0; t < j; ++t) v = v * s;
  Rat scale = Rat(1) / Rat::factorial(j);
  if (j % 2 == 0) scale = -scale;
  return v * scale;
}

namespace {

// hbar^{g-1}/n! * V_{g,n} | L_i^{2k} = 2^k k! t_k  (one block of the log).
std::map<SeriesMono, PiScalar> kappa_log_block_impl(VolFlavor f, unsigned g, unsigned n) {
  std::map<SeriesMono, PiScalar> out;
  const EvenPoly& v = VolumeEngine::instance().vol(f, g, n);
  const Rat nfact = Rat::factorial(n);
  for (const auto& [e, c] : v.terms()) {
    SeriesMono m;
    m.h = static_cast<int>(g) - 1;
    Rat dict(1);
    for (unsigned k : e) {
      dict *= Rat(2).pow(k) * Rat::factorial(k);
      if (m.t.size() <= k) m.t.resize(k + 1, 0);
      m.t[k] += 1;
    }
    m.trim();
    const PiScalar add = c * (dict / nfact);
    auto [it, fresh] = out.emplace(std::move(m), add);
    if (!fresh) it->second += add;
  }
  return out;
}

}  // namespace

TruncSeries<PiScalar> kappa_partition_log(VolFlavor flavor, const TauBounds& b) {
  const SeriesRegion region = SeriesRegion::from_bounds(b.G, b.N, b.K);
  TruncSeries<PiScalar> log_z(region);
  // every monomial of the (g,n) block has capacity exactly 3(g-1)+n and
  // degree n, so this enumeration covers the whole claimed region
  if (flavor == VolFlavor::Theta || flavor == VolFlavor::WP) {
    // n = 0 blocks: hbar^{g-1} V_{g,0}; the top-part volumes have none
    for (unsigned g = 2; 3L * (static_cast<long>(g) - 1) <= region.cap_bound; ++g) {
      SeriesMono m;
      m.h = static_cast<int>(g) - 1;
      log_z.add_term(m, flavor == VolFlavor::Theta ? theta_n0(g) : wp_n0(g));
    }
  }
  for (int n = 1; n <= b.N; ++n) {
    for (unsigned g = 0;; ++g) {
      if (3L * (static_cast<long>(g) - 1) + n > region.cap_bound) break;
      if (!stable(g, static_cast<unsigned>(n))) continue;
      for (const auto& [m, c] : kappa_log_block_impl(flavor, g, static_cast<unsigned>(n)))
        log_z.add_term(m, c);
    }
  }
  return log_z;
}

TruncSeries<PiScalar> kappa_partition(VolFlavor flavor, const TauBounds& b) {
  return kappa_partition_log(flavor, b).exp_();
}

TranslationCheck verify_translation(VolFlavor flavor, const TauBounds& b) {
  if (flavor != VolFlavor::Theta && flavor != VolFlavor::WP &&
      flavor != VolFlavor::ThetaTop && flavor != VolFlavor::WPTop)
    throw std::invalid_argument("verify_translation: bad flavor");
  const bool theta = flavor == VolFlavor::Theta || flavor == VolFlavor::ThetaTop;
  const SeriesRegion cmp = SeriesRegion::from_bounds(b.G, b.N, b.K);
  const PiScalar s = PiScalar::pi2pow(Rat(2), 1);  // 2 pi^2

  // Source truncation margins. Every monomial nu of the pure tau function
  // contributing to a compared monomial mu satisfies (BGW) sum_j j*r_j =
  // e_h(mu) - idxsum(mu), or (KW, shifts sit at j >= 2) sum_j (j-1) r_j =
  // cap(mu) - idxsum(mu); both are bounded on the compared region, which
  // bounds the extra degree, index and capacity the source needs.
  const int M = b.G + b.N / 3;           // max hbar power on cmp region
  const long C = cmp.cap_bound;
  TauBounds src;
  std::vector<PiScalar> shifts;
  if (theta) {
    src.G = M;
    src.N = b.N + M;
    src.K = std::max(b.K, M);
    shifts.assign(static_cast<size_t>(src.K) + 1, PiScalar());
    // t_k <- t_k - (-1)^k s^k / k!
    for (int k = 1; k <= src.K; ++k) {
      PiScalar v(Rat(1));
      for (int t = 0; t < k; ++t) v = v * s;
      Rat sc = Rat(1) / Rat::factorial(static_cast<unsigned>(k));
      if (k % 2 == 0) sc = -sc;
      shifts[static_cast<size_t>(k)] = v * sc;
    }
  } else {
    src.G = M;
    src.N = b.N + static_cast<int>(C);
    src.K = std::max<long>(b.K, C + 1);
    shifts.assign(static_cast<size_t>(src.K) + 1, PiScalar());
    // t_j <- t_j + p_{j-1}(s, 0, ...) for j >= 2
    for (int j = 2; j <= src.K; ++j)
      shifts[static_cast<size_t>(j)] = p_poly_at_single(static_cast<unsigned>(j) - 1, s);
  }

  const TruncSeries<PiScalar> lhs = kappa_partition(flavor, b);
  const TruncSeries<PiScalar> pure =
      widen(assemble_tau(theta ? BracketKind::Theta : BracketKind::KW, src));
  const TruncSeries<PiScalar> rhs = pure.translated(shifts, cmp);

  TranslationCheck out;
  out.compared = SeriesRegion::meet(lhs.region(), cmp);
  // walk the union of supports plus every region monomial seen on either side
  std::map<SeriesMono, std::pair<PiScalar, PiScalar>> both;
  for (const auto& [m, c] : lhs.terms())
    if (out.compared.contains(m)) both[m].first = c;
  for (const auto& [m, c] : rhs.terms())
    if (out.compared.contains(m)) both[m].second = c;
  for (const auto& [m, lr] : both) {
    ++out.coefficients_compared;
    if (lr.first != lr.second) {
      out.ok = false;
      out.diffs.emplace_back(m, lr.first, lr.second);
    }
  }
  return out;
}

}  // namespace supervol
