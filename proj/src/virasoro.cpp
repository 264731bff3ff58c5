#include "supervol/virasoro.hpp"

#include <algorithm>
#include <numeric>

namespace supervol {

BracketTable& BracketTable::instance() {
  static BracketTable t;
  return t;
}

std::optional<unsigned> BracketTable::genus_of(BracketKind kind, const Multiset& ks) {
  const long sum = std::accumulate(ks.begin(), ks.end(), 0L);
  const long n = static_cast<long>(ks.size());
  long g;
  if (kind == BracketKind::Theta) {
    g = sum + 1;  // sum k = g - 1
  } else {
    if ((sum + 3 - n) % 3 != 0) return std::nullopt;  // sum k = 3g - 3 + n
    g = (sum + 3 - n) / 3;
  }
  if (g < 0 || n < 1) return std::nullopt;
  if (2 * g - 2 + n <= 0) return std::nullopt;
  return static_cast<unsigned>(g);
}

namespace {

Multiset sorted(Multiset ks) {
  std::sort(ks.begin(), ks.end());
  return ks;
}

Multiset erase_at(const Multiset& ks, size_t pos) {
  Multiset out = ks;
  out.erase(out.begin() + static_cast<long>(pos));
  return out;
}

}  // namespace

Rat BracketTable::bracket(BracketKind kind, const Multiset& ks_in) {
  const Multiset ks = sorted(ks_in);
  if (!genus_of(kind, ks)) return Rat();
  return bracket_via(kind, ks, ks.size() - 1);  // maximal element
}

// Theta:  (2k1+1)!! <T tau_{k1} tau_K> =
//    sum_j (2k1+2kj+1)!!/(2kj-1)!! <T tau_{k1+kj} tau_{K\j}>
//  + 1/2 sum_{a+b=k1-1} (2a+1)!!(2b+1)!!
//        ( <T tau_a tau_b tau_K> + sum_{I+J=K} <T tau_a tau_I><T tau_b tau_J> )
// KW: boundary term (2k1+2kj-1)!!/(2kj-1)!! <tau_{k1+kj-1} tau_{K\j}> and the
// pair sum over a+b = k1-2. Bases: <T tau_0> = 1/8, <tau_0^3> = 1,
// <tau_1> = 1/24 (the delta_{m,0}/8 constant of L_0, absent from the
// bracket-level display).
Rat BracketTable::bracket_via(BracketKind kind, const Multiset& ks_in, size_t pos) {
  Multiset ks = sorted(ks_in);
  if (!genus_of(kind, ks)) return Rat();
  if (pos >= ks.size()) throw std::invalid_argument("bracket_via: bad position");

  if (kind == BracketKind::Theta) {
    if (ks == Multiset{0}) return Rat(1, 8);
  } else {
    if (ks == Multiset{0, 0, 0}) return Rat(1);
    if (ks == Multiset{1}) return Rat(1, 24);
  }

  const auto memo_key = std::make_pair(kind, ks);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(memo_key);
    if (it != memo_.end() && pos == ks.size() - 1) return it->second;
  }

  const unsigned k1 = ks[pos];
  const Multiset K = erase_at(ks, pos);
  const long shift = kind == BracketKind::Theta ? 0 : -1;

  Rat total;
  // boundary terms
  for (size_t j = 0; j < K.size(); ++j) {
    const long idx = static_cast<long>(k1) + static_cast<long>(K[j]) + shift;
    if (idx < 0) continue;
    Multiset rest = erase_at(K, j);
    rest.push_back(static_cast<unsigned>(idx));
    const Rat coef = Rat::double_factorial_odd(2 * (static_cast<long>(k1) + K[j]) + 1 + 2 * shift) /
                     Rat::double_factorial_odd(2 * static_cast<long>(K[j]) - 1);
    total += coef * bracket(kind, rest);
  }
  // pair terms: a + b = k1 - 1 (Theta) or k1 - 2 (KW)
  const long pair_sum = static_cast<long>(k1) - (kind == BracketKind::Theta ? 1 : 2);
  for (long a = 0; a <= pair_sum; ++a) {
    const long b = pair_sum - a;
    const Rat dd = Rat::double_factorial_odd(2 * a + 1) * Rat::double_factorial_odd(2 * b + 1);
    // irreducible term
    {
      Multiset big = K;
      big.push_back(static_cast<unsigned>(a));
      big.push_back(static_cast<unsigned>(b));
      total += dd * Rat(1, 2) * bracket(kind, big);
    }
    // ordered splittings of K
    const size_t nk = K.size();
    for (unsigned mask = 0; mask < (1u << nk); ++mask) {
      Multiset I{static_cast<unsigned>(a)}, J{static_cast<unsigned>(b)};
      for (size_t t = 0; t < nk; ++t) ((mask >> t) & 1u ? I : J).push_back(K[t]);
      const Rat va = bracket(kind, I);
      if (va.is_zero()) continue;
      total += dd * Rat(1, 2) * va * bracket(kind, J);
    }
  }
  total /= Rat::double_factorial_odd(2 * static_cast<long>(k1) + 1);

  std::lock_guard<std::mutex> lock(mu_);
  if (pos == ks.size() - 1) memo_.emplace(memo_key, total);
  return total;
}

std::map<Multiset, Rat> coeff_dictionary(const EvenPoly& top, BracketKind kind) {
  std::map<Multiset, Rat> out;
  for (const auto& [e, c] : top.terms()) {
    Rat scale(1);
    for (unsigned k : e) scale *= Rat(2).pow(k) * Rat::factorial(k);
    Multiset ks = sorted(Multiset(e.begin(), e.end()));
    // symmetric polynomial: every ordering appears with the same coefficient,
    // keep one representative per multiset
    if (!out.count(ks)) {
      if (!c.is_pi2_homogeneous(0))
        throw std::domain_error("coeff_dictionary: top coefficient carries pi powers");
      out.emplace(std::move(ks), c.coeff(0) * scale);
    }
  }
  (void)kind;
  return out;
}

namespace {

// Enumerates sorted multisets over {0..K} with size in [1, N] and calls f.
void for_each_multiset(int N, int K, const std::function<void(const Multiset&)>& f) {
  Multiset cur;
  std::function<void(unsigned)> rec = [&](unsigned lo) {
    if (!cur.empty()) f(cur);
    if (static_cast<int>(cur.size()) >= N) return;
    for (unsigned k = lo; k <= static_cast<unsigned>(K); ++k) {
      cur.push_back(k);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

TruncSeries<Rat> assemble_tau_log(BracketKind kind, const TauBounds& b) {
  const SeriesRegion region = SeriesRegion::from_bounds(b.G, b.N, b.K);
  TruncSeries<Rat> log_z(region);
  BracketTable& bt = BracketTable::instance();
  // Enumerated by region membership, not by genus: the capacity bound admits
  // a few monomials with hbar power above G at low t-degree, and the claimed
  // completeness region must cover those too.
  for_each_multiset(b.N, b.K, [&](const Multiset& ks) {
    const auto g = BracketTable::genus_of(kind, ks);
    if (!g) return;
    SeriesMono m;
    m.h = static_cast<int>(*g) - 1;
    m.t.assign(ks.back() + 1, 0);
    Rat sym(1);
    unsigned run = 1;
    for (size_t i = 0; i < ks.size(); ++i) {
      m.t[ks[i]] += 1;
      if (i > 0 && ks[i] == ks[i - 1]) sym *= Rat(static_cast<long>(++run));
      else run = 1;
    }
    if (!region.contains(m)) return;
    const Rat v = bt.bracket(kind, ks);
    if (v.is_zero()) return;
    log_z.add_term(m, v / sym);
  });
  return log_z;
}

TruncSeries<Rat> assemble_tau(BracketKind kind, const TauBounds& b) {
  return assemble_tau_log(kind, b).exp_();
}

TruncSeries<Rat> apply_virasoro(VirasoroForm form, int m, const TruncSeries<Rat>& Z) {
  if (form == VirasoroForm::BGW && m < 0)
    throw std::invalid_argument("apply_virasoro: BGW form needs m >= 0");
  if (form == VirasoroForm::KW && m < -1)
    throw std::invalid_argument("apply_virasoro: KW form needs m >= -1");
  const int K = Z.region().max_idx;

  // -1/2 (2m+1)!! dZ/dt_m   (KW form: -1/2 (2m+3)!! dZ/dt_{m+1})
  const int lead_idx = form == VirasoroForm::BGW ? m : m + 1;
  TruncSeries<Rat> out =
      Z.deriv_t(static_cast<unsigned>(lead_idx))
          .scaled(Rat(-1, 2) * Rat::double_factorial_odd(2L * lead_idx + 1));

  // 1/2 * hbar/2 sum_{i+j=m-1} (2i+1)!!(2j+1)!! d^2 Z/dt_i dt_j
  for (int i = 0; m >= 1 && i <= m - 1; ++i) {
    const int j = m - 1 - i;
    const Rat c = Rat(1, 4) * Rat::double_factorial_odd(2 * i + 1) *
                  Rat::double_factorial_odd(2 * j + 1);
    out = out + Z.deriv_t(static_cast<unsigned>(i))
                    .deriv_t(static_cast<unsigned>(j))
                    .mul_hbar(1)
                    .scaled(c);
  }

  // 1/2 sum_i (2i+2m+1)!!/(2i-1)!! t_i dZ/dt_{i+m}
  for (int i = 0; i + m <= K; ++i) {
    if (i + m < 0) continue;
    const Rat c = Rat(1, 2) * Rat::double_factorial_odd(2L * (i + m) + 1) /
                  Rat::double_factorial_odd(2L * i - 1);
    SeriesMono ti;
    ti.t.assign(static_cast<size_t>(i) + 1, 0);
    ti.t[static_cast<size_t>(i)] = 1;
    out = out + Z.deriv_t(static_cast<unsigned>(i + m)).shifted_by_mono(ti).scaled(c);
  }
  // index shift: coefficients with max index > K - m would need dZ/dt_{>K}
  if (m > 0) {
    SeriesRegion r = out.region();
    r.max_idx = K - m;
    out = out.restricted(r);
  }

  // 1/2 * (1/8) delta_{m,0} Z  +  1/2 * t_0^2/(2 hbar) delta_{m,-1} Z
  if (m == 0) out = out + Z.scaled(Rat(1, 16));
  if (m == -1) {
    SeriesMono t02;
    t02.h = -1;
    t02.t = {2};
    out = out + Z.shifted_by_mono(t02).scaled(Rat(1, 4));
  }
  return out;
}

}  // namespace supervol
