#ifndef SUPERVOL_TRUNC_SERIES_HPP
#define SUPERVOL_TRUNC_SERIES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "supervol/laurent.hpp"  // TruncationError
#include "supervol/parallel.hpp"
#include "supervol/pi_scalar.hpp"
#include "supervol/rat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supervol {

// Monomial hbar^h * t0^e0 * t1^e1 * ... ; trailing zero exponents trimmed.
struct SeriesMono {
  int h = 0;
  std::vector<unsigned> t;

  void trim() {
    while (!t.empty() && t.back() == 0) t.pop_back();
  }
  int deg() const { return static_cast<int>(std::accumulate(t.begin(), t.end(), 0u)); }
  int max_idx() const { return static_cast<int>(t.size()) - 1; }
  // Additive capacity 3*h + deg; the truncation region is an ideal in this
  // grading, which keeps products sound in the presence of hbar^{-1} terms.
  long cap() const { return 3L * h + deg(); }

  friend bool operator<(const SeriesMono& a, const SeriesMono& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.t < b.t;
  }
  friend bool operator==(const SeriesMono& a, const SeriesMono& b) {
    return a.h == b.h && a.t == b.t;
  }

  std::string str() const;
};

// Completeness region: coefficients are guaranteed exact for monomials with
// cap <= cap_bound, deg <= max_deg, and highest t-index <= max_idx.
struct SeriesRegion {
  long cap_bound = 0;
  int max_deg = 0;
  int max_idx = -1;

  bool contains(const SeriesMono& m) const {
    return m.cap() <= cap_bound && m.deg() <= max_deg && m.max_idx() <= max_idx;
  }
  static SeriesRegion meet(const SeriesRegion& a, const SeriesRegion& b) {
    return {std::min(a.cap_bound, b.cap_bound), std::min(a.max_deg, b.max_deg),
            std::min(a.max_idx, b.max_idx)};
  }
  // Region for the standard (max hbar power G, max t-degree N, max index K)
  // request: cap covers every monomial with h <= G and deg <= N.
  static SeriesRegion from_bounds(int G, int N, int K) {
    return {3L * G + N, N, K};
  }
  bool empty() const { return max_deg < 0 || max_idx < -1 || cap_bound < -max_deg; }
};

namespace detail {
inline bool coeff_is_zero(const Rat& c) { return c.is_zero(); }
inline bool coeff_is_zero(const PiScalar& c) { return c.is_zero(); }
inline Rat coeff_div(const Rat& c, const Rat& d) { return c / d; }
inline PiScalar coeff_div(const PiScalar& c, const Rat& d) { return c.div_rat(d); }
}  // namespace detail

// Truncated formal series in hbar and t_0..t_K over an exact coefficient
// ring (Rat for tau functions, PiScalar once 2*pi^2 shifts enter).
template <typename C>
class TruncSeries {
 public:
  explicit TruncSeries(SeriesRegion r = {}) : region_(r) {}

  static TruncSeries constant(const C& c, SeriesRegion r) {
    TruncSeries s(r);
    s.add_term(SeriesMono{}, c);
    return s;
  }
  static TruncSeries one(SeriesRegion r) { return constant(C(Rat(1)), r); }

  const SeriesRegion& region() const { return region_; }
  const std::map<SeriesMono, C>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(SeriesMono m, const C& c) {
    m.trim();
    if (detail::coeff_is_zero(c) || !region_.contains(m)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) t_.erase(it);
    }
  }

  // Exact coefficient; throws when the monomial lies outside the region.
  C coeff(SeriesMono m) const {
    m.trim();
    if (!region_.contains(m))
      throw TruncationError("TruncSeries: coefficient outside truncation region: " + m.str());
    auto it = t_.find(m);
    return it == t_.end() ? C() : it->second;
  }

  C constant_term() const {
    auto it = t_.find(SeriesMono{});
    return it == t_.end() ? C() : it->second;
  }

  // max(0, -min cap over the support): how far the series dips below the
  // additive grading floor (only the t0^2/hbar Virasoro term does).
  long cap_defect() const {
    long d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, -m.cap());
    return d;
  }

  TruncSeries restricted(SeriesRegion r) const {
    r = SeriesRegion::meet(r, region_);
    TruncSeries out(r);
    for (const auto& [m, c] : t_)
      if (r.contains(m)) out.t_.emplace(m, c);
    return out;
  }

  TruncSeries operator-() const {
    TruncSeries out(region_);
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out = a.restricted(SeriesRegion::meet(a.region_, b.region_));
    for (const auto& [m, c] : b.t_) out.add_term(m, c);
    return out;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    SeriesRegion r{std::min(a.region_.cap_bound - b.cap_defect(),
                            b.region_.cap_bound - a.cap_defect()),
                   std::min(a.region_.max_deg, b.region_.max_deg),
                   std::min(a.region_.max_idx, b.region_.max_idx)};
    TruncSeries out(r);
    std::vector<const std::pair<const SeriesMono, C>*> av;
    av.reserve(a.t_.size());
    for (const auto& p : a.t_) av.push_back(&p);

    auto fuse = [&r](const SeriesMono& x, const SeriesMono& y) {
      SeriesMono m;
      m.h = x.h + y.h;
      m.t.assign(std::max(x.t.size(), y.t.size()), 0);
      for (size_t i = 0; i < x.t.size(); ++i) m.t[i] += x.t[i];
      for (size_t i = 0; i < y.t.size(); ++i) m.t[i] += y.t[i];
      return m;
    };

#ifdef _OPENMP
    if (parallel::enabled() && av.size() > 64) {
      const int nt = omp_get_max_threads();
      std::vector<std::map<SeriesMono, C>> part(static_cast<size_t>(nt));
#pragma omp parallel for schedule(dynamic, 16)
      for (long ii = 0; ii < static_cast<long>(av.size()); ++ii) {
        auto& local = part[static_cast<size_t>(omp_get_thread_num())];
        for (const auto& [mb, cb] : b.t_) {
          SeriesMono m = fuse(av[static_cast<size_t>(ii)]->first, mb);
          if (!r.contains(m)) continue;
          C prod = av[static_cast<size_t>(ii)]->second * cb;
          auto it = local.find(m);
          if (it == local.end()) local.emplace(std::move(m), std::move(prod));
          else it->second += prod;
        }
      }
      for (auto& local : part)
        for (auto& [m, c] : local) out.add_term(m, c);
      return out;
    }
#endif
    for (const auto* pa : av)
      for (const auto& [mb, cb] : b.t_) {
        SeriesMono m = fuse(pa->first, mb);
        if (r.contains(m)) out.add_term(m, pa->second * cb);
      }
    return out;
  }

  TruncSeries scaled(const C& s) const {
    TruncSeries out(region_);
    for (const auto& [m, c] : t_) out.add_term(m, c * s);
    return out;
  }

  // Multiply by hbar^p * t0^{e0} * ... (exact monomial shift).
  TruncSeries shifted_by_mono(const SeriesMono& m0) const {
    SeriesRegion r{region_.cap_bound + m0.cap(), region_.max_deg + m0.deg(), region_.max_idx};
    TruncSeries out(r);
    for (const auto& [m, c] : t_) {
      SeriesMono m2;
      m2.h = m.h + m0.h;
      m2.t.assign(std::max(m.t.size(), m0.t.size()), 0);
      for (size_t i = 0; i < m.t.size(); ++i) m2.t[i] += m.t[i];
      for (size_t i = 0; i < m0.t.size(); ++i) m2.t[i] += m0.t[i];
      out.add_term(m2, c);
    }
    return out;
  }

  TruncSeries mul_hbar(int p) const {
    SeriesMono m0;
    m0.h = p;
    return shifted_by_mono(m0);
  }

  TruncSeries deriv_t(unsigned j) const {
    if (static_cast<int>(j) > region_.max_idx)
      throw TruncationError("TruncSeries: derivative index beyond truncation region");
    SeriesRegion r{region_.cap_bound - 1, region_.max_deg - 1, region_.max_idx};
    TruncSeries out(r);
    for (const auto& [m, c] : t_) {
      if (m.t.size() <= j || m.t[j] == 0) continue;
      SeriesMono m2 = m;
      m2.t[j] -= 1;
      out.add_term(m2, c * Rat(static_cast<long>(m.t[j])));
    }
    return out;
  }

  // exp of a series with zero constant term and no monomial below the cap
  // grading floor; the result carries the same region.
  TruncSeries exp_() const {
    if (!detail::coeff_is_zero(constant_term()))
      throw std::domain_error("TruncSeries::exp_: nonzero constant term");
    if (cap_defect() > 0)
      throw std::domain_error("TruncSeries::exp_: negative-capacity monomials");
    TruncSeries out = one(region_);
    TruncSeries power = one(region_);
    Rat mfact(1);
    for (unsigned m = 1;; ++m) {
      power = power * (*this);
      power.region_ = region_;  // cap_defect()==0 keeps products sound at full region
      if (power.is_zero()) break;
      mfact *= Rat(static_cast<long>(m));
      for (const auto& [mono, c] : power.t_) out.add_term(mono, detail::coeff_div(c, mfact));
    }
    return out;
  }

  // log of a series with constant term 1 (same support restrictions).
  TruncSeries log_() const {
    TruncSeries u = *this - one(region_);
    if (!detail::coeff_is_zero(u.constant_term()))
      throw std::domain_error("TruncSeries::log_: constant term is not 1");
    if (u.cap_defect() > 0)
      throw std::domain_error("TruncSeries::log_: negative-capacity monomials");
    TruncSeries out(region_);
    TruncSeries power = one(region_);
    for (unsigned m = 1;; ++m) {
      power = power * u;
      power.region_ = region_;
      if (power.is_zero()) break;
      const Rat sign = (m % 2 == 1) ? Rat(1) : Rat(-1);
      for (const auto& [mono, c] : power.t_)
        out.add_term(mono, detail::coeff_div(c * sign, Rat(static_cast<long>(m))));
    }
    return out;
  }

  // Keep only monomials supported on t0 alone (t1 = t2 = ... = 0).
  TruncSeries specialize_to_t0() const {
    TruncSeries out(region_);
    for (const auto& [m, c] : t_)
      if (m.max_idx() <= 0) out.t_.emplace(m, c);
    return out;
  }

  // Taylor recentering t_j <- t_j + shift_j. Pure support expansion; the
  // caller supplies the region on which it knows the result is complete
  // (see kdv::verify_translation for the bound derivation).
  TruncSeries translated(const std::vector<C>& shifts, SeriesRegion claimed) const {
    TruncSeries out(claimed);
    for (const auto& [m, c] : t_) {
      // expand prod_j (t_j + s_j)^{e_j} over shifted slots
      std::vector<std::pair<SeriesMono, C>> acc{{SeriesMono{m.h, {}}, c}};
      for (size_t j = 0; j < m.t.size(); ++j) {
        const unsigned e = m.t[j];
        if (e == 0) continue;
        const bool has_shift = j < shifts.size() && !detail::coeff_is_zero(shifts[j]);
        std::vector<std::pair<SeriesMono, C>> next;
        for (const auto& [pm, pc] : acc) {
          if (!has_shift) {
            SeriesMono m2 = pm;
            if (m2.t.size() <= j) m2.t.resize(j + 1, 0);
            m2.t[j] += e;
            next.emplace_back(std::move(m2), pc);
            continue;
          }
          C spow(Rat(1));
          for (unsigned r = 0; r <= e; ++r) {
            SeriesMono m2 = pm;
            if (m2.t.size() <= j) m2.t.resize(j + 1, 0);
            m2.t[j] += e - r;
            next.emplace_back(std::move(m2), pc * spow * Rat::binomial(e, r));
            if (r < e) spow = spow * shifts[j];
          }
        }
        acc = std::move(next);
      }
      for (auto& [pm, pc] : acc) out.add_term(pm, pc);
    }
    return out;
  }

  std::string str() const;

 private:
  SeriesRegion region_;
  std::map<SeriesMono, C> t_;
};

inline std::string SeriesMono::str() const {
  std::string s;
  if (h != 0) s += "hbar^" + std::to_string(h);
  for (size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(j);
    if (t[j] > 1) s += "^" + std::to_string(t[j]);
  }
  return s.empty() ? "1" : s;
}

template <typename C>
std::string TruncSeries<C>::str() const {
  std::string out;
  for (const auto& [m, c] : t_) {
    std::string cs;
    if constexpr (std::is_same_v<C, Rat>) cs = c.str();
    else cs = c.str();
    out += (out.empty() ? "" : " + ") + ("(" + cs + ")*" + m.str());
  }
  return out.empty() ? "0" : out;
}

// Ring widening Q -> Q[pi^2].
inline TruncSeries<PiScalar> widen(const TruncSeries<Rat>& s) {
  TruncSeries<PiScalar> out(s.region());
  for (const auto& [m, c] : s.terms()) out.add_term(m, PiScalar(c));
  return out;
}

}  // namespace supervol

#endif
