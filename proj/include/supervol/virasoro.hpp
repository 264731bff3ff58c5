#ifndef SUPERVOL_VIRASORO_HPP
#define SUPERVOL_VIRASORO_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "supervol/poly.hpp"
#include "supervol/trunc_series.hpp"

namespace supervol {

enum class BracketKind { Theta, KW };

// Sorted multiset of tau indices.
using Multiset = std::vector<unsigned>;

// <Theta tau_{k_1}...tau_{k_n}> with Sum k_i = g-1, or <tau_{k_1}...tau_{k_n}>
// with Sum k_i = 3g-3+n; plain rationals, zero when no integral genus fits.
// The recursion descends on a chosen element (any choice terminates; the
// default is a maximal index, and the invariance over choices is a test).
class BracketTable {
 public:
  static BracketTable& instance();

  Rat bracket(BracketKind kind, const Multiset& ks);
  // Same value, recursing on the element at `pos` of the sorted multiset.
  Rat bracket_via(BracketKind kind, const Multiset& ks, size_t pos);

  // The genus fixed by the dimension constraint, if any.
  static std::optional<unsigned> genus_of(BracketKind kind, const Multiset& ks);

 private:
  BracketTable() = default;
  std::mutex mu_;
  std::map<std::pair<BracketKind, Multiset>, Rat> memo_;
};

inline Rat theta_bracket(const Multiset& ks) {
  return BracketTable::instance().bracket(BracketKind::Theta, ks);
}
inline Rat kw_bracket(const Multiset& ks) {
  return BracketTable::instance().bracket(BracketKind::KW, ks);
}

// Reads the brackets off the top part of a volume polynomial through the
// dictionary L_i^{2k} = 2^k k! t_k: bracket = coeff * prod 2^{k_i} k_i!.
std::map<Multiset, Rat> coeff_dictionary(const EvenPoly& top, BracketKind kind);

struct TauBounds {
  int G = 3;   // max hbar power
  int N = 4;   // max t degree
  int K = 4;   // max t index
};

// Z = exp sum_{g,multisets} hbar^{g-1} <...> prod t_{k_i} / prod m_j!
TruncSeries<Rat> assemble_tau(BracketKind kind, const TauBounds& b);
TruncSeries<Rat> assemble_tau_log(BracketKind kind, const TauBounds& b);

enum class VirasoroForm { BGW, KW };  // L_m (m >= 0) vs L'_m (m >= -1)

// L_m = -1/2 (2m+1)!! d/dt_m + 1/2 Lhat_m
// L'_m = -1/2 (2m+3)!! d/dt_{m+1} + 1/2 Lhat_m
// Lhat_m = hbar/2 sum_{i+j=m-1} (2i+1)!!(2j+1)!! d^2/dt_i dt_j
//          + sum_i (2i+2m+1)!!/(2i-1)!! t_i d/dt_{i+m}
//          + 1/8 delta_{m,0} + t_0^2/(2 hbar) delta_{m,-1}
TruncSeries<Rat> apply_virasoro(VirasoroForm form, int m, const TruncSeries<Rat>& Z);

}  // namespace supervol

#endif
