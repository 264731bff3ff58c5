#ifndef SUPERVOL_VOLUMES_HPP
#define SUPERVOL_VOLUMES_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "supervol/poly.hpp"

namespace supervol {

enum class VolFlavor { Theta, WP, ThetaTop, WPTop };

const char* flavor_name(VolFlavor f);

struct VolKey {
  VolFlavor flavor;
  unsigned g;
  unsigned n;
  friend bool operator<(const VolKey& a, const VolKey& b) {
    return std::tie(a.flavor, a.g, a.n) < std::tie(b.flavor, b.g, b.n);
  }
};

// (2g-2+n > 0) and within the recursion's domain (n >= 1, except that genus
// zero Theta keys are hard zeros).
bool stable(unsigned g, unsigned n);

// Memoized volume recursions. vol(Theta, g, n) is V^Theta_{g,n}, an exact
// polynomial of degree g-1 in the L_i^2; vol(WP, g, n) is V^WP_{g,n} of
// degree 3g-3+n. The Top flavors run the homogeneous recursions on their own
// moment tables and must coincide with the top parts of the full volumes.
class VolumeEngine {
 public:
  static VolumeEngine& instance();

  const EvenPoly& vol(VolFlavor f, unsigned g, unsigned n);

  // One JSON file per key under `dir`; loads are trusted only after the
  // symmetry check. Empty optional turns disk caching off (in-memory only).
  void set_cache_dir(std::optional<std::string> dir);
  void clear_memory_cache();

 private:
  VolumeEngine() = default;
  EvenPoly compute(VolFlavor f, unsigned g, unsigned n);
  EvenPoly recursion_theta_like(VolFlavor f, unsigned g, unsigned n);
  EvenPoly recursion_wp_like(VolFlavor f, unsigned g, unsigned n);

  std::mutex mu_;
  std::map<VolKey, EvenPoly> cache_;
  std::optional<std::string> dir_;
};

inline const EvenPoly& vol_theta(unsigned g, unsigned n) {
  return VolumeEngine::instance().vol(VolFlavor::Theta, g, n);
}
inline const EvenPoly& vol_wp(unsigned g, unsigned n) {
  return VolumeEngine::instance().vol(VolFlavor::WP, g, n);
}
inline const EvenPoly& vol_theta_top(unsigned g, unsigned n) {
  return VolumeEngine::instance().vol(VolFlavor::ThetaTop, g, n);
}
inline const EvenPoly& vol_wp_top(unsigned g, unsigned n) {
  return VolumeEngine::instance().vol(VolFlavor::WPTop, g, n);
}

// V^Theta_{g,n+1}(2 pi i, L) vs (2g-2+n) V^Theta_{g,n}(L).
std::pair<EvenPoly, EvenPoly> dilaton_eval_theta(unsigned g, unsigned n);

// V^Theta_{g,0} = V^Theta_{g,1}(2 pi i) / (2g-2), g >= 2.
PiScalar theta_n0(unsigned g);
// V^WP_{g,0} from the string theorem's derivative identity at n = 0:
// dV_{g,1}/dL (2 pi i) = 2 pi i (2g-2) V_{g,0}.
PiScalar wp_n0(unsigned g);

struct StringDilatonReport {
  EvenPoly id1_lhs, id1_rhs;  // V_{g,n+1}(L, 2 pi i) vs sum_k int_0^{L_k} x V dx
  EvenPoly id2_lhs, id2_rhs;  // Q(-4 pi^2) vs (2g-2+n) V_{g,n}
  bool ok() const { return id1_lhs == id1_rhs && id2_lhs == id2_rhs; }
};
StringDilatonReport string_dilaton_wp(unsigned g, unsigned n);

enum class SuperNorm { VhatWP, VSW };
EvenPoly normalize_super(unsigned g, unsigned n, SuperNorm which);

}  // namespace supervol

#endif
