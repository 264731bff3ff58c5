#ifndef SUPERVOL_VERIFY_HPP
#define SUPERVOL_VERIFY_HPP

#include <string>
#include <vector>

#include "supervol/virasoro.hpp"

namespace supervol {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // per-coefficient diffs on failure
  double seconds = 0;
};

struct VerifyOptions {
  int max_euler = 6;         // volume keys 2g-2+n <= max_euler (Theta)
  int max_euler_wp = 5;      // string/dilaton and KW-equivalence bound
  int specrec_euler = 5;     // Theta-curve correlator keys
  int specrec_euler_sine = 4;
  TauBounds tau{3, 4, 4};    // reported truncation for Virasoro/KdV checks
  bool kdv_bad_input = false;
};

std::vector<Check> verify_volumes(const VerifyOptions& o);
std::vector<Check> verify_dilaton(const VerifyOptions& o);
std::vector<Check> verify_virasoro(const VerifyOptions& o);
std::vector<Check> verify_kdv(const VerifyOptions& o);
std::vector<Check> verify_translation_suite(const VerifyOptions& o);
std::vector<Check> verify_specrec(const VerifyOptions& o);
std::vector<Check> verify_all(const VerifyOptions& o);

}  // namespace supervol

#endif
