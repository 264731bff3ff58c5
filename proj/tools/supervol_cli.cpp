// supervol: exact volume polynomials, intersection-number brackets, KdV tau
// functions and topological-recursion correlators, with cross-verification.
#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "supervol/json_io.hpp"
#include "supervol/kdv.hpp"
#include "supervol/parallel.hpp"
#include "supervol/specrec.hpp"
#include "supervol/verify.hpp"
#include "supervol/volumes.hpp"

using namespace supervol;

namespace {

// Orbit-compressed human form: symmetric groups of monomials print once,
// e.g. "(1/2)*(L1^2+L2^2+L3^2+L4^2) + 2*pi^2".
std::string pretty_poly(const EvenPoly& p) {
  if (p.is_zero()) return "0";
  std::map<Expo, std::pair<PiScalar, std::vector<Expo>>> orbits;
  for (const auto& [e, c] : p.terms()) {
    Expo sig(e);
    std::sort(sig.begin(), sig.end(), std::greater<unsigned>());
    auto [it, fresh] = orbits.emplace(sig, std::make_pair(c, std::vector<Expo>{e}));
    if (!fresh) it->second.second.push_back(e);
  }
  // highest degree first
  std::vector<std::pair<Expo, std::pair<PiScalar, std::vector<Expo>>>> ordered(
      orbits.begin(), orbits.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto deg = [](const Expo& e) {
      unsigned d = 0;
      for (unsigned x : e) d += x;
      return d;
    };
    if (deg(a.first) != deg(b.first)) return deg(a.first) > deg(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [sig, group] : ordered) {
    const auto& [c, monos] = group;
    std::string term;
    const bool constant = std::all_of(sig.begin(), sig.end(), [](unsigned x) { return x == 0; });
    if (constant) {
      term = c.str();
    } else {
      term = "(" + c.str() + ")*";
      std::string sum;
      std::vector<Expo> sorted_monos(monos);
      std::sort(sorted_monos.begin(), sorted_monos.end(), std::greater<Expo>());
      for (const auto& e : sorted_monos) {
        std::string mono;
        for (unsigned i = 0; i < e.size(); ++i)
          if (e[i] > 0) {
            if (!mono.empty()) mono += "*";
            mono += "L" + std::to_string(i + 1) + "^" + std::to_string(2 * e[i]);
          }
        sum += (sum.empty() ? "" : "+") + mono;
      }
      term += monos.size() > 1 ? "(" + sum + ")" : sum;
    }
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

int run_volume(const std::string& flavor, unsigned g, unsigned n,
               const std::vector<std::string>& eval, bool json) {
  VolFlavor f;
  bool vhat = false, vsw = false;
  if (flavor == "theta") f = VolFlavor::Theta;
  else if (flavor == "wp") f = VolFlavor::WP;
  else if (flavor == "theta-top") f = VolFlavor::ThetaTop;
  else if (flavor == "wp-top") f = VolFlavor::WPTop;
  else if (flavor == "vhat") { f = VolFlavor::Theta; vhat = true; }
  else if (flavor == "vsw") { f = VolFlavor::Theta; vsw = true; }
  else {
    std::cerr << "unknown flavor '" << flavor << "'\n";
    return 2;
  }
  EvenPoly v = vhat   ? normalize_super(g, n, SuperNorm::VhatWP)
               : vsw  ? normalize_super(g, n, SuperNorm::VSW)
                      : VolumeEngine::instance().vol(f, g, n);
  if (eval.size() > v.arity()) {
    std::cerr << "more eval values than variables\n";
    return 2;
  }
  for (size_t i = eval.size(); i-- > 0;) {
    PiScalar val;
    if (eval[i] == "2pii") val = PiScalar::pi2pow(Rat(-4), 1);
    else val = PiScalar(Rat::parse(eval[i]));
    v = v.substitute_L2(static_cast<unsigned>(i), val);
  }
  if (json) std::cout << to_json(v).dump(1) << "\n";
  else std::cout << pretty_poly(v) << "\n";
  return 0;
}

int run_bracket(const std::string& kind_s, const std::vector<unsigned>& ks, bool json) {
  const BracketKind kind = kind_s == "theta" ? BracketKind::Theta : BracketKind::KW;
  const Rat v = BracketTable::instance().bracket(kind, ks);
  const auto g = BracketTable::genus_of(kind, ks);
  if (json) {
    Json j{{"kind", kind_s},
           {"ks", ks},
           {"n", ks.size()},
           {"value", to_json(v)}};
    if (g) j["g"] = *g;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << v.str() << "\n";
  }
  return 0;
}

int run_tau(const std::string& model, bool log, const TauBounds& b, bool json) {
  const BracketKind kind = model == "theta" ? BracketKind::Theta : BracketKind::KW;
  const TruncSeries<Rat> s = log ? assemble_tau_log(kind, b) : assemble_tau(kind, b);
  if (json) {
    std::cout << series_to_json(s).dump(1) << "\n";
    return 0;
  }
  if (s.is_zero()) {
    std::cout << (log ? "0" : "1") << "\n";
    return 0;
  }
  for (const auto& [m, c] : s.terms()) std::cout << c.str() << " * " << m.str() << "\n";
  return 0;
}

int run_specrec(const std::string& curve, unsigned g, unsigned n, int max_euler, bool json) {
  SpectralCurve c = curve == "theta"  ? SpectralCurve::theta(260)
                    : curve == "sine" ? SpectralCurve::sine(260)
                                      : SpectralCurve::airy(260);
  CorrelatorEngine eng(std::move(c), max_euler);
  const CorrForm& w = eng.correlator(g, n);
  if (json) {
    Json terms = Json::array();
    for (const auto& [b, co] : w.terms) {
      std::vector<unsigned> orders;
      for (unsigned x : b) orders.push_back(2 * x + 2);
      terms.push_back(Json{{"pole_orders", orders}, {"coeff", to_json(co)}});
    }
    std::cout << Json{{"g", g}, {"n", n}, {"curve", curve}, {"terms", terms}}.dump(1) << "\n";
  } else {
    std::cout << w.str() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& o, const std::string& json_out) {
  std::vector<Check> checks;
  if (suite == "all") checks = verify_all(o);
  else if (suite == "volumes") checks = verify_volumes(o);
  else if (suite == "dilaton") checks = verify_dilaton(o);
  else if (suite == "virasoro") checks = verify_virasoro(o);
  else if (suite == "kdv") checks = verify_kdv(o);
  else if (suite == "translation") checks = verify_translation_suite(o);
  else if (suite == "specrec") checks = verify_specrec(o);
  else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return 2;
  }
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  size_t failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", c.seconds);
    std::cout << buf;
    if (!c.pass && !c.detail.empty()) std::cout << " : " << c.detail;
    std::cout << "\n";
    if (!c.pass) ++failed;
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  if (!json_out.empty()) {
    Json arr = Json::array();
    for (const auto& c : checks)
      arr.push_back(Json{{"name", c.name},
                         {"status", c.pass ? "pass" : "fail"},
                         {"detail", c.detail},
                         {"seconds", c.seconds}});
    std::ofstream out(json_out);
    out << arr.dump(1) << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact super/Weil-Petersson volume and KdV tau-function engine"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  if (const char* env = std::getenv("SUPERVOL_CACHE_DIR")) cache_dir = env;
  app.add_option("--cache-dir", cache_dir, "on-disk volume cache directory")
      ->envname("SUPERVOL_CACHE_DIR");
  bool serial = false;
  app.add_flag("--serial", serial, "disable the OpenMP kernels (serial reference path)");

  // volume
  auto* vol = app.add_subcommand("volume", "print a volume polynomial");
  vol->fallthrough();
  std::string vflavor;
  unsigned vg = 0, vn = 0;
  std::vector<std::string> eval;
  bool vjson = false;
  vol->add_option("flavor", vflavor, "theta|wp|vhat|vsw|theta-top|wp-top")->required();
  vol->add_option("g", vg)->required();
  vol->add_option("n", vn)->required();
  vol->add_option("--eval", eval, "L^2 substitutions, rationals or '2pii' (= -4 pi^2)")
      ->delimiter(',');
  vol->add_flag("--json", vjson);

  // bracket
  auto* br = app.add_subcommand("bracket", "intersection-number bracket");
  br->fallthrough();
  std::string bkind;
  std::vector<unsigned> bks;
  bool bjson = false;
  br->add_option("kind", bkind, "theta|kw")->required()->check(CLI::IsMember({"theta", "kw"}));
  br->add_option("ks", bks, "tau indices")->required();
  br->add_flag("--json", bjson);

  // tau
  auto* tau = app.add_subcommand("tau", "truncated tau function");
  tau->fallthrough();
  std::string tmodel;
  bool tlog = false, tjson = false;
  TauBounds tb;
  tau->add_option("model", tmodel, "theta|kw")->required()->check(CLI::IsMember({"theta", "kw"}));
  tau->add_flag("--log", tlog, "print log Z instead of Z");
  tau->add_option("--max-hbar,--G", tb.G);
  tau->add_option("--max-weight,--N", tb.N, "max total t-degree");
  tau->add_option("--max-index,--K", tb.K);
  tau->add_flag("--json", tjson);

  // specrec
  auto* sp = app.add_subcommand("specrec", "topological-recursion correlator");
  sp->fallthrough();
  std::string scurve;
  unsigned sg = 0, sn = 0;
  int seuler = 6;
  bool sjson = false;
  sp->add_option("curve", scurve, "theta|sine|airy")
      ->required()
      ->check(CLI::IsMember({"theta", "sine", "airy"}));
  sp->add_option("g", sg)->required();
  sp->add_option("n", sn)->required();
  sp->add_option("--max-euler", seuler, "engine key budget");
  sp->add_flag("--json", sjson);

  // verify
  auto* ver = app.add_subcommand("verify", "run cross-check suites");
  ver->fallthrough();
  std::string suite = "all";
  VerifyOptions vo;
  std::string json_out;
  ver->add_option("suite", suite, "all|volumes|dilaton|virasoro|kdv|translation|specrec");
  ver->add_option("--max-euler", vo.max_euler, "volume bound 2g-2+n");
  ver->add_option("--max-euler-wp", vo.max_euler_wp);
  ver->add_option("--specrec-euler", vo.specrec_euler);
  ver->add_option("--specrec-euler-sine", vo.specrec_euler_sine);
  ver->add_option("--tau-G", vo.tau.G);
  ver->add_option("--tau-N", vo.tau.N);
  ver->add_option("--tau-K", vo.tau.K);
  ver->add_option("--json-out", json_out, "write the report as JSON");
  ver->add_flag("--bad-input", vo.kdv_bad_input,
                "inject the exp(t0^2) negative control into the kdv suite");
  int single_g = -1, single_n = -1;
  ver->add_option("--g", single_g, "with suite=dilaton: check one key and print both sides");
  ver->add_option("--n", single_n);

  // cache
  auto* ca = app.add_subcommand("cache", "manage the on-disk volume cache");
  ca->fallthrough();
  auto* warm = ca->add_subcommand("warm", "precompute volumes into the cache");
  warm->fallthrough();
  std::string wflavor = "all";
  int weuler = 6;
  warm->add_option("--flavor", wflavor, "theta|wp|theta-top|wp-top|all");
  warm->add_option("--max-euler", weuler);
  auto* clear = ca->add_subcommand("clear", "delete cached volume files");
  clear->fallthrough();
  ca->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  parallel::set_enabled(!serial);
  if (!cache_dir.empty()) VolumeEngine::instance().set_cache_dir(cache_dir);

  try {
    if (vol->parsed()) return run_volume(vflavor, vg, vn, eval, vjson);
    if (br->parsed()) return run_bracket(bkind, bks, bjson);
    if (tau->parsed()) return run_tau(tmodel, tlog, tb, tjson);
    if (sp->parsed()) return run_specrec(scurve, sg, sn, seuler, sjson);
    if (ver->parsed()) {
      if (suite == "dilaton" && single_g >= 0 && single_n >= 0) {
        auto [lhs, rhs] = dilaton_eval_theta(static_cast<unsigned>(single_g),
                                             static_cast<unsigned>(single_n));
        std::cout << "V(2 pi i, ...) = " << pretty_poly(lhs) << "\n"
                  << "(2g-2+n) V     = " << pretty_poly(rhs) << "\n";
        const bool ok = lhs == rhs;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " dilaton g=" << single_g
                  << " n=" << single_n << "\n";
        return ok ? 0 : 1;
      }
      return run_verify(suite, vo, json_out);
    }
    if (ca->parsed()) {
      if (cache_dir.empty()) {
        std::cerr << "cache: --cache-dir or SUPERVOL_CACHE_DIR required\n";
        return 2;
      }
      if (clear->parsed()) {
        size_t removed = 0;
        for (const auto& entry : std::filesystem::directory_iterator(cache_dir))
          if (entry.path().extension() == ".json") {
            std::filesystem::remove(entry.path());
            ++removed;
          }
        std::cout << "removed " << removed << " cached files\n";
        return 0;
      }
      // warm
      std::vector<VolFlavor> fl;
      if (wflavor == "all")
        fl = {VolFlavor::Theta, VolFlavor::WP, VolFlavor::ThetaTop, VolFlavor::WPTop};
      else if (wflavor == "theta") fl = {VolFlavor::Theta};
      else if (wflavor == "wp") fl = {VolFlavor::WP};
      else if (wflavor == "theta-top") fl = {VolFlavor::ThetaTop};
      else if (wflavor == "wp-top") fl = {VolFlavor::WPTop};
      else {
        std::cerr << "unknown flavor '" << wflavor << "'\n";
        return 2;
      }
      size_t total = 0;
      for (VolFlavor f : fl)
        for (unsigned g = 0; 2 * static_cast<int>(g) - 1 <= weuler; ++g)
          for (unsigned n = 1; 2 * static_cast<int>(g) - 2 + static_cast<int>(n) <= weuler; ++n) {
            if (!stable(g, n)) continue;
            VolumeEngine::instance().vol(f, g, n);
            ++total;
          }
      std::cout << "warmed " << total << " keys into " << cache_dir << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
