#ifndef SUPERVOL_JSON_IO_HPP
#define SUPERVOL_JSON_IO_HPP

#include <json.hpp>

#include "supervol/laurent.hpp"
#include "supervol/poly.hpp"
#include "supervol/trunc_series.hpp"

namespace supervol {

using Json = nlohmann::json;

// Exact JSON forms: integers as decimal-free strings, PiScalar as an array of
// {pi_power, num, den} sorted by pi_power. No floats anywhere.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const PiScalar& s);
PiScalar pi_scalar_from_json(const Json& j);

Json to_json(const EvenPoly& p);
EvenPoly even_poly_from_json(const Json& j);

Json to_json(const RawPoly& p);
RawPoly raw_poly_from_json(const Json& j);

Json to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(const Json& j);

template <typename C>
Json series_to_json(const TruncSeries<C>& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json t;
    t["hbar"] = m.h;
    t["t"] = m.t;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return Json{{"region",
               {{"cap", s.region().cap_bound},
                {"max_deg", s.region().max_deg},
                {"max_idx", s.region().max_idx}}},
              {"terms", std::move(terms)}};
}

template <typename C>
TruncSeries<C> series_from_json(const Json& j) {
  const auto& r = j.at("region");
  TruncSeries<C> s(SeriesRegion{r.at("cap").get<long>(), r.at("max_deg").get<int>(),
                                r.at("max_idx").get<int>()});
  for (const auto& t : j.at("terms")) {
    SeriesMono m;
    m.h = t.at("hbar").get<int>();
    m.t = t.at("t").get<std::vector<unsigned>>();
    if constexpr (std::is_same_v<C, Rat>) s.add_term(m, rat_from_json(t.at("coeff")));
    else s.add_term(m, pi_scalar_from_json(t.at("coeff")));
  }
  return s;
}

}  // namespace supervol

#endif
