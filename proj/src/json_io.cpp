#include "supervol/json_io.hpp"

namespace supervol {

Json to_json(const Rat& r) {
  return Json{{"num", r.num_str()}, {"den", r.den_str()}};
}

Rat rat_from_json(const Json& j) {
  return Rat::parse(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

Json to_json(const PiScalar& s) {
  Json a = Json::array();
  for (int p = 0; p <= s.pi2_degree(); ++p) {
    const Rat c = s.coeff(static_cast<unsigned>(p));
    if (c.is_zero()) continue;
    a.push_back(Json{{"pi_power", 2 * p}, {"num", c.num_str()}, {"den", c.den_str()}});
  }
  return a;
}

PiScalar pi_scalar_from_json(const Json& j) {
  PiScalar s;
  for (const auto& e : j) {
    const int pp = e.at("pi_power").get<int>();
    if (pp < 0 || pp % 2 != 0) throw std::invalid_argument("PiScalar JSON: bad pi_power");
    s += PiScalar::pi2pow(
        Rat::parse(e.at("num").get<std::string>() + "/" + e.at("den").get<std::string>()),
        static_cast<unsigned>(pp / 2));
  }
  return s;
}

Json to_json(const EvenPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"alpha", e}, {"coeff", to_json(c)}});
  return Json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

EvenPoly even_poly_from_json(const Json& j) {
  EvenPoly p(j.at("arity").get<unsigned>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("alpha").get<Expo>(), pi_scalar_from_json(t.at("coeff")));
  return p;
}

Json to_json(const RawPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"expo", e}, {"coeff", to_json(c)}});
  return Json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

RawPoly raw_poly_from_json(const Json& j) {
  RawPoly p(j.at("arity").get<unsigned>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("expo").get<Expo>(), pi_scalar_from_json(t.at("coeff")));
  return p;
}

Json to_json(const LaurentSeries& s) {
  Json coeffs = Json::array();
  for (int e = s.lo(); e < s.order(); ++e) {
    if (s.at(e).is_zero()) continue;
    coeffs.push_back(Json{{"exponent", e}, {"coeff", to_json(s.at(e))}});
  }
  return Json{{"lo", s.lo()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

LaurentSeries laurent_from_json(const Json& j) {
  LaurentSeries s(j.at("lo").get<int>(), j.at("order").get<int>());
  for (const auto& c : j.at("coeffs"))
    s.set(c.at("exponent").get<int>(), pi_scalar_from_json(c.at("coeff")));
  return s;
}

}  // namespace supervol
