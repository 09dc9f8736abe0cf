#include "satake/cli_json.hpp"

#include "satake/deodhar.hpp"
#include "satake/error.hpp"

namespace satake::cli {

Json poly_to_json(const LaurentPoly& p) {
  if (p.is_polynomial()) return p.coeffs();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
  return {{"half_exponents", terms}};
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  if (j.is_array()) return LaurentPoly::from_coeffs(j.get<std::vector<Int>>());
  for (const auto& t : j.at("half_exponents")) p += LaurentPoly::half_power(t.at(0).get<int>(), t.at(1).get<Int>());
  return p;
}

Json cell_list_to_json(const CellList& c) {
  Json cells = Json::array();
  for (const auto& x : c.cells) cells.push_back({{"A", x.a}, {"Gm", x.b}});
  return {{"mu", c.mu},
          {"nu", c.nu},
          {"sign", c.sign == Orbit::Plus ? "plus" : "minus"},
          {"cells", cells},
          {"poly", poly_to_json(c.poly())},
          {"dim", c.dimension()},
          {"top_cells", c.empty() ? 0 : c.top_cells()}};
}

CellList cell_list_from_json(const Json& j) {
  CellList c;
  c.mu = j.at("mu").get<Coweight>();
  c.nu = j.at("nu").get<Coweight>();
  const auto sign = j.at("sign").get<std::string>();
  if (sign != "plus" && sign != "minus") throw ValidationError("sign must be plus or minus");
  c.sign = sign == "plus" ? Orbit::Plus : Orbit::Minus;
  for (const auto& x : j.at("cells")) c.cells.push_back({x.at("A").get<int>(), x.at("Gm").get<int>()});
  return c;
}

Json hecke_to_json(const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [nu, c] : h.terms()) terms.push_back({{"nu", nu}, {"N", poly_to_json(c)}});
  return {{"terms", terms}};
}

HeckeElement hecke_from_json(const Json& j) {
  HeckeElement h;
  for (const auto& t : j.at("terms")) h.add(t.at("nu").get<Coweight>(), poly_from_json(t.at("N")));
  return h;
}

Json graded_to_json(const GradedCharacter& c) {
  Json out = Json::array();
  for (const auto& [key, m] : c) out.push_back({{"nu", key.first}, {"grading", key.second}, {"mult", m}});
  return out;
}

GradedCharacter graded_from_json(const Json& j) {
  GradedCharacter c;
  for (const auto& e : j) c[{e.at("nu").get<Coweight>(), e.at("grading").get<Int>()}] = e.at("mult").get<Int>();
  return c;
}

Json vinberg_class_to_json(const VinbergClass& v) {
  Json out = Json::array();
  for (const auto& [key, c] : v) out.push_back({{"mu", key.first}, {"n", key.second}, {"coeff", c}});
  return out;
}

VinbergClass vinberg_class_from_json(const Json& j) {
  VinbergClass v;
  for (const auto& e : j) v[{e.at("mu").get<Coweight>(), e.at("n").get<Int>()}] = e.at("coeff").get<Int>();
  return v;
}

Json spherical_to_json(const SphericalFunction& f) {
  Json out = Json::array();
  for (const auto& [nu, c] : f) out.push_back({{"nu", nu}, {"coeff", poly_to_json(c)}});
  return out;
}

SphericalFunction spherical_from_json(const Json& j) {
  SphericalFunction f;
  for (const auto& e : j) f[e.at("nu").get<Coweight>()] = poly_from_json(e.at("coeff"));
  return f;
}

}  // namespace satake::cli
