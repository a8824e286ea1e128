#include "allee/serialize.hpp"

#include <stdexcept>

namespace allee {

json to_json(const MultiPoly& p)
{
  const auto vars = p.vars();
  json jv = json::array();
  for (Var v : vars) jv.push_back(std::string(var_name(v)));
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exp = json::array();
    for (Var v : vars) exp.push_back(t.exp[index(v)]);
    terms.push_back({{"exp", exp}, {"num", t.coeff.get_num().get_str()}, {"den", t.coeff.get_den().get_str()}});
  }
  return {{"vars", jv}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j)
{
  std::vector<Var> vars;
  for (const auto& v : j.at("vars")) vars.push_back(parse_var(v.get<std::string>()));
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& exp = t.at("exp");
    if (exp.size() != vars.size()) throw std::invalid_argument("multipoly json: exponent length mismatch");
    MultiPoly::Term term;
    for (std::size_t i = 0; i < vars.size(); ++i) term.exp[index(vars[i])] = exp[i].get<std::uint16_t>();
    term.coeff = Rational(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    term.coeff.canonicalize();
    terms.push_back(std::move(term));
  }
  return MultiPoly::from_terms(std::move(terms));
}

json to_json(const EliminationTrace& t)
{
  json pcs = json::array();
  for (const auto& c : t.principal_coeffs) pcs.push_back(to_json(c));
  return {{"f", to_json(t.f)}, {"g", to_json(t.g)}, {"var", std::string(var_name(t.var))}, {"principal_coeffs", pcs}, {"resultant", to_json(t.resultant)}};
}

}  // namespace allee
