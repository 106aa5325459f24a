#include "pqt/json_io.hpp"

#include <stdexcept>
#include <string>

namespace pqt {

nlohmann::json poly_to_json(const MultiPoly& a) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : a.sorted_terms()) {
    auto exponents = nlohmann::json::object();
    for (Var var : kAllVars) {
      const auto e = m[static_cast<std::size_t>(var)];
      if (e > 0) exponents[std::string(1, var_name(var))] = e;
    }
    out.push_back({{"exponents", std::move(exponents)}, {"coeff", c.get_str()}});
  }
  return out;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  MultiPoly poly;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.at("coeff").is_string())
      throw std::invalid_argument("polynomial term needs a string \"coeff\"");
    Monomial m{};
    if (term.contains("exponents")) {
      for (const auto& [name, e] : term.at("exponents").items()) {
        const auto var = parse_var(name);
        if (!var) throw std::invalid_argument("unknown variable '" + name + "'");
        if (!e.is_number_integer() || e.get<long long>() < 0)
          throw std::invalid_argument("exponent of '" + name + "' must be a nonnegative integer");
        m[static_cast<std::size_t>(*var)] = e.get<std::uint32_t>();
      }
    }
    BigInt c;
    const auto text = term.at("coeff").get<std::string>();
    if (c.set_str(text, 10) != 0) throw std::invalid_argument("coefficient '" + text + "' is not an integer");
    poly.add_term(m, c);
  }
  return poly;
}

nlohmann::json series_to_json(const EgfSeries& s) {
  auto out = nlohmann::json::array();
  for (const auto& c : s.coeffs()) out.push_back(poly_to_json(c));
  return out;
}

EgfSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("series JSON must be a non-empty array");
  std::vector<MultiPoly> coeffs;
  for (const auto& c : j) coeffs.push_back(poly_from_json(c));
  return EgfSeries(std::move(coeffs));
}

}  // namespace pqt
