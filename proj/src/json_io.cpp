#include "toriclci/json_io.hpp"

#include "toriclci/errors.hpp"

#include <istream>

namespace toriclci {

FreeParamMatrix parse_input_document(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("input document must be a JSON object");
  if (!j.contains("d") || !j["d"].is_number_integer())
    throw ParseError("missing integer field \"d\"");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw ParseError("missing array field \"rows\"");

  FreeParamMatrix m;
  m.d = j["d"].get<int>();
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw ParseError("\"rows\" entries must be arrays");
    std::vector<Int> r;
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        r.emplace_back(static_cast<long>(e.get<long long>()));
      } else if (e.is_string()) {
        try {
          r.emplace_back(e.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw ParseError("matrix entries must be integers, got \"" + e.get<std::string>() +
                           "\"");
        }
      } else {
        throw ParseError("matrix entries must be integers");
      }
    }
    m.rows.push_back(std::move(r));
  }
  return m;
}

FreeParamMatrix parse_input_document(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return parse_input_document(j);
}

FreeParamMatrix read_input_document(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_input_document(text);
}

nlohmann::json input_document_json(const FreeParamMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m.rows) {
    nlohmann::json row = nlohmann::json::array();
    for (const Int& e : r) row.push_back(int_json(e));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"d", m.d}, {"rows", std::move(rows)}};
}

nlohmann::json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

namespace {

nlohmann::json exponents_json(const ZVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(int_json(v(i)));
  return a;
}

nlohmann::json binomial_json(const Binomial& b) {
  return nlohmann::json{{"plus", exponents_json(b.plus)}, {"minus", exponents_json(b.minus)}};
}

}  // namespace

nlohmann::json ideal_json(const IdealPresentation& p) {
  if (!p.minimal_built)
    throw InternalCheckError("IdealJson", "the JSON schema needs a complete presentation");

  nlohmann::json variables = nlohmann::json::array();
  for (int pos = 1; pos <= 2 * p.d - 1; ++pos) variables.push_back(variable_name(pos));

  nlohmann::json generators = nlohmann::json::array();
  for (const Binomial& b : p.generators) generators.push_back(binomial_json(b));

  nlohmann::json eliminated = nlohmann::json::object();
  for (const auto& [pos, repl] : p.variable_map)
    eliminated[variable_name(pos)] =
        nlohmann::json::array({variable_name(repl.first), variable_name(repl.second)});

  nlohmann::json minimal_gens = nlohmann::json::array();
  for (const Binomial& b : p.minimal_generators) minimal_gens.push_back(binomial_json(b));

  return nlohmann::json{{"d", p.d},
                        {"variables", std::move(variables)},
                        {"generators", std::move(generators)},
                        {"minimal",
                         {{"eliminated", std::move(eliminated)},
                          {"generators", std::move(minimal_gens)}}}};
}

}  // namespace toriclci
