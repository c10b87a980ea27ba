#include "azimuth/state_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace azimuth {
namespace {

using nlohmann::json;

StateKind parse_kind(const json& doc) {
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw document_error("state document: missing string field \"kind\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "angular") return StateKind::angular;
  if (kind == "landau") return StateKind::landau;
  throw document_error("state document: unknown kind \"" + kind +
                       "\" (expected \"angular\" or \"landau\")");
}

std::vector<Coefficient> parse_coefficients(const json& doc) {
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw document_error(
        "state document: missing array field \"coefficients\"");
  }
  std::vector<Coefficient> out;
  std::set<int> seen;
  for (const auto& entry : doc["coefficients"]) {
    if (!entry.is_array() || entry.size() != 3) {
      throw document_error(
          "state document: each coefficient must be a [m, re, im] triple");
    }
    if (!entry[0].is_number_integer()) {
      throw document_error("state document: m must be an integer");
    }
    if (!entry[1].is_number() || !entry[2].is_number()) {
      throw document_error("state document: re and im must be numbers");
    }
    const int m = entry[0].get<int>();
    const double re = entry[1].get<double>();
    const double im = entry[2].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw document_error("state document: coefficient for m = " +
                           std::to_string(m) + " is not finite");
    }
    if (!seen.insert(m).second) {
      throw document_error("state document: duplicate entry for m = " +
                           std::to_string(m));
    }
    out.push_back({m, Complex{re, im}});
  }
  return out;
}

}  // namespace

StateDocument parse_state_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& error) {
    throw document_error(std::string("state document: ") + error.what());
  }
  if (!doc.is_object()) {
    throw document_error("state document: top level must be a JSON object");
  }

  StateDocument out;
  out.kind = parse_kind(doc);
  out.coefficients = parse_coefficients(doc);
  if (doc.contains("normalize")) {
    if (!doc["normalize"].is_boolean()) {
      throw document_error("state document: \"normalize\" must be a boolean");
    }
    out.normalize = doc["normalize"].get<bool>();
  }
  return out;
}

StateDocument load_state_document(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw document_error("state document: cannot read " + path.string());
  }
  std::ostringstream text;
  text << stream.rdbuf();
  return parse_state_document(text.str());
}

AnyState make_state(const StateDocument& document) {
  std::map<int, Complex> coefficients;
  for (const auto& entry : document.coefficients) {
    coefficients[entry.m] = entry.c;
  }
  if (document.kind == StateKind::landau) {
    return LandauState(coefficients, document.normalize);
  }
  return AngularState(coefficients, document.normalize);
}

}  // namespace azimuth
