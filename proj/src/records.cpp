#include "hkdehn/records.hpp"

#include <cmath>
#include <fstream>

#include <fmt/core.h>

namespace hkdehn {

using nlohmann::json;

namespace {

std::string child_ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string child_ptr(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

const json& field(const json& obj, const std::string& ptr, const char* key) {
  if (!obj.is_object()) throw SchemaError(ptr, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child_ptr(ptr, key), "missing required field");
  return *it;
}

double positive_number(const json& obj, const std::string& ptr, const char* key) {
  const json& v = field(obj, ptr, key);
  if (!v.is_number()) throw SchemaError(child_ptr(ptr, key), "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x) || !(x > 0)) throw SchemaError(child_ptr(ptr, key), "expected a positive number");
  return x;
}

std::string string_field(const json& obj, const std::string& ptr, const char* key) {
  const json& v = field(obj, ptr, key);
  if (!v.is_string()) throw SchemaError(child_ptr(ptr, key), "expected a string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const std::string& ptr, const char* key) {
  const json& v = field(obj, ptr, key);
  if (!v.is_array()) throw SchemaError(child_ptr(ptr, key), "expected an array");
  return v;
}

json window_to_json(const std::optional<LhatWindow>& w) {
  if (!w) return nullptr;
  return {{"loSq", w->loSq}, {"hiSq", w->hiSq}, {"empty", w->empty}};
}

json candidates_to_json(const std::vector<FillingCandidate>& list) {
  json out = json::array();
  for (const auto& c : list) {
    json choices = json::array();
    for (const auto& ch : c.choices) choices.push_back({{"cusp", ch.cusp}, {"slope", ch.slope}});
    out.push_back({{"choices", choices}, {"normalizedLength", c.normalizedLength}});
  }
  return out;
}

std::vector<FillingCandidate> candidates_from_json(const json& arr) {
  std::vector<FillingCandidate> out;
  for (const auto& c : arr) {
    FillingCandidate cand;
    for (const auto& ch : c.at("choices")) cand.choices.push_back({ch.at("cusp").get<std::size_t>(), ch.at("slope")});
    cand.normalizedLength = c.at("normalizedLength").get<double>();
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace

ManifoldRecord manifold_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("schemaVersion")) {
    const json& v = doc["schemaVersion"];
    if (!v.is_number_integer() || v.get<int>() != kManifoldSchemaVersion)
      throw SchemaError("/schemaVersion", fmt::format("unsupported schema version (expected {})", kManifoldSchemaVersion));
  }
  ManifoldRecord r;
  r.name = string_field(doc, "", "name");
  r.volume = positive_number(doc, "", "volume");
  r.geodesicCutoff = positive_number(doc, "", "geodesicCutoff");

  const json& geodesics = array_field(doc, "", "geodesics");
  for (std::size_t i = 0; i < geodesics.size(); ++i) {
    const std::string ptr = child_ptr("/geodesics", i);
    if (!geodesics[i].is_number()) throw SchemaError(ptr, "expected a number");
    const double len = geodesics[i].get<double>();
    if (!std::isfinite(len) || !(len > 0)) throw SchemaError(ptr, "expected a positive number");
    if (!r.geodesics.empty() && len < r.geodesics.back()) throw SchemaError(ptr, "geodesics must be sorted ascending");
    if (len > r.geodesicCutoff) throw SchemaError(ptr, "geodesic longer than geodesicCutoff");
    r.geodesics.push_back(len);
  }

  const json& cusps = array_field(doc, "", "cusps");
  for (std::size_t c = 0; c < cusps.size(); ++c) {
    const std::string cptr = child_ptr("/cusps", c);
    CuspData cusp;
    cusp.area = positive_number(cusps[c], cptr, "area");
    cusp.slopeLengthCutoff = positive_number(cusps[c], cptr, "slopeLengthCutoff");
    const json& slopes = array_field(cusps[c], cptr, "slopes");
    for (std::size_t s = 0; s < slopes.size(); ++s) {
      const std::string sptr = child_ptr(child_ptr(cptr, "slopes"), s);
      cusp.slopes.push_back({string_field(slopes[s], sptr, "name"), positive_number(slopes[s], sptr, "length")});
    }
    r.cusps.push_back(std::move(cusp));
  }
  r.validate();
  return r;
}

json manifold_to_json(const ManifoldRecord& r) {
  json cusps = json::array();
  for (const auto& c : r.cusps) {
    json slopes = json::array();
    for (const auto& s : c.slopes) slopes.push_back({{"name", s.name}, {"length", s.geodesicLength}});
    cusps.push_back({{"area", c.area}, {"slopeLengthCutoff", c.slopeLengthCutoff}, {"slopes", slopes}});
  }
  return {{"schemaVersion", kManifoldSchemaVersion},
          {"name", r.name},
          {"volume", r.volume},
          {"cusps", cusps},
          {"geodesicCutoff", r.geodesicCutoff},
          {"geodesics", r.geodesics}};
}

ManifoldRecord load_manifold_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", fmt::format("cannot open '{}'", path.string()));
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", fmt::format("'{}' is not valid JSON: {}", path.string(), e.what()));
  }
  return manifold_from_json(doc);
}

json verdict_to_json(const ParentalVerdict& v) {
  return {{"tag", std::string(name(v.tag))},
          {"deltaV", v.deltaV},
          {"geodesicCeiling", v.geodesicCeiling ? json(*v.geodesicCeiling) : json(nullptr)},
          {"window", window_to_json(v.window)},
          {"obligations", v.obligations},
          {"warnings", v.warnings},
          {"shortCandidates", candidates_to_json(v.shortCandidates)},
          {"windowCandidates", candidates_to_json(v.windowCandidates)}};
}

ParentalVerdict verdict_from_json(const json& doc) {
  ParentalVerdict v;
  v.tag = parse_verdict_tag(doc.at("tag").get<std::string>());
  v.deltaV = doc.at("deltaV").get<double>();
  if (!doc.at("geodesicCeiling").is_null()) v.geodesicCeiling = doc.at("geodesicCeiling").get<double>();
  if (const json& w = doc.at("window"); !w.is_null())
    v.window = LhatWindow{w.at("loSq").get<double>(), w.at("hiSq").get<double>(), w.at("empty").get<bool>()};
  v.obligations = doc.at("obligations").get<std::vector<std::string>>();
  v.warnings = doc.at("warnings").get<std::vector<std::string>>();
  v.shortCandidates = candidates_from_json(doc.at("shortCandidates"));
  v.windowCandidates = candidates_from_json(doc.at("windowCandidates"));
  return v;
}

json report_to_json(const Report& r) {
  return {{"schemaVersion", kReportSchemaVersion},
          {"tool", "hkdehn"},
          {"toolVersion", r.toolVersion},
          {"constantMode", std::string(name(r.constantMode))},
          {"boundMode", std::string(name(r.boundMode))},
          {"tolerances", {{"quadrature", r.quadTol}, {"epsilon", r.epsilon}}},
          {"parent", r.parent},
          {"child", r.child},
          {"verdict", verdict_to_json(r.verdict)}};
}

Report report_from_json(const json& doc) {
  if (doc.at("schemaVersion").get<int>() != kReportSchemaVersion)
    throw SchemaError("/schemaVersion", "unsupported report schema version");
  Report r;
  r.toolVersion = doc.at("toolVersion").get<std::string>();
  r.constantMode = parse_constant_mode(doc.at("constantMode").get<std::string>());
  r.boundMode = parse_bound_mode(doc.at("boundMode").get<std::string>());
  r.quadTol = doc.at("tolerances").at("quadrature").get<double>();
  r.epsilon = doc.at("tolerances").at("epsilon").get<double>();
  r.parent = doc.at("parent").get<std::string>();
  r.child = doc.at("child").get<std::string>();
  r.verdict = verdict_from_json(doc.at("verdict"));
  return r;
}

}  // namespace hkdehn
