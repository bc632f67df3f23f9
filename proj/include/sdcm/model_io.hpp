#pragma once

// JSON documents: model files, homomorphism descriptors and check reports.

#include <sdcm/error.hpp>
#include <sdcm/homomorphism.hpp>
#include <sdcm/model.hpp>
#include <sdcm/report.hpp>
#include <sdcm/series_parse.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sdcm {

using json = nlohmann::json;

namespace detail {

inline LaurentSeries series_field(const json& obj, const char* key, const std::string& context) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw ModelError(context + ": missing string field '" + key + "'");
  }
  try {
    return parse_series(obj.at(key).get<std::string>());
  } catch (const Error& e) {
    throw ModelError(context + "." + key + ": " + e.what());
  }
}

inline std::string string_field(const json& obj, const char* key, const std::string& context) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw ModelError(context + ": missing string field '" + key + "'");
  }
  return obj.at(key).get<std::string>();
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelError(path + ": " + e.what());
  }
}

}  // namespace detail

inline SdcModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw ModelError("model document must be a JSON object");
  const std::string name = doc.value("name", std::string("unnamed"));
  std::optional<LaurentSeries> ring_bass;
  if (doc.contains("ring_bass") && !doc.at("ring_bass").is_null()) {
    ring_bass = detail::series_field(doc, "ring_bass", "model");
  }
  if (!doc.contains("classes") || !doc.at("classes").is_array()) throw ModelError("model: missing 'classes' array");
  std::vector<SdcClass> classes;
  for (const auto& c : doc.at("classes")) {
    const std::string id = detail::string_field(c, "id", "class");
    SdcClass cls{id, detail::series_field(c, "poincare", "class " + id), std::nullopt};
    if (c.contains("bass") && !c.at("bass").is_null()) cls.bass = detail::series_field(c, "bass", "class " + id);
    classes.push_back(std::move(cls));
  }
  std::vector<OrderPair> order;
  if (doc.contains("order")) {
    for (const auto& pair : doc.at("order")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw ModelError("model: order entries must be [small, large] string pairs");
      }
      order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  const std::string top = detail::string_field(doc, "top", "model");
  std::optional<std::string> dualizing;
  if (doc.contains("dualizing") && !doc.at("dualizing").is_null()) {
    dualizing = detail::string_field(doc, "dualizing", "model");
  }
  return SdcModel(name, std::move(classes), order, top, dualizing, ring_bass);
}

/// Order is written as covering pairs; mutual pairs of a non-antisymmetric
/// order are kept so the document reloads to the same closure.
inline json model_to_json(const SdcModel& model) {
  json doc;
  doc["name"] = model.name();
  if (model.ring_bass()) doc["ring_bass"] = render(*model.ring_bass());
  json classes = json::array();
  for (const auto& c : model.classes()) {
    json entry{{"id", c.id}, {"poincare", render(c.poincare)}};
    if (c.bass) entry["bass"] = render(*c.bass);
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  json order = json::array();
  for (const auto& [s, l] : model.covering_pairs()) order.push_back({model.id(s), model.id(l)});
  for (std::size_t i = 0; i < model.size(); ++i) {
    for (std::size_t j = 0; j < model.size(); ++j) {
      if (i != j && model.leq(i, j) && model.leq(j, i)) order.push_back({model.id(i), model.id(j)});
    }
  }
  doc["order"] = std::move(order);
  doc["top"] = model.id(model.top());
  if (model.dualizing()) doc["dualizing"] = model.id(*model.dualizing());
  return doc;
}

inline SdcModel load_model(const std::string& path) { return model_from_json(detail::read_json_file(path)); }

inline void save_json(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

inline HomomorphismDescriptor homomorphism_from_json(const json& doc) {
  if (!doc.is_object()) throw ModelError("homomorphism document must be a JSON object");
  HomomorphismDescriptor phi;
  phi.name = doc.value("name", std::string("phi"));
  phi.bass_phi = detail::series_field(doc, "bass_phi", "homomorphism");
  phi.source = doc.value("source", std::string());
  phi.target_name = doc.value("target_name", std::string("S"));
  if (phi.target_name.empty()) throw ModelError("homomorphism: target_name must be nonempty");
  return phi;
}

inline json homomorphism_to_json(const HomomorphismDescriptor& phi) {
  return json{{"name", phi.name}, {"bass_phi", render(phi.bass_phi)}, {"source", phi.source},
              {"target_name", phi.target_name}};
}

inline HomomorphismDescriptor load_homomorphism(const std::string& path) {
  return homomorphism_from_json(detail::read_json_file(path));
}

inline json to_json(const CheckReport& r) {
  json doc{{"check", r.check}, {"pass", r.pass}, {"witnesses", r.witnesses}};
  if (!r.notes.empty()) doc["notes"] = r.notes;
  return doc;
}

inline json to_json(const ValidationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return json{{"valid", r.valid()}, {"entries", std::move(entries)}};
}

}  // namespace sdcm
