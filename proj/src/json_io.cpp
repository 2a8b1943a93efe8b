#include "granulex/json_io.hpp"

#include <cmath>
#include <fstream>

#include "granulex/format.hpp"

namespace granulex {

namespace {

Json rounded(double value) { return Json(round_sig12(value)); }

}  // namespace

Json space_to_json(const ApproximationSpace& space) {
  Json json;
  json["universe"] = space.universe.labels();
  Json blocks = Json::array();
  for (const ElementSet& block : space.partition.blocks()) {
    Json labels = Json::array();
    for (std::size_t i : block.indices()) labels.push_back(space.universe.label(i));
    blocks.push_back(std::move(labels));
  }
  json["blocks"] = std::move(blocks);
  return json;
}

ApproximationSpace space_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("universe") || !json.contains("blocks")) {
    throw domain_error(
        "space JSON must be an object with \"universe\" and \"blocks\"");
  }
  const Json& universe_json = json.at("universe");
  if (!universe_json.is_array()) {
    throw domain_error("\"universe\" must be an array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(universe_json.size());
  for (const Json& label : universe_json) {
    if (!label.is_string()) {
      throw domain_error("universe labels must be strings");
    }
    labels.push_back(label.get<std::string>());
  }
  Universe universe(std::move(labels));

  const Json& blocks_json = json.at("blocks");
  if (!blocks_json.is_array()) {
    throw domain_error("\"blocks\" must be an array of label arrays");
  }
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(blocks_json.size());
  for (const Json& block_json : blocks_json) {
    if (!block_json.is_array()) {
      throw domain_error("each block must be an array of labels");
    }
    std::vector<std::size_t> block;
    block.reserve(block_json.size());
    for (const Json& label : block_json) {
      if (!label.is_string()) {
        throw domain_error("block elements must be universe labels");
      }
      block.push_back(universe.require_index(label.get<std::string>()));
    }
    blocks.push_back(std::move(block));
  }
  Partition partition(universe.size(), blocks);
  return ApproximationSpace(std::move(universe), std::move(partition));
}

ApproximationSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open space file: " + path);
  Json json;
  try {
    in >> json;
  } catch (const Json::parse_error& e) {
    throw domain_error("invalid JSON in " + path + ": " + e.what());
  }
  return space_from_json(json);
}

Json set_to_json(const ElementSet& s, const Universe& universe) {
  Json labels = Json::array();
  for (std::size_t i : s.indices()) labels.push_back(universe.label(i));
  return labels;
}

Json profile_to_json(const ClassProfile& profile, const Universe& universe,
                     bool include_members) {
  Json json;
  json["m"] = profile.class_count();
  Json classes = Json::array();
  for (const ApproximationClass& cls : profile.classes) {
    Json entry;
    entry["lower"] = set_to_json(cls.pair.lower, universe);
    entry["upper"] = set_to_json(cls.pair.upper, universe);
    entry["count"] = cls.count.str();
    if (include_members && cls.members) {
      Json members = Json::array();
      for (const ElementSet& member : *cls.members) {
        members.push_back(set_to_json(member, universe));
      }
      entry["members"] = std::move(members);
    }
    classes.push_back(std::move(entry));
  }
  json["classes"] = std::move(classes);
  return json;
}

Json measure_report_to_json(const MeasureReport& report) {
  Json json;
  json["n"] = report.n;
  json["m"] = report.m.str();
  json["h_classical"] = rounded(report.h_classical);
  json["g_classical"] = rounded(report.g_classical);
  json["h_new"] = rounded(report.h_new);
  json["g_new"] = rounded(report.g_new);
  return json;
}

Json exact_terms_json(const ClassProfile& profile) {
  Json terms = Json::array();
  for (const ApproximationClass& cls : profile.classes) {
    Json term;
    term["count"] = cls.count.str();
    term["log2_count"] = rounded(log2_big(cls.count));
    terms.push_back(std::move(term));
  }
  return terms;
}

Json comparison_to_json(MorphismKind kind, const ComparisonVerdict& verdict) {
  Json json;
  json["kind"] = to_string(kind);
  json["verdict"] = to_string(verdict.relation);
  json["g_source"] = rounded(verdict.g_source);
  json["g_target"] = rounded(verdict.g_target);
  return json;
}

Json reports_to_json(const std::vector<TheoremReport>& reports) {
  Json list = Json::array();
  for (const TheoremReport& report : reports) {
    Json entry;
    entry["id"] = report.id;
    entry["claim"] = report.claim;
    entry["instances"] = report.instances;
    entry["violations"] = report.violations;
    entry["min_gap"] = std::isfinite(report.min_gap)
                           ? rounded(report.min_gap)
                           : Json(nullptr);
    entry["max_equal_deviation"] = rounded(report.max_equal_deviation);
    entry["complete"] = report.complete;
    entry["passed"] = report.passed();
    list.push_back(std::move(entry));
  }
  return list;
}

}  // namespace granulex
