#include "mints/json_io.hpp"

#include <json.hpp>

namespace mints::json_io {

namespace {

using nlohmann::json;

json scheme_json(const Scheme& scheme) {
  json rows = json::array();
  for (const auto& row : scheme.rows()) rows.push_back(row);
  return json{{"mints", scheme.mints()}, {"weighings", std::move(rows)}};
}

json stats_json(const search::SearchStats& stats) {
  return json{{"nodes", stats.nodes},
              {"elapsed_ms", stats.elapsed.count()},
              {"pruned", json{{"bound", stats.pruned_bound},
                              {"conflict", stats.pruned_conflict},
                              {"symmetry", stats.pruned_symmetry}}}};
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string scheme_to_json(const Scheme& scheme, int indent) {
  return dump(scheme_json(scheme), indent);
}

Scheme scheme_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid scheme JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("weighings") || !j["weighings"].is_array())
    throw ConfigError("scheme JSON needs a \"weighings\" array");
  std::vector<std::vector<long long>> rows;
  for (const auto& row : j["weighings"]) {
    if (!row.is_array()) throw ConfigError("each weighing must be an array of integers");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ConfigError("weighing entries must be integers");
      r.push_back(v.get<long long>());
    }
    rows.push_back(std::move(r));
  }
  Scheme scheme(std::move(rows));
  if (j.contains("mints") &&
      (!j["mints"].is_number_integer() || j["mints"].get<long long>() != scheme.mints()))
    throw ConfigError("scheme JSON \"mints\" disagrees with the weighing rows");
  return scheme;
}

std::string feasibility_to_json(const FeasibilityReport& report, int indent) {
  json j{{"feasible", report.feasible}};
  if (report.witness) {
    j["witness"] = json{{"first", mask_to_mints(report.witness->first)},
                        {"second", mask_to_mints(report.witness->second)}};
  }
  return dump(j, indent);
}

std::string search_result_to_json(const search::SearchResult& result, int indent) {
  json j{{"status", search::search_status_name(result.status)},
         {"best_cost", nullptr},
         {"scheme", nullptr},
         {"stats", stats_json(result.stats)}};
  if (result.best_cost) j["best_cost"] = *result.best_cost;
  if (result.best_scheme) j["scheme"] = scheme_json(*result.best_scheme);
  return dump(j, indent);
}

std::string capacity_result_to_json(const search::CapacityResult& result, int indent) {
  json j{{"max_mints", result.max_mints},
         {"witness", nullptr},
         {"proven", result.proven},
         {"stats", stats_json(result.stats)}};
  if (result.witness) j["witness"] = scheme_json(*result.witness);
  return dump(j, indent);
}

std::string bounds_to_json(const BoundsResult& bounds, int indent) {
  return dump(json{{"lower", bounds.lower}, {"upper", bounds.upper}}, indent);
}

std::string weighings_to_json(const std::vector<Rational>& totals, int indent) {
  json arr = json::array();
  for (const Rational& r : totals) arr.push_back(r.to_string());
  return dump(json{{"weighings", std::move(arr)}}, indent);
}

std::string decode_outcome_to_json(const decoder::DecodeOutcome& outcome, int indent) {
  using Kind = decoder::DecodeOutcome::Kind;
  switch (outcome.kind) {
    case Kind::AllGenuine: return dump(json{{"outcome", "all-genuine"}}, indent);
    case Kind::FakeSet:
      return dump(json{{"outcome", "fake-set"}, {"fake_mints", mask_to_mints(outcome.fake)}},
                  indent);
    case Kind::Inconsistent:
      return dump(json{{"outcome", "inconsistent"}, {"reason", outcome.reason}}, indent);
  }
  return dump(json{{"outcome", "inconsistent"}}, indent);
}

std::string checkpoint_to_json(const search::Checkpoint& checkpoint) {
  json j{{"format", "mints-checkpoint-v1"},
         {"config",
          json{{"mints", checkpoint.config.mints},
               {"cost", cost_kind_name(checkpoint.config.cost_kind)},
               {"cap", nullptr}}},
         {"incumbent", nullptr},
         {"remaining", json::array()},
         {"nodes", checkpoint.nodes}};
  if (checkpoint.config.cap) j["config"]["cap"] = *checkpoint.config.cap;
  if (checkpoint.best_scheme) {
    j["incumbent"] =
        json{{"best_cost", *checkpoint.best_cost}, {"scheme", scheme_json(*checkpoint.best_scheme)}};
  }
  for (const auto& [p, q] : checkpoint.remaining) j["remaining"].push_back(json::array({p, q}));
  return j.dump(2) + "\n";
}

search::Checkpoint checkpoint_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid checkpoint JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "mints-checkpoint-v1")
    throw ConfigError("not a mints checkpoint file");
  search::Checkpoint cp;
  try {
    const json& cfg = j.at("config");
    cp.config.mints = cfg.at("mints").get<int>();
    const auto kind = cost_kind_from_name(cfg.at("cost").get<std::string>());
    if (!kind) throw ConfigError("checkpoint has an unknown cost kind");
    cp.config.cost_kind = *kind;
    if (cfg.contains("cap") && !cfg["cap"].is_null()) cp.config.cap = cfg["cap"].get<long long>();
    if (j.contains("incumbent") && !j["incumbent"].is_null()) {
      cp.best_cost = j["incumbent"].at("best_cost").get<long long>();
      cp.best_scheme = scheme_from_json(j["incumbent"].at("scheme").dump());
    }
    for (const auto& b : j.at("remaining")) {
      if (!b.is_array() || b.size() != 2) throw ConfigError("bad checkpoint branch entry");
      cp.remaining.emplace_back(b[0].get<long long>(), b[1].get<long long>());
    }
    cp.nodes = j.value("nodes", std::uint64_t{0});
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed checkpoint: ") + e.what());
  }
  return cp;
}

}  // namespace mints::json_io
