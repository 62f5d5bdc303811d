#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "refinement.hpp"
#include "separation.hpp"
#include "strategy.hpp"
#include "tree_decomposition.hpp"

namespace ctd {

// nlohmann::json keeps object keys sorted, and every emitter below orders its
// arrays, so dump_json of equal values is byte-identical across runs.
using Json = nlohmann::json;

Json vertices_json(VertexSet s);
Json separation_json(const Separation& s);
Json separation_pair_json(const std::pair<Separation, Separation>& pair);
Json graph_json(const Graph& g);
Json decomposition_json(const TreeDecomposition& td);
Json strategy_run_json(const StrategyRun& run);
Json bound_report_json(const BoundReport& rep);
Json block_verdict_json(const BlockVerdict& v);
Json refine_report_json(const RefineReport& rep);
Json goodness_json(const GoodnessReport& rep);
Json hypothesis_report_json(const HypothesisReport& rep);

// Render-only views of a decomposition; JSON is the machine interface.
std::string decomposition_dot(const TreeDecomposition& td);
std::string decomposition_text(const TreeDecomposition& td);

// 2-space indent plus trailing newline.
std::string dump_json(const Json& j);

// Throws InputError instead of nlohmann exceptions.
Json parse_json(const std::string& text);

// Option readers: fallback when absent, InputError on a type mismatch.
int json_int_field(const Json& j, const std::string& key, int fallback);
std::uint64_t json_u64_field(const Json& j, const std::string& key,
                             std::uint64_t fallback);
double json_double_field(const Json& j, const std::string& key, double fallback);
bool json_bool_field(const Json& j, const std::string& key, bool fallback);
std::string json_string_field(const Json& j, const std::string& key,
                              const std::string& fallback);

// Rejects keys outside `known`; options objects admit no unknown fields.
void require_keys_among(const Json& j, const std::vector<std::string>& known);

}  // namespace ctd
