#pragma once

#include <string>

#include "graph.hpp"

namespace ctd {

// Command status, shared by the C api result codes and the CLI exit codes.
enum class Status : int {
    Ok = 0,
    Input = 1,
    CheckFailed = 2,
    Infeasible = 3,
    Limit = 4,
    Internal = 5,
};

struct CommandResult {
    Status status = Status::Ok;
    std::string output;      // JSON document; dot/text when that format is chosen
    std::string diagnostic;  // human-readable failure summary, empty on success
};

// options: {"k": int (required), "strategy": "ext"|"loc", "profiles":
// "blocks"|"all", "seps": "tight"|"proper", "format": "json"|"dot"|"text",
// "check": ["canonical","bounds","refinement","exactness"], "max_n": int,
// "max_k": int}
CommandResult run_decompose(const Graph& g, const std::string& options_json);

// options: {"k": int (required), "well_separated": bool, "fan_orders": bool,
// "max_n": int, "max_k": int}
CommandResult run_blocks(const Graph& g, const std::string& options_json);

// options: {"suite": "orientations"|"bounds"|"refinement"|"exactness"|"all",
// "max_n": int, "seed": int}
CommandResult run_verify(const std::string& options_json);

// name: path_cliques | cycle_cliques | overlapping_attachments | glued_k5 |
// pinned_pairs | random; params keyed per generator. Throws InputError.
Graph generate_named(const std::string& name, const std::string& params_json);

}  // namespace ctd
