#include "commands.hpp"

#include <algorithm>

#include "json_io.hpp"
#include "generators.hpp"
#include "profile.hpp"
#include "refinement.hpp"
#include "separation.hpp"
#include "strategy.hpp"
#include "tree_decomposition.hpp"
#include "verify_suites.hpp"

namespace ctd {

namespace {

CommandResult error_result(Status status, const std::string& type,
                           const std::string& kind, const std::string& message) {
    CommandResult res;
    res.status = status;
    Json err{{"message", message}, {"type", type}};
    if (!kind.empty()) err["kind"] = kind;
    res.output = dump_json(Json{{"error", err}});
    res.diagnostic = type + (kind.empty() ? "" : "(" + kind + ")") + ": " + message;
    return res;
}

// Shared exception-to-result mapping for every command body.
template <typename Fn>
CommandResult guarded(Fn&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        return error_result(Status::Input, "input", "", e.what());
    } catch (const InfeasibleError& e) {
        return error_result(Status::Infeasible, "infeasible", e.kind, e.what());
    } catch (const LimitError& e) {
        return error_result(Status::Limit, "limit", "", e.what());
    } catch (const std::exception& e) {
        return error_result(Status::Internal, "internal", "", e.what());
    }
}

Json parse_options(const std::string& options_json,
                   const std::vector<std::string>& known) {
    Json opts = options_json.empty() ? Json::object() : parse_json(options_json);
    require_keys_among(opts, known);
    return opts;
}

Limits limits_from(const Json& opts) {
    Limits lim;
    lim.max_n = json_int_field(opts, "max_n", lim.max_n);
    lim.max_k = json_int_field(opts, "max_k", lim.max_k);
    if (lim.max_n < 0 || lim.max_n > 64)
        throw InputError("option 'max_n' must lie in [0, 64]");
    if (lim.max_k < 1) throw InputError("option 'max_k' must be positive");
    return lim;
}

int required_k(const Json& opts, const Limits& lim, const Graph& g) {
    int k = json_int_field(opts, "k", 0);
    if (k < 1) throw InputError("option 'k' must be a positive integer");
    if (k > lim.max_k)
        throw LimitError("k=" + std::to_string(k) + " exceeds max_k=" +
                         std::to_string(lim.max_k) + "; raise max_k");
    if (g.n() > lim.max_n)
        throw LimitError("graph has " + std::to_string(g.n()) +
                         " vertices, max_n=" + std::to_string(lim.max_n) +
                         "; raise max_n");
    return k;
}

SeparationSystem system_for(const Graph& g, int k, const std::string& seps,
                            const Limits& lim) {
    SeparationSystem sys = enumerate_separations(g, k, lim.max_system_pairs);
    return seps == "tight" ? tight_subsystem(g, sys) : sys;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"canonical", "bounds", "refinement",
                                                "exactness"};
    return names;
}

std::vector<std::string> requested_checks(const Json& opts) {
    std::vector<std::string> requested;
    if (!opts.contains("check")) return requested;
    const Json& arr = opts.at("check");
    if (!arr.is_array()) throw InputError("option 'check' must be an array of strings");
    std::vector<std::string> given;
    for (const Json& item : arr) {
        if (!item.is_string())
            throw InputError("option 'check' must be an array of strings");
        std::string name = item.get<std::string>();
        if (std::find(check_names().begin(), check_names().end(), name) ==
            check_names().end())
            throw InputError("unknown check '" + name + "'");
        given.push_back(name);
    }
    for (const std::string& name : check_names())
        if (std::find(given.begin(), given.end(), name) != given.end())
            requested.push_back(name);
    return requested;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}

}  // namespace

CommandResult run_decompose(const Graph& g, const std::string& options_json) {
    return guarded([&]() -> CommandResult {
        Json opts = parse_options(options_json,
                                  {"k", "strategy", "profiles", "seps", "format",
                                   "check", "max_n", "max_k"});
        Limits lim = limits_from(opts);
        int k = required_k(opts, lim, g);
        StrategyKind kind =
            strategy_from_string(json_string_field(opts, "strategy", "ext"));
        ProfileMode mode =
            profile_mode_from_string(json_string_field(opts, "profiles", "blocks"));
        std::string seps = json_string_field(opts, "seps", "tight");
        if (seps != "tight" && seps != "proper")
            throw InputError("option 'seps' must be tight or proper");
        std::string format = json_string_field(opts, "format", "json");
        if (format != "json" && format != "dot" && format != "text")
            throw InputError("option 'format' must be json, dot, or text");
        std::vector<std::string> checks = requested_checks(opts);

        StrategyRun run = run_iterated(g, k, kind, profiles_for(g, k, mode, lim), lim);
        TreeDecomposition td = decomposition_from_nested(
            g, make_nested(run.chosen, k), lim.max_orientations);

        Json out{{"decomposition", decomposition_json(td)},
                 {"graph", graph_json(g)},
                 {"k", k},
                 {"profiles", to_string(mode)},
                 {"run", strategy_run_json(run)},
                 {"seps", seps}};

        std::vector<std::string> failed;
        for (const std::string& name : checks) {
            if (name == "canonical") {
                GoodnessReport rep = goodness(g, k, td, lim);
                out["canonical"] = goodness_json(rep);
                if (!rep.canonical) failed.push_back(name);
            } else if (name == "bounds") {
                BoundReport rep = bound_report(g, run);
                out["bounds"] = bound_report_json(rep);
                if (!rep.all_hold) failed.push_back(name);
            } else if (name == "refinement") {
                RefineReport rep =
                    refine_decomposition(g, k, system_for(g, k, seps, lim), kind, lim);
                out["refinement"] = refine_report_json(rep);
                bool ok = rep.distinct_parts && rep.ws_parts_exact &&
                          (!rep.leaves_applicable || rep.leaves_are_blocks);
                if (!ok) failed.push_back(name);
            } else {  // exactness
                HypothesisReport hyp = part_exactness_hypotheses(g, k);
                CheckOutcome outcome = hyp.holds
                                           ? check_part_exactness(g, k, lim)
                                           : skip_outcome("hypotheses not satisfied");
                Json ex{{"applicable", hyp.holds},
                        {"hypotheses", hypothesis_report_json(hyp)},
                        {"outcome", outcome.failed() ? "fail"
                                    : outcome.passed() ? "pass"
                                                       : "skip"}};
                if (!outcome.detail.empty()) ex["detail"] = outcome.detail;
                out["exactness"] = ex;
                if (outcome.failed()) failed.push_back(name);
            }
        }
        if (!checks.empty())
            out["checks"] = Json{{"failed", failed},
                                 {"passed", failed.empty()},
                                 {"requested", checks}};

        CommandResult res;
        if (format == "json")
            res.output = dump_json(out);
        else if (format == "dot")
            res.output = decomposition_dot(td);
        else
            res.output = decomposition_text(td);
        if (!failed.empty()) {
            res.status = Status::CheckFailed;
            res.diagnostic = "checks failed: " + join(failed);
        }
        return res;
    });
}

CommandResult run_blocks(const Graph& g, const std::string& options_json) {
    return guarded([&]() -> CommandResult {
        Json opts = parse_options(
            options_json, {"k", "well_separated", "fan_orders", "max_n", "max_k"});
        Limits lim = limits_from(opts);
        int k = required_k(opts, lim, g);
        bool want_ws = json_bool_field(opts, "well_separated", false);
        bool want_fan = json_bool_field(opts, "fan_orders", false);

        std::vector<VertexSet> blocks = k_blocks(g, k);
        SeparationSystem tight;
        if (want_ws)
            tight = tight_subsystem(g, enumerate_separations(g, k, lim.max_system_pairs));

        Json arr = Json::array();
        for (VertexSet b : blocks) {
            Json entry{{"size", popcount(b)}, {"vertices", vertices_json(b)}};
            if (want_ws) {
                WellSeparatedCheck ws = well_separated_check(b, tight);
                entry["well_separated"] = ws.well_separated;
                if (ws.witness) entry["witness"] = separation_pair_json(*ws.witness);
            }
            if (want_fan) entry["fan_orders_below"] = fan_orders_below(g, k, b);
            arr.push_back(std::move(entry));
        }

        CommandResult res;
        res.output = dump_json(Json{{"blocks", arr},
                                    {"count", blocks.size()},
                                    {"graph", graph_json(g)},
                                    {"k", k}});
        return res;
    });
}

CommandResult run_verify(const std::string& options_json) {
    return guarded([&]() -> CommandResult {
        Json opts = parse_options(options_json, {"suite", "max_n", "seed"});
        std::string suite = json_string_field(opts, "suite", "all");
        int max_n = json_int_field(opts, "max_n", 16);
        if (max_n < 0 || max_n > 64)
            throw InputError("option 'max_n' must lie in [0, 64]");
        std::uint64_t seed = json_u64_field(opts, "seed", 1);

        std::vector<std::string> suites;
        if (suite == "all")
            suites = suite_names();
        else
            suites.push_back(suite);

        Limits lim;
        lim.max_n = max_n;

        Json arr = Json::array();
        std::vector<std::string> failing;
        for (const std::string& name : suites) {
            SuiteReport rep = run_suite(name, max_n, seed, lim);
            arr.push_back(Json{{"checks", rep.checks},
                               {"failures", rep.failures},
                               {"graphs", rep.graphs},
                               {"passed", rep.passed},
                               {"skipped", rep.skipped},
                               {"suite", rep.suite}});
            if (!rep.passed) failing.push_back(rep.suite);
        }

        CommandResult res;
        res.output = dump_json(Json{{"max_n", max_n},
                                    {"passed", failing.empty()},
                                    {"seed", seed},
                                    {"suites", arr}});
        if (!failing.empty()) {
            res.status = Status::CheckFailed;
            res.diagnostic = "suites failed: " + join(failing);
        }
        return res;
    });
}

Graph generate_named(const std::string& name, const std::string& params_json) {
    Json p = params_json.empty() ? Json::object() : parse_json(params_json);
    if (name == "path_cliques") {
        require_keys_among(p, {"count", "size"});
        return gen_path_cliques(json_int_field(p, "count", 4),
                                json_int_field(p, "size", 5));
    }
    if (name == "cycle_cliques") {
        require_keys_among(p, {"count", "size"});
        return gen_cycle_cliques(json_int_field(p, "count", 5),
                                 json_int_field(p, "size", 5));
    }
    if (name == "overlapping_attachments") {
        require_keys_among(p, {"k", "core", "attach"});
        return gen_overlapping_attachments(json_int_field(p, "k", 4),
                                           json_int_field(p, "core", 6),
                                           json_int_field(p, "attach", 3))
            .g;
    }
    if (name == "glued_k5") {
        require_keys_among(p, {"copies"});
        return gen_glued_k5(json_int_field(p, "copies", 3));
    }
    if (name == "pinned_pairs") {
        require_keys_among(p, {"count"});
        return gen_pinned_pairs(json_int_field(p, "count", 3)).g;
    }
    if (name == "random") {
        require_keys_among(p, {"n", "density", "seed"});
        return gen_random(json_int_field(p, "n", 10),
                          json_double_field(p, "density", 0.5),
                          json_u64_field(p, "seed", 1));
    }
    throw InputError("unknown generator '" + name + "'");
}

}  // namespace ctd
