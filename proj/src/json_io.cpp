#include "json_io.hpp"

#include <algorithm>
#include <sstream>

namespace ctd {

Json vertices_json(VertexSet s) {
    Json arr = Json::array();
    for (VertexSet rest = s; rest != 0; rest &= rest - 1)
        arr.push_back(lowest_bit(rest));
    return arr;
}

Json separation_json(const Separation& s) {
    return Json{{"A", vertices_json(s.a)},
                {"B", vertices_json(s.b)},
                {"order", order(s)}};
}

Json separation_pair_json(const std::pair<Separation, Separation>& pair) {
    return Json{{"first", separation_json(pair.first)},
                {"second", separation_json(pair.second)}};
}

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    return Json{{"edges", edges}, {"n", g.n()}};
}

Json decomposition_json(const TreeDecomposition& td) {
    Json parts = Json::array();
    for (VertexSet part : td.parts) parts.push_back(vertices_json(part));

    std::vector<TreeEdge> edges = td.edges;
    std::sort(edges.begin(), edges.end(), [](const TreeEdge& x, const TreeEdge& y) {
        return std::pair{x.u, x.v} < std::pair{y.u, y.v};
    });
    Json edge_arr = Json::array();
    for (const TreeEdge& e : edges)
        edge_arr.push_back(Json{{"towards_v", separation_json(e.towards_v)},
                                {"u", e.u},
                                {"v", e.v}});

    return Json{{"adhesion", td.adhesion()},
                {"edges", edge_arr},
                {"nodes", td.node_count()},
                {"parts", parts}};
}

namespace {

Json separations_json(const std::vector<Separation>& seps) {
    Json arr = Json::array();
    for (const Separation& s : seps) arr.push_back(separation_json(s));
    return arr;
}

}  // namespace

Json strategy_run_json(const StrategyRun& run) {
    Json levels = Json::array();
    for (const LevelTrace& t : run.per_level)
        levels.push_back(Json{{"level", t.level},
                              {"separations_added", t.separations_added},
                              {"tasks_solved", t.tasks_solved}});
    Json j{{"chosen", separations_json(run.chosen)},
           {"child_counts", run.child_counts},
           {"k", run.k},
           {"levels", levels},
           {"profiles", run.p},
           {"strategy", to_string(run.kind)}};
    if (run.infeasibility_witness)
        j["infeasibility_witness"] = separation_pair_json(*run.infeasibility_witness);
    return j;
}

Json bound_report_json(const BoundReport& rep) {
    Json lines = Json::array();
    for (const BoundLine& l : rep.lines)
        lines.push_back(Json{{"holds", l.holds}, {"name", l.name}});
    return Json{{"all_hold", rep.all_hold},
                {"chosen_size", rep.chosen_size},
                {"connected_enough", rep.connected_enough},
                {"inessential", rep.inessential},
                {"lines", lines},
                {"node_count", rep.node_count},
                {"profiles", rep.p}};
}

Json block_verdict_json(const BlockVerdict& v) {
    Json j{{"block", vertices_json(v.block)},
           {"node", v.node},
           {"part_equals_block", v.part_equals_block},
           {"well_separated", v.well_separated}};
    if (v.ws_witness) j["witness"] = separation_pair_json(*v.ws_witness);
    return j;
}

Json refine_report_json(const RefineReport& rep) {
    Json blocks = Json::array();
    for (const BlockVerdict& v : rep.blocks) blocks.push_back(block_verdict_json(v));
    return Json{{"base", separations_json(rep.base)},
                {"blocks", blocks},
                {"decomposition", decomposition_json(rep.td)},
                {"distinct_parts", rep.distinct_parts},
                {"leaves_applicable", rep.leaves_applicable},
                {"leaves_are_blocks", rep.leaves_are_blocks},
                {"refined", separations_json(rep.refined)},
                {"ws_parts_exact", rep.ws_parts_exact}};
}

Json goodness_json(const GoodnessReport& rep) {
    return Json{{"adhesion_ok", rep.adhesion_ok},
                {"canonical", rep.canonical},
                {"efficient", rep.efficient},
                {"good", rep.good()},
                {"reasons", rep.reasons}};
}

Json hypothesis_report_json(const HypothesisReport& rep) {
    Json edges = Json::array();
    for (const EdgeVerdict& v : rep.edges)
        edges.push_back(Json{{"common_neighbors", v.common_neighbors},
                             {"edge", Json::array({v.e.u, v.e.v})},
                             {"many_paths", v.many_paths},
                             {"ok", v.ok()},
                             {"shared_block", v.shared_block}});
    return Json{{"connected_enough", rep.connected_enough},
                {"edges", edges},
                {"holds", rep.holds}};
}

std::string decomposition_dot(const TreeDecomposition& td) {
    std::ostringstream out;
    out << "graph decomposition {\n";
    out << "  node [shape=box];\n";
    for (int i = 0; i < td.node_count(); ++i)
        out << "  p" << i << " [label=\"" << set_text(td.parts[i]) << "\"];\n";
    std::vector<TreeEdge> edges = td.edges;
    std::sort(edges.begin(), edges.end(), [](const TreeEdge& x, const TreeEdge& y) {
        return std::pair{x.u, x.v} < std::pair{y.u, y.v};
    });
    for (const TreeEdge& e : edges)
        out << "  p" << e.u << " -- p" << e.v << " [label=\""
            << set_text(separator(e.towards_v)) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string decomposition_text(const TreeDecomposition& td) {
    std::ostringstream out;
    out << "nodes " << td.node_count() << " adhesion " << td.adhesion() << "\n";
    for (int i = 0; i < td.node_count(); ++i)
        out << "part " << i << ": " << set_text(td.parts[i]) << "\n";
    std::vector<TreeEdge> edges = td.edges;
    std::sort(edges.begin(), edges.end(), [](const TreeEdge& x, const TreeEdge& y) {
        return std::pair{x.u, x.v} < std::pair{y.u, y.v};
    });
    for (const TreeEdge& e : edges)
        out << "edge " << e.u << " -- " << e.v << " separator "
            << set_text(separator(e.towards_v)) << "\n";
    return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed json");
    return j;
}

namespace {

const Json* find_field(const Json& j, const std::string& key) {
    if (!j.is_object()) throw InputError("options must be a json object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

}  // namespace

int json_int_field(const Json& j, const std::string& key, int fallback) {
    const Json* f = find_field(j, key);
    if (!f) return fallback;
    if (!f->is_number_integer())
        throw InputError("field '" + key + "' must be an integer");
    return f->get<int>();
}

std::uint64_t json_u64_field(const Json& j, const std::string& key,
                             std::uint64_t fallback) {
    const Json* f = find_field(j, key);
    if (!f) return fallback;
    if (!f->is_number_unsigned() && !(f->is_number_integer() && f->get<std::int64_t>() >= 0))
        throw InputError("field '" + key + "' must be a non-negative integer");
    return f->get<std::uint64_t>();
}

double json_double_field(const Json& j, const std::string& key, double fallback) {
    const Json* f = find_field(j, key);
    if (!f) return fallback;
    if (!f->is_number()) throw InputError("field '" + key + "' must be a number");
    return f->get<double>();
}

bool json_bool_field(const Json& j, const std::string& key, bool fallback) {
    const Json* f = find_field(j, key);
    if (!f) return fallback;
    if (!f->is_boolean()) throw InputError("field '" + key + "' must be a boolean");
    return f->get<bool>();
}

std::string json_string_field(const Json& j, const std::string& key,
                              const std::string& fallback) {
    const Json* f = find_field(j, key);
    if (!f) return fallback;
    if (!f->is_string()) throw InputError("field '" + key + "' must be a string");
    return f->get<std::string>();
}

void require_keys_among(const Json& j, const std::vector<std::string>& known) {
    if (j.is_null()) return;
    if (!j.is_object()) throw InputError("options must be a json object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw InputError("unknown option '" + it.key() + "'");
}

}  // namespace ctd
