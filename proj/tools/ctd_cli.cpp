#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctd/ctd.h"

namespace {

using Json = nlohmann::json;

// Exit codes: 0 success, 2 failed check, 3 infeasible task, 1 everything
// else (bad input, size limits, internal failures).
int exit_code(int ctd_code) {
    switch (ctd_code) {
        case CTD_OK:
            return 0;
        case CTD_ERR_CHECK_FAILED:
            return 2;
        case CTD_ERR_INFEASIBLE:
            return 3;
        default:
            return 1;
    }
}

int emit(int code, char* output) {
    if (output) {
        std::fputs(output, stdout);
        ctd_string_free(output);
    }
    if (code != CTD_OK) std::fprintf(stderr, "error: %s\n", ctd_last_error());
    return exit_code(code);
}

// Reads the file (or stdin for "-") and parses it; exits with code 1 and a
// message on stderr when either step fails.
ctd_graph* load_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in.good()) {
            std::fprintf(stderr, "error: cannot read '%s'\n", path.c_str());
            std::exit(1);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    ctd_graph* g = nullptr;
    if (ctd_graph_parse(text.c_str(), &g) != CTD_OK) {
        std::fprintf(stderr, "error: %s\n", ctd_last_error());
        std::exit(1);
    }
    return g;
}

int run_generator(const std::string& name, const Json& params) {
    ctd_graph* g = nullptr;
    int code = ctd_graph_generate(name.c_str(), params.dump().c_str(), &g);
    if (code != CTD_OK) {
        std::fprintf(stderr, "error: %s\n", ctd_last_error());
        return exit_code(code);
    }
    char* text = nullptr;
    code = ctd_graph_to_edge_list(g, &text);
    ctd_graph_free(g);
    return emit(code, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical tree decompositions of small graphs"};
    app.require_subcommand(1);

    // decompose
    auto* dec = app.add_subcommand("decompose",
                                   "Run a strategy and print the decomposition");
    std::string dec_input;
    int dec_k = 0;
    std::string dec_strategy = "ext", dec_profiles = "blocks";
    std::string dec_seps = "tight", dec_format = "json";
    std::vector<std::string> dec_checks;
    int dec_max_n = 16, dec_max_k = 5;
    dec->add_option("--input", dec_input, "Edge-list file, or - for stdin")
        ->required();
    dec->add_option("--k", dec_k, "Separation order bound")->required();
    dec->add_option("--strategy", dec_strategy, "Choice rule")
        ->check(CLI::IsMember({"ext", "loc"}));
    dec->add_option("--profiles", dec_profiles, "Profile set")
        ->check(CLI::IsMember({"blocks", "all"}));
    dec->add_option("--seps", dec_seps, "Separation system for refinement checks")
        ->check(CLI::IsMember({"tight", "proper"}));
    dec->add_option("--format", dec_format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    dec->add_option("--check", dec_checks,
                    "Comma list of canonical,bounds,refinement,exactness")
        ->delimiter(',');
    dec->add_option("--max-n", dec_max_n, "Vertex-count limit");
    dec->add_option("--max-k", dec_max_k, "Order-bound limit");

    // blocks
    auto* blk = app.add_subcommand("blocks", "List the k-blocks");
    std::string blk_input;
    int blk_k = 0;
    bool blk_ws = false, blk_fan = false;
    int blk_max_n = 16, blk_max_k = 5;
    blk->add_option("--input", blk_input, "Edge-list file, or - for stdin")
        ->required();
    blk->add_option("--k", blk_k, "Block order")->required();
    blk->add_flag("--well-separated", blk_ws, "Report the well-separated check");
    blk->add_flag("--fan-orders", blk_fan,
                  "Report whether every peeled component separation has order < k");
    blk->add_option("--max-n", blk_max_n, "Vertex-count limit");
    blk->add_option("--max-k", blk_max_k, "Order-bound limit");

    // verify
    auto* ver = app.add_subcommand("verify", "Run verification suites");
    std::string ver_suite = "all";
    int ver_max_n = 16;
    std::uint64_t ver_seed = 1;
    ver->add_option("--suite", ver_suite, "Suite to run")
        ->check(CLI::IsMember(
            {"orientations", "bounds", "refinement", "exactness", "all"}));
    ver->add_option("--max-n", ver_max_n, "Vertex-count cap for the corpus");
    ver->add_option("--seed", ver_seed, "Seed for the random corpus members");

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a generated graph as an edge list");
    gen->require_subcommand(1);

    auto* g_path = gen->add_subcommand("path-cliques", "Cliques glued along a path");
    int pc_count = 4, pc_size = 5;
    g_path->add_option("--count", pc_count, "Number of cliques");
    g_path->add_option("--size", pc_size, "Clique size");

    auto* g_cycle = gen->add_subcommand("cycle-cliques", "Cliques glued along a cycle");
    int cc_count = 5, cc_size = 5;
    g_cycle->add_option("--count", cc_count, "Number of cliques");
    g_cycle->add_option("--size", cc_size, "Clique size");

    auto* g_oa = gen->add_subcommand("overlapping-attachments",
                                     "Core clique with overlapping attachments");
    int oa_k = 4, oa_core = 6, oa_attach = 3;
    g_oa->add_option("--k", oa_k, "Block order");
    g_oa->add_option("--core", oa_core, "Core clique size");
    g_oa->add_option("--attach", oa_attach, "Attachment size");

    auto* g_k5 = gen->add_subcommand("glued-k5", "Chain of K5 copies");
    int k5_copies = 3;
    g_k5->add_option("--copies", k5_copies, "Number of copies");

    auto* g_pp = gen->add_subcommand("pinned-pairs",
                                     "Clique with crossing attachment pairs");
    int pp_count = 3;
    g_pp->add_option("--count", pp_count, "Number of pairs");

    auto* g_rand = gen->add_subcommand("random", "Seeded random graph");
    int rn_n = 10;
    double rn_density = 0.5;
    std::uint64_t rn_seed = 1;
    g_rand->add_option("--n", rn_n, "Vertex count");
    g_rand->add_option("--density", rn_density, "Edge probability in [0, 1]");
    g_rand->add_option("--seed", rn_seed, "Random seed");

    CLI11_PARSE(app, argc, argv);

    if (dec->parsed()) {
        Json opts{{"k", dec_k},         {"strategy", dec_strategy},
                  {"profiles", dec_profiles}, {"seps", dec_seps},
                  {"format", dec_format},     {"max_n", dec_max_n},
                  {"max_k", dec_max_k}};
        if (!dec_checks.empty()) opts["check"] = dec_checks;
        ctd_graph* g = load_graph(dec_input);
        char* out = nullptr;
        int code = ctd_decompose(g, opts.dump().c_str(), &out);
        ctd_graph_free(g);
        return emit(code, out);
    }
    if (blk->parsed()) {
        Json opts{{"k", blk_k},
                  {"well_separated", blk_ws},
                  {"fan_orders", blk_fan},
                  {"max_n", blk_max_n},
                  {"max_k", blk_max_k}};
        ctd_graph* g = load_graph(blk_input);
        char* out = nullptr;
        int code = ctd_blocks(g, opts.dump().c_str(), &out);
        ctd_graph_free(g);
        return emit(code, out);
    }
    if (ver->parsed()) {
        Json opts{{"suite", ver_suite}, {"max_n", ver_max_n}, {"seed", ver_seed}};
        char* out = nullptr;
        int code = ctd_verify(opts.dump().c_str(), &out);
        return emit(code, out);
    }
    if (g_path->parsed())
        return run_generator("path_cliques",
                             Json{{"count", pc_count}, {"size", pc_size}});
    if (g_cycle->parsed())
        return run_generator("cycle_cliques",
                             Json{{"count", cc_count}, {"size", cc_size}});
    if (g_oa->parsed())
        return run_generator("overlapping_attachments",
                             Json{{"k", oa_k}, {"core", oa_core}, {"attach", oa_attach}});
    if (g_k5->parsed()) return run_generator("glued_k5", Json{{"copies", k5_copies}});
    if (g_pp->parsed()) return run_generator("pinned_pairs", Json{{"count", pp_count}});
    if (g_rand->parsed())
        return run_generator(
            "random", Json{{"n", rn_n}, {"density", rn_density}, {"seed", rn_seed}});
    return 0;
}
