#include "ctd/ctd.h"

#include <cstring>
#include <exception>
#include <string>

#include "commands.hpp"
#include "graph.hpp"

struct ctd_graph {
    ctd::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int finish(const ctd::CommandResult& res, char** out_json) {
    g_last_error = res.diagnostic;
    if (out_json) *out_json = dup_string(res.output);
    return static_cast<int>(res.status);
}

int fail(ctd::Status status, const std::string& message) {
    g_last_error = message;
    return static_cast<int>(status);
}

}  // namespace

extern "C" {

int ctd_graph_parse(const char* text, ctd_graph** out) {
    if (!text || !out) return fail(ctd::Status::Input, "null argument");
    *out = nullptr;
    try {
        *out = new ctd_graph{ctd::parse_graph(text, true)};
        g_last_error.clear();
        return CTD_OK;
    } catch (const ctd::InputError& e) {
        return fail(ctd::Status::Input, e.what());
    } catch (const std::exception& e) {
        return fail(ctd::Status::Internal, e.what());
    }
}

int ctd_graph_generate(const char* name, const char* params_json, ctd_graph** out) {
    if (!name || !out) return fail(ctd::Status::Input, "null argument");
    *out = nullptr;
    try {
        *out = new ctd_graph{ctd::generate_named(name, params_json ? params_json : "")};
        g_last_error.clear();
        return CTD_OK;
    } catch (const ctd::InputError& e) {
        return fail(ctd::Status::Input, e.what());
    } catch (const std::exception& e) {
        return fail(ctd::Status::Internal, e.what());
    }
}

void ctd_graph_free(ctd_graph* g) { delete g; }

int ctd_graph_to_edge_list(const ctd_graph* g, char** out_text) {
    if (!g || !out_text) return fail(ctd::Status::Input, "null argument");
    try {
        *out_text = dup_string(ctd::graph_to_text(g->g));
        g_last_error.clear();
        return CTD_OK;
    } catch (const std::exception& e) {
        return fail(ctd::Status::Internal, e.what());
    }
}

int ctd_decompose(const ctd_graph* g, const char* options_json, char** out_json) {
    if (!g) return fail(ctd::Status::Input, "null graph");
    return finish(ctd::run_decompose(g->g, options_json ? options_json : ""), out_json);
}

int ctd_blocks(const ctd_graph* g, const char* options_json, char** out_json) {
    if (!g) return fail(ctd::Status::Input, "null graph");
    return finish(ctd::run_blocks(g->g, options_json ? options_json : ""), out_json);
}

int ctd_verify(const char* options_json, char** out_json) {
    return finish(ctd::run_verify(options_json ? options_json : ""), out_json);
}

void ctd_string_free(char* s) { delete[] s; }

const char* ctd_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
