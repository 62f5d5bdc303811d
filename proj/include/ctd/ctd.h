#ifndef CTD_H
#define CTD_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status code returned by every call. Codes other than CTD_OK leave a
   message in ctd_last_error(); commands additionally write an
   {"error": ...} JSON document to their output parameter. */
#define CTD_OK 0
#define CTD_ERR_INPUT 1
#define CTD_ERR_CHECK_FAILED 2
#define CTD_ERR_INFEASIBLE 3
#define CTD_ERR_LIMIT 4
#define CTD_ERR_INTERNAL 5

typedef struct ctd_graph ctd_graph;

/* Parses edge-list text: first non-comment line "n <count>", then one
   "u v" pair per line, '#' starts a comment. Duplicate edges are rejected.
   On CTD_OK, *out holds a new handle; free it with ctd_graph_free. */
int ctd_graph_parse(const char* text, ctd_graph** out);

/* Builds a generator instance. Names: path_cliques, cycle_cliques,
   overlapping_attachments, glued_k5, pinned_pairs, random. params_json is a
   JSON object keyed per generator (NULL or "" means all defaults). */
int ctd_graph_generate(const char* name, const char* params_json, ctd_graph** out);

void ctd_graph_free(ctd_graph* g);

/* Edge-list text of the graph. Free *out_text with ctd_string_free. */
int ctd_graph_to_edge_list(const ctd_graph* g, char** out_text);

/* Runs a strategy and emits the decomposition report. options_json:
   {"k": int (required), "strategy": "ext"|"loc", "profiles": "blocks"|"all",
    "seps": "tight"|"proper", "format": "json"|"dot"|"text",
    "check": ["canonical","bounds","refinement","exactness"],
    "max_n": int, "max_k": int}
   Identical graph and options always produce byte-identical output. */
int ctd_decompose(const ctd_graph* g, const char* options_json, char** out_json);

/* Lists k-blocks. options_json:
   {"k": int (required), "well_separated": bool, "fan_orders": bool,
    "max_n": int, "max_k": int} */
int ctd_blocks(const ctd_graph* g, const char* options_json, char** out_json);

/* Runs verification suites over the generated corpus. options_json:
   {"suite": "orientations"|"bounds"|"refinement"|"exactness"|"all",
    "max_n": int, "seed": int} */
int ctd_verify(const char* options_json, char** out_json);

void ctd_string_free(char* s);

/* Message from the most recent failing call on this thread. Never NULL. */
const char* ctd_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
