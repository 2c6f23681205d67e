/* C interface to the separation / tangle-tree library.
 *
 * All functions are thread-safe.  Functions returning ttd_status put a
 * human-readable message behind ttd_last_error() (thread-local) when they
 * fail.  Strings handed out through char** out-parameters are heap-allocated
 * and must be released with ttd_string_free; graph handles with
 * ttd_graph_free.
 */
#ifndef TTD_H
#define TTD_H

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors the command-line exit codes. */
typedef enum ttd_status {
  TTD_OK = 0,
  TTD_USAGE = 1,     /* invalid arguments: bad k, unknown family/mode, ... */
  TTD_BAD_INPUT = 2, /* malformed graph or manifest text */
  TTD_INTERNAL = 3   /* an internal invariant failed */
} ttd_status;

typedef struct ttd_graph ttd_graph;

const char* ttd_version(void);
const char* ttd_last_error(void);
void ttd_string_free(char* s);

/* Graph ingestion.  JSON form {"n": int, "edges": [[u,v], ...]}; edge-list
 * form "n" on the first line then one "u v" pair per line. */
ttd_status ttd_graph_from_json(const char* text, ttd_graph** out);
ttd_status ttd_graph_from_edge_list(const char* text, ttd_graph** out);
void ttd_graph_free(ttd_graph* g);
int ttd_graph_vertex_count(const ttd_graph* g);
int ttd_graph_edge_count(const ttd_graph* g);

/* The four width parameters plus per-order structure/tree witnesses. */
ttd_status ttd_widths_json(const ttd_graph* g, char** out);
ttd_status ttd_widths_csv(const ttd_graph* g, char** out);

/* All k-blocks. */
ttd_status ttd_blocks_json(const ttd_graph* g, int k, char** out);

/* Search for an order-k structure of the family ("block", "profile" or
 * "tangle"); the report says whether one exists and carries the witness
 * orientation. */
ttd_status ttd_find_json(const ttd_graph* g, const char* family, int k,
                         char** out);

/* Two-sided duality check; mode is "lean" or "canonical_all".  The report
 * carries either the structure witness or the dual tree with its
 * decomposition. */
ttd_status ttd_duality_json(const ttd_graph* g, const char* family, int k,
                            const char* mode, char** out);

/* Graphviz rendering of the duality check's tree side (the S-tree followed
 * by the tree-decomposition).  Fails with TTD_USAGE when the structure side
 * holds, since there is no tree to draw. */
ttd_status ttd_duality_dot(const ttd_graph* g, const char* family, int k,
                           const char* mode, char** out);

/* Graph statistics and the universe axiom sweep. */
ttd_status ttd_validate_json(const ttd_graph* g, char** out);

/* Corpus sweep over all connected graphs with up to max_n vertices (or over
 * the entries of manifest_json when it is non-NULL): duality at orders
 * 1..kmax for every family plus the width inequality chains.  sample > 0
 * restricts to a seeded random subset; threads = 0 means hardware
 * concurrency.  format is "json" or "csv". */
ttd_status ttd_corpus_report(int max_n, int kmax, const char* mode,
                             const char* manifest_json, int sample,
                             unsigned seed, int threads, const char* format,
                             char** out);

#ifdef __cplusplus
}
#endif

#endif /* TTD_H */
