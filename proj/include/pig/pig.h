#ifndef PIG_PIG_H
#define PIG_PIG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PIG_API __declspec(dllexport)
#else
#define PIG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pig_status {
  PIG_OK = 0,
  PIG_ERR_ARGUMENT = 1,    /* null pointer, bad ratio, bad option */
  PIG_ERR_PARSE = 2,       /* malformed graph or certificate text */
  PIG_ERR_IO = 3,          /* file could not be read */
  PIG_ERR_BOUND = 4,       /* a set missed ceil(c n) or a lift failed */
  PIG_ERR_INCOMPLETE = 5,  /* no certified reduction; see pig_last_diagnostic_graph */
  PIG_ERR_BUDGET = 6,      /* exact oracle hit its branch-node budget */
  PIG_ERR_INTERNAL = 7
} pig_status;

/* Opaque embedded planar graph. */
typedef struct pig_graph pig_graph;

typedef struct pig_extract_info {
  int n;
  long long bound; /* ceil(c n) */
  long long size;
  int steps;
} pig_extract_info;

typedef struct pig_corpus_info {
  int count;
  int successes;
  int diagnostics;
} pig_corpus_info;

/* Message for the last failing call on this thread, or "". */
PIG_API const char* pig_last_error(void);
/* Rotation text of the graph behind the last PIG_ERR_INCOMPLETE on this thread, or NULL. */
PIG_API const char* pig_last_diagnostic_graph(void);
PIG_API const char* pig_status_name(pig_status s);

/* Strings returned through char** are owned by the caller. */
PIG_API void pig_string_free(char* s);

PIG_API pig_status pig_graph_parse(const char* text, pig_graph** out);
PIG_API pig_status pig_graph_load(const char* path, pig_graph** out);
PIG_API pig_status pig_graph_generate(uint64_t seed, int n, int min_degree_5, int no_separating_triangle,
                                      pig_graph** out);
PIG_API void pig_graph_free(pig_graph* g);
PIG_API int pig_graph_vertex_count(const pig_graph* g);
PIG_API int pig_graph_edge_count(const pig_graph* g);
PIG_API pig_status pig_graph_serialize(const pig_graph* g, char** text);
PIG_API pig_status pig_graph_hash(const pig_graph* g, char** hex);

/* Budgets of 0 mean the default (PIG_ORACLE_BUDGET or 10^7 branch nodes). */
PIG_API pig_status pig_alpha(const pig_graph* g, uint64_t budget, int* alpha, char** set_json);

/* ratio is "a/b"; NULL means 3/13. Writes the certificate JSON. */
PIG_API pig_status pig_extract(const pig_graph* g, const char* ratio, uint64_t budget, char** cert_json,
                               pig_extract_info* info);
/* *ok is 1 when the certificate replays; *failed_step is -1 or the first diverging step. */
PIG_API pig_status pig_check_certificate(const pig_graph* g, const char* cert_json, uint64_t budget, int* ok,
                                         int* failed_step, char** message);

/* rules is "warmup" or "main". JSON with per-phase charges, totals, the ledger and negative vertices. */
PIG_API pig_status pig_discharge(const pig_graph* g, const char* rules, char** json);
/* JSON list of configuration matches with role maps. */
PIG_API pig_status pig_configs(const pig_graph* g, char** json);
/* JSON for the first step the extractor would take on g. */
PIG_API pig_status pig_reduce_step(const pig_graph* g, const char* ratio, uint64_t budget, char** json);

/* Extracts seeds first_seed .. first_seed + count - 1 at n vertices. threads 0 means one per core. */
PIG_API pig_status pig_corpus(int n, int count, uint64_t first_seed, int min_degree_5, int no_separating_triangle,
                              const char* ratio, uint64_t budget, int threads, char** report_json,
                              pig_corpus_info* info);

#ifdef __cplusplus
}
#endif

#endif
