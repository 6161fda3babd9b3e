// Copyright 2026 The metacat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METACAT_METACAT_H
#define METACAT_METACAT_H

/* C interface of libmetacat. Handles are opaque; every call returns an
 * mc_status and leaves a message for mc_last_error() on failure. Strings
 * handed out through char** belong to the caller and go back through
 * mc_string_free(). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define MC_API __attribute__((visibility("default")))
#else
#define MC_API
#endif

typedef enum mc_status {
  MC_OK = 0,
  MC_ERR_INVALID_ARGUMENT = 1,
  MC_ERR_NOT_FOUND = 2,
  MC_ERR_PARSE = 3,
  MC_ERR_CONFIG = 4,
  MC_ERR_IO = 5,
  MC_ERR_VALIDATION = 6,
  MC_ERR_INTERNAL = 7
} mc_status;

typedef struct mc_config mc_config;
typedef struct mc_index mc_index;
typedef struct mc_server mc_server;

MC_API const char* mc_version(void);
/* Message of the last failed call on this thread; "" when none. */
MC_API const char* mc_last_error(void);
MC_API void mc_string_free(char* s);

/* ISO-8601 date or timestamp to seconds since the epoch. */
MC_API mc_status mc_parse_time(const char* iso8601, int64_t* seconds);

/* ---- pipeline ---- */

/* Reads a properties file. Relative paths resolve against its directory. */
MC_API mc_status mc_config_load(const char* path, mc_config** out);
/* Overrides one key as if it appeared in the file. */
MC_API mc_status mc_config_set(mc_config* config, const char* key, const char* value);
/* Effective value of io.input, io.output, index.output, service.port or
 * service.cors_origin. */
MC_API mc_status mc_config_get(const mc_config* config, const char* key, char** value);
/* Unknown-key warnings, one per line. */
MC_API mc_status mc_config_warnings(const mc_config* config, char** text);
MC_API void mc_config_free(mc_config* config);

/* Runs the batch pipeline. `report` (optional) receives the human-readable
 * stage report. Missing input gives MC_ERR_NOT_FOUND, unreadable RDF
 * MC_ERR_PARSE, bad settings MC_ERR_CONFIG. */
MC_API mc_status mc_run_pipeline(const mc_config* config, char** report);

/* ---- single-purpose tools ---- */

/* Quality scores (`key<TAB>score` lines, one block per dataset headed by
 * `# <iri>`) for every dataset in an RDF file or directory, or only
 * `dataset` when not NULL. Provider and community tables are optional TSV
 * paths. `dqv` (optional) receives the measurements as N-Triples.
 * `evaluation_time` is seconds since the epoch. */
MC_API mc_status mc_quality_evaluate(const char* rdf_path, const char* dataset, int64_t evaluation_time,
                                     int include_long_running, const char* providers_path,
                                     const char* community_path, char** scores, char** dqv);

/* Duplicate detection over an RDF file or directory: CSV evidence report and
 * skos:exactMatch links as N-Triples. Either output may be NULL. */
MC_API mc_status mc_dedup(const char* input_path, double threshold, char** csv, char** links);

/* Synonym table (TSV) from an OntoLex lexicon; restricted to the titles and
 * descriptions of `index_path` when not NULL. `stats` is optional. */
MC_API mc_status mc_synonyms_extract(const char* lexicon_path, const char* index_path, char** tsv, char** stats);

/* Indexed-versus-scan timing on a synthetic corpus. `passed` (optional) is set
 * to 1 when the speedups reach 2x (simple) and 5x (facet) with no result
 * mismatches. */
MC_API mc_status mc_bench(size_t docs, size_t queries, uint64_t seed, char** report, int* passed);

/* ---- search ---- */

/* Loads an index; quality (DQV N-Triples) and synonyms (TSV) may be NULL. */
MC_API mc_status mc_index_open(const char* index_path, const char* quality_path, const char* synonyms_path,
                               mc_index** out);
MC_API size_t mc_index_size(const mc_index* index);
/* Runs a search given as an HTTP query string (`q=...&publisher=...`) and
 * returns the JSON body the HTTP API would send. */
MC_API mc_status mc_index_search(const mc_index* index, const char* query_string, char** json);
MC_API void mc_index_free(mc_index* index);

/* ---- HTTP service ---- */

/* Binds host:port (0 picks a free port) and serves `index` on a background
 * thread. The server keeps its own reference to the index data. */
MC_API mc_status mc_server_start(const mc_index* index, const char* host, int port, const char* cors_origin,
                                 mc_server** out);
MC_API int mc_server_port(const mc_server* server);
/* Blocks until mc_server_stop is called from another thread. */
MC_API void mc_server_wait(mc_server* server);
MC_API void mc_server_stop(mc_server* server);
MC_API void mc_server_free(mc_server* server);

#ifdef __cplusplus
}
#endif

#endif
