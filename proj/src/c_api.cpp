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

#include "metacat/metacat.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <memory>
#include <new>
#include <string>

#include "file_util.hpp"
#include "metacat/bench.hpp"
#include "metacat/dcat.hpp"
#include "metacat/dedup.hpp"
#include "metacat/error.hpp"
#include "metacat/pipeline.hpp"
#include "metacat/quality.hpp"
#include "metacat/search.hpp"
#include "metacat/service.hpp"

using namespace metacat;

struct mc_config {
  std::map<std::string, std::string> props;
  std::string base_dir;
  pipeline::PipelineConfig config;
};

struct mc_index {
  std::shared_ptr<const service::Snapshot> snapshot;
};

struct mc_server {
  service::Service service;
  service::HttpServer http;
  int port = 0;

  mc_server(std::shared_ptr<const service::Snapshot> s, service::ServerConfig cfg)
      : service(std::move(s)), http(service, std::move(cfg)) {}
};

namespace {

thread_local std::string last_error;

mc_status fail(mc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the library's exceptions onto status codes.
template <typename F>
mc_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return MC_OK;
  } catch (const NotFoundError& e) {
    return fail(MC_ERR_NOT_FOUND, e.what());
  } catch (const ParseError& e) {
    return fail(MC_ERR_PARSE, e.what());
  } catch (const ConfigError& e) {
    return fail(MC_ERR_CONFIG, e.what());
  } catch (const IoError& e) {
    return fail(MC_ERR_IO, e.what());
  } catch (const ValidationError& e) {
    return fail(MC_ERR_VALIDATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MC_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void give(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

std::string opt(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

const char* mc_version(void) { return "0.1.0"; }

const char* mc_last_error(void) { return last_error.c_str(); }

void mc_string_free(char* s) { std::free(s); }

mc_status mc_parse_time(const char* iso8601, int64_t* seconds) {
  if (!iso8601 || !seconds) return fail(MC_ERR_INVALID_ARGUMENT, "iso8601 and seconds are required");
  auto t = dcat::parse_iso8601(iso8601);
  if (!t) return fail(MC_ERR_VALIDATION, std::string("not an ISO-8601 date or timestamp: ") + iso8601);
  *seconds = *t;
  last_error.clear();
  return MC_OK;
}

mc_status mc_config_load(const char* path, mc_config** out) {
  if (!path || !out) return fail(MC_ERR_INVALID_ARGUMENT, "path and out are required");
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<mc_config>();
    std::string body;
    try {
      body = detail::read_file(path, "config");
    } catch (const IoError& e) {
      throw ConfigError(e.what());
    }
    c->props = pipeline::parse_properties(body, path);
    c->base_dir = std::filesystem::absolute(path).parent_path().string();
    c->config = pipeline::make_config(c->props, c->base_dir);
    *out = c.release();
  });
}

mc_status mc_config_set(mc_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(MC_ERR_INVALID_ARGUMENT, "config, key and value are required");
  return guarded([&] {
    auto props = config->props;
    props[key] = value;
    config->config = pipeline::make_config(props, config->base_dir);
    config->props = std::move(props);
  });
}

mc_status mc_config_get(const mc_config* config, const char* key, char** value) {
  if (!config || !key || !value) return fail(MC_ERR_INVALID_ARGUMENT, "config, key and value are required");
  const auto& c = config->config;
  std::string k = key;
  std::string v;
  if (k == "io.input") v = c.input;
  else if (k == "io.output") v = c.output;
  else if (k == "index.output") v = c.index_path();
  else if (k == "service.port") v = std::to_string(c.service_port);
  else if (k == "service.cors_origin") v = c.cors_origin;
  else return fail(MC_ERR_INVALID_ARGUMENT, "no readable key " + k);
  return guarded([&] { give(value, v); });
}

mc_status mc_config_warnings(const mc_config* config, char** text) {
  if (!config || !text) return fail(MC_ERR_INVALID_ARGUMENT, "config and text are required");
  return guarded([&] {
    std::string s;
    for (const auto& w : config->config.warnings) s += w + '\n';
    give(text, s);
  });
}

void mc_config_free(mc_config* config) { delete config; }

mc_status mc_run_pipeline(const mc_config* config, char** report) {
  if (!config) return fail(MC_ERR_INVALID_ARGUMENT, "config is required");
  return guarded([&] { give(report, pipeline::format_report(pipeline::run_pipeline(config->config))); });
}

mc_status mc_quality_evaluate(const char* rdf_path, const char* dataset, int64_t evaluation_time,
                              int include_long_running, const char* providers_path, const char* community_path,
                              char** scores, char** dqv) {
  if (!rdf_path) return fail(MC_ERR_INVALID_ARGUMENT, "rdf_path is required");
  return guarded([&] {
    auto graph = pipeline::read_input(rdf_path);
    quality::CivetConfig cfg;
    cfg.evaluation_time = evaluation_time;
    cfg.include_long_running = include_long_running != 0;
    std::optional<quality::ProviderDb> providers;
    std::optional<quality::CommunityDb> community;
    quality::ExternalStores stores;
    if (providers_path) stores.provider_db = &providers.emplace(quality::ProviderDb::load(providers_path));
    if (community_path) stores.community_db = &community.emplace(quality::CommunityDb::load(community_path));
    if (cfg.include_long_running) stores.url_prober = quality::http_url_prober();

    std::string text;
    rdf::Graph measurements;
    bool found = false;
    for (const auto& s : rdf::split_dataset_graphs(graph)) {
      if (dataset && s.dataset != dataset) continue;
      found = true;
      auto results = quality::evaluate_all(dcat::from_graph(s.graph, s.dataset), s.graph, cfg, stores);
      text += "# " + s.dataset + "\n" + quality::format_scores(results);
      measurements.merge(quality::to_dqv(s.dataset, results, false));
    }
    if (dataset && !found) throw NotFoundError(std::string("no dataset ") + dataset + " in " + rdf_path);
    give(scores, text);
    give(dqv, rdf::serialize_ntriples(measurements));
  });
}

mc_status mc_dedup(const char* input_path, double threshold, char** csv, char** links) {
  if (!input_path) return fail(MC_ERR_INVALID_ARGUMENT, "input_path is required");
  return guarded([&] {
    auto graph = pipeline::read_input(input_path);
    std::vector<dcat::DatasetRecord> records;
    for (const auto& s : rdf::split_dataset_graphs(graph)) records.push_back(dcat::from_graph(s.graph, s.dataset));
    auto clusters = dedup::find_duplicates(records, threshold);
    give(csv, dedup::csv_report(clusters));
    give(links, rdf::serialize_ntriples(dedup::emit_links(clusters)));
  });
}

mc_status mc_synonyms_extract(const char* lexicon_path, const char* index_path, char** tsv, char** stats) {
  if (!lexicon_path) return fail(MC_ERR_INVALID_ARGUMENT, "lexicon_path is required");
  return guarded([&] {
    auto lexicon = pipeline::read_input(lexicon_path);
    std::optional<std::set<std::string>> terms;
    if (index_path) terms = search::corpus_terms(search::InvertedIndex::load(index_path).docs());
    search::ExtractStats st;
    auto table = search::extract_synonyms(lexicon, terms ? &*terms : nullptr, &st);
    give(tsv, table.to_tsv());
    give(stats, "german nouns " + std::to_string(st.german_nouns) + ", with synonyms " +
                    std::to_string(st.with_synonyms) + ", synonyms " + std::to_string(st.synonyms) + ", kept " +
                    std::to_string(st.kept) + "\n");
  });
}

mc_status mc_bench(size_t docs, size_t queries, uint64_t seed, char** report, int* passed) {
  if (docs == 0 || queries == 0) return fail(MC_ERR_INVALID_ARGUMENT, "docs and queries must be positive");
  return guarded([&] {
    auto r = bench::run_search_bench({docs, queries, seed});
    give(report, bench::format_report(r));
    if (passed) *passed = r.simple.speedup() >= 2.0 && r.facet.speedup() >= 5.0 && r.mismatches == 0;
  });
}

mc_status mc_index_open(const char* index_path, const char* quality_path, const char* synonyms_path,
                        mc_index** out) {
  if (!index_path || !out) return fail(MC_ERR_INVALID_ARGUMENT, "index_path and out are required");
  *out = nullptr;
  return guarded([&] {
    auto q = quality_path ? std::optional<std::string>(quality_path) : std::nullopt;
    auto s = synonyms_path ? std::optional<std::string>(synonyms_path) : std::nullopt;
    *out = new mc_index{service::load_snapshot(index_path, q, s)};
  });
}

size_t mc_index_size(const mc_index* index) { return index ? index->snapshot->index.size() : 0; }

mc_status mc_index_search(const mc_index* index, const char* query_string, char** json) {
  if (!index || !json) return fail(MC_ERR_INVALID_ARGUMENT, "index and json are required");
  return guarded([&] {
    auto params = service::parse_query_string(opt(query_string));
    search::SearchQuery q = service::parse_search_params(params);  // surfaces ValidationError
    (void)q;
    auto res = service::handle_search(*index->snapshot, params);
    if (res.status != 200) throw Error(res.body);
    give(json, res.body);
  });
}

void mc_index_free(mc_index* index) { delete index; }

mc_status mc_server_start(const mc_index* index, const char* host, int port, const char* cors_origin,
                          mc_server** out) {
  if (!index || !out) return fail(MC_ERR_INVALID_ARGUMENT, "index and out are required");
  if (port < 0 || port > 65535) return fail(MC_ERR_INVALID_ARGUMENT, "port out of range");
  *out = nullptr;
  return guarded([&] {
    service::ServerConfig cfg;
    if (host) cfg.host = host;
    cfg.port = port;
    cfg.cors_origin = opt(cors_origin);
    auto srv = std::make_unique<mc_server>(index->snapshot, cfg);
    srv->port = srv->http.start();
    *out = srv.release();
  });
}

int mc_server_port(const mc_server* server) { return server ? server->port : 0; }

void mc_server_wait(mc_server* server) {
  if (server) server->http.wait();
}

void mc_server_stop(mc_server* server) {
  if (server) server->http.stop();
}

void mc_server_free(mc_server* server) { delete server; }

}  // extern "C"
