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

// metacat command line. Talks to the library through the C API only.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <pthread.h>

#include <CLI11.hpp>

#include "metacat/metacat.h"

namespace {

// Exit codes of the batch run: 0 ok, 2 missing input, 3 parse error, 4 config error.
int exit_code(mc_status s) {
  switch (s) {
    case MC_OK: return 0;
    case MC_ERR_NOT_FOUND: return 2;
    case MC_ERR_PARSE: return 3;
    case MC_ERR_CONFIG: return 4;
    default: return 1;
  }
}

int report(mc_status s, const char* what) {
  if (s != MC_OK) std::cerr << "metacat " << what << ": " << mc_last_error() << "\n";
  return exit_code(s);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  mc_string_free(s);
  return out;
}

bool write_to(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << body;
  if (!out) std::cerr << "metacat: cannot write " << path << "\n";
  return bool(out);
}

const char* c_or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

struct RunArgs {
  std::string config, at, output;
  int workers = -1;
  std::vector<std::string> sets;
};

int cmd_run(const RunArgs& a) {
  mc_config* cfg = nullptr;
  if (auto s = mc_config_load(a.config.c_str(), &cfg); s != MC_OK) return report(s, "run");
  struct Free {
    mc_config* c;
    ~Free() { mc_config_free(c); }
  } guard{cfg};

  auto set = [&](const std::string& k, const std::string& v) { return mc_config_set(cfg, k.c_str(), v.c_str()); };
  for (const auto& kv : a.sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "metacat run: --set expects key=value, got '" << kv << "'\n";
      return 4;
    }
    if (auto s = set(kv.substr(0, eq), kv.substr(eq + 1)); s != MC_OK) return report(s, "run");
  }
  if (!a.output.empty())
    if (auto s = set("io.output", std::filesystem::absolute(a.output).string()); s != MC_OK) return report(s, "run");
  if (a.workers >= 0)
    if (auto s = set("pipeline.workers", std::to_string(a.workers)); s != MC_OK) return report(s, "run");
  if (!a.at.empty())
    if (auto s = set("civet.evaluationTime", a.at); s != MC_OK) return report(s, "run");

  char* warnings = nullptr;
  if (mc_config_warnings(cfg, &warnings) == MC_OK) {
    auto w = take(warnings);
    if (!w.empty()) std::cerr << w;
  }
  char* rep = nullptr;
  auto s = mc_run_pipeline(cfg, &rep);
  if (s == MC_OK) std::cout << take(rep);
  return report(s, "run");
}

struct ServeArgs {
  std::string config, index, quality, synonyms, host = "127.0.0.1", cors;
  int port = -1;
};

int cmd_serve(ServeArgs a) {
  if (!a.config.empty()) {
    mc_config* cfg = nullptr;
    if (auto s = mc_config_load(a.config.c_str(), &cfg); s != MC_OK) return report(s, "serve");
    char* v = nullptr;
    if (a.index.empty() && mc_config_get(cfg, "index.output", &v) == MC_OK) a.index = take(v);
    if (a.quality.empty() && mc_config_get(cfg, "io.output", &v) == MC_OK) {
      auto q = std::filesystem::path(take(v)) / "quality.nt";
      if (std::filesystem::exists(q)) a.quality = q.string();
    }
    if (a.port < 0 && mc_config_get(cfg, "service.port", &v) == MC_OK) a.port = std::stoi(take(v));
    if (a.cors.empty() && mc_config_get(cfg, "service.cors_origin", &v) == MC_OK) a.cors = take(v);
    mc_config_free(cfg);
  }
  if (a.index.empty()) {
    std::cerr << "metacat serve: --index or --config is required\n";
    return 4;
  }
  if (a.port < 0) a.port = 8080;

  mc_index* idx = nullptr;
  if (auto s = mc_index_open(a.index.c_str(), c_or_null(a.quality), c_or_null(a.synonyms), &idx); s != MC_OK)
    return report(s, "serve");

  // Block the stop signals before the server threads start so that only
  // sigwait below sees them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  mc_server* srv = nullptr;
  auto s = mc_server_start(idx, a.host.c_str(), a.port, c_or_null(a.cors), &srv);
  std::size_t docs = mc_index_size(idx);
  mc_index_free(idx);
  if (s != MC_OK) return report(s, "serve");
  std::cerr << "serving " << docs << " datasets on http://" << a.host << ":" << mc_server_port(srv) << "\n";
  int sig = 0;
  sigwait(&stop_signals, &sig);
  mc_server_stop(srv);
  mc_server_free(srv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metacat: metadata quality and integration pipeline for open-data catalogs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mc_version());

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run the batch pipeline from a properties file");
  run_cmd->add_option("-c,--config", run.config, "Properties file")->required();
  run_cmd->add_option("--at", run.at, "Evaluation time (ISO-8601) for reproducible runs");
  run_cmd->add_option("-o,--output", run.output, "Override io.output");
  run_cmd->add_option("-j,--workers", run.workers, "Override pipeline.workers")->check(CLI::Range(0, 256));
  run_cmd->add_option("--set", run.sets, "Override any key, as key=value");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the search API over a built index");
  serve_cmd->add_option("-c,--config", serve.config, "Properties file (index.output, service.*)");
  serve_cmd->add_option("-i,--index", serve.index, "Index file");
  serve_cmd->add_option("-q,--quality", serve.quality, "DQV measurements (N-Triples)");
  serve_cmd->add_option("-s,--synonyms", serve.synonyms, "Synonym table (TSV)");
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("-p,--port", serve.port, "Port, 0 picks a free one")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--cors-origin", serve.cors, "Allowed browser origin");

  std::string dd_input, dd_csv, dd_links;
  double dd_threshold = 0.9;
  auto* dedup_cmd = app.add_subcommand("dedup", "Find datasets sharing download URLs");
  dedup_cmd->add_option("-i,--input", dd_input, "RDF file or directory")->required();
  dedup_cmd->add_option("-t,--threshold", dd_threshold, "Trigram similarity threshold in (0,1]");
  dedup_cmd->add_option("--csv", dd_csv, "Write the evidence CSV here instead of stdout");
  dedup_cmd->add_option("--links", dd_links, "Write skos:exactMatch links (N-Triples)");

  std::string q_input, q_dataset, q_at, q_dqv, q_providers, q_community;
  bool q_long = false;
  auto* quality_cmd = app.add_subcommand("quality", "Score datasets against the quality metrics");
  quality_cmd->add_option("-i,--input", q_input, "RDF file or directory")->required();
  quality_cmd->add_option("-d,--dataset", q_dataset, "Only this dataset IRI");
  quality_cmd->add_option("--at", q_at, "Evaluation time (ISO-8601), default now");
  quality_cmd->add_flag("--long-running", q_long, "Include metrics that probe URLs over the network");
  quality_cmd->add_option("--providers", q_providers, "Provider table (TSV)");
  quality_cmd->add_option("--community", q_community, "Community table (TSV)");
  quality_cmd->add_option("--dqv", q_dqv, "Write DQV measurements (N-Triples)");

  std::string syn_lexicon, syn_index, syn_output;
  auto* syn_cmd = app.add_subcommand("synonyms", "Synonym tables");
  syn_cmd->require_subcommand(1);
  auto* extract_cmd = syn_cmd->add_subcommand("extract", "Extract German noun synonyms from an OntoLex lexicon");
  extract_cmd->add_option("-l,--lexicon", syn_lexicon, "Lexicon (N-Triples or Turtle)")->required();
  extract_cmd->add_option("-i,--index", syn_index, "Keep only nouns found in this index");
  extract_cmd->add_option("-o,--output", syn_output, "Write the table here instead of stdout");

  std::string s_index, s_quality, s_synonyms, s_query;
  auto* search_cmd = app.add_subcommand("search", "Query an index with API-style parameters");
  search_cmd->add_option("-i,--index", s_index, "Index file")->required();
  search_cmd->add_option("-q,--quality", s_quality, "DQV measurements (N-Triples)");
  search_cmd->add_option("-s,--synonyms", s_synonyms, "Synonym table (TSV)");
  search_cmd->add_option("params", s_query, "Query string, e.g. 'q=bahn&sort=distance&lat=51.7&lon=8.7'");

  std::size_t b_docs = 50000, b_queries = 40;
  std::uint64_t b_seed = 42;
  auto* bench_cmd = app.add_subcommand("bench", "Indexed search against a linear scan on a synthetic corpus");
  bench_cmd->add_option("--docs", b_docs, "Corpus size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--queries", b_queries, "Queries per kind")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", b_seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  if (*run_cmd) return cmd_run(run);
  if (*serve_cmd) return cmd_serve(serve);

  if (*dedup_cmd) {
    char* csv = nullptr;
    char* links = nullptr;
    auto s = mc_dedup(dd_input.c_str(), dd_threshold, &csv, dd_links.empty() ? nullptr : &links);
    if (s != MC_OK) return report(s, "dedup");
    auto c = take(csv);
    if (!dd_links.empty() && !write_to(dd_links, take(links))) return 1;
    if (dd_csv.empty()) std::cout << c;
    else if (!write_to(dd_csv, c)) return 1;
    return 0;
  }

  if (*quality_cmd) {
    int64_t at = 0;
    if (q_at.empty()) at = std::int64_t(std::time(nullptr));
    else if (auto s = mc_parse_time(q_at.c_str(), &at); s != MC_OK) return report(s, "quality");
    char* scores = nullptr;
    char* dqv = nullptr;
    auto s = mc_quality_evaluate(q_input.c_str(), c_or_null(q_dataset), at, q_long, c_or_null(q_providers),
                                 c_or_null(q_community), &scores, q_dqv.empty() ? nullptr : &dqv);
    if (s != MC_OK) return report(s, "quality");
    std::cout << take(scores);
    if (!q_dqv.empty() && !write_to(q_dqv, take(dqv))) return 1;
    return 0;
  }

  if (*extract_cmd) {
    char* tsv = nullptr;
    char* stats = nullptr;
    auto s = mc_synonyms_extract(syn_lexicon.c_str(), c_or_null(syn_index), &tsv, &stats);
    if (s != MC_OK) return report(s, "synonyms extract");
    std::cerr << take(stats);
    auto t = take(tsv);
    if (syn_output.empty()) std::cout << t;
    else if (!write_to(syn_output, t)) return 1;
    return 0;
  }

  if (*search_cmd) {
    mc_index* idx = nullptr;
    auto s = mc_index_open(s_index.c_str(), c_or_null(s_quality), c_or_null(s_synonyms), &idx);
    if (s != MC_OK) return report(s, "search");
    char* json = nullptr;
    s = mc_index_search(idx, s_query.c_str(), &json);
    mc_index_free(idx);
    if (s != MC_OK) return report(s, "search");
    std::cout << take(json) << "\n";
    return 0;
  }

  if (*bench_cmd) {
    char* rep = nullptr;
    int passed = 0;
    auto s = mc_bench(b_docs, b_queries, b_seed, &rep, &passed);
    if (s != MC_OK) return report(s, "bench");
    std::cout << take(rep) << (passed ? "targets met (2x simple, 5x facet)\n" : "targets missed (2x simple, 5x facet)\n");
    return passed ? 0 : 1;
  }
  return 0;
}
