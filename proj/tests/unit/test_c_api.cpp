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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "metacat/metacat.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kFixtures = METACAT_FIXTURES;

// Takes ownership of a string handed out by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  mc_string_free(s);
  return out;
}

struct Run {
  fs::path out;
  Run() : out(fs::temp_directory_path() / "metacat-c-api") {
    fs::remove_all(out);
    mc_config* cfg = nullptr;
    REQUIRE(mc_config_load((kFixtures + "/pipeline/pipeline.properties").c_str(), &cfg) == MC_OK);
    REQUIRE(mc_config_set(cfg, "io.output", out.c_str()) == MC_OK);
    char* report = nullptr;
    REQUIRE(mc_run_pipeline(cfg, &report) == MC_OK);
    CHECK(take(report).find("datasets 10") != std::string::npos);
    mc_config_free(cfg);
  }
  ~Run() { fs::remove_all(out); }
};

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(mc_version()).size() > 0);
  mc_config* cfg = nullptr;
  CHECK(mc_config_load(nullptr, &cfg) == MC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mc_last_error()).size() > 0);
  CHECK(mc_config_load((kFixtures + "/missing.properties").c_str(), &cfg) == MC_ERR_CONFIG);
  CHECK(cfg == nullptr);
  int64_t t = 0;
  CHECK(mc_parse_time("2024-06-01T00:00:00Z", &t) == MC_OK);
  CHECK(t == 1717200000);
  CHECK(mc_parse_time("soon", &t) == MC_ERR_VALIDATION);
  mc_string_free(nullptr);
  mc_config_free(nullptr);
  mc_index_free(nullptr);
  mc_server_free(nullptr);
}

TEST_CASE("config handle") {
  mc_config* cfg = nullptr;
  REQUIRE(mc_config_load((kFixtures + "/pipeline/pipeline.properties").c_str(), &cfg) == MC_OK);
  char* v = nullptr;
  REQUIRE(mc_config_get(cfg, "service.port", &v) == MC_OK);
  CHECK(take(v) == "8080");
  REQUIRE(mc_config_set(cfg, "io.output", "/tmp/somewhere") == MC_OK);
  REQUIRE(mc_config_get(cfg, "index.output", &v) == MC_OK);
  CHECK(take(v) == "/tmp/somewhere/index.bin");
  CHECK(mc_config_get(cfg, "no.such", &v) == MC_ERR_INVALID_ARGUMENT);
  // a rejected override leaves the previous value in place
  CHECK(mc_config_set(cfg, "dedup.threshold", "2") == MC_ERR_CONFIG);
  CHECK(std::string(mc_last_error()).find("dedup.threshold") != std::string::npos);
  REQUIRE(mc_config_set(cfg, "surprise", "1") == MC_OK);
  REQUIRE(mc_config_warnings(cfg, &v) == MC_OK);
  CHECK(take(v).find("surprise") != std::string::npos);
  REQUIRE(mc_config_set(cfg, "io.input", "/definitely/not/here") == MC_OK);
  CHECK(mc_run_pipeline(cfg, nullptr) == MC_ERR_NOT_FOUND);
  mc_config_free(cfg);
}

TEST_CASE("pipeline output served through an index handle and HTTP") {
  Run run;
  mc_index* idx = nullptr;
  REQUIRE(mc_index_open((run.out / "index.bin").c_str(), (run.out / "quality.nt").c_str(),
                        (kFixtures + "/search/synonyms.tsv").c_str(), &idx) == MC_OK);
  CHECK(mc_index_size(idx) == 10);
  char* body = nullptr;
  REQUIRE(mc_index_search(idx, "q=Paderborn&size=3", &body) == MC_OK);
  auto j = json::parse(take(body));
  CHECK(j["total"].get<int>() >= 2);
  CHECK(j["results"].size() == 3);
  CHECK(j["results"][0]["quality"].is_number());
  CHECK(mc_index_search(idx, "page=0", &body) == MC_ERR_VALIDATION);

  mc_server* srv = nullptr;
  REQUIRE(mc_server_start(idx, "127.0.0.1", 0, "http://localhost:5173", &srv) == MC_OK);
  mc_index_free(idx);  // the server keeps its own snapshot
  int port = mc_server_port(srv);
  CHECK(port > 0);
  httplib::Client cli("127.0.0.1", port);
  auto res = cli.Get("/healthz");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["docs"] == 10);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");
  std::thread waiter([&] { mc_server_wait(srv); });
  mc_server_stop(srv);
  waiter.join();
  mc_server_free(srv);
}

TEST_CASE("dedup, quality and synonym tools") {
  char* csv = nullptr;
  char* links = nullptr;
  REQUIRE(mc_dedup((kFixtures + "/pipeline").c_str(), 0.9, &csv, &links) == MC_OK);
  auto c = take(csv);
  CHECK(c.rfind("dataset_a,dataset_b,url_a,url_b,similarity\n", 0) == 0);
  CHECK(std::count(c.begin(), c.end(), '\n') == 2);
  CHECK(take(links).find("http://www.w3.org/2004/02/skos/core#exactMatch") != std::string::npos);
  CHECK(mc_dedup((kFixtures + "/pipeline").c_str(), 0.0, nullptr, nullptr) == MC_ERR_VALIDATION);

  char* scores = nullptr;
  char* dqv = nullptr;
  REQUIRE(mc_quality_evaluate((kFixtures + "/quality/rich-record.ttl").c_str(), "http://ex.org/dataset/haltestellen",
                              1704067200, 0, nullptr, nullptr, &scores, &dqv) == MC_OK);
  auto s = take(scores);
  CHECK(s.rfind("# http://ex.org/dataset/haltestellen\n", 0) == 0);
  CHECK(s.find("access.retrievability\tnc:skipped_long_running") != std::string::npos);
  CHECK(take(dqv).find("http://www.w3.org/ns/dqv#value") != std::string::npos);
  CHECK(mc_quality_evaluate((kFixtures + "/quality/rich-record.ttl").c_str(), "http://ex.org/nothing", 0, 0,
                            nullptr, nullptr, &scores, nullptr) == MC_ERR_NOT_FOUND);

  char* tsv = nullptr;
  char* stats = nullptr;
  REQUIRE(mc_synonyms_extract((kFixtures + "/search/lexicon.nt").c_str(), nullptr, &tsv, &stats) == MC_OK);
  CHECK(take(tsv).find("stadtbahn\t") != std::string::npos);
  CHECK(take(stats).find("german nouns 3") != std::string::npos);
  CHECK(mc_synonyms_extract((kFixtures + "/nope.nt").c_str(), nullptr, &tsv, nullptr) == MC_ERR_NOT_FOUND);
}

TEST_CASE("bench entry point on a small corpus") {
  char* report = nullptr;
  int passed = -1;
  REQUIRE(mc_bench(2000, 5, 7, &report, &passed) == MC_OK);
  CHECK(take(report).find("docs 2000") != std::string::npos);
  CHECK((passed == 0 || passed == 1));
}
