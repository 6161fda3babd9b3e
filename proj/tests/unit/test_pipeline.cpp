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

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "metacat/dcat.hpp"
#include "metacat/enrich.hpp"
#include "metacat/error.hpp"
#include "metacat/pipeline.hpp"
#include "metacat/rdf.hpp"
#include "metacat/search.hpp"
#include "metacat/text.hpp"

using namespace metacat;
using namespace metacat::pipeline;
namespace fs = std::filesystem;

namespace {

const std::string kFixtureDir = std::string(METACAT_FIXTURES) + "/pipeline";
const std::string kConfig = kFixtureDir + "/pipeline.properties";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// relative path -> bytes
std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = slurp(e.path());
  return out;
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("metacat-pipeline-" + name);
  fs::remove_all(p);
  return p;
}

PipelineConfig fixture_config(const fs::path& out) {
  auto cfg = load_config(kConfig);
  cfg.output = out.string();
  return cfg;
}

const std::string kA = "http://ex.org/a/";
const std::string kB = "http://ex.org/b/";

}  // namespace

TEST_CASE("properties parsing") {
  auto p = parse_properties("# comment\n! also\n a = 1 \n\nb=x=y\na=2\nempty=\n");
  CHECK(p.size() == 3);
  CHECK(p.at("a") == "2");
  CHECK(p.at("b") == "x=y");
  CHECK(p.at("empty").empty());
  try {
    parse_properties("ok=1\nbroken line\n", "x.properties");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("x.properties:2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_properties("=value\n"), ConfigError);
}

TEST_CASE("config keys") {
  std::map<std::string, std::string> props{{"io.input", "in"},
                                           {"io.output", "/abs/out"},
                                           {"catfish.allowedLanguages", "DE, en"},
                                           {"catfish.catalogId", "http://ex.org/cat"},
                                           {"refine.languageThreshold", "0.8"},
                                           {"civet.includeLongRunning", "true"},
                                           {"civet.weights.title", "2.5"},
                                           {"civet.evaluationTime", "2024-06-01"},
                                           {"dedup.threshold", "0.85"},
                                           {"stages.dedup", "false"},
                                           {"service.port", "9090"},
                                           {"service.cors_origin", "http://localhost:5173"},
                                           {"mystery.key", "1"}};
  auto cfg = make_config(props, "/base");
  CHECK(cfg.input == "/base/in");
  CHECK(cfg.output == "/abs/out");
  CHECK(cfg.index_path() == "/abs/out/index.bin");
  CHECK(cfg.catfish.allowed_languages == std::set<std::string>{"de", "en"});
  CHECK(cfg.catfish.catalog_id == "http://ex.org/cat");
  CHECK(cfg.language_threshold == doctest::Approx(0.8));
  CHECK(cfg.civet.include_long_running);
  CHECK(cfg.civet.weights->at("title") == doctest::Approx(2.5));
  CHECK(cfg.evaluation_time_set);
  CHECK(cfg.civet.evaluation_time == 1717200000);
  CHECK(cfg.dedup_threshold == doctest::Approx(0.85));
  CHECK_FALSE(cfg.run_dedup);
  CHECK(cfg.run_quality);
  CHECK(cfg.service_port == 9090);
  CHECK(cfg.cors_origin == "http://localhost:5173");
  REQUIRE(cfg.warnings.size() == 1);
  CHECK(cfg.warnings[0].find("mystery.key") != std::string::npos);

  auto with = [&](const std::string& k, const std::string& v) {
    auto p = props;
    p[k] = v;
    return p;
  };
  auto without = [&](const std::string& k) {
    auto p = props;
    p.erase(k);
    return p;
  };
  CHECK_THROWS_AS(make_config(without("io.input")), ConfigError);
  CHECK_THROWS_AS(make_config(without("io.output")), ConfigError);
  CHECK_THROWS_AS(make_config(with("civet.removeMeasurements", "maybe")), ConfigError);
  CHECK_THROWS_AS(make_config(with("dedup.threshold", "1.5")), ConfigError);
  CHECK_THROWS_AS(make_config(with("refine.languageThreshold", "abc")), ConfigError);
  CHECK_THROWS_AS(make_config(with("civet.weights.colour", "1")), ConfigError);
  CHECK_THROWS_AS(make_config(with("civet.evaluationTime", "yesterday")), ConfigError);
  CHECK_THROWS_AS(make_config(with("service.port", "70000")), ConfigError);
  CHECK(make_config(with("index.output", "idx/i.bin"), "/b").index_path() == "/b/idx/i.bin");
}

TEST_CASE("fixture config resolves against its directory") {
  auto cfg = load_config(kConfig);
  CHECK(fs::equivalent(cfg.input, kFixtureDir));
  CHECK(cfg.warnings.empty());
  CHECK(cfg.evaluation_time_set);
  CHECK_THROWS_AS(load_config(kFixtureDir + "/nope.properties"), ConfigError);
}

TEST_CASE("ten-dataset fixture run") {
  auto out = scratch("fixture");
  auto cfg = fixture_config(out);
  auto rep = run_pipeline(cfg);

  CHECK(rep.files == 2);
  CHECK(rep.datasets == 10);
  CHECK(rep.skipped.empty());
  CHECK(rep.written == 10);
  CHECK(rep.indexed == 10);
  // one @fr title; empty keyword and empty description
  CHECK(rep.language_removed == 1);
  CHECK(rep.empty_removed == 2);
  CHECK(rep.formats_normalized >= 4);
  CHECK(rep.clusters == 1);
  CHECK(rep.links == 1);
  CHECK(rep.scored == 10);

  auto files = tree(out);
  std::size_t slices = 0;
  for (const auto& [name, body] : files)
    if (name.rfind("datasets/", 0) == 0) ++slices;
  CHECK(slices == 10);
  CHECK(files.count("quality.nt") == 1);
  CHECK(files.count("links.nt") == 1);
  CHECK(files.count("index.bin") == 1);
  CHECK(files.count("not-computed.log") == 1);
  CHECK(files.size() == 14);

  // links: the https/host-case variants of the same download URL
  auto links = rdf::parse_ntriples(files["links.nt"]);
  REQUIRE(links.size() == 1);
  CHECK(links.begin()->subject.value() == kA + "haltestellen");
  CHECK(links.begin()->object.value() == kB + "haltestellen");

  // quality: every dataset scored, old measurement gone
  auto q = rdf::parse_ntriples(files["quality.nt"]);
  auto all = quality::parse_dqv_all(q);
  CHECK(all.size() == 10);
  std::size_t total = 0;
  for (const auto& [ds, ms] : all) total += ms.size();
  CHECK(total == rep.measurements);
  auto luft_slice = rdf::parse_ntriples(files["datasets/" + slice_file_name(kA + "luftqualitaet")]);
  CHECK(quality::parse_dqv(luft_slice, kA + "luftqualitaet").empty());
  CHECK(luft_slice.size() > 5);

  // not-computed log: one line per NotComputed, metric 41 skipped everywhere
  auto lines = text::split(files["not-computed.log"], '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  CHECK(lines.size() == rep.not_computed);
  std::size_t skipped41 = 0;
  for (const auto& l : lines)
    if (l.find("\taccess.retrievability\tskipped_long_running") != std::string::npos) ++skipped41;
  CHECK(skipped41 == 10);
  // cross-source metrics are computed for the linked pair
  for (const auto& l : lines) CHECK(l.find("\ttrust.authenticity\t") == std::string::npos);

  // enrichment reached the written slices
  auto haushalt = dcat::from_graph(rdf::parse_ntriples(files["datasets/" + slice_file_name(kA + "haushalt")]),
                                   kA + "haushalt");
  REQUIRE(haushalt.descriptions.size() == 1);
  CHECK(haushalt.descriptions[0].lang == "en");
  auto schulen = dcat::from_graph(rdf::parse_ntriples(files["datasets/" + slice_file_name(kA + "schulen")]),
                                  kA + "schulen");
  bool paderborn = false;
  for (const auto& s : schulen.spatial) paderborn |= s.place_name == "Paderborn" || s.place_name == "Kreis Paderborn";
  CHECK(paderborn);
  CHECK(rep.language_tags_set >= 1);
  CHECK(rep.places_added >= 1);

  // catalog membership comes from the catalog listing
  CHECK(schulen.catalog == kA + "catalog");

  // the index serves the fixture
  auto idx = search::InvertedIndex::load(cfg.index_path());
  CHECK(idx.size() == 10);
  search::SearchQuery sq;
  sq.text = "Paderborn";
  auto res = idx.search(sq);
  REQUIRE(res.total >= 2);
  std::set<std::string> hits;
  for (const auto& h : res.hits) hits.insert(idx.doc(h.doc).dataset);
  CHECK(hits.count(kA + "haltestellen") == 1);
  CHECK(hits.count(kB + "haltestellen") == 1);

  fs::remove_all(out);
}

TEST_CASE("runs are byte-identical, whatever the worker count") {
  auto a = scratch("det-a"), b = scratch("det-b");
  auto ca = fixture_config(a), cb = fixture_config(b);
  ca.workers = 1;
  cb.workers = 4;
  run_pipeline(ca);
  run_pipeline(cb);
  auto ta = tree(a);
  CHECK(ta == tree(b));
  // rerunning into the same directory changes nothing
  run_pipeline(ca);
  CHECK(ta == tree(a));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("feeding the output back in keeps one measurement per metric") {
  auto first = scratch("feed-1"), second = scratch("feed-2");
  run_pipeline(fixture_config(first));
  auto cfg = fixture_config(second);
  cfg.input = first.string();
  auto rep = run_pipeline(cfg);
  CHECK(rep.datasets == 10);
  auto q = rdf::parse_ntriples(slurp(second / "quality.nt"));
  for (const auto& [ds, ms] : quality::parse_dqv_all(q)) {
    std::set<std::string> keys;
    for (const auto& m : ms) CHECK(keys.insert(m.key).second);
  }
  for (const auto& [name, body] : tree(second / "datasets")) {
    auto g = rdf::parse_ntriples(body);
    for (const auto& t : g) CHECK(t.predicate.value() != "http://www.w3.org/ns/dqv#hasQualityMeasurement");
  }
  fs::remove_all(first);
  fs::remove_all(second);
}

TEST_CASE("disabling enrichment leaves unaffected datasets alone") {
  auto on = scratch("iso-on"), off = scratch("iso-off");
  auto con = fixture_config(on), coff = fixture_config(off);
  coff.run_enrich = false;
  run_pipeline(con);
  auto rep = run_pipeline(coff);
  CHECK(rep.language_tags_set == 0);
  CHECK(rep.places_added == 0);

  // which datasets enrichment touches, decided independently of the pipeline
  auto input = rdf::parse_file(kFixtureDir + "/catalog-a.ttl");
  input.merge(rdf::parse_file(kFixtureDir + "/catalog-b.nt"));
  auto raw = tree(off);
  auto full = tree(on);
  auto q_on = quality::parse_dqv_all(rdf::parse_ntriples(full["quality.nt"]));
  auto q_off = quality::parse_dqv_all(rdf::parse_ntriples(raw["quality.nt"]));
  std::size_t unaffected = 0;
  for (const auto& s : rdf::split_dataset_graphs(input)) {
    auto name = "datasets/" + slice_file_name(s.dataset);
    auto rec = dcat::from_graph(rdf::parse_ntriples(raw[name]), s.dataset);
    auto enriched = enrich::annotate_places(enrich::refine_language_tags(rec, con.language_threshold),
                                            enrich::Gazetteer::bundled());
    if (!(enriched == rec)) {
      CHECK(full[name] != raw[name]);
      continue;
    }
    ++unaffected;
    CHECK(full[name] == raw[name]);
    CHECK(q_on[s.dataset] == q_off[s.dataset]);
  }
  CHECK(unaffected >= 1);
  CHECK(unaffected < 10);
  CHECK(full["links.nt"] == raw["links.nt"]);
  fs::remove_all(on);
  fs::remove_all(off);
}

TEST_CASE("disabling dedup empties the links and leaves cross-source metrics unscored") {
  auto out = scratch("nodedup");
  auto cfg = fixture_config(out);
  cfg.run_dedup = false;
  auto rep = run_pipeline(cfg);
  CHECK(rep.clusters == 0);
  CHECK(rep.links == 0);
  CHECK(slurp(out / "links.nt").empty());
  auto log = slurp(out / "not-computed.log");
  CHECK(log.find(kA + "haltestellen\ttrust.authenticity\tnot_applicable") != std::string::npos);
  CHECK(log.find(kB + "wahlen\tcommunity.cross_source_confirmation\tnot_applicable") != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("input errors") {
  auto out = scratch("errors");
  auto cfg = fixture_config(out);
  cfg.input = (out / "does-not-exist").string();
  CHECK_THROWS_AS(run_pipeline(cfg), NotFoundError);

  auto in = scratch("bad-input");
  fs::create_directories(in);
  {
    std::ofstream f(in / "ok.nt");
    f << "<http://ex.org/d> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/ns/dcat#Dataset> .\n";
    std::ofstream g(in / "broken.nt");
    g << "<http://ex.org/d> <http://purl.org/dc/terms/title> \"x\" .\n<http://ex.org/d> oops .\n";
  }
  cfg.input = in.string();
  try {
    run_pipeline(cfg);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.source().find("broken.nt") != std::string::npos);
  }
  fs::remove_all(in);
  fs::remove_all(out);
}

TEST_CASE("single-file input and report text") {
  auto out = scratch("single");
  auto cfg = fixture_config(out);
  cfg.input = kFixtureDir + "/catalog-b.nt";
  auto rep = run_pipeline(cfg);
  CHECK(rep.files == 1);
  CHECK(rep.datasets == 4);
  CHECK(rep.clusters == 0);
  auto text = format_report(rep);
  CHECK(text.find("datasets 4") != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("slice file names are stable hashes") {
  auto n = slice_file_name("http://ex.org/a/haltestellen");
  CHECK(n == text::hex64(text::fnv1a64("http://ex.org/a/haltestellen")) + ".nt");
  CHECK(n.size() == 19);
  CHECK(n != slice_file_name("http://ex.org/b/haltestellen"));
}
