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

// Acceptance gate. One line per criterion: PASS or FAIL, the criterion name
// and what was measured. Exit status is the number of failures.
//
//   acceptance [--list] [name-substring...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dedup_gen.hpp"
#include "dedup_oracle.hpp"
#include "license_oracle.hpp"
#include "rdf_oracles.hpp"
#include "record_gen.hpp"
#include "search_gen.hpp"
#include "search_oracle.hpp"

#include "metacat/bench.hpp"
#include "metacat/dcat.hpp"
#include "metacat/dedup.hpp"
#include "metacat/enrich.hpp"
#include "metacat/license.hpp"
#include "metacat/quality.hpp"
#include "metacat/rdf.hpp"
#include "metacat/search.hpp"
#include "metacat/vocab.hpp"

using namespace metacat;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// ---- pinned tolerances ------------------------------------------------------

constexpr int kQualityRecords = 1000;
constexpr double kQualityBudgetS = 30;
constexpr int kDqvResultSets = 100;
constexpr std::size_t kDedupMaxRecords = 200;
constexpr int kDedupMonotoneCases = 500;
constexpr int kSliceGraphs = 100;
constexpr std::size_t kSearchMaxDocs = 50;
constexpr int kSearchQueries = 1000;
constexpr double kScoreRelTol = 1e-9;
constexpr double kDistRelTol = 1e-9;
constexpr std::size_t kBenchDocs = 50000;
constexpr std::size_t kBenchQueries = 40;
constexpr double kSimpleSpeedup = 2.0;
constexpr double kFacetSpeedup = 5.0;
constexpr double kBenchBudgetS = 300;
constexpr int kLicenseVectors = 1000;
constexpr double kLanguageAccuracy = 0.90;
constexpr double kPipelineBudgetS = 10;

// ---- bookkeeping ------------------------------------------------------------

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.push_back({});
  }
  bool ok() const { return failures.empty(); }
  std::string summary() const {
    std::string s = std::to_string(checks - failures.size()) + "/" + std::to_string(checks) + " checks";
    for (std::size_t i = 0; i < failures.size() && i < 3; ++i)
      if (!failures[i].empty()) s += "; " + failures[i];
    return s;
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)}); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- criteria ---------------------------------------------------------------

Outcome quality_range() {
  std::mt19937_64 rng(20240601);
  auto providers = quality::ProviderDb::parse("Org\ttrue\t5\ttrue\nAmt\tfalse\t2\tfalse\n");
  auto community = quality::CommunityDb::parse("Org\t3\t4\t5\t6\n");
  std::map<std::string, quality::DuplicateEvidence> dups;
  quality::ExternalStores full;
  full.provider_db = &providers;
  full.community_db = &community;
  full.duplicates = &dups;
  full.url_prober = [](const std::string& u) { return u.size() % 2 == 0; };
  quality::CivetConfig cfg;
  cfg.evaluation_time = 1717200000;
  cfg.include_long_running = true;

  Tally t;
  std::size_t computed = 0, thrown = 0, errors = 0;
  auto t0 = Clock::now();
  for (int i = 0; i < kQualityRecords; ++i) {
    auto r = gen::random_record(rng, "http://ex.org/fuzz/" + std::to_string(i));
    if (i % 3 == 0) dups[r.iri] = {{"http://ex.org/other"}, r.distributions.size(), 1};
    try {
      auto res = quality::evaluate_all(r, dcat::to_graph(r), cfg, i % 2 ? full : quality::ExternalStores{});
      t.expect(res.size() == 48, "record " + std::to_string(i) + " has " + std::to_string(res.size()) + " results");
      for (const auto& m : res) {
        if (m.computed()) {
          ++computed;
          t.expect(*m.score >= 0 && *m.score <= 5, m.key + " scored " + std::to_string(*m.score));
        } else if (m.reason == quality::NotComputedReason::EvaluationError) {
          ++errors;
        }
      }
    } catch (const std::exception& e) {
      ++thrown;
      t.expect(false, std::string("threw: ") + e.what());
    }
  }
  double secs = seconds_since(t0);
  t.expect(secs < kQualityBudgetS, "runtime " + fmt("%.1f s", secs));
  return {t.ok() && thrown == 0,
          std::to_string(kQualityRecords) + " records, " + std::to_string(computed) + " scores in [0,5], " +
              std::to_string(thrown) + " thrown, " + std::to_string(errors) + " evaluation errors, " +
              fmt("%.1f s", secs) + (t.ok() ? "" : "; " + t.summary())};
}

Outcome civet_flags() {
  Tally t;
  std::mt19937_64 rng(41);
  auto r = gen::random_record(rng, "http://ex.org/flags/one");
  r.landing_page = "https://ex.org/landing";
  auto g = dcat::to_graph(r);
  quality::ExternalStores stores;
  std::size_t probes = 0;
  stores.url_prober = [&](const std::string&) {
    ++probes;
    return true;
  };
  quality::CivetConfig cfg;
  cfg.evaluation_time = 1717200000;

  // includeLongRunning
  cfg.include_long_running = false;
  auto m41 = quality::evaluate_metric(41, r, g, cfg, stores);
  t.expect(!m41.computed() && m41.reason == quality::NotComputedReason::SkippedLongRunning,
           "metric 41 not skipped without long-running metrics");
  t.expect(probes == 0, "URL prober called although long-running metrics are off");
  cfg.include_long_running = true;
  t.expect(quality::evaluate_metric(41, r, g, cfg, stores).computed(), "metric 41 not computed when enabled");

  // logIfNotComputed: exactly one line per NotComputed, none when off
  cfg.include_long_running = false;
  std::size_t lines_checked = 0;
  for (int i = 0; i < 50; ++i) {
    auto rec = gen::random_record(rng, "http://ex.org/flags/" + std::to_string(i));
    auto rg = dcat::to_graph(rec);
    quality::NotComputedLog log;
    cfg.log_if_not_computed = true;
    auto res = quality::evaluate_all(rec, rg, cfg, {}, &log);
    std::multiset<std::string> expect, got;
    for (const auto& m : res)
      if (!m.computed()) expect.insert(rec.iri + "\t" + m.key + "\t" + quality::to_string(*m.reason));
    for (const auto& l : log.lines()) got.insert(l);
    t.expect(got == expect, rec.iri + ": log lines differ from NotComputed results");
    lines_checked += got.size();
    quality::NotComputedLog quiet;
    cfg.log_if_not_computed = false;
    quality::evaluate_all(rec, rg, cfg, {}, &quiet);
    t.expect(quiet.size() == 0, "lines logged with logIfNotComputed=false");
  }

  // removeMeasurements: rerun over a graph holding earlier measurements
  cfg.log_if_not_computed = true;
  rdf::Graph prior = g;
  auto ds = rdf::Term::iri(r.iri);
  auto old = rdf::Term::iri("http://ex.org/old-measurement");
  prior.add(ds, rdf::Term::iri(std::string(vocab::kDqvHasQualityMeasurement)), old);
  prior.add(old, rdf::Term::iri(std::string(vocab::kRdfType)), rdf::Term::iri(std::string(vocab::kDqvQualityMeasurement)));
  prior.add(old, rdf::Term::iri(std::string(vocab::kDqvComputedOn)), ds);
  prior.add(old, rdf::Term::iri(std::string(vocab::kDqvIsMeasurementOf)),
            rdf::Term::iri(quality::metric_iri("expressiveness.extent")));
  prior.add(old, rdf::Term::iri(std::string(vocab::kDqvValue)),
            rdf::Term::literal("1", {}, std::string(vocab::kXsdInteger)));
  auto res = quality::evaluate_all(r, g, cfg, {});
  auto first = quality::to_dqv(r.iri, res, true, prior);
  cfg.evaluation_time += 400 * 86400;  // later run, different currency score
  auto res2 = quality::evaluate_all(r, g, cfg, {});
  auto second = quality::to_dqv(r.iri, res2, true, first);
  std::map<std::string, int> per_metric;
  for (const auto& m : quality::parse_dqv(second, r.iri)) ++per_metric[m.key];
  std::size_t scored = 0;
  for (const auto& m : res2) scored += m.computed();
  bool unique = std::all_of(per_metric.begin(), per_metric.end(), [](const auto& kv) { return kv.second == 1; });
  t.expect(unique, "duplicate measurement nodes after rerun");
  t.expect(per_metric.size() == scored, "measurement count differs from scored metrics");
  t.expect(!second.contains(rdf::Triple(ds, rdf::Term::iri(std::string(vocab::kDqvHasQualityMeasurement)), old)),
           "earlier measurement survived");
  auto kept = quality::to_dqv(r.iri, res2, false, prior);
  t.expect(kept.contains(rdf::Triple(ds, rdf::Term::iri(std::string(vocab::kDqvHasQualityMeasurement)), old)),
           "removeMeasurements=false dropped the earlier measurement");

  return {t.ok(), "metric 41 skipped; " + std::to_string(lines_checked) + " log lines matched; " +
                      std::to_string(per_metric.size()) + " measurements, one per metric, after rerun" +
                      (t.ok() ? "" : "; " + t.summary())};
}

Outcome dqv_round_trip() {
  Tally t;
  std::mt19937_64 rng(99);
  std::size_t total = 0;
  for (int i = 0; i < kDqvResultSets; ++i) {
    std::string ds = "http://ex.org/dataset/" + std::to_string(i);
    std::vector<quality::MetricResult> results;
    std::vector<quality::Measurement> expect;
    for (const auto& d : quality::registry()) {
      quality::MetricResult m{d.id, d.key, std::nullopt, std::nullopt, std::nullopt, {}};
      if (rng() % 4 == 0) m.reason = quality::NotComputedReason::StoreUnavailable;
      else {
        m.score = int(rng() % 6);
        expect.push_back({d.key, *m.score});
      }
      results.push_back(m);
    }
    std::sort(expect.begin(), expect.end());
    total += expect.size();
    auto g = quality::to_dqv(ds, results, true);
    t.expect(quality::parse_dqv(g, ds) == expect, ds + ": graph parse differs");
    auto text = rdf::parse_ntriples(rdf::serialize_ntriples(g));
    t.expect(quality::parse_dqv(text, ds) == expect, ds + ": N-Triples parse differs");
  }
  return {t.ok(), std::to_string(kDqvResultSets) + " result sets, " + std::to_string(total) +
                      " measurements recovered" + (t.ok() ? "" : "; " + t.summary())};
}

Outcome dedup_oracle() {
  Tally t;
  std::mt19937_64 rng(42);
  // planted clusters at 1.0
  std::size_t planted_total = 0;
  for (int round = 0; round < 20; ++round) {
    std::vector<dcat::DatasetRecord> records;
    std::vector<std::vector<std::string>> planted;
    int next = 0;
    auto iri = [&] { return "http://ex.org/p/" + std::to_string(100000 + rng() % 900000) + "-" + std::to_string(next++); };
    for (std::size_t c = 0, k = 1 + rng() % 10; c < k; ++c) {
      std::string url = "http://planted.example.org/c/" + std::to_string(round) + "/" + std::to_string(c) + "/f-" +
                        std::to_string(rng() % 100000) + ".csv";
      std::vector<std::string> ms;
      for (std::size_t m = 0, n = 2 + rng() % 4; m < n; ++m) {
        std::string v = url;
        if (rng() % 3 == 0) v += "/";
        if (rng() % 3 == 0) v.replace(0, 7, "HTTP://");
        auto id = iri();
        std::vector<std::string> urls{v};
        if (rng() % 2) urls.push_back("http://noise.example.org/" + id + "/" + std::to_string(rng()));
        records.push_back(gen::rec(id, urls));
        ms.push_back(id);
      }
      std::sort(ms.begin(), ms.end());
      planted.push_back(ms);
    }
    for (std::size_t i = 0, n = rng() % 100; i < n && records.size() < kDedupMaxRecords; ++i) {
      auto id = iri();
      records.push_back(gen::rec(id, {"http://single.example.org/" + id + "/" + std::to_string(rng())}));
    }
    std::shuffle(records.begin(), records.end(), rng);
    std::sort(planted.begin(), planted.end());
    planted_total += planted.size();
    t.expect(gen::members(dedup::find_duplicates(records, 1.0)) == planted,
             "round " + std::to_string(round) + ": planted clusters not recovered");
  }
  // threshold sweep against the all-pairs oracle
  std::size_t sweeps = 0;
  for (int round = 0; round < 30; ++round) {
    auto records = gen::random_corpus(rng, 20 + rng() % (kDedupMaxRecords - 19));
    auto urls = gen::oracle_urls(records);
    for (double th : {0.5, 0.8, 0.9}) {
      ++sweeps;
      t.expect(gen::members(dedup::find_duplicates(records, th)) == oracle::clusters(urls, th),
               "round " + std::to_string(round) + fmt(" threshold %.1f differs from oracle", th));
    }
  }
  // monotonicity
  for (int round = 0; round < kDedupMonotoneCases; ++round) {
    auto records = gen::random_corpus(rng, 5 + rng() % 40);
    double lo = 0.05 + double(rng() % 95) / 100.0;
    double hi = std::min(1.0, lo + double(rng() % 50) / 100.0);
    auto low = dedup::find_duplicates(records, lo);
    auto high = dedup::find_duplicates(records, hi);
    for (const auto& c : high) {
      bool inside = std::any_of(low.begin(), low.end(), [&](const auto& big) {
        return std::includes(big.members.begin(), big.members.end(), c.members.begin(), c.members.end());
      });
      t.expect(inside, "monotonicity broken at " + fmt("%.2f", lo) + " vs " + fmt("%.2f", hi));
    }
  }
  return {t.ok(), std::to_string(planted_total) + " planted clusters, " + std::to_string(sweeps) +
                      " oracle sweeps, " + std::to_string(kDedupMonotoneCases) + " monotonicity cases" +
                      (t.ok() ? "" : "; " + t.summary())};
}

Outcome slicing_partition() {
  Tally t;
  std::mt19937_64 rng(2024);
  std::size_t slices = 0;
  for (int round = 0; round < kSliceGraphs; ++round) {
    auto g = oracle::random_catalog_graph(rng);
    auto parts = rdf::split_dataset_graphs(g);
    rdf::Graph uni, expected;
    for (const auto& ds : oracle::typed(g, vocab::kDcatDataset))
      if (ds.is_iri()) expected.merge(oracle::reachable_slice(g, ds));
    for (const auto& p : parts) {
      ++slices;
      auto root = rdf::Term::iri(p.dataset);
      auto reach = oracle::reachable_slice(g, root);
      bool inside = std::all_of(p.graph.begin(), p.graph.end(), [&](const rdf::Triple& tr) { return reach.contains(tr); });
      t.expect(inside, p.dataset + ": triple not reachable from its root");
      uni.merge(p.graph);
    }
    t.expect(uni == expected, "round " + std::to_string(round) + ": union differs from reachable set");
  }
  return {t.ok(), std::to_string(kSliceGraphs) + " graphs, " + std::to_string(slices) + " slices" +
                      (t.ok() ? "" : "; " + t.summary())};
}

Outcome search_correctness() {
  Tally t;
  std::mt19937_64 r(777);
  auto table = search::SynonymTable::load(std::string(METACAT_FIXTURES) + "/search/synonyms.tsv");
  int queries = 0, ranked = 0, bboxed = 0, sorted = 0, faceted = 0;
  while (queries < kSearchQueries) {
    auto docs = gen::search_corpus(r, 1 + r() % kSearchMaxDocs);
    auto idx = search::InvertedIndex::build(docs);
    for (int k = 0; k < 50 && queries < kSearchQueries; ++k, ++queries) {
      auto q = gen::search_query(r, docs);
      auto want = oracle::search(docs, q, &table);
      auto got = idx.search(q, &table);
      std::string tag = "query " + std::to_string(queries);
      bool same = got.total == want.total && got.hits.size() == want.page.size() && got.facets == want.facets;
      for (std::size_t i = 0; same && i < got.hits.size(); ++i) {
        const auto& h = got.hits[i];
        const auto& w = want.page[i];
        same = idx.doc(h.doc).dataset == w.iri && close(h.score, w.score, kScoreRelTol) &&
               h.distance_km.has_value() == w.dist.has_value() &&
               (!w.dist || close(*h.distance_km, *w.dist, kDistRelTol));
      }
      t.expect(same, tag + " differs from the brute-force reference");
      ranked += !got.hits.empty() && got.hits[0].score > 0;
      bboxed += q.bbox.has_value();
      sorted += q.sort == search::SortMode::Distance;
      faceted += !q.facets.empty();
    }
  }
  t.expect(ranked > 200 && bboxed > 100 && sorted > 100 && faceted > 200, "generator coverage too thin");

  // Stadtbahn: "Straßenbahn" finds the Stadtbahn-only document iff synonyms are on
  std::vector<search::DocEntry> docs(3);
  docs[0].dataset = "http://ex.org/ds/stadtbahn";
  docs[0].titles.push_back({"Stadtbahn", "de"});
  docs[1].dataset = "http://ex.org/ds/bev";
  docs[1].titles.push_back({"Bevölkerung Paderborn", "de"});
  docs[2].dataset = "http://ex.org/ds/halt";
  docs[2].titles.push_back({"Haltestellen Köln", "de"});
  docs[2].descriptions.push_back({"Bus und Bahn", "de"});
  auto idx = search::InvertedIndex::build(docs);
  search::SearchQuery q;
  q.text = "Straßenbahn";
  q.synonyms = true;
  auto on = idx.search(q, &table);
  q.synonyms = false;
  auto off = idx.search(q, &table);
  bool stadtbahn = on.total == 1 && on.hits.size() == 1 && idx.doc(on.hits[0].doc).dataset == docs[0].dataset &&
                   off.total == 0;
  t.expect(stadtbahn, "Stadtbahn scenario");

  return {t.ok(), std::to_string(queries) + " fuzzed queries (" + std::to_string(ranked) + " ranked, " +
                      std::to_string(faceted) + " faceted, " + std::to_string(bboxed) + " bbox, " +
                      std::to_string(sorted) + " distance) equal the oracle; Stadtbahn " +
                      (stadtbahn ? "ok" : "failed") + (t.ok() ? "" : "; " + t.summary())};
}

Outcome search_performance() {
  auto rep = bench::run_search_bench({kBenchDocs, kBenchQueries, 42});
  bool ok = rep.simple.speedup() >= kSimpleSpeedup && rep.facet.speedup() >= kFacetSpeedup && rep.mismatches == 0 &&
            rep.total_seconds < kBenchBudgetS;
  return {ok, std::to_string(rep.docs) + " docs: simple " + fmt("%.1fx", rep.simple.speedup()) + " (need " +
                  fmt("%.0fx", kSimpleSpeedup) + "), facet " + fmt("%.1fx", rep.facet.speedup()) + " (need " +
                  fmt("%.0fx", kFacetSpeedup) + "), " + std::to_string(rep.mismatches) + " mismatches, " +
                  fmt("%.1f s", rep.total_seconds)};
}

license::LicenseSpec random_spec(std::mt19937_64& rng, int i) {
  license::LicenseSpec l;
  l.id = "urn:lic:" + std::to_string(i);
  l.permissions = rng() % 16;
  l.duties = rng() % 8;
  l.prohibitions = (rng() % 4) & license::kProhibitable & ~l.permissions;
  return l;
}

Outcome license_algebra() {
  Tally t;
  std::mt19937_64 rng(1);
  for (int i = 0; i < kLicenseVectors; ++i) {
    std::vector<license::LicenseSpec> in;
    for (int k = 0, n = 1 + int(rng() % 4); k < n; ++k) in.push_back(random_spec(rng, k));
    auto base = license::compose(in);
    auto shuffled = in;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    t.expect(license::compose(shuffled) == base, "compose not commutative");
    auto doubled = in;
    doubled.insert(doubled.end(), in.begin(), in.end());
    t.expect(license::compose(doubled) == base, "compose not idempotent");
  }
  const auto& db = license::LicenseDb::bundled().all();
  auto odb = oracle::read_license_tsv(std::string(METACAT_DATA) + "/licenses.tsv");
  t.expect(db.size() == 12 && odb.size() == 12, "license fixture should hold 12 licenses");
  std::size_t subsets = 0;
  for (unsigned mask = 1; mask < (1u << db.size()); ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    std::vector<license::LicenseSpec> in;
    std::vector<oracle::OLicense> oin;
    for (std::size_t i = 0; i < db.size(); ++i)
      if (mask & (1u << i)) in.push_back(db[i]), oin.push_back(odb[i]);
    ++subsets;
    std::vector<std::string> got;
    for (const auto& l : license::relicensing_candidates(in, db)) got.push_back(l.id);
    t.expect(got == oracle::candidates(oin, odb), "candidates differ for subset mask " + std::to_string(mask));
    t.expect(license::check_compatibility(in).compatible == oracle::compatible(oin),
             "verdict differs for subset mask " + std::to_string(mask));
  }
  std::size_t singles = 0;
  for (const auto& l : db) {
    ++singles;
    t.expect(license::check_compatibility({l}).compatible, l.id + " alone is incompatible");
  }
  for (int i = 0; i < kLicenseVectors; ++i) {
    auto l = random_spec(rng, i);
    t.expect(license::check_compatibility({l}).compatible, "random single license incompatible");
  }
  return {t.ok(), std::to_string(kLicenseVectors) + " random vectors; " + std::to_string(subsets) +
                      " subsets match brute force; " + std::to_string(singles + kLicenseVectors) +
                      " single-license inputs compatible" + (t.ok() ? "" : "; " + t.summary())};
}

Outcome language_detection() {
  std::istringstream in(slurp(std::string(METACAT_FIXTURES) + "/language-sentences.tsv"));
  std::string line;
  std::size_t total = 0, right = 0, undecided = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    ++total;
    auto guess = enrich::detect_language(line.substr(tab + 1));
    if (!guess) ++undecided;
    else if (guess->lang == line.substr(0, tab)) ++right;
  }
  double acc = total ? double(right) / double(total) : 0;
  return {total == 200 && acc >= kLanguageAccuracy,
          std::to_string(right) + "/" + std::to_string(total) + " correct (" + fmt("%.1f%%", 100 * acc) + ", need " +
              fmt("%.0f%%", 100 * kLanguageAccuracy) + "), " + std::to_string(undecided) + " undecided"};
}

// Runs the CLI twice with a pinned evaluation time and compares the trees.
Outcome pipeline_determinism() {
  auto base = fs::temp_directory_path() / "metacat-acceptance";
  fs::remove_all(base);
  fs::create_directories(base);
  std::string config = std::string(METACAT_FIXTURES) + "/pipeline/pipeline.properties";
  auto run = [&](const std::string& name) {
    std::string cmd = std::string("\"") + METACAT_CLI + "\" run --config \"" + config + "\" --output \"" +
                      (base / name).string() + "\" --at 2024-06-01T00:00:00Z > \"" + (base / (name + ".log")).string() +
                      "\" 2>&1";
    return std::system(cmd.c_str());
  };
  auto tree = [](const fs::path& root) {
    std::map<std::string, std::string> out;
    if (!fs::exists(root)) return out;
    for (const auto& e : fs::recursive_directory_iterator(root))
      if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = slurp(e.path());
    return out;
  };
  auto t0 = Clock::now();
  int a = run("first");
  int b = run("second");
  double secs = seconds_since(t0);
  auto ta = tree(base / "first"), tb = tree(base / "second");
  std::size_t slices = 0, bytes = 0;
  for (const auto& [name, body] : ta) {
    slices += name.rfind("datasets/", 0) == 0;
    bytes += body.size();
  }
  bool shape = slices == 10 && ta.count("quality.nt") && ta.count("links.nt") && ta.count("index.bin") &&
               ta.count("not-computed.log");
  bool ok = a == 0 && b == 0 && shape && ta == tb && secs < kPipelineBudgetS;
  std::string detail = "exit " + std::to_string(a) + "/" + std::to_string(b) + ", " + std::to_string(ta.size()) +
                       " files (" + std::to_string(slices) + " slices, " + std::to_string(bytes) + " bytes), " +
                       (ta == tb ? "byte-identical" : "trees differ") + ", " + fmt("%.2f s", secs) + " for both runs";
  if (ok) fs::remove_all(base);
  else detail += "; logs in " + base.string();
  return {ok, detail};
}

struct Criterion {
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {"quality-range", quality_range},
      {"civet-flags", civet_flags},
      {"dqv-round-trip", dqv_round_trip},
      {"dedup-oracle", dedup_oracle},
      {"slicing-partition", slicing_partition},
      {"search-correctness", search_correctness},
      {"search-performance", search_performance},
      {"license-algebra", license_algebra},
      {"language-detection", language_detection},
      {"pipeline-determinism", pipeline_determinism},
  };
  std::vector<std::string> filters;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--list") {
      for (const auto& c : all) std::cout << c.name << "\n";
      return 0;
    }
    filters.push_back(a);
  }
  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (!filters.empty() &&
        std::none_of(filters.begin(), filters.end(), [&](const auto& f) { return c.name.find(f) != std::string::npos; }))
      continue;
    ++ran;
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " [" << fmt("%.1f s", seconds_since(t0))
              << "]" << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed;
}
