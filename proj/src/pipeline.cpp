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

#include "metacat/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <set>
#include <thread>

#include "file_util.hpp"
#include "metacat/dcat.hpp"
#include "metacat/dedup.hpp"
#include "metacat/enrich.hpp"
#include "metacat/error.hpp"
#include "metacat/license.hpp"
#include "metacat/rdf.hpp"
#include "metacat/search.hpp"
#include "metacat/text.hpp"
#include "metacat/vocab.hpp"

namespace metacat::pipeline {

namespace fs = std::filesystem;

std::map<std::string, std::string> parse_properties(std::string_view text, const std::string& source) {
  std::map<std::string, std::string> out;
  std::size_t no = 0;
  for (const auto& raw : text::split(text, '\n')) {
    ++no;
    std::string line(text::trim(raw));
    if (line.empty() || line[0] == '#' || line[0] == '!') continue;
    auto eq = line.find('=');
    std::string where = source + ":" + std::to_string(no) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected key=value");
    std::string key(text::trim(std::string_view(line).substr(0, eq)));
    if (key.empty()) throw ConfigError(where + "empty key");
    out[key] = std::string(text::trim(std::string_view(line).substr(eq + 1)));
  }
  return out;
}

std::string PipelineConfig::index_path() const {
  return index_output ? *index_output : (fs::path(output) / "index.bin").string();
}

namespace {

bool parse_bool(const std::string& key, const std::string& v) {
  auto s = text::to_lower(v);
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

double parse_number(const std::string& key, const std::string& v) {
  double d = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), d);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(d))
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  return d;
}

long parse_int(const std::string& key, const std::string& v, long lo, long hi) {
  long n = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size() || n < lo || n > hi)
    throw ConfigError(key + ": expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return n;
}

double parse_fraction(const std::string& key, const std::string& v) {
  double d = parse_number(key, v);
  if (!(d > 0 && d <= 1)) throw ConfigError(key + ": must lie in (0, 1]");
  return d;
}

std::string resolve(const std::string& base, const std::string& v) {
  fs::path p(v);
  if (p.is_absolute()) return p.lexically_normal().string();
  std::string s = (fs::path(base) / p).lexically_normal().string();
  if (s.size() > 1 && s.back() == '/') s.pop_back();
  return s;
}

}  // namespace

PipelineConfig make_config(const std::map<std::string, std::string>& props, const std::string& base_dir) {
  PipelineConfig c;
  bool have_in = false, have_out = false;
  for (const auto& [k, v] : props) {
    auto path = [&] { return resolve(base_dir, v); };
    if (k == "io.input") c.input = path(), have_in = true;
    else if (k == "io.output") c.output = path(), have_out = true;
    else if (k == "index.output") c.index_output = path();
    else if (k == "stages.clean") c.run_clean = parse_bool(k, v);
    else if (k == "stages.enrich") c.run_enrich = parse_bool(k, v);
    else if (k == "stages.quality") c.run_quality = parse_bool(k, v);
    else if (k == "stages.dedup") c.run_dedup = parse_bool(k, v);
    else if (k == "catfish.allowedLanguages") {
      c.catfish.allowed_languages.clear();
      for (const auto& lang : text::split(v, ',')) {
        auto t = text::to_lower(text::trim(lang));
        if (!t.empty()) c.catfish.allowed_languages.insert(t);
      }
    } else if (k == "catfish.removeEmpty") c.catfish.remove_empty = parse_bool(k, v);
    else if (k == "catfish.normalizeFormats") c.catfish.normalize_formats = parse_bool(k, v);
    else if (k == "catfish.catalogId") {
      if (v.find(':') == std::string::npos) throw ConfigError(k + ": expected an IRI");
      c.catfish.catalog_id = v;
    } else if (k == "catfish.mediaTypes") c.media_types_path = path();
    else if (k == "refine.languageThreshold") c.language_threshold = parse_fraction(k, v);
    else if (k == "refine.detectLanguage") c.detect_language = parse_bool(k, v);
    else if (k == "refine.annotatePlaces") c.annotate_places = parse_bool(k, v);
    else if (k == "refine.gazetteer") c.gazetteer_path = path();
    else if (k == "civet.includeLongRunning") c.civet.include_long_running = parse_bool(k, v);
    else if (k == "civet.logIfNotComputed") c.civet.log_if_not_computed = parse_bool(k, v);
    else if (k == "civet.removeMeasurements") c.civet.remove_measurements = parse_bool(k, v);
    else if (k == "civet.evaluationTime") {
      auto t = dcat::parse_iso8601(v);
      if (!t) throw ConfigError(k + ": expected an ISO-8601 date or timestamp");
      c.civet.evaluation_time = *t;
      c.evaluation_time_set = true;
    } else if (k == "civet.descriptionMinWords") c.civet.description_min_words = parse_int(k, v, 1, 10000);
    else if (k.rfind("civet.weights.", 0) == 0) {
      if (!c.civet.weights) c.civet.weights.emplace();
      (*c.civet.weights)[k.substr(14)] = parse_number(k, v);
    } else if (k == "civet.licenseDb") c.license_db_path = path();
    else if (k == "civet.providerDb") c.provider_db_path = path();
    else if (k == "civet.communityDb") c.community_db_path = path();
    else if (k == "dedup.threshold") c.dedup_threshold = parse_fraction(k, v);
    else if (k == "pipeline.workers") c.workers = unsigned(parse_int(k, v, 0, 256));
    else if (k == "service.port") c.service_port = int(parse_int(k, v, 0, 65535));
    else if (k == "service.cors_origin") c.cors_origin = v;
    else c.warnings.push_back("unknown key '" + k + "' ignored");
  }
  if (!have_in) throw ConfigError("missing required key io.input");
  if (!have_out) throw ConfigError("missing required key io.output");
  quality::validate(c.civet);
  return c;
}

PipelineConfig load_config(const std::string& path) {
  std::string body;
  try {
    body = detail::read_file(path, "config");
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  auto base = fs::absolute(fs::path(path)).parent_path().string();
  return make_config(parse_properties(body, path), base);
}

std::string slice_file_name(const std::string& dataset) { return text::hex64(text::fnv1a64(dataset)) + ".nt"; }

namespace {

std::vector<std::string> input_files(const std::string& input) {
  std::error_code ec;
  auto st = fs::status(input, ec);
  if (ec || !fs::exists(st)) throw NotFoundError("input not found: " + input);
  if (!fs::is_directory(st)) return {input};
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(input)) {
    auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".nt" || ext == ".ttl")) out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. fn must not throw.
template <typename F>
void parallel_for(std::size_t n, unsigned workers, F&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = unsigned(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::size_t untagged(const std::vector<dcat::LangString>& v) {
  return std::size_t(std::count_if(v.begin(), v.end(), [](const auto& l) { return l.lang.empty(); }));
}

// Every slice carries its own results so the pool never shares mutable state.
struct SliceWork {
  std::optional<std::string> error;
  clean::CleanReport cleaned;
  std::size_t tags_set = 0;
  std::size_t places_added = 0;
  dcat::DatasetRecord record;
  rdf::Graph graph;  // written to datasets/
  std::vector<quality::MetricResult> results;
  std::vector<std::string> not_computed;
};

}  // namespace

rdf::Graph read_input(const std::string& path, std::size_t* files) {
  auto list = input_files(path);
  rdf::Graph g;
  for (const auto& f : list) g.merge(rdf::parse_file(f));
  if (files) *files = list.size();
  return g;
}

RunReport run_pipeline(const PipelineConfig& config) {
  RunReport rep;

  // read
  rdf::Graph input = read_input(config.input, &rep.files);
  rep.triples = input.size();

  // split
  auto slices = rdf::split_dataset_graphs(input);
  rep.datasets = slices.size();

  // catalog listings stand in for a configured catalog id
  std::map<std::string, std::set<std::string>> listed_in;
  for (const auto& t : input)
    if (t.predicate.value() == vocab::kDcatDatasetProp && t.subject.is_iri() && t.object.is_iri())
      listed_in[t.object.value()].insert(t.subject.value());

  std::optional<clean::MediaTypeTable> media;
  if (config.media_types_path) media = clean::MediaTypeTable::load(*config.media_types_path);
  std::optional<enrich::Gazetteer> gazetteer;
  if (config.gazetteer_path) gazetteer = enrich::Gazetteer::load(*config.gazetteer_path);
  const auto& gaz = gazetteer ? *gazetteer : enrich::Gazetteer::bundled();

  quality::CivetConfig civet = config.civet;
  if (!config.evaluation_time_set)
    civet.evaluation_time = std::chrono::duration_cast<std::chrono::seconds>(
                                std::chrono::system_clock::now().time_since_epoch())
                                .count();
  std::optional<license::LicenseDb> licenses;
  std::optional<quality::ProviderDb> providers;
  std::optional<quality::CommunityDb> community;
  if (config.license_db_path) licenses = license::LicenseDb::load(*config.license_db_path);
  if (config.provider_db_path) providers = quality::ProviderDb::load(*config.provider_db_path);
  if (config.community_db_path) community = quality::CommunityDb::load(*config.community_db_path);
  quality::ExternalStores stores;
  if (licenses) stores.license_db = &*licenses;
  if (providers) stores.provider_db = &*providers;
  if (community) stores.community_db = &*community;
  if (civet.include_long_running) stores.url_prober = quality::http_url_prober();

  std::vector<SliceWork> work(slices.size());

  // clean, enrich
  parallel_for(slices.size(), config.workers, [&](std::size_t i) {
    auto& w = work[i];
    const auto& s = slices[i];
    try {
      rdf::Graph g = s.graph;
      if (config.run_clean) {
        clean::CleanConfig cc = config.catfish;
        if (media) cc.media_types = &*media;
        if (!cc.catalog_id) {
          auto it = listed_in.find(s.dataset);
          if (it != listed_in.end() && it->second.size() == 1) cc.catalog_id = *it->second.begin();
        }
        std::tie(g, w.cleaned) = clean::clean(g, cc);
      }
      w.record = dcat::from_graph(g, s.dataset);
      if (config.run_enrich) {
        auto& r = w.record;
        std::size_t before = untagged(r.titles) + untagged(r.descriptions);
        std::size_t places = r.spatial.size();
        if (config.detect_language) r = enrich::refine_language_tags(r, config.language_threshold);
        if (config.annotate_places) r = enrich::annotate_places(r, gaz);
        w.tags_set = before - (untagged(r.titles) + untagged(r.descriptions));
        w.places_added = r.spatial.size() - places;
      }
      w.graph = dcat::to_graph(w.record);
    } catch (const std::exception& e) {
      w.error = e.what();
    }
  });

  // Duplicate matching only needs the download URLs, so it runs ahead of
  // scoring; the cross-source metrics read its clusters.
  std::vector<dedup::DuplicateCluster> clusters;
  std::map<std::string, quality::DuplicateEvidence> evidence;
  if (config.run_dedup) {
    std::vector<dcat::DatasetRecord> records;
    for (const auto& w : work)
      if (!w.error) records.push_back(w.record);
    clusters = dedup::find_duplicates(records, config.dedup_threshold);
    evidence = dedup::evidence_by_dataset(records, clusters);
    stores.duplicates = &evidence;
  }

  // quality
  if (config.run_quality) {
    parallel_for(slices.size(), config.workers, [&](std::size_t i) {
      auto& w = work[i];
      if (w.error) return;
      try {
        quality::NotComputedLog log;
        w.results = quality::evaluate_all(w.record, w.graph, civet, stores, &log);
        w.not_computed = log.lines();
        if (civet.remove_measurements) w.graph = quality::to_dqv(w.record.iri, {}, true, w.graph);
      } catch (const std::exception& e) {
        w.error = e.what();
      }
    });
  }

  // write, in dataset order
  fs::create_directories(config.output);
  fs::path out(config.output);
  fs::remove_all(out / "datasets");
  fs::create_directories(out / "datasets");
  rdf::Graph dqv;
  std::string log;
  std::vector<search::DocEntry> docs;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    auto& w = work[i];
    if (w.error) {
      rep.skipped.push_back({slices[i].dataset, *w.error});
      continue;
    }
    rep.empty_removed += w.cleaned.empty_removed;
    rep.language_removed += w.cleaned.language_removed;
    rep.formats_normalized += w.cleaned.formats_normalized;
    rep.language_tags_set += w.tags_set;
    rep.places_added += w.places_added;
    detail::write_file((out / "datasets" / slice_file_name(w.record.iri)).string(), rdf::serialize_ntriples(w.graph));
    ++rep.written;
    std::optional<double> aggregate;
    if (config.run_quality) {
      auto m = quality::to_dqv(w.record.iri, w.results, false);
      rep.measurements += m.size() / 5;
      dqv.merge(m);
      ++rep.scored;
      rep.not_computed += w.not_computed.size();
      for (const auto& l : w.not_computed) log += l + '\n';
      aggregate = quality::aggregate(w.results);
    }
    docs.push_back(search::doc_from_record(w.record, aggregate));
  }
  rdf::Graph links = dedup::emit_links(clusters);
  rep.clusters = clusters.size();
  rep.links = links.size();
  detail::write_file((out / "quality.nt").string(), rdf::serialize_ntriples(dqv));
  detail::write_file((out / "links.nt").string(), rdf::serialize_ntriples(links));
  detail::write_file((out / "not-computed.log").string(), log);

  auto index = search::InvertedIndex::build(docs);
  fs::path ip(config.index_path());
  if (ip.has_parent_path()) fs::create_directories(ip.parent_path());
  index.save(ip.string());
  rep.indexed = index.size();
  return rep;
}

std::string format_report(const RunReport& r) {
  char buf[640];
  std::snprintf(buf, sizeof buf,
                "read: files %zu, triples %zu\n"
                "split: datasets %zu\n"
                "clean: empty literals %zu, other-language literals %zu, formats normalized %zu\n"
                "enrich: language tags set %zu, places added %zu\n"
                "quality: datasets scored %zu, measurements %zu, not computed %zu\n"
                "dedup: clusters %zu, links %zu\n"
                "write: slices %zu, indexed %zu, skipped %zu\n",
                r.files, r.triples, r.datasets, r.empty_removed, r.language_removed, r.formats_normalized,
                r.language_tags_set, r.places_added, r.scored, r.measurements, r.not_computed, r.clusters, r.links,
                r.written, r.indexed, r.skipped.size());
  std::string out = buf;
  for (const auto& s : r.skipped) out += "skipped " + s.dataset + ": " + s.reason + "\n";
  return out;
}

}  // namespace metacat::pipeline
