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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "metacat/dcat.hpp"
#include "metacat/license.hpp"
#include "metacat/rdf.hpp"

namespace metacat::quality {

inline constexpr int kMetricCount = 48;

enum class Tier { MetadataOnly, LongRunning, ExternalStore };
/// How a raw measure becomes a score.
///   Boolean: false -> 0, true -> 5
///   Ratio:   floor(5r + 0.5), clamped to [0,5]
///   Count:   number of band thresholds <= value
///   Age:     number of band thresholds > value (smaller is better)
enum class ScoreKind { Boolean, Ratio, Count, Age };
enum class NotComputedReason { SkippedLongRunning, StoreUnavailable, EvaluationError, NotApplicable };

const char* to_string(Tier tier);
const char* to_string(ScoreKind kind);
const char* to_string(NotComputedReason reason);

struct MetricDescriptor {
  int id = 0;
  std::string key;        // "<dimension>.<criterion>"
  std::string dimension;  // German dimension name
  Tier tier = Tier::MetadataOnly;
  ScoreKind kind = ScoreKind::Boolean;
  std::array<double, 5> bands{};  // Count/Age thresholds, ascending
  std::string signal;             // one-line description of the raw measure
  std::string metric_iri;
};

/// All 48 descriptors ordered by id.
const std::vector<MetricDescriptor>& registry();
const MetricDescriptor& descriptor(int id);
const MetricDescriptor* find_descriptor(std::string_view key);

int map_score(ScoreKind kind, double raw, const std::array<double, 5>& bands = {});

struct MetricResult {
  int id = 0;
  std::string key;
  std::optional<int> score;
  std::optional<NotComputedReason> reason;
  std::optional<double> raw;  // measure before mapping, when computed
  std::string detail;

  bool computed() const { return score.has_value(); }
  bool operator==(const MetricResult&) const = default;
};

/// Flesch Reading Ease. English: 206.835 - 1.015 ASL - 84.6 ASW; German
/// (Amstad): 180 - ASL - 58.5 ASW. Throws NotApplicableError without words.
double flesch_reading_ease(std::string_view text, std::string_view lang);
/// Vowel groups (a e i o u y, plus ä ö ü), at least one per word.
int count_syllables(std::string_view word);

struct CivetConfig {
  bool include_long_running = false;
  bool log_if_not_computed = true;
  bool remove_measurements = true;
  std::int64_t evaluation_time = 0;  // seconds since epoch
  /// Metric 2 weights keyed by tracked field name; absent fields weigh 1.
  std::optional<std::map<std::string, double>> weights;
  std::size_t description_min_words = 10;
};

/// Throws ConfigError for negative or all-zero weights or unknown fields.
void validate(const CivetConfig& config);

struct ProviderInfo {
  bool verified = false;
  int trust = 0;  // 0..5
  bool signs_metadata = false;
};

/// Provider table keyed by publisher IRI or name.
/// TSV: publisher, verified(true|false), trust(0..5), signs(true|false).
class ProviderDb {
 public:
  static ProviderDb parse(std::string_view tsv, const std::string& source = "<providers>");
  static ProviderDb load(const std::string& path);
  void add(std::string key, ProviderInfo info) { entries_[std::move(key)] = info; }
  const ProviderInfo* find(const dcat::AgentRef& publisher) const;

 private:
  std::map<std::string, ProviderInfo, std::less<>> entries_;
};

struct CommunitySignals {
  int channels = 0;
  int trust_votes = 0;
  int correct_votes = 0;
  int incorrect_votes = 0;
};

/// Community table keyed by dataset IRI, publisher IRI or publisher name.
/// TSV: subject, channels, trust_votes, correct_votes, incorrect_votes.
class CommunityDb {
 public:
  static CommunityDb parse(std::string_view tsv, const std::string& source = "<community>");
  static CommunityDb load(const std::string& path);
  void add(std::string key, CommunitySignals s) { entries_[std::move(key)] = s; }
  const CommunitySignals* find(std::string_view key) const;

 private:
  std::map<std::string, CommunitySignals, std::less<>> entries_;
};

/// Cross-source evidence for one dataset, produced by dedup.
struct DuplicateEvidence {
  std::vector<std::string> others;       // other members of its cluster
  std::size_t matched_distributions = 0;  // own distributions with a matching URL elsewhere
  std::size_t other_catalogs = 0;         // distinct catalogs among `others`
};

/// Returns true when the URL answered with 2xx (after redirects).
using UrlProber = std::function<bool(const std::string& url)>;
/// HTTP(S) HEAD-then-GET probe with a 10 s timeout, following redirects.
UrlProber http_url_prober();

struct ExternalStores {
  const license::LicenseDb* license_db = &license::LicenseDb::bundled();
  const ProviderDb* provider_db = nullptr;
  const CommunityDb* community_db = nullptr;
  UrlProber url_prober;
  const std::map<std::string, DuplicateEvidence>* duplicates = nullptr;
};

/// Thread-safe sink for NotComputed results.
class NotComputedLog {
 public:
  NotComputedLog() = default;
  /// Lines are also written to `out` as they arrive.
  explicit NotComputedLog(std::ostream& out) : out_(&out) {}

  void append(const std::string& dataset, const std::string& key, NotComputedReason reason);
  std::vector<std::string> lines() const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> lines_;
  std::ostream* out_ = nullptr;
};

MetricResult evaluate_metric(int id, const dcat::DatasetRecord& record, const rdf::Graph& slice,
                             const CivetConfig& config, const ExternalStores& stores);

/// 48 results ordered by id.
std::vector<MetricResult> evaluate_all(const dcat::DatasetRecord& record, const rdf::Graph& slice,
                                       const CivetConfig& config, const ExternalStores& stores,
                                       NotComputedLog* log = nullptr);

// ---- DQV ----

std::string metric_iri(std::string_view key);
std::string measurement_iri(std::string_view dataset, std::string_view key);

/// Measurements for every scored result, merged into `prior`. With
/// `remove_existing`, earlier measurements computed on `dataset` are dropped.
rdf::Graph to_dqv(const std::string& dataset, const std::vector<MetricResult>& results, bool remove_existing,
                  const rdf::Graph& prior = {});

struct Measurement {
  std::string key;
  int value = 0;
  auto operator<=>(const Measurement&) const = default;
};

/// (metric key, value) for each measurement computed on `dataset`, sorted.
std::vector<Measurement> parse_dqv(const rdf::Graph& graph, const std::string& dataset);

/// Every dataset with measurements in `graph`, with its sorted (key, value) list.
std::map<std::string, std::vector<Measurement>> parse_dqv_all(const rdf::Graph& graph);

/// Mean of the scored metrics; nullopt when none was scored.
std::optional<double> aggregate(const std::vector<MetricResult>& results);
std::optional<double> aggregate(const std::vector<Measurement>& measurements);

/// Golden/score file: `key<TAB>score` or `key<TAB>nc:<reason>` per line.
std::string format_scores(const std::vector<MetricResult>& results);

}  // namespace metacat::quality
