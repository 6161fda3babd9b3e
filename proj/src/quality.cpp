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

#include "metacat/quality.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <regex>
#include <set>
#include <unordered_set>

#include "embedded_data.hpp"
#include "file_util.hpp"
#include "metacat/clean.hpp"
#include "metacat/error.hpp"
#include "metacat/text.hpp"
#include "metacat/vocab.hpp"

namespace metacat::quality {

using rdf::Term;

const char* to_string(Tier tier) {
  switch (tier) {
    case Tier::MetadataOnly: return "metadata_only";
    case Tier::LongRunning: return "long_running";
    case Tier::ExternalStore: return "external_store";
  }
  return "?";
}

const char* to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::Boolean: return "boolean";
    case ScoreKind::Ratio: return "ratio";
    case ScoreKind::Count: return "count";
    case ScoreKind::Age: return "age";
  }
  return "?";
}

const char* to_string(NotComputedReason reason) {
  switch (reason) {
    case NotComputedReason::SkippedLongRunning: return "skipped_long_running";
    case NotComputedReason::StoreUnavailable: return "store_unavailable";
    case NotComputedReason::EvaluationError: return "evaluation_error";
    case NotComputedReason::NotApplicable: return "not_applicable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// registry

namespace {

using B = std::array<double, 5>;
constexpr B kSteps{1, 2, 3, 4, 5};
constexpr B kNone{};

struct Row {
  int id;
  const char* key;
  const char* dimension;
  Tier tier;
  ScoreKind kind;
  B bands;
  const char* signal;
};

constexpr auto M = Tier::MetadataOnly;
constexpr auto X = Tier::ExternalStore;
constexpr auto L = Tier::LongRunning;
constexpr auto Bool = ScoreKind::Boolean;
constexpr auto Ratio = ScoreKind::Ratio;
constexpr auto Count = ScoreKind::Count;

// Levels (0/2/3/5 and friends) are scored as Count over kSteps, i.e. the
// level is the score.
const Row kRows[] = {
    {1, "expressiveness.extent", "Ausdruckskraft", M, Ratio, kNone, "share of the 14 tracked fields that are filled"},
    {2, "expressiveness.weighted_extent", "Ausdruckskraft", M, Ratio, kNone,
     "weighted share of tracked fields (weights from config, default 1)"},
    {3, "expressiveness.categorization", "Ausdruckskraft", M, Count, {1, 2, 3, 5, 8}, "keywords plus themes"},
    {4, "expressiveness.description", "Ausdruckskraft", M, Bool, kNone,
     "a description with at least N words that does not overlap a title"},
    {5, "temporal.currency", "Zeitlich", M, ScoreKind::Age, {30, 90, 365, 730, 1825},
     "days since modified (or issued)"},
    {6, "temporal.update_rate", "Zeitlich", M, Count, kSteps,
     "level from accrual periodicity or the number of distinct update dates"},
    {7, "comprehensibility.readability", "Verständlichkeit", M, Count, {30, 40, 50, 60, 70},
     "Flesch reading ease of the preferred description"},
    {8, "comprehensibility.language_errors", "Verständlichkeit", M, Ratio, kNone,
     "share of text words found in the word list of their language"},
    {9, "comprehensibility.examples", "Verständlichkeit", M, Bool, kNone, "related or example links present"},
    {10, "rights.machine_readable_license", "Rechte", M, Bool, kNone, "a license IRI is given"},
    {11, "rights.human_readable_license", "Rechte", M, Bool, kNone, "a license carries a title, or rights text exists"},
    {12, "rights.known_license", "Rechte", X, Ratio, kNone, "share of licenses found in the license table"},
    {13, "rights.open_license", "Rechte", X, Ratio, kNone, "share of licenses described as open"},
    {14, "rights.commercial_use", "Rechte", X, Ratio, kNone, "share of licenses permitting commercial use"},
    {15, "rights.permission_attributes", "Rechte", X, Ratio, kNone,
     "share of licenses classed as attribution, share-alike or public domain"},
    {16, "trust.provider_identity", "Vertrauen", X, Count, kSteps,
     "publisher level: none 0, unlisted 2, listed 3, verified 5"},
    {17, "trust.trusted_provider", "Vertrauen", X, Count, kSteps, "provider rating 0..5"},
    {18, "trust.authenticity", "Vertrauen", X, Ratio, kNone, "share of distributions also found in other sources"},
    {19, "trust.signatures", "Vertrauen", X, Bool, kNone, "checksum or signature present"},
    {20, "community.channels", "Community", X, Count, kSteps, "communication channels"},
    {21, "community.trust_votes", "Community", X, Count, {1, 5, 10, 25, 50}, "transferred trust votes"},
    {22, "community.correctness_votes", "Community", X, Ratio, kNone, "correct / (correct + incorrect) votes"},
    {23, "community.cross_source_confirmation", "Community", X, Count, kSteps,
     "other datasets confirming this one across sources"},
    {24, "versatility.serializations", "Vielseitigkeit", M, Count, kSteps, "distinct distribution formats"},
    {25, "versatility.languages", "Vielseitigkeit", M, Count, kSteps, "languages"},
    {26, "versatility.access_methods", "Vielseitigkeit", M, Count, {1, 2, 2, 3, 4},
     "access kinds among download, access URL, service and landing page"},
    {27, "representation.open_metadata_format", "Repräsentation", M, Ratio, kNone,
     "share of predicates from open standard vocabularies"},
    {28, "representation.registered_format", "Repräsentation", M, Bool, kNone,
     "typed as a DCAT dataset and described with DCAT or Dublin Core terms"},
    {29, "representation.machine_processable", "Repräsentation", M, Ratio, kNone,
     "share of literals with a datatype or language tag"},
    {30, "representation.vocabulary", "Repräsentation", M, Bool, kNone, "conformsTo declared"},
    {31, "representation.date_format", "Repräsentation", M, Ratio, kNone, "share of date values in ISO-8601 form"},
    {32, "representation.identifier", "Repräsentation", M, Count, kSteps,
     "identifier level: URI or DOI 5, other 3, none 0"},
    {33, "representation.locality", "Repräsentation", M, Bool, kNone, "spatial field present"},
    {34, "linking.labeled", "Verknüpfung", M, Ratio, kNone, "share of described nodes carrying a label"},
    {35, "linking.linked_data", "Verknüpfung", M, Bool, kNone, "links to HTTP(S) resources"},
    {36, "linking.standards", "Verknüpfung", M, Count, kSteps, "distinct predicate namespaces"},
    {37, "reachability.contact_url", "Erreichbarkeit", M, Bool, kNone, "contact URL or publisher homepage"},
    {38, "reachability.contact_email", "Erreichbarkeit", M, Bool, kNone, "a well-formed contact email"},
    {39, "reachability.classic_contact", "Erreichbarkeit", M, Ratio, kNone,
     "share of name, phone and address in the contact point"},
    {40, "access.open_access", "Zugriff", M, Bool, kNone, "landing page present"},
    {41, "access.retrievability", "Zugriff", L, Ratio, kNone, "share of HTTP(S) URLs answering 2xx"},
    {42, "versioning.version_number", "Versionierung", M, Count, kSteps, "version field 5, version in text 3"},
    {43, "versioning.time_span", "Versionierung", M, Count, kSteps, "temporal field 5, year range in text 3"},
    {44, "data.open_format", "Daten", M, Ratio, kNone, "share of distributions in a non-proprietary known format"},
    {45, "data.standard_format", "Daten", M, Ratio, kNone, "share of distributions with a registered media type"},
    {46, "data.machine_processable", "Daten", M, Ratio, kNone,
     "share of distributions in a machine-processable format"},
    {47, "data.unique_identifier", "Daten", M, Ratio, kNone, "share of distributions identified by an IRI"},
    {48, "data.serializations", "Daten", M, Count, kSteps, "distinct machine-processable formats"},
};

static_assert(std::size(kRows) == kMetricCount);

}  // namespace

const std::vector<MetricDescriptor>& registry() {
  static const std::vector<MetricDescriptor> reg = [] {
    std::vector<MetricDescriptor> out;
    for (const auto& r : kRows) {
      out.push_back({r.id, r.key, r.dimension, r.tier, r.kind, r.bands, r.signal, metric_iri(r.key)});
    }
    return out;
  }();
  return reg;
}

const MetricDescriptor& descriptor(int id) {
  if (id < 1 || id > kMetricCount) throw ValidationError("metric id out of range: " + std::to_string(id));
  return registry()[id - 1];
}

const MetricDescriptor* find_descriptor(std::string_view key) {
  for (const auto& d : registry()) {
    if (d.key == key) return &d;
  }
  return nullptr;
}

int map_score(ScoreKind kind, double raw, const std::array<double, 5>& bands) {
  if (std::isnan(raw)) return 0;
  switch (kind) {
    case ScoreKind::Boolean: return raw != 0 ? 5 : 0;
    case ScoreKind::Ratio: return std::clamp(static_cast<int>(std::floor(5 * raw + 0.5)), 0, 5);
    case ScoreKind::Count: return static_cast<int>(std::count_if(bands.begin(), bands.end(), [&](double b) { return b <= raw; }));
    case ScoreKind::Age: return static_cast<int>(std::count_if(bands.begin(), bands.end(), [&](double b) { return b > raw; }));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// readability

namespace {

bool is_vowel(char32_t c) {
  switch (text::to_lower(c)) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
    case U'ä': case U'ö': case U'ü':
      return true;
    default:
      return false;
  }
}

}  // namespace

int count_syllables(std::string_view word) {
  int groups = 0;
  bool in_group = false;
  for (char32_t c : text::decode_utf8(word)) {
    bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return std::max(groups, 1);
}

double flesch_reading_ease(std::string_view body, std::string_view lang) {
  auto words = text::words(body);
  if (words.empty()) throw NotApplicableError("no words to score");
  // a sentence ends at a run of terminal punctuation; trailing text counts as one more
  std::size_t sentences = 0;
  bool pending = false;
  for (char c : body) {
    bool end = c == '.' || c == '!' || c == '?';
    if (end && pending) ++sentences, pending = false;
    if (!end && !text::is_space(static_cast<unsigned char>(c))) pending = true;
  }
  if (pending) ++sentences;
  sentences = std::max<std::size_t>(sentences, 1);
  std::size_t syllables = 0;
  for (const auto& w : words) syllables += count_syllables(w);
  double asl = double(words.size()) / double(sentences);
  double asw = double(syllables) / double(words.size());
  if (lang == "de") return 180.0 - asl - 58.5 * asw;
  return 206.835 - 1.015 * asl - 84.6 * asw;
}

// ---------------------------------------------------------------------------
// config and stores

void validate(const CivetConfig& config) {
  if (config.description_min_words == 0) throw ConfigError("description word minimum must be positive");
  if (!config.weights) return;
  double sum = 0;
  for (const auto& [field, w] : *config.weights) {
    bool known = std::any_of(std::begin(dcat::kTrackedFieldNames), std::end(dcat::kTrackedFieldNames),
                             [&](const char* f) { return field == f; });
    if (!known) throw ConfigError("unknown weighted field '" + field + "'");
    if (!(w >= 0) || !std::isfinite(w)) throw ConfigError("weight for '" + field + "' must be non-negative");
  }
  for (const char* f : dcat::kTrackedFieldNames) {
    auto it = config.weights->find(f);
    sum += it == config.weights->end() ? 1.0 : it->second;
  }
  if (sum <= 0) throw ConfigError("weights must not all be zero");
}

namespace {

std::vector<std::vector<std::string>> tsv_rows(std::string_view tsv, std::size_t fields, const std::string& source,
                                               std::vector<std::size_t>& lines) {
  std::vector<std::vector<std::string>> rows;
  std::size_t no = 0;
  for (const auto& raw : text::split(tsv, '\n')) {
    ++no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto f = text::split(line, '\t');
    if (f.size() != fields) {
      throw ParseError("expected " + std::to_string(fields) + " tab-separated fields", no, source);
    }
    for (auto& x : f) x = std::string(text::trim(x));
    rows.push_back(std::move(f));
    lines.push_back(no);
  }
  return rows;
}

bool parse_flag(const std::string& v, std::size_t line, const std::string& source) {
  auto l = text::to_lower(v);
  if (l == "true") return true;
  if (l == "false") return false;
  throw ParseError("expected true or false, got '" + v + "'", line, source);
}

int parse_count(const std::string& v, int max, std::size_t line, const std::string& source) {
  int n = -1;
  auto res = std::from_chars(v.data(), v.data() + v.size(), n);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || n < 0 || n > max) {
    throw ParseError("expected an integer in [0," + std::to_string(max) + "], got '" + v + "'", line, source);
  }
  return n;
}

}  // namespace

ProviderDb ProviderDb::parse(std::string_view tsv, const std::string& source) {
  ProviderDb db;
  std::vector<std::size_t> lines;
  auto rows = tsv_rows(tsv, 4, source, lines);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& f = rows[i];
    ProviderInfo p{parse_flag(f[1], lines[i], source), parse_count(f[2], 5, lines[i], source),
                   parse_flag(f[3], lines[i], source)};
    db.add(f[0], p);
  }
  return db;
}

ProviderDb ProviderDb::load(const std::string& path) { return parse(detail::read_file(path, "provider table"), path); }

const ProviderInfo* ProviderDb::find(const dcat::AgentRef& publisher) const {
  for (const auto& key : {publisher.iri, publisher.name}) {
    if (!key) continue;
    auto it = entries_.find(*key);
    if (it != entries_.end()) return &it->second;
  }
  return nullptr;
}

CommunityDb CommunityDb::parse(std::string_view tsv, const std::string& source) {
  CommunityDb db;
  std::vector<std::size_t> lines;
  auto rows = tsv_rows(tsv, 5, source, lines);
  constexpr int kMax = 1 << 30;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& f = rows[i];
    auto n = [&](int k) { return parse_count(f[k], kMax, lines[i], source); };
    db.add(f[0], {n(1), n(2), n(3), n(4)});
  }
  return db;
}

CommunityDb CommunityDb::load(const std::string& path) { return parse(detail::read_file(path, "community table"), path); }

const CommunitySignals* CommunityDb::find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void NotComputedLog::append(const std::string& dataset, const std::string& key, NotComputedReason reason) {
  std::string line = dataset + '\t' + key + '\t' + to_string(reason);
  std::lock_guard lock(mu_);
  if (out_) *out_ << line << '\n';
  lines_.push_back(std::move(line));
}

std::vector<std::string> NotComputedLog::lines() const {
  std::lock_guard lock(mu_);
  return lines_;
}

std::size_t NotComputedLog::size() const {
  std::lock_guard lock(mu_);
  return lines_.size();
}

// ---------------------------------------------------------------------------
// metric helpers

namespace {

struct Outcome {
  std::optional<double> raw;
  std::optional<NotComputedReason> skipped;
  std::string detail;
};

Outcome raw(double v, std::string detail = {}) { return {v, std::nullopt, std::move(detail)}; }
// Nothing to measure: scores the worst band without a raw value.
Outcome nothing(std::string detail) { return {std::nullopt, std::nullopt, std::move(detail)}; }
Outcome skip(NotComputedReason r, std::string detail = {}) { return {std::nullopt, r, std::move(detail)}; }
Outcome flag(bool b) { return raw(b ? 1 : 0); }
Outcome ratio(std::size_t hit, std::size_t total, const char* what) {
  if (total == 0) return nothing(std::string("no ") + what);
  return raw(double(hit) / double(total), std::to_string(hit) + "/" + std::to_string(total) + " " + what);
}

struct Ctx {
  const dcat::DatasetRecord& r;
  const rdf::Graph& slice;
  const CivetConfig& config;
  const ExternalStores& stores;
  Term root;
};

bool has_any(const rdf::Graph& g, std::string_view predicate) {
  return std::any_of(g.begin(), g.end(), [&](const rdf::Triple& t) { return t.predicate.value() == predicate; });
}

std::string_view namespace_of(std::string_view iri) {
  auto cut = iri.find_last_of("#/");
  return cut == std::string_view::npos ? iri : iri.substr(0, cut + 1);
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }
bool is_http(std::string_view s) { return starts_with(s, "http://") || starts_with(s, "https://"); }

std::string normalized_text(std::string_view s) { return text::collapse_whitespace(text::to_lower(s)); }

// -- formats

struct Format {
  std::string type;
  bool known = false;
};

std::optional<Format> format_of(const dcat::Distribution& d) {
  const auto& v = d.media_type ? d.media_type : d.format;
  if (!v || text::trim(*v).empty()) return std::nullopt;
  auto [type, known] = clean::normalize_media_type(*v);
  return Format{type, known && clean::MediaTypeTable::bundled().is_known_type(type)};
}

bool proprietary(const std::string& t) {
  static const std::set<std::string, std::less<>> p{
      "application/vnd.ms-excel", "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
      "application/msword", "application/vnd.openxmlformats-officedocument.wordprocessingml.document"};
  return p.count(t) > 0;
}

bool machine_processable(const std::string& t) {
  static const std::set<std::string, std::less<>> no{
      "text/plain", "text/html", "application/pdf", "application/msword",
      "application/vnd.openxmlformats-officedocument.wordprocessingml.document", "application/vnd.oasis.opendocument.text",
      "application/zip", "application/gzip", "application/x-tar", "application/x-7z-compressed"};
  return !no.count(t) && !starts_with(t, "image/");
}

// -- licenses

std::vector<std::string> license_iris(const Ctx& c) {
  std::set<std::string> out;
  for (const auto& d : c.r.distributions) {
    if (d.license) out.insert(*d.license);
  }
  for (const auto& o : c.slice.objects(c.root, vocab::kDctLicense)) {
    if (o.is_iri()) out.insert(o.value());
  }
  return {out.begin(), out.end()};
}

template <typename Pred>
Outcome license_ratio(const Ctx& c, Pred pred, const char* what) {
  if (!c.stores.license_db) return skip(NotComputedReason::StoreUnavailable, "no license table");
  auto iris = license_iris(c);
  std::size_t hit = 0;
  for (const auto& iri : iris) hit += pred(c.stores.license_db->resolve(iri));
  return ratio(hit, iris.size(), what);
}

// -- word lists

const std::unordered_set<std::string>& wordlist(const std::string& lang) {
  static const auto load = [](const char* name) {
    std::unordered_set<std::string> s;
    auto body = embedded::find(name);
    if (!body) throw IoError(std::string("bundled word list missing: ") + name);
    for (const auto& line : text::split(*body, '\n')) {
      auto w = text::trim(line);
      if (!w.empty() && w.front() != '#') s.insert(text::to_lower(w));
    }
    return s;
  };
  static const auto de = load("wordlists/de.txt");
  static const auto en = load("wordlists/en.txt");
  return lang == "de" ? de : en;
}

bool all_letters(const std::string& w) {
  for (char32_t c : text::decode_utf8(w)) {
    if (!text::is_letter(c)) return false;
  }
  return true;
}

// -- periodicity

std::optional<int> period_days(const std::string& iri) {
  static const std::map<std::string, int, std::less<>> days{
      {"continuous", 0},      {"cont", 0},          {"update_cont", 0},   {"hourly", 0},
      {"daily", 1},           {"daily_2", 1},       {"threetimesaweek", 2}, {"weekly_3", 2},
      {"semiweekly", 3},      {"weekly_2", 3},      {"weekly", 7},        {"threetimesamonth", 10},
      {"monthly_3", 10},      {"biweekly", 14},     {"semimonthly", 15},  {"monthly_2", 15},
      {"monthly", 30},        {"bimonthly", 61},    {"quarterly", 92},    {"threetimesayear", 122},
      {"annual_3", 122},      {"semiannual", 182},  {"annual_2", 182},    {"annual", 365},
      {"biennial", 730},      {"triennial", 1095},  {"quinquennial", 1826}, {"decennial", 3652}};
  auto local = text::to_lower(iri.substr(iri.find_last_of("/#") + 1));
  auto it = days.find(local);
  if (it == days.end()) return std::nullopt;
  return it->second;
}

int period_level(const std::string& iri) {
  auto d = period_days(iri);
  if (!d) return 1;  // irregular or unknown frequency
  if (*d <= 7) return 5;
  if (*d <= 31) return 4;
  if (*d <= 92) return 3;
  if (*d <= 366) return 2;
  return 1;
}

bool valid_email(std::string_view e) {
  e = text::trim(e);
  if (starts_with(e, "mailto:")) e.remove_prefix(7);
  auto at = e.find('@');
  if (at == std::string_view::npos || at == 0 || e.find('@', at + 1) != std::string_view::npos) return false;
  auto domain = e.substr(at + 1);
  auto dot = domain.find('.');
  return dot != std::string_view::npos && dot > 0 && domain.back() != '.' &&
         domain.find_first_of(" \t") == std::string_view::npos && e.find(' ') == std::string_view::npos;
}

std::vector<const dcat::LangString*> texts(const dcat::DatasetRecord& r) {
  std::vector<const dcat::LangString*> out;
  for (const auto* v : {&r.titles, &r.descriptions}) {
    for (const auto& s : *v) out.push_back(&s);
  }
  return out;
}

bool any_text_matches(const dcat::DatasetRecord& r, const std::regex& re) {
  for (const auto* s : texts(r)) {
    if (std::regex_search(s->text, re)) return true;
  }
  return false;
}

const std::string_view kStandardNamespaces[] = {
    vocab::kRdf,  vocab::kRdfs, vocab::kXsd,  vocab::kOwl,  vocab::kDcat, vocab::kDct,    vocab::kFoaf, vocab::kVcard,
    vocab::kSkos, vocab::kDqv,  vocab::kGeo,  vocab::kAdms, vocab::kProv, vocab::kLocn,   vocab::kSchema, vocab::kSpdx};

const std::string_view kLabelPredicates[] = {vocab::kRdfsLabel, vocab::kSkosPrefLabel, vocab::kDctTitle,
                                             vocab::kFoafName, vocab::kVcardFn};

// ---------------------------------------------------------------------------
// the metrics

Outcome m_extent(const Ctx& c) {
  auto f = dcat::tracked_fields(c.r);
  auto n = std::count(f.begin(), f.end(), true);
  return ratio(n, f.size(), "tracked fields");
}

Outcome m_weighted_extent(const Ctx& c) {
  auto f = dcat::tracked_fields(c.r);
  double num = 0, den = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double w = 1;
    if (c.config.weights) {
      auto it = c.config.weights->find(dcat::kTrackedFieldNames[i]);
      if (it != c.config.weights->end()) w = it->second;
    }
    den += w;
    if (f[i]) num += w;
  }
  if (den <= 0) throw ConfigError("weights must not all be zero");
  return raw(num / den);
}

Outcome m_categorization(const Ctx& c) { return raw(double(c.r.keywords.size() + c.r.themes.size())); }

Outcome m_description(const Ctx& c) {
  for (const auto& d : c.r.descriptions) {
    if (text::words(d.text).size() < c.config.description_min_words) continue;
    auto nd = normalized_text(d.text);
    bool overlaps = false;
    for (const auto& t : c.r.titles) {
      auto nt = normalized_text(t.text);
      if (nt.empty()) continue;
      if (nd.find(nt) != std::string::npos || nt.find(nd) != std::string::npos) overlaps = true;
    }
    if (!overlaps) return flag(true);
  }
  return flag(false);
}

Outcome m_currency(const Ctx& c) {
  const auto& date = c.r.modified ? c.r.modified : c.r.issued;
  if (!date) return nothing("no date");
  auto t = dcat::parse_iso8601(*date);
  if (!t) return nothing("unparsable date");
  double age = std::max<double>(0, double(c.config.evaluation_time - *t) / 86400.0);
  return raw(age, "age in days");
}

Outcome m_update_rate(const Ctx& c) {
  int level = c.r.accrual_periodicity ? period_level(*c.r.accrual_periodicity) : 0;
  std::set<std::int64_t> days;
  auto add = [&](const std::optional<std::string>& d) {
    if (!d) return;
    if (auto t = dcat::parse_iso8601(*d)) days.insert(*t / 86400);
  };
  add(c.r.issued);
  add(c.r.modified);
  for (const auto& d : c.r.distributions) add(d.issued), add(d.modified);
  int events = map_score(ScoreKind::Count, double(days.size()), {2, 3, 5, 8, 12});
  return raw(std::max(level, events), std::to_string(days.size()) + " update dates");
}

Outcome m_readability(const Ctx& c) {
  const dcat::LangString* pick = nullptr;
  for (const char* lang : {"de", "en", ""}) {
    for (const auto& d : c.r.descriptions) {
      if (!pick && d.lang == lang) pick = &d;
    }
  }
  if (!pick && !c.r.descriptions.empty()) pick = &c.r.descriptions.front();
  if (!pick) return nothing("no description");
  try {
    return raw(flesch_reading_ease(pick->text, pick->lang == "de" ? "de" : "en"));
  } catch (const NotApplicableError&) {
    return nothing("description has no words");
  }
}

Outcome m_language_errors(const Ctx& c) {
  std::size_t total = 0, known = 0;
  auto scan = [&](const dcat::LangString& s) {
    for (const auto& w : text::words(s.text)) {
      if (!all_letters(w)) continue;
      ++total;
      bool hit = s.lang == "de"   ? wordlist("de").count(w) > 0
                 : s.lang == "en" ? wordlist("en").count(w) > 0
                                  : wordlist("de").count(w) > 0 || wordlist("en").count(w) > 0;
      known += hit;
    }
  };
  for (const auto* s : texts(c.r)) scan(*s);
  for (const auto& k : c.r.keywords) scan(k);
  return ratio(known, total, "known words");
}

Outcome m_examples(const Ctx& c) {
  for (auto p : {vocab::kRdfsSeeAlso, vocab::kDctReferences, vocab::kDctRelation, vocab::kFoafPage,
                 vocab::kDctIsReferencedBy}) {
    if (!c.slice.objects(c.root, p).empty()) return flag(true);
  }
  return flag(false);
}

Outcome m_license_present(const Ctx& c) { return flag(!license_iris(c).empty()); }

Outcome m_license_title(const Ctx& c) {
  for (const auto& iri : license_iris(c)) {
    Term node = Term::iri(iri);
    for (auto p : kLabelPredicates) {
      if (!c.slice.objects(node, p).empty()) return flag(true);
    }
  }
  std::vector<Term> holders{c.root};
  for (const auto& d : c.r.distributions) holders.push_back(d.node);
  for (const auto& h : holders) {
    if (!c.slice.objects(h, vocab::kDctRights).empty()) return flag(true);
  }
  return flag(false);
}

Outcome m_provider_identity(const Ctx& c) {
  if (!c.stores.provider_db) return skip(NotComputedReason::StoreUnavailable, "no provider table");
  if (!c.r.publisher) return raw(0, "no publisher");
  const auto* p = c.stores.provider_db->find(*c.r.publisher);
  if (!p) return raw(2, "publisher not listed");
  return raw(p->verified ? 5 : 3);
}

Outcome m_trusted_provider(const Ctx& c) {
  if (!c.stores.provider_db) return skip(NotComputedReason::StoreUnavailable, "no provider table");
  const auto* p = c.r.publisher ? c.stores.provider_db->find(*c.r.publisher) : nullptr;
  return raw(p ? p->trust : 0);
}

const DuplicateEvidence* evidence(const Ctx& c) {
  auto it = c.stores.duplicates->find(c.r.iri);
  return it == c.stores.duplicates->end() ? nullptr : &it->second;
}

Outcome m_authenticity(const Ctx& c) {
  if (!c.stores.duplicates) return skip(NotComputedReason::NotApplicable, "no duplicate clusters");
  const auto* e = evidence(c);
  std::size_t matched = e ? std::min(e->matched_distributions, c.r.distributions.size()) : 0;
  return ratio(matched, c.r.distributions.size(), "distributions matched elsewhere");
}

Outcome m_signatures(const Ctx& c) {
  if (!c.stores.provider_db) return skip(NotComputedReason::StoreUnavailable, "no provider table");
  if (has_any(c.slice, vocab::kSpdxChecksum) || has_any(c.slice, vocab::kSchemaSignature)) return flag(true);
  const auto* p = c.r.publisher ? c.stores.provider_db->find(*c.r.publisher) : nullptr;
  return flag(p && p->signs_metadata);
}

const CommunitySignals* community(const Ctx& c) {
  if (const auto* s = c.stores.community_db->find(c.r.iri)) return s;
  if (c.r.publisher) {
    for (const auto& key : {c.r.publisher->iri, c.r.publisher->name}) {
      if (!key) continue;
      if (const auto* s = c.stores.community_db->find(*key)) return s;
    }
  }
  return nullptr;
}

template <typename F>
Outcome community_metric(const Ctx& c, F f) {
  if (!c.stores.community_db) return skip(NotComputedReason::StoreUnavailable, "no community table");
  const auto* s = community(c);
  if (!s) return raw(0, "no community signals");
  return f(*s);
}

Outcome m_channels(const Ctx& c) {
  return community_metric(c, [](const CommunitySignals& s) { return raw(s.channels); });
}

Outcome m_trust_votes(const Ctx& c) {
  return community_metric(c, [](const CommunitySignals& s) { return raw(s.trust_votes); });
}

Outcome m_correctness(const Ctx& c) {
  return community_metric(c, [](const CommunitySignals& s) {
    return ratio(std::size_t(s.correct_votes), std::size_t(s.correct_votes) + std::size_t(s.incorrect_votes), "votes");
  });
}

Outcome m_confirmation(const Ctx& c) {
  if (!c.stores.duplicates) return skip(NotComputedReason::NotApplicable, "no duplicate clusters");
  const auto* e = evidence(c);
  return raw(e ? double(e->others.size()) : 0);
}

Outcome m_serializations(const Ctx& c) {
  std::set<std::string> types;
  for (const auto& d : c.r.distributions) {
    if (auto f = format_of(d)) types.insert(f->type);
  }
  return raw(double(types.size()));
}

Outcome m_languages(const Ctx& c) {
  std::set<std::string> tags;
  for (const auto* s : texts(c.r)) {
    if (!s->lang.empty()) tags.insert(s->lang.substr(0, s->lang.find('-')));
  }
  return raw(double(std::max(tags.size(), c.r.languages.size())));
}

Outcome m_access_methods(const Ctx& c) {
  bool download = false, access = false, service = false;
  for (const auto& d : c.r.distributions) {
    download |= d.download_url.has_value();
    access |= d.access_url.has_value();
    service |= !c.slice.objects(d.node, vocab::kDcatAccessService).empty();
  }
  return raw(download + access + service + c.r.landing_page.has_value());
}

Outcome m_open_metadata(const Ctx& c) {
  std::size_t total = 0, open = 0;
  for (const auto& t : c.slice) {
    if (t.predicate.value() == vocab::kRdfType) continue;
    ++total;
    auto ns = namespace_of(t.predicate.value());
    open += std::find(std::begin(kStandardNamespaces), std::end(kStandardNamespaces), ns) != std::end(kStandardNamespaces);
  }
  return ratio(open, total, "standard predicates");
}

Outcome m_registered_format(const Ctx& c) {
  bool typed = false, described = false;
  for (const auto& t : c.slice) {
    if (t.subject != c.root) continue;
    if (t.predicate.value() == vocab::kRdfType) {
      typed |= t.object.value() == vocab::kDcatDataset;
    } else {
      auto ns = namespace_of(t.predicate.value());
      described |= ns == vocab::kDcat || ns == vocab::kDct;
    }
  }
  return flag(typed && described);
}

Outcome m_typed_literals(const Ctx& c) {
  std::size_t total = 0, typed = 0;
  for (const auto& t : c.slice) {
    if (!t.object.is_literal()) continue;
    ++total;
    typed += !t.object.language().empty() || !t.object.datatype().empty();
  }
  return ratio(typed, total, "typed literals");
}

Outcome m_vocabulary(const Ctx& c) { return flag(has_any(c.slice, vocab::kDctConformsTo)); }

Outcome m_date_format(const Ctx& c) {
  std::size_t total = 0, valid = 0;
  for (const auto& t : c.slice) {
    const auto& p = t.predicate.value();
    if (p != vocab::kDctIssued && p != vocab::kDctModified && p != vocab::kDcatStartDate && p != vocab::kDcatEndDate)
      continue;
    ++total;
    valid += t.object.is_literal() && dcat::is_iso8601(text::trim(t.object.value()));
  }
  return ratio(valid, total, "ISO dates");
}

Outcome m_identifier(const Ctx& c) {
  if (!c.r.identifier) return raw(0, "no identifier");
  auto id = text::trim(*c.r.identifier);
  static const std::regex doi(R"(^(doi:)?10\.\d{4,9}/\S+$)", std::regex::icase);
  bool global = id.find("://") != std::string_view::npos || starts_with(id, "urn:") ||
                std::regex_match(std::string(id), doi);
  return raw(global ? 5 : id.empty() ? 0 : 3);
}

Outcome m_locality(const Ctx& c) { return flag(!c.r.spatial.empty()); }

Outcome m_labeled(const Ctx& c) {
  std::set<Term> nodes;
  for (const auto& t : c.slice) {
    if (t.subject != c.root) nodes.insert(t.subject);
  }
  std::size_t labeled = 0;
  for (const auto& n : nodes) {
    labeled += std::any_of(std::begin(kLabelPredicates), std::end(kLabelPredicates),
                           [&](std::string_view p) { return !c.slice.objects(n, p).empty(); });
  }
  return ratio(labeled, nodes.size(), "labeled nodes");
}

Outcome m_linked_data(const Ctx& c) {
  return flag(std::any_of(c.slice.begin(), c.slice.end(), [](const rdf::Triple& t) {
    return t.predicate.value() != vocab::kRdfType && t.object.is_iri() && is_http(t.object.value());
  }));
}

Outcome m_standards(const Ctx& c) {
  std::set<std::string_view> ns;
  for (const auto& t : c.slice) {
    auto n = namespace_of(t.predicate.value());
    if (n != vocab::kRdf) ns.insert(n);
  }
  return raw(double(ns.size()));
}

Outcome m_contact_url(const Ctx& c) {
  bool url = c.r.contact_point && c.r.contact_point->url;
  bool home = c.r.publisher && c.r.publisher->homepage;
  return flag(url || home);
}

Outcome m_contact_email(const Ctx& c) {
  if (c.r.contact_point && c.r.contact_point->email && valid_email(*c.r.contact_point->email)) return flag(true);
  return flag(c.r.publisher && c.r.publisher->email && valid_email(*c.r.publisher->email));
}

Outcome m_classic_contact(const Ctx& c) {
  if (!c.r.contact_point) return raw(0, "no contact point");
  const auto& cp = *c.r.contact_point;
  return ratio(cp.name.has_value() + cp.phone.has_value() + cp.address.has_value(), 3, "classic contact fields");
}

Outcome m_open_access(const Ctx& c) { return flag(c.r.landing_page.has_value()); }

Outcome m_retrievability(const Ctx& c) {
  if (!c.stores.url_prober) return skip(NotComputedReason::StoreUnavailable, "no URL prober");
  std::set<std::string> urls;
  if (c.r.landing_page) urls.insert(*c.r.landing_page);
  for (const auto& d : c.r.distributions) {
    if (d.access_url) urls.insert(*d.access_url);
    if (d.download_url) urls.insert(*d.download_url);
  }
  std::size_t probed = 0, ok = 0;
  for (const auto& u : urls) {
    if (!is_http(u)) continue;
    ++probed;
    ok += c.stores.url_prober(u);
  }
  return ratio(ok, probed, "URLs answering");
}

Outcome m_version(const Ctx& c) {
  if (c.r.version && !text::trim(*c.r.version).empty()) return raw(5);
  static const std::regex re(R"((^|[^a-z])(version|v|fassung|release|stand)\s*\.?\s*\d+(\.\d+)*)", std::regex::icase);
  return raw(any_text_matches(c.r, re) ? 3 : 0);
}

Outcome m_time_span(const Ctx& c) {
  if (c.r.temporal) return raw(5);
  static const std::regex re(R"((^|\D)(19|20)\d\d\s*(-|)" "\xE2\x80\x93" R"(|bis|to|until)\s*(19|20)\d\d(\D|$))", std::regex::icase);
  return raw(any_text_matches(c.r, re) ? 3 : 0);
}

template <typename Pred>
Outcome distribution_ratio(const Ctx& c, Pred pred, const char* what) {
  std::size_t hit = 0;
  for (const auto& d : c.r.distributions) hit += pred(d);
  return ratio(hit, c.r.distributions.size(), what);
}

Outcome m_open_format(const Ctx& c) {
  return distribution_ratio(
      c, [](const dcat::Distribution& d) { auto f = format_of(d); return f && f->known && !proprietary(f->type); },
      "open formats");
}

Outcome m_standard_format(const Ctx& c) {
  return distribution_ratio(
      c, [](const dcat::Distribution& d) { auto f = format_of(d); return f && f->known; }, "registered media types");
}

Outcome m_machine_format(const Ctx& c) {
  return distribution_ratio(
      c, [](const dcat::Distribution& d) { auto f = format_of(d); return f && f->known && machine_processable(f->type); },
      "machine-processable formats");
}

Outcome m_data_identifier(const Ctx& c) {
  return distribution_ratio(c, [](const dcat::Distribution& d) { return d.node.is_iri(); }, "IRI-identified");
}

Outcome m_data_serializations(const Ctx& c) {
  std::set<std::string> types;
  for (const auto& d : c.r.distributions) {
    auto f = format_of(d);
    if (f && f->known && machine_processable(f->type)) types.insert(f->type);
  }
  return raw(double(types.size()));
}

using MetricFn = Outcome (*)(const Ctx&);

const MetricFn kMetrics[kMetricCount] = {
    m_extent, m_weighted_extent, m_categorization, m_description, m_currency, m_update_rate, m_readability,
    m_language_errors, m_examples, m_license_present, m_license_title,
    [](const Ctx& c) { return license_ratio(c, [](const license::LicenseSpec& l) { return l.known; }, "known licenses"); },
    [](const Ctx& c) {
      return license_ratio(c, [](const license::LicenseSpec& l) { return l.known && l.open; }, "open licenses");
    },
    [](const Ctx& c) {
      return license_ratio(
          c, [](const license::LicenseSpec& l) { return l.known && (l.permissions & license::perm::kCommercialUse); },
          "licenses allowing commercial use");
    },
    [](const Ctx& c) {
      return license_ratio(c, [](const license::LicenseSpec& l) { return l.classifiable(); }, "classified licenses");
    },
    m_provider_identity, m_trusted_provider, m_authenticity, m_signatures, m_channels, m_trust_votes, m_correctness,
    m_confirmation, m_serializations, m_languages, m_access_methods, m_open_metadata, m_registered_format,
    m_typed_literals, m_vocabulary, m_date_format, m_identifier, m_locality, m_labeled, m_linked_data, m_standards,
    m_contact_url, m_contact_email, m_classic_contact, m_open_access, m_retrievability, m_version, m_time_span,
    m_open_format, m_standard_format, m_machine_format, m_data_identifier, m_data_serializations};

}  // namespace

MetricResult evaluate_metric(int id, const dcat::DatasetRecord& record, const rdf::Graph& slice,
                             const CivetConfig& config, const ExternalStores& stores) {
  const auto& d = descriptor(id);
  MetricResult res;
  res.id = id;
  res.key = d.key;
  if (d.tier == Tier::LongRunning && !config.include_long_running) {
    res.reason = NotComputedReason::SkippedLongRunning;
    return res;
  }
  Outcome out;
  try {
    Ctx ctx{record, slice, config, stores, Term::iri(record.iri)};
    out = kMetrics[id - 1](ctx);
  } catch (const std::exception& e) {
    res.reason = NotComputedReason::EvaluationError;
    res.detail = e.what();
    return res;
  }
  res.detail = std::move(out.detail);
  if (out.skipped) {
    res.reason = out.skipped;
    return res;
  }
  res.raw = out.raw;
  res.score = out.raw ? map_score(d.kind, *out.raw, d.bands) : 0;
  return res;
}

std::vector<MetricResult> evaluate_all(const dcat::DatasetRecord& record, const rdf::Graph& slice,
                                       const CivetConfig& config, const ExternalStores& stores, NotComputedLog* log) {
  std::vector<MetricResult> out;
  out.reserve(kMetricCount);
  for (int id = 1; id <= kMetricCount; ++id) {
    out.push_back(evaluate_metric(id, record, slice, config, stores));
    const auto& m = out.back();
    if (!m.computed() && log && config.log_if_not_computed) log->append(record.iri, m.key, *m.reason);
  }
  return out;
}

// ---------------------------------------------------------------------------
// DQV

std::string metric_iri(std::string_view key) { return std::string(vocab::kMetricBase) + std::string(key); }

std::string measurement_iri(std::string_view dataset, std::string_view key) {
  std::string k(dataset);
  k += '\x1f';
  k += key;
  return std::string(vocab::kMeasurementBase) + text::hex64(text::fnv1a64(k));
}

namespace {

Term iri(std::string_view v) { return Term::iri(std::string(v)); }

std::vector<Term> measurements_on(const rdf::Graph& g, const std::string& dataset) {
  std::vector<Term> out;
  Term ds = Term::iri(dataset);
  for (const auto& t : g) {
    if (t.predicate.value() == vocab::kDqvComputedOn && t.object == ds) out.push_back(t.subject);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

rdf::Graph to_dqv(const std::string& dataset, const std::vector<MetricResult>& results, bool remove_existing,
                  const rdf::Graph& prior) {
  rdf::Graph g = prior;
  if (remove_existing) {
    auto old = measurements_on(prior, dataset);
    std::set<Term> gone(old.begin(), old.end());
    for (const auto& t : prior) {
      if (gone.count(t.subject) || gone.count(t.object)) g.erase(t);
    }
  }
  Term ds = Term::iri(dataset);
  for (const auto& r : results) {
    if (!r.score) continue;
    Term m = Term::iri(measurement_iri(dataset, r.key));
    g.add(m, iri(vocab::kRdfType), iri(vocab::kDqvQualityMeasurement));
    g.add(m, iri(vocab::kDqvIsMeasurementOf), Term::iri(metric_iri(r.key)));
    g.add(m, iri(vocab::kDqvComputedOn), ds);
    g.add(m, iri(vocab::kDqvValue), Term::literal(std::to_string(*r.score), {}, std::string(vocab::kXsdInteger)));
    g.add(ds, iri(vocab::kDqvHasQualityMeasurement), m);
  }
  return g;
}

std::vector<Measurement> parse_dqv(const rdf::Graph& graph, const std::string& dataset) {
  std::vector<Measurement> out;
  for (const auto& m : measurements_on(graph, dataset)) {
    for (const auto& metric : graph.objects(m, vocab::kDqvIsMeasurementOf)) {
      std::string_view key = metric.value();
      if (!metric.is_iri() || !starts_with(key, vocab::kMetricBase)) continue;
      key.remove_prefix(vocab::kMetricBase.size());
      for (const auto& v : graph.objects(m, vocab::kDqvValue)) {
        int n = 0;
        const auto& s = v.value();
        auto res = std::from_chars(s.data(), s.data() + s.size(), n);
        if (!v.is_literal() || res.ec != std::errc() || res.ptr != s.data() + s.size()) continue;
        out.push_back({std::string(key), n});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::string, std::vector<Measurement>> parse_dqv_all(const rdf::Graph& graph) {
  std::set<std::string> datasets;
  for (const auto& t : graph)
    if (t.predicate.value() == vocab::kDqvComputedOn && t.object.is_iri()) datasets.insert(t.object.value());
  std::map<std::string, std::vector<Measurement>> out;
  for (const auto& d : datasets) {
    auto m = parse_dqv(graph, d);
    if (!m.empty()) out.emplace(d, std::move(m));
  }
  return out;
}

std::optional<double> aggregate(const std::vector<MetricResult>& results) {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& r : results)
    if (r.score) sum += *r.score, ++n;
  if (n == 0) return std::nullopt;
  return sum / double(n);
}

std::optional<double> aggregate(const std::vector<Measurement>& measurements) {
  if (measurements.empty()) return std::nullopt;
  double sum = 0;
  for (const auto& m : measurements) sum += m.value;
  return sum / double(measurements.size());
}

std::string format_scores(const std::vector<MetricResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.key;
    out += '\t';
    out += r.score ? std::to_string(*r.score) : std::string("nc:") + to_string(*r.reason);
    out += '\n';
  }
  return out;
}

}  // namespace metacat::quality
