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

#include "metacat/enrich.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "embedded_data.hpp"
#include "file_util.hpp"
#include "metacat/error.hpp"
#include "metacat/text.hpp"

namespace metacat::enrich {

using dcat::DatasetRecord;
using dcat::PlaceLevel;

std::unordered_map<std::string, std::uint32_t> trigram_counts(std::string_view s) {
  std::unordered_map<std::string, std::uint32_t> out;
  std::u32string word;
  auto flush = [&] {
    if (word.empty()) return;
    std::u32string padded = U" " + word + U" ";
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) ++out[text::encode_utf8(padded.substr(i, 3))];
    word.clear();
  };
  for (char32_t cp : text::decode_utf8(s)) {
    if (text::is_letter(cp)) {
      word.push_back(text::to_lower(cp));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

LanguageProfile LanguageProfile::parse(std::string lang, std::string_view body) {
  LanguageProfile p;
  p.lang_ = std::move(lang);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find('\n', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view line = body.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    // The gram may start or end with a space, so only the count is trimmed.
    std::size_t tab = line.rfind('\t');
    if (tab == std::string_view::npos || tab == 0) throw ParseError("expected gram<TAB>count", line_no);
    auto count_text = text::trim(line.substr(tab + 1));
    double count = 0;
    auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count < 0)
      throw ParseError("bad count '" + std::string(count_text) + "'", line_no);
    double w = std::log1p(count);
    p.weights_[std::string(line.substr(0, tab))] += w;
  }
  double sq = 0;
  for (const auto& [g, w] : p.weights_) sq += w * w;
  p.norm_ = std::sqrt(sq);
  return p;
}

LanguageProfile LanguageProfile::load(std::string lang, const std::string& path) {
  std::string body = detail::read_file(path, "language profile");
  try {
    return parse(std::move(lang), body);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), path);
  }
}

double LanguageProfile::similarity(const std::unordered_map<std::string, std::uint32_t>& grams) const {
  if (norm_ == 0 || grams.empty()) return 0;
  double dot = 0, sq = 0;
  for (const auto& [g, n] : grams) {
    double w = std::log1p(static_cast<double>(n));
    sq += w * w;
    auto it = weights_.find(g);
    if (it != weights_.end()) dot += w * it->second;
  }
  if (sq == 0) return 0;
  return dot / (norm_ * std::sqrt(sq));
}

LanguageDetector::LanguageDetector(std::vector<LanguageProfile> profiles) : profiles_(std::move(profiles)) {
  if (profiles_.empty()) throw ValidationError("language detector needs at least one profile");
}

const LanguageDetector& LanguageDetector::bundled() {
  static const LanguageDetector det = [] {
    std::vector<LanguageProfile> ps;
    for (const char* lang : {"de", "en"}) {
      std::string name = std::string("profiles/") + lang + ".profile";
      auto body = embedded::find(name);
      if (!body) throw IoError("bundled profile missing: " + name);
      ps.push_back(LanguageProfile::parse(lang, *body));
    }
    return LanguageDetector(std::move(ps));
  }();
  return det;
}

std::vector<std::pair<std::string, double>> LanguageDetector::similarities(std::string_view s) const {
  auto grams = trigram_counts(s);
  std::vector<std::pair<std::string, double>> out;
  for (const auto& p : profiles_) out.emplace_back(p.lang(), p.similarity(grams));
  return out;
}

std::optional<LanguageGuess> LanguageDetector::detect(std::string_view s) const {
  auto trimmed = text::trim(s);
  if (text::decode_utf8(trimmed).size() < kMinLength) return std::nullopt;
  auto sims = similarities(trimmed);
  std::size_t best = 0;
  for (std::size_t i = 1; i < sims.size(); ++i) {
    if (sims[i].second > sims[best].second) best = i;
  }
  if (sims[best].second <= 0) return std::nullopt;
  // softmax relative to the best score keeps the exponentials bounded
  double denom = 0;
  for (const auto& [lang, sim] : sims) denom += std::exp(kSoftmaxScale * (sim - sims[best].second));
  return LanguageGuess{sims[best].first, std::clamp(1.0 / denom, 0.0, 1.0)};
}

std::optional<LanguageGuess> detect_language(std::string_view s) {
  return LanguageDetector::bundled().detect(s);
}

DatasetRecord refine_language_tags(const DatasetRecord& record, double threshold) {
  return refine_language_tags(record, threshold, [](std::string_view s) { return detect_language(s); });
}

DatasetRecord refine_language_tags(const DatasetRecord& record, double threshold, const Detector& detect) {
  if (!(threshold > 0 && threshold <= 1)) throw ValidationError("language threshold must be in (0,1]");
  DatasetRecord out = record;
  auto refine = [&](std::vector<dcat::LangString>& values) {
    for (auto& v : values) {
      if (!v.lang.empty()) continue;
      auto guess = detect(v.text);
      if (guess && guess->confidence >= threshold && !guess->lang.empty()) v.lang = text::to_lower(guess->lang);
    }
  };
  refine(out.titles);
  refine(out.descriptions);
  return out;
}

// ---- gazetteer ----

std::string normalize_place_name(std::string_view name) {
  std::string key;
  for (const auto& w : text::words(name)) {
    if (!key.empty()) key += ' ';
    key += w;
  }
  return key;
}

int level_rank(PlaceLevel level) {
  switch (level) {
    case PlaceLevel::Nuts0: return 0;
    case PlaceLevel::Nuts1: return 1;
    case PlaceLevel::Nuts2: return 2;
    case PlaceLevel::Nuts3: return 3;
    case PlaceLevel::Lau: return 4;
    default: return 5;
  }
}

Gazetteer::Gazetteer(std::vector<GazetteerEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.id.empty()) throw ValidationError("gazetteer entry with empty id");
    if (level_rank(e.level) > 4) throw ValidationError("gazetteer entry " + e.id + ": unsupported level");
    if (!e.centroid.valid()) throw ValidationError("gazetteer entry " + e.id + ": coordinates out of range");
    if (e.population && *e.population < 0) throw ValidationError("gazetteer entry " + e.id + ": negative population");
    if (!by_id_.emplace(e.id, i).second) throw ValidationError("duplicate gazetteer id " + e.id);
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.parent) {
      auto it = by_id_.find(*e.parent);
      if (it == by_id_.end()) throw ValidationError("gazetteer entry " + e.id + ": unknown parent " + *e.parent);
      if (level_rank(entries_[it->second].level) >= level_rank(e.level))
        throw ValidationError("gazetteer entry " + e.id + ": parent " + *e.parent + " is not a coarser level");
    }
    std::string key = normalize_place_name(e.name);
    if (key.empty()) throw ValidationError("gazetteer entry " + e.id + ": empty name");
    by_name_[key].push_back(i);
    max_words_ = std::max<std::size_t>(max_words_, std::count(key.begin(), key.end(), ' ') + 1);
  }
  // Tie-break: coarser level, then larger population, then id.
  for (auto& [key, ids] : by_name_) {
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = entries_[a];
      const auto& y = entries_[b];
      if (level_rank(x.level) != level_rank(y.level)) return level_rank(x.level) < level_rank(y.level);
      auto px = x.population.value_or(-1), py = y.population.value_or(-1);
      if (px != py) return px > py;
      return x.id < y.id;
    });
  }
}

namespace {

double parse_coord(std::string_view s, const char* what, std::size_t line) {
  s = text::trim(s);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  return v;
}

}  // namespace

Gazetteer Gazetteer::parse(std::string_view tsv, const std::string& source) {
  std::vector<GazetteerEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto f = text::split(line, '\t');
    if (f.size() != 7) throw ParseError("expected 7 tab-separated fields", line_no, source);
    GazetteerEntry e;
    e.id = std::string(text::trim(f[0]));
    e.name = std::string(text::trim(f[1]));
    auto level = dcat::parse_place_level(text::trim(f[2]));
    if (!level || *level == PlaceLevel::Point) throw ParseError("bad level '" + f[2] + "'", line_no, source);
    e.level = *level;
    auto parent = text::trim(f[3]);
    if (!parent.empty()) e.parent = std::string(parent);
    try {
      e.centroid = {parse_coord(f[4], "latitude", line_no), parse_coord(f[5], "longitude", line_no)};
    } catch (const ParseError& err) {
      throw ParseError(err.message(), line_no, source);
    }
    auto pop = text::trim(f[6]);
    if (!pop.empty()) {
      std::int64_t n = 0;
      auto [ptr, ec] = std::from_chars(pop.data(), pop.data() + pop.size(), n);
      if (ec != std::errc() || ptr != pop.data() + pop.size())
        throw ParseError("bad population '" + std::string(pop) + "'", line_no, source);
      e.population = n;
    }
    entries.push_back(std::move(e));
  }
  return Gazetteer(std::move(entries));
}

Gazetteer Gazetteer::load(const std::string& path) {
  return parse(detail::read_file(path, "gazetteer"), path);
}

const Gazetteer& Gazetteer::bundled() {
  static const Gazetteer gaz = [] {
    auto body = embedded::find("gazetteer-de.tsv");
    if (!body) throw IoError("bundled gazetteer missing");
    return parse(*body, "gazetteer-de.tsv");
  }();
  return gaz;
}

const GazetteerEntry* Gazetteer::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

std::vector<const GazetteerEntry*> Gazetteer::lookup(std::string_view key) const {
  std::vector<const GazetteerEntry*> out;
  auto it = by_name_.find(std::string(key));
  if (it == by_name_.end()) return out;
  for (auto i : it->second) out.push_back(&entries_[i]);
  return out;
}

std::string Gazetteer::entry_iri(const GazetteerEntry& e) {
  if (e.level == PlaceLevel::Lau) return "urn:metacat:place:" + e.id;
  return "http://data.europa.eu/nuts/code/" + e.id;
}

std::vector<PlaceMatch> find_places(std::string_view s, const Gazetteer& gaz) {
  std::vector<PlaceMatch> out;
  auto ws = text::words(s);
  std::size_t i = 0;
  while (i < ws.size()) {
    std::size_t taken = 0;
    std::size_t longest = std::min(gaz.max_name_words(), ws.size() - i);
    for (std::size_t len = longest; len >= 1; --len) {
      std::string key = ws[i];
      for (std::size_t k = 1; k < len; ++k) key += ' ' + ws[i + k];
      auto hits = gaz.lookup(key);
      if (!hits.empty()) {
        out.push_back({hits.front(), std::move(key)});
        taken = len;
        break;
      }
    }
    i += taken ? taken : 1;
  }
  return out;
}

DatasetRecord annotate_places(const DatasetRecord& record, const Gazetteer& gaz) {
  DatasetRecord out = record;
  std::set<std::string> seen;
  for (const auto& g : out.spatial) {
    if (g.place_iri) seen.insert(*g.place_iri);
  }
  auto scan = [&](const std::vector<dcat::LangString>& values) {
    for (const auto& v : values) {
      for (const auto& m : find_places(v.text, gaz)) {
        std::string iri = Gazetteer::entry_iri(*m.entry);
        if (!seen.insert(iri).second) continue;
        dcat::GeoAnnotation a;
        a.place_iri = iri;
        a.place_name = m.entry->name;
        a.level = m.entry->level;
        a.centroid = m.entry->centroid;
        out.spatial.push_back(std::move(a));
      }
    }
  };
  scan(record.titles);
  scan(record.descriptions);
  scan(record.keywords);
  return out;
}

}  // namespace metacat::enrich
