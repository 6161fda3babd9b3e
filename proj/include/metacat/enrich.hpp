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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "metacat/dcat.hpp"

namespace metacat::enrich {

// ---- language detection ----

struct LanguageGuess {
  std::string lang;
  double confidence = 0;  // in [0,1]
};

/// Character trigrams of `text`: lowercased letter runs padded with one
/// space on each side.
std::unordered_map<std::string, std::uint32_t> trigram_counts(std::string_view text);

/// A trigram frequency profile; weights are log(1 + count).
class LanguageProfile {
 public:
  /// Lines are `trigram<TAB>count`; the trigram itself may contain spaces.
  static LanguageProfile parse(std::string lang, std::string_view text);
  static LanguageProfile load(std::string lang, const std::string& path);

  const std::string& lang() const { return lang_; }
  std::size_t size() const { return weights_.size(); }
  /// Cosine similarity between this profile and the trigrams of a text.
  double similarity(const std::unordered_map<std::string, std::uint32_t>& grams) const;

 private:
  std::string lang_;
  std::unordered_map<std::string, double> weights_;
  double norm_ = 0;
};

class LanguageDetector {
 public:
  static constexpr std::size_t kMinLength = 20;  // code points
  /// Sharpness of the softmax over profile similarities.
  static constexpr double kSoftmaxScale = 20.0;

  explicit LanguageDetector(std::vector<LanguageProfile> profiles);
  /// de + en profiles shipped with the library.
  static const LanguageDetector& bundled();

  std::optional<LanguageGuess> detect(std::string_view text) const;
  /// Raw cosine similarity per language, in profile order.
  std::vector<std::pair<std::string, double>> similarities(std::string_view text) const;

 private:
  std::vector<LanguageProfile> profiles_;
};

std::optional<LanguageGuess> detect_language(std::string_view text);

using Detector = std::function<std::optional<LanguageGuess>(std::string_view)>;

inline constexpr double kDefaultLanguageThreshold = 0.75;

/// Tags untagged titles and descriptions whose guess reaches `threshold`.
/// Tagged literals are left alone. Throws ValidationError for a threshold
/// outside (0,1].
dcat::DatasetRecord refine_language_tags(const dcat::DatasetRecord& record,
                                         double threshold = kDefaultLanguageThreshold);
dcat::DatasetRecord refine_language_tags(const dcat::DatasetRecord& record, double threshold,
                                         const Detector& detect);

// ---- gazetteer ----

struct GazetteerEntry {
  std::string id;
  std::string name;
  dcat::PlaceLevel level = dcat::PlaceLevel::Lau;
  std::optional<std::string> parent;
  dcat::GeoPoint centroid;
  std::optional<std::int64_t> population;
};

/// Lowercased word sequence used as the name-index key.
std::string normalize_place_name(std::string_view name);

/// 0 for NUTS0 up to 4 for LAU; coarser levels have smaller ranks.
int level_rank(dcat::PlaceLevel level);

class Gazetteer {
 public:
  Gazetteer() = default;
  /// Validates ids, parents, hierarchy and coordinates.
  explicit Gazetteer(std::vector<GazetteerEntry> entries);

  /// TSV `id name level parent_id lat lon population`; `#` lines and blank
  /// lines are skipped.
  static Gazetteer parse(std::string_view tsv, const std::string& source = "<gazetteer>");
  static Gazetteer load(const std::string& path);
  static const Gazetteer& bundled();

  const std::vector<GazetteerEntry>& entries() const { return entries_; }
  const GazetteerEntry* find(std::string_view id) const;
  /// Entries whose normalized name equals `key`, best candidate first.
  std::vector<const GazetteerEntry*> lookup(std::string_view key) const;
  std::size_t max_name_words() const { return max_words_; }

  /// NUTS codes map to the EU NUTS IRIs, everything else to a local URN.
  static std::string entry_iri(const GazetteerEntry& e);

 private:
  std::vector<GazetteerEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_name_;
  std::size_t max_words_ = 0;
};

struct PlaceMatch {
  const GazetteerEntry* entry;
  std::string surface;  // matched words as they appear, lowercased
};

/// Longest-match scan of one text.
std::vector<PlaceMatch> find_places(std::string_view text, const Gazetteer& gaz);

/// Appends one annotation per distinct matched entry found in titles,
/// descriptions and keywords. Existing spatial values are kept.
dcat::DatasetRecord annotate_places(const dcat::DatasetRecord& record, const Gazetteer& gaz);

}  // namespace metacat::enrich
