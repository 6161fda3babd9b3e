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
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "metacat/dcat.hpp"
#include "metacat/rdf.hpp"

namespace metacat::search {

/// Lowercased terms. Letters and digits form words; a hyphen stays inside a
/// term when it sits between two word characters ("S-Bahn" -> "s-bahn").
std::vector<std::string> tokenize(std::string_view text);

enum class Field : std::uint8_t { Title = 0, Keywords = 1, Description = 2 };
inline constexpr std::size_t kFieldCount = 3;

enum class FacetField : std::uint8_t { Category = 0, Publisher = 1, Catalog = 2, License = 3 };
inline constexpr std::size_t kFacetCount = 4;
const char* to_string(FacetField f);
std::optional<FacetField> parse_facet_field(std::string_view name);

struct DocEntry {
  std::string dataset;
  std::vector<dcat::LangString> titles;
  std::vector<dcat::LangString> descriptions;
  std::vector<dcat::LangString> keywords;
  std::vector<std::string> categories;
  std::optional<std::string> publisher;
  std::optional<std::string> catalog;
  std::optional<std::string> license;
  std::optional<dcat::GeoPoint> point;
  std::optional<double> quality;

  /// Values of one facet field; empty when the doc has none.
  std::vector<std::string> facet_values(FacetField f) const;
  bool operator==(const DocEntry&) const = default;
};

/// Search document for a record. Publisher is the agent IRI, else its name;
/// license is the distribution license used most often (ties: smallest IRI);
/// the point is the first spatial annotation with a centroid.
DocEntry doc_from_record(const dcat::DatasetRecord& record, std::optional<double> quality = std::nullopt);

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
  std::array<double, kFieldCount> boost{2.0, 1.5, 1.0};  // title, keywords, description
};

/// Synonym lists keyed by noun. Lookup uses the symmetric closure of the
/// declared entries; `entries()` keeps what was declared.
class SynonymTable {
 public:
  SynonymTable() = default;

  /// Terms are lowercased and trimmed; self-references and blanks are dropped.
  void add(std::string_view noun, const std::vector<std::string>& synonyms);
  /// Declared nouns (after normalization) with their synonyms.
  const std::map<std::string, std::set<std::string>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// Closure lookup; empty set when unknown.
  const std::set<std::string>& lookup(std::string_view term) const;

  /// UTF-8 TSV, one `noun<TAB>syn1|syn2|...` line per entry. `#` lines and
  /// blank lines are skipped. Throws ParseError on a line without a tab.
  static SynonymTable parse_tsv(std::string_view text, std::string_view source = "synonyms");
  static SynonymTable load(const std::string& path);
  std::string to_tsv() const;

 private:
  std::map<std::string, std::set<std::string>> entries_;
  std::map<std::string, std::set<std::string>, std::less<>> closure_;
};

struct WeightedTerm {
  std::string term;
  double weight = 1.0;
  bool operator==(const WeightedTerm&) const = default;
};

/// Originals (deduplicated, in order) at 1.0, then each synonym of an
/// original once at 0.5. Synonyms are not expanded further.
std::vector<WeightedTerm> expand_synonyms(const std::vector<std::string>& terms, const SynonymTable& table,
                                          double synonym_weight = 0.5);

enum class Combinator : std::uint8_t { Or, And };

struct FacetFilter {
  std::set<std::string> values;
  Combinator mode = Combinator::Or;
};

struct BoundingBox {
  dcat::GeoPoint sw;
  dcat::GeoPoint ne;
};

/// Throws ValidationError for out-of-range or NaN coordinates, sw above ne,
/// or a box crossing the antimeridian (sw.lon > ne.lon).
void validate(const BoundingBox& box);
/// Inclusive containment.
bool contains(const BoundingBox& box, const dcat::GeoPoint& p);

inline constexpr double kEarthRadiusKm = 6371.0088;
double haversine_km(const dcat::GeoPoint& a, const dcat::GeoPoint& b);

enum class SortMode : std::uint8_t { Relevance, Distance };

struct SearchQuery {
  std::string text;
  std::map<FacetField, FacetFilter> facets;
  std::optional<BoundingBox> bbox;
  SortMode sort = SortMode::Relevance;
  std::optional<dcat::GeoPoint> origin;  // required for SortMode::Distance
  bool synonyms = false;
  std::size_t page = 1;
  std::size_t size = 10;
};

inline constexpr std::size_t kMaxPageSize = 100;

/// Throws ValidationError on page 0, size outside 1..100, a bad bbox, or
/// distance sort without a valid origin.
void validate(const SearchQuery& q);

struct Hit {
  std::uint32_t doc = 0;
  double score = 0;
  std::optional<double> distance_km;
};

using FacetCounts = std::map<std::string, std::map<std::string, std::size_t>>;

struct SearchResult {
  std::size_t total = 0;
  std::size_t page = 1;
  std::size_t size = 10;
  std::vector<Hit> hits;
  FacetCounts facets;  // every facet field present, possibly empty
};

/// Bbox filter over plain entries; docs without a point are dropped.
std::vector<DocEntry> bbox_filter(const std::vector<DocEntry>& entries, const BoundingBox& box);
/// Ascending great-circle distance, ties by IRI; docs without a point last in
/// IRI order.
std::vector<DocEntry> distance_sort(const std::vector<DocEntry>& entries, const dcat::GeoPoint& origin);

struct Posting {
  std::uint32_t doc;
  Field field;
  std::uint32_t tf;
  bool operator==(const Posting&) const = default;
};

/// Immutable inverted index. Doc ids are dense and follow IRI order.
///
/// Matching is disjunctive: with query terms present, a document is a result
/// when any term hits any field. Blank text matches every document with
/// score 0. Facet filters combine per field with the field's combinator and
/// across fields with AND.
class InvertedIndex {
 public:
  InvertedIndex() = default;
  /// Throws ValidationError naming a duplicated dataset IRI, or for a doc
  /// without IRI or with an out-of-range point.
  static InvertedIndex build(std::vector<DocEntry> entries, Bm25Params params = {});

  std::size_t size() const noexcept { return docs_.size(); }
  const DocEntry& doc(std::uint32_t id) const { return docs_.at(id); }
  const std::vector<DocEntry>& docs() const noexcept { return docs_; }
  std::optional<std::uint32_t> find(std::string_view iri) const;
  const Bm25Params& params() const noexcept { return params_; }

  /// Postings of one term sorted by (doc, field); empty when unknown.
  const std::vector<Posting>& postings(std::string_view term) const;
  std::size_t vocabulary_size() const noexcept { return postings_.size(); }
  std::size_t field_length(std::uint32_t doc, Field f) const;
  double average_field_length(Field f) const;
  /// Documents whose field contains the term.
  std::size_t document_frequency(std::string_view term, Field f) const;

  SearchResult search(const SearchQuery& q, const SynonymTable* synonyms = nullptr) const;

  /// Rebuilds from the doc store and compares postings and statistics.
  bool consistent() const;

  /// Deterministic binary form (CBOR).
  std::string serialize() const;
  /// Throws ParseError on malformed input.
  static InvertedIndex deserialize(std::string_view bytes);
  void save(const std::string& path) const;
  static InvertedIndex load(const std::string& path);

 private:
  void index_facets();

  Bm25Params params_;
  std::vector<DocEntry> docs_;
  std::unordered_map<std::string, std::vector<Posting>> postings_;
  std::vector<std::array<std::uint32_t, kFieldCount>> lengths_;
  std::array<double, kFieldCount> avg_length_{};
  // facet values are interned per field; ids follow value order
  std::array<std::vector<std::string>, kFacetCount> facet_names_;
  std::array<std::map<std::string, std::uint32_t, std::less<>>, kFacetCount> facet_ids_;
  std::array<std::vector<std::vector<std::uint32_t>>, kFacetCount> facet_docs_;  // value id -> doc ids
  std::vector<std::array<std::vector<std::uint32_t>, kFacetCount>> doc_facets_;  // doc -> value ids
};

/// BM25 term weight for one field. Shared by the index and the scan baseline.
double bm25(double tf, double df, double n_docs, double field_len, double avg_len, const Bm25Params& p);

/// Baseline without an index. Corpus statistics (document frequencies and
/// average field lengths) are kept; document text is tokenized per query.
/// Returns the same results as InvertedIndex::search.
class LinearScanSearcher {
 public:
  explicit LinearScanSearcher(std::vector<DocEntry> entries, Bm25Params params = {});
  SearchResult search(const SearchQuery& q, const SynonymTable* synonyms = nullptr) const;
  std::size_t size() const noexcept { return docs_.size(); }

 private:
  Bm25Params params_;
  std::vector<DocEntry> docs_;
  std::array<std::unordered_map<std::string, std::uint32_t>, kFieldCount> df_;
  std::array<double, kFieldCount> avg_length_{};
};

/// Lexicon predicates. Entries are typed ontolex:LexicalEntry, carry a
/// language (dct:language, literal code or an IRI ending in the code), a part
/// of speech (lexinfo:partOfSpeech lexinfo:noun), a canonical form
/// (ontolex:canonicalForm to a literal, or to a node with
/// ontolex:writtenRep) and synonyms (lexinfo:synonym to another entry or a
/// literal).
namespace lexicon {
inline constexpr const char* kLexicalEntry = "http://www.w3.org/ns/lemon/ontolex#LexicalEntry";
inline constexpr const char* kCanonicalForm = "http://www.w3.org/ns/lemon/ontolex#canonicalForm";
inline constexpr const char* kWrittenRep = "http://www.w3.org/ns/lemon/ontolex#writtenRep";
inline constexpr const char* kPartOfSpeech = "http://www.lexinfo.net/ontology/3.0/lexinfo#partOfSpeech";
inline constexpr const char* kNoun = "http://www.lexinfo.net/ontology/3.0/lexinfo#noun";
inline constexpr const char* kSynonym = "http://www.lexinfo.net/ontology/3.0/lexinfo#synonym";
inline constexpr const char* kLanguage = "http://purl.org/dc/terms/language";
}  // namespace lexicon

struct ExtractStats {
  std::size_t german_nouns = 0;
  std::size_t with_synonyms = 0;
  std::size_t synonyms = 0;
  std::size_t kept = 0;
};

/// German nouns with at least one synonym, as canonical forms. When
/// `corpus_terms` is given only nouns occurring in it are kept.
SynonymTable extract_synonyms(const rdf::Graph& lexicon, const std::set<std::string>* corpus_terms = nullptr,
                              ExtractStats* stats = nullptr);

/// Terms of all titles and descriptions.
std::set<std::string> corpus_terms(const std::vector<DocEntry>& docs);

}  // namespace metacat::search
