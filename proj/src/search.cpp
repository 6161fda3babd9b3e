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

#include "metacat/search.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "file_util.hpp"
#include "metacat/error.hpp"
#include "metacat/text.hpp"

namespace metacat::search {

using dcat::GeoPoint;
using json = nlohmann::json;

std::vector<std::string> tokenize(std::string_view s) {
  auto cps = text::decode_utf8(s);
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i];
    if (text::is_alnum(c)) {
      text::append_utf8(cur, text::to_lower(c));
    } else if (c == U'-' && !cur.empty() && i + 1 < cps.size() && text::is_alnum(cps[i + 1])) {
      cur.push_back('-');
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

namespace {

constexpr const char* kFacetNames[kFacetCount] = {"category", "publisher", "catalog", "license"};

const std::vector<dcat::LangString>& field_text(const DocEntry& d, std::size_t f) {
  switch (Field(f)) {
    case Field::Title: return d.titles;
    case Field::Keywords: return d.keywords;
    default: return d.descriptions;
  }
}

std::vector<std::string> field_tokens(const DocEntry& d, std::size_t f) {
  std::vector<std::string> out;
  for (const auto& ls : field_text(d, f)) {
    auto t = tokenize(ls.text);
    out.insert(out.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  return out;
}

bool valid_point(const GeoPoint& p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90 && p.lat <= 90 && p.lon >= -180 &&
         p.lon <= 180;
}

std::string normalize_term(std::string_view s) { return text::to_lower(text::collapse_whitespace(s)); }

std::vector<WeightedTerm> query_terms(const SearchQuery& q, const SynonymTable* table) {
  static const SynonymTable kEmpty;
  return expand_synonyms(tokenize(q.text), q.synonyms && table ? *table : kEmpty);
}

// Orders hits, cuts the requested page and fills the envelope. Facet counts
// are the caller's job since the index and the scan count differently.
void finish(std::vector<Hit>& hits, const SearchQuery& q, SearchResult& out) {
  out.total = hits.size();
  out.page = q.page;
  out.size = q.size;
  std::size_t from = (q.page - 1) * q.size;
  if (from >= hits.size()) return;
  std::size_t to = std::min(hits.size(), from + q.size);
  auto by_relevance = [](const Hit& a, const Hit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc < b.doc;
  };
  auto by_distance = [](const Hit& a, const Hit& b) {
    if (a.distance_km.has_value() != b.distance_km.has_value()) return a.distance_km.has_value();
    if (!a.distance_km) return a.doc < b.doc;
    if (*a.distance_km != *b.distance_km) return *a.distance_km < *b.distance_km;
    if (a.score != b.score) return a.score > b.score;
    return a.doc < b.doc;
  };
  if (q.sort == SortMode::Distance) {
    std::partial_sort(hits.begin(), hits.begin() + to, hits.end(), by_distance);
  } else {
    std::partial_sort(hits.begin(), hits.begin() + to, hits.end(), by_relevance);
  }
  out.hits.assign(hits.begin() + from, hits.begin() + to);
}

FacetCounts empty_facets() {
  FacetCounts f;
  for (const char* n : kFacetNames) f[n];
  return f;
}

bool has_facet(const DocEntry& d, FacetField f, const std::string& v) {
  switch (f) {
    case FacetField::Category: return std::find(d.categories.begin(), d.categories.end(), v) != d.categories.end();
    case FacetField::Publisher: return d.publisher == v;
    case FacetField::Catalog: return d.catalog == v;
    case FacetField::License: return d.license == v;
  }
  return false;
}

bool facet_match(const DocEntry& d, const SearchQuery& q) {
  for (const auto& [field, filt] : q.facets) {
    if (filt.values.empty()) continue;
    auto has = [&](const std::string& v) { return has_facet(d, field, v); };
    bool ok = filt.mode == Combinator::Or ? std::any_of(filt.values.begin(), filt.values.end(), has)
                                          : std::all_of(filt.values.begin(), filt.values.end(), has);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

const char* to_string(FacetField f) { return kFacetNames[std::size_t(f)]; }

std::optional<FacetField> parse_facet_field(std::string_view name) {
  for (std::size_t i = 0; i < kFacetCount; ++i)
    if (name == kFacetNames[i]) return FacetField(i);
  return std::nullopt;
}

std::vector<std::string> DocEntry::facet_values(FacetField f) const {
  switch (f) {
    case FacetField::Category: return categories;
    case FacetField::Publisher: return publisher ? std::vector<std::string>{*publisher} : std::vector<std::string>{};
    case FacetField::Catalog: return catalog ? std::vector<std::string>{*catalog} : std::vector<std::string>{};
    case FacetField::License: return license ? std::vector<std::string>{*license} : std::vector<std::string>{};
  }
  return {};
}

DocEntry doc_from_record(const dcat::DatasetRecord& r, std::optional<double> quality) {
  DocEntry d;
  d.dataset = r.iri;
  d.titles = r.titles;
  d.descriptions = r.descriptions;
  d.keywords = r.keywords;
  d.categories = r.themes;
  if (r.publisher) {
    if (r.publisher->iri) d.publisher = r.publisher->iri;
    else if (r.publisher->name) d.publisher = r.publisher->name;
  }
  d.catalog = r.catalog;
  std::map<std::string, std::size_t> uses;
  for (const auto& dist : r.distributions)
    if (dist.license) ++uses[*dist.license];
  std::size_t best = 0;
  for (const auto& [iri, n] : uses)
    if (n > best) best = n, d.license = iri;
  for (const auto& g : r.spatial) {
    if (g.centroid) {
      d.point = g.centroid;
      break;
    }
  }
  d.quality = quality;
  return d;
}

// --- synonyms ---------------------------------------------------------------

void SynonymTable::add(std::string_view noun, const std::vector<std::string>& synonyms) {
  std::string n = normalize_term(noun);
  if (n.empty()) return;
  for (const auto& s : synonyms) {
    std::string v = normalize_term(s);
    if (v.empty() || v == n) continue;
    entries_[n].insert(v);
    closure_[n].insert(v);
    closure_[v].insert(n);
  }
}

const std::set<std::string>& SynonymTable::lookup(std::string_view term) const {
  static const std::set<std::string> kNone;
  auto it = closure_.find(term);
  return it == closure_.end() ? kNone : it->second;
}

SynonymTable SynonymTable::parse_tsv(std::string_view body, std::string_view source) {
  SynonymTable t;
  std::size_t lineno = 0;
  for (const auto& raw : text::split(body, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected noun<TAB>synonyms", lineno, std::string(source));
    t.add(line.substr(0, tab), text::split(line.substr(tab + 1), '|'));
  }
  return t;
}

SynonymTable SynonymTable::load(const std::string& path) {
  return parse_tsv(detail::read_file(path, "synonym table"), path);
}

std::string SynonymTable::to_tsv() const {
  std::string out;
  for (const auto& [noun, syns] : entries_) {
    out += noun;
    out += '\t';
    bool first = true;
    for (const auto& s : syns) {
      if (!first) out += '|';
      out += s;
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::vector<WeightedTerm> expand_synonyms(const std::vector<std::string>& terms, const SynonymTable& table,
                                          double synonym_weight) {
  std::vector<WeightedTerm> out;
  std::set<std::string> seen;
  for (const auto& t : terms)
    if (seen.insert(t).second) out.push_back({t, 1.0});
  std::size_t originals = out.size();
  for (std::size_t i = 0; i < originals; ++i) {
    for (const auto& syn : table.lookup(out[i].term))
      for (auto& tok : tokenize(syn))
        if (seen.insert(tok).second) out.push_back({tok, synonym_weight});
  }
  return out;
}

// --- geometry ---------------------------------------------------------------

void validate(const BoundingBox& box) {
  if (!valid_point(box.sw) || !valid_point(box.ne)) throw ValidationError("bbox corner out of range");
  if (box.sw.lat > box.ne.lat) throw ValidationError("bbox south-west corner lies north of north-east corner");
  if (box.sw.lon > box.ne.lon) throw ValidationError("bbox crosses the antimeridian or has its corners swapped");
}

bool contains(const BoundingBox& box, const GeoPoint& p) {
  return p.lat >= box.sw.lat && p.lat <= box.ne.lat && p.lon >= box.sw.lon && p.lon <= box.ne.lon;
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  const double rad = M_PI / 180.0;
  double dlat = (b.lat - a.lat) * rad, dlon = (b.lon - a.lon) * rad;
  double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
             std::cos(a.lat * rad) * std::cos(b.lat * rad) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

std::vector<DocEntry> bbox_filter(const std::vector<DocEntry>& entries, const BoundingBox& box) {
  validate(box);
  std::vector<DocEntry> out;
  for (const auto& e : entries)
    if (e.point && contains(box, *e.point)) out.push_back(e);
  return out;
}

std::vector<DocEntry> distance_sort(const std::vector<DocEntry>& entries, const GeoPoint& origin) {
  std::vector<std::pair<std::optional<double>, const DocEntry*>> keyed;
  for (const auto& e : entries)
    keyed.emplace_back(e.point ? std::optional<double>(haversine_km(origin, *e.point)) : std::nullopt, &e);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.has_value() != b.first.has_value()) return a.first.has_value();
    if (a.first && *a.first != *b.first) return *a.first < *b.first;
    return a.second->dataset < b.second->dataset;
  });
  std::vector<DocEntry> out;
  for (const auto& [d, e] : keyed) out.push_back(*e);
  return out;
}

void validate(const SearchQuery& q) {
  if (q.page < 1) throw ValidationError("page must be >= 1");
  if (q.size < 1 || q.size > kMaxPageSize) throw ValidationError("size must be between 1 and 100");
  if (q.bbox) validate(*q.bbox);
  if (q.sort == SortMode::Distance && (!q.origin || !valid_point(*q.origin)))
    throw ValidationError("distance sort needs a valid lat/lon origin");
}

double bm25(double tf, double df, double n, double len, double avg, const Bm25Params& p) {
  if (tf <= 0) return 0;
  double idf = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
  return idf * (tf * (p.k1 + 1.0)) / (tf + p.k1 * (1.0 - p.b + p.b * len / avg));
}

// --- index ------------------------------------------------------------------

InvertedIndex InvertedIndex::build(std::vector<DocEntry> entries, Bm25Params params) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.dataset < b.dataset; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].dataset.empty()) throw ValidationError("search document without dataset IRI");
    if (i > 0 && entries[i].dataset == entries[i - 1].dataset)
      throw ValidationError("duplicate dataset IRI in index input: " + entries[i].dataset);
    if (entries[i].point && !valid_point(*entries[i].point))
      throw ValidationError("point out of range for " + entries[i].dataset);
  }
  InvertedIndex idx;
  idx.params_ = params;
  idx.docs_ = std::move(entries);
  idx.lengths_.resize(idx.docs_.size());
  std::array<std::uint64_t, kFieldCount> total{};
  for (std::uint32_t d = 0; d < idx.docs_.size(); ++d) {
    for (std::size_t f = 0; f < kFieldCount; ++f) {
      auto toks = field_tokens(idx.docs_[d], f);
      idx.lengths_[d][f] = std::uint32_t(toks.size());
      total[f] += toks.size();
      std::sort(toks.begin(), toks.end());
      for (std::size_t i = 0; i < toks.size();) {
        std::size_t j = i;
        while (j < toks.size() && toks[j] == toks[i]) ++j;
        idx.postings_[toks[i]].push_back({d, Field(f), std::uint32_t(j - i)});
        i = j;
      }
    }
  }
  for (std::size_t f = 0; f < kFieldCount; ++f)
    idx.avg_length_[f] = idx.docs_.empty() ? 0.0 : double(total[f]) / double(idx.docs_.size());
  idx.index_facets();
  return idx;
}

void InvertedIndex::index_facets() {
  for (std::size_t f = 0; f < kFacetCount; ++f) {
    facet_names_[f].clear();
    facet_ids_[f].clear();
    facet_docs_[f].clear();
    std::set<std::string> values;
    for (const auto& d : docs_)
      for (auto& v : d.facet_values(FacetField(f))) values.insert(std::move(v));
    for (const auto& v : values) {
      facet_ids_[f].emplace(v, std::uint32_t(facet_names_[f].size()));
      facet_names_[f].push_back(v);
    }
    facet_docs_[f].resize(facet_names_[f].size());
  }
  doc_facets_.assign(docs_.size(), {});
  for (std::uint32_t d = 0; d < docs_.size(); ++d) {
    for (std::size_t f = 0; f < kFacetCount; ++f) {
      auto& ids = doc_facets_[d][f];
      for (const auto& v : docs_[d].facet_values(FacetField(f))) ids.push_back(facet_ids_[f].find(v)->second);
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      for (auto id : ids) facet_docs_[f][id].push_back(d);
    }
  }
}

std::optional<std::uint32_t> InvertedIndex::find(std::string_view iri) const {
  auto it = std::lower_bound(docs_.begin(), docs_.end(), iri,
                             [](const DocEntry& d, std::string_view k) { return d.dataset < k; });
  if (it == docs_.end() || it->dataset != iri) return std::nullopt;
  return std::uint32_t(it - docs_.begin());
}

const std::vector<Posting>& InvertedIndex::postings(std::string_view term) const {
  static const std::vector<Posting> kNone;
  auto it = postings_.find(std::string(term));
  return it == postings_.end() ? kNone : it->second;
}

std::size_t InvertedIndex::field_length(std::uint32_t doc, Field f) const { return lengths_.at(doc)[std::size_t(f)]; }

double InvertedIndex::average_field_length(Field f) const { return avg_length_[std::size_t(f)]; }

std::size_t InvertedIndex::document_frequency(std::string_view term, Field f) const {
  const auto& list = postings(term);
  return std::size_t(std::count_if(list.begin(), list.end(), [&](const Posting& p) { return p.field == f; }));
}

SearchResult InvertedIndex::search(const SearchQuery& q, const SynonymTable* synonyms) const {
  validate(q);
  const std::size_t n = docs_.size();
  auto terms = query_terms(q, synonyms);

  // docs passing the facet filters, as a per-doc count of satisfied fields
  std::size_t active = 0;
  std::vector<std::uint8_t> passed;
  for (const auto& [field, filt] : q.facets) {
    if (filt.values.empty()) continue;
    if (active++ == 0) passed.assign(n, 0);
    const auto f = std::size_t(field);
    std::vector<std::uint32_t> seen;  // docs touched by this field, with repeats
    bool missing = false;
    for (const auto& v : filt.values) {
      auto it = facet_ids_[f].find(v);
      if (it == facet_ids_[f].end()) {
        missing = true;
        continue;
      }
      const auto& list = facet_docs_[f][it->second];
      seen.insert(seen.end(), list.begin(), list.end());
    }
    if (filt.mode == Combinator::And && missing) continue;  // nothing can carry every value
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size();) {
      std::size_t j = i;
      while (j < seen.size() && seen[j] == seen[i]) ++j;
      if (filt.mode == Combinator::Or || j - i == filt.values.size()) ++passed[seen[i]];
      i = j;
    }
  }
  auto allowed = [&](std::uint32_t d) {
    if (active > 0 && passed[d] != active) return false;
    if (q.bbox && !(docs_[d].point && contains(*q.bbox, *docs_[d].point))) return false;
    return true;
  };

  std::vector<Hit> hits;
  if (terms.empty()) {
    for (std::uint32_t d = 0; d < n; ++d)
      if (allowed(d)) hits.push_back({d, 0.0, std::nullopt});
  } else {
    std::vector<double> score(n, 0.0);
    std::vector<std::uint8_t> matched(n, 0);
    std::vector<std::uint32_t> touched;
    for (const auto& [term, weight] : terms) {
      auto it = postings_.find(term);
      if (it == postings_.end()) continue;
      std::array<double, kFieldCount> df{};
      for (const auto& p : it->second) df[std::size_t(p.field)] += 1;
      for (const auto& p : it->second) {
        if (active > 0 && passed[p.doc] != active) continue;
        auto f = std::size_t(p.field);
        double part = bm25(double(p.tf), df[f], double(n), double(lengths_[p.doc][f]), avg_length_[f], params_);
        score[p.doc] += weight * params_.boost[f] * part;
        if (!matched[p.doc]) matched[p.doc] = 1, touched.push_back(p.doc);
      }
    }
    for (auto d : touched)
      if (allowed(d)) hits.push_back({d, score[d], std::nullopt});
  }
  if (q.sort == SortMode::Distance) {
    for (auto& h : hits)
      if (docs_[h.doc].point) h.distance_km = haversine_km(*q.origin, *docs_[h.doc].point);
  }

  SearchResult out;
  out.facets = empty_facets();
  for (std::size_t f = 0; f < kFacetCount; ++f) {
    std::vector<std::size_t> counts(facet_names_[f].size(), 0);
    for (const auto& h : hits)
      for (auto id : doc_facets_[h.doc][f]) ++counts[id];
    auto& m = out.facets[kFacetNames[f]];
    for (std::size_t id = 0; id < counts.size(); ++id)
      if (counts[id]) m.emplace_hint(m.end(), facet_names_[f][id], counts[id]);
  }
  finish(hits, q, out);
  return out;
}

bool InvertedIndex::consistent() const {
  auto fresh = build(docs_, params_);
  if (fresh.postings_ != postings_ || fresh.lengths_ != lengths_ || fresh.avg_length_ != avg_length_) return false;
  return fresh.doc_facets_ == doc_facets_ && fresh.facet_docs_ == facet_docs_;
}

namespace {

json lang_list(const std::vector<dcat::LangString>& v) {
  json a = json::array();
  for (const auto& ls : v) a.push_back({ls.text, ls.lang});
  return a;
}

std::vector<dcat::LangString> lang_list(const json& a) {
  std::vector<dcat::LangString> out;
  for (const auto& e : a) out.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
  return out;
}

constexpr const char* kFormat = "metacat-index/1";

}  // namespace

std::string InvertedIndex::serialize() const {
  json j;
  j["format"] = kFormat;
  j["params"] = {{"k1", params_.k1}, {"b", params_.b}, {"boost", params_.boost}};
  json docs = json::array();
  for (const auto& d : docs_) {
    json e;
    e["iri"] = d.dataset;
    e["title"] = lang_list(d.titles);
    e["description"] = lang_list(d.descriptions);
    e["keyword"] = lang_list(d.keywords);
    e["category"] = d.categories;
    if (d.publisher) e["publisher"] = *d.publisher;
    if (d.catalog) e["catalog"] = *d.catalog;
    if (d.license) e["license"] = *d.license;
    if (d.point) e["point"] = {d.point->lat, d.point->lon};
    if (d.quality) e["quality"] = *d.quality;
    docs.push_back(std::move(e));
  }
  j["docs"] = std::move(docs);
  json lengths = json::array();
  for (const auto& l : lengths_) lengths.push_back(l);
  j["lengths"] = std::move(lengths);
  json postings = json::object();
  for (const auto& [term, list] : postings_) {
    json flat = json::array();
    for (const auto& p : list) {
      flat.push_back(p.doc);
      flat.push_back(std::uint8_t(p.field));
      flat.push_back(p.tf);
    }
    postings[term] = std::move(flat);
  }
  j["postings"] = std::move(postings);
  auto bytes = json::to_cbor(j);
  return std::string(bytes.begin(), bytes.end());
}

InvertedIndex InvertedIndex::deserialize(std::string_view bytes) {
  InvertedIndex idx;
  try {
    auto j = json::from_cbor(bytes.begin(), bytes.end());
    if (j.value("format", "") != kFormat) throw ParseError("not a search index", 0);
    idx.params_.k1 = j.at("params").at("k1").get<double>();
    idx.params_.b = j.at("params").at("b").get<double>();
    idx.params_.boost = j.at("params").at("boost").get<std::array<double, kFieldCount>>();
    for (const auto& e : j.at("docs")) {
      DocEntry d;
      d.dataset = e.at("iri").get<std::string>();
      d.titles = lang_list(e.at("title"));
      d.descriptions = lang_list(e.at("description"));
      d.keywords = lang_list(e.at("keyword"));
      d.categories = e.at("category").get<std::vector<std::string>>();
      if (e.contains("publisher")) d.publisher = e["publisher"].get<std::string>();
      if (e.contains("catalog")) d.catalog = e["catalog"].get<std::string>();
      if (e.contains("license")) d.license = e["license"].get<std::string>();
      if (e.contains("point")) d.point = GeoPoint{e["point"].at(0).get<double>(), e["point"].at(1).get<double>()};
      if (e.contains("quality")) d.quality = e["quality"].get<double>();
      if (!idx.docs_.empty() && !(idx.docs_.back().dataset < d.dataset))
        throw ParseError("index documents out of order", 0);
      idx.docs_.push_back(std::move(d));
    }
    const std::size_t n = idx.docs_.size();
    idx.lengths_ = j.at("lengths").get<std::vector<std::array<std::uint32_t, kFieldCount>>>();
    if (idx.lengths_.size() != n) throw ParseError("index length table does not match documents", 0);
    for (const auto& [term, flat] : j.at("postings").items()) {
      if (flat.size() % 3 != 0) throw ParseError("truncated postings for " + term, 0);
      auto& list = idx.postings_[term];
      for (std::size_t i = 0; i < flat.size(); i += 3) {
        auto doc = flat[i].get<std::uint32_t>();
        auto field = flat[i + 1].get<std::uint32_t>();
        if (doc >= n || field >= kFieldCount) throw ParseError("posting out of range for " + term, 0);
        list.push_back({doc, Field(field), flat[i + 2].get<std::uint32_t>()});
      }
    }
    std::array<std::uint64_t, kFieldCount> total{};
    for (const auto& l : idx.lengths_)
      for (std::size_t f = 0; f < kFieldCount; ++f) total[f] += l[f];
    for (std::size_t f = 0; f < kFieldCount; ++f) idx.avg_length_[f] = n ? double(total[f]) / double(n) : 0.0;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed search index: ") + e.what(), 0);
  }
  idx.index_facets();
  return idx;
}

void InvertedIndex::save(const std::string& path) const { detail::write_file(path, serialize()); }

InvertedIndex InvertedIndex::load(const std::string& path) {
  auto body = detail::read_file(path, "search index");
  try {
    return deserialize(body);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), 0, path);
  }
}

// --- scan baseline ----------------------------------------------------------

LinearScanSearcher::LinearScanSearcher(std::vector<DocEntry> entries, Bm25Params params)
    : params_(params), docs_(std::move(entries)) {
  std::sort(docs_.begin(), docs_.end(), [](const auto& a, const auto& b) { return a.dataset < b.dataset; });
  std::array<std::uint64_t, kFieldCount> total{};
  for (const auto& d : docs_) {
    for (std::size_t f = 0; f < kFieldCount; ++f) {
      auto toks = field_tokens(d, f);
      total[f] += toks.size();
      std::set<std::string> uniq(toks.begin(), toks.end());
      for (const auto& t : uniq) ++df_[f][t];
    }
  }
  for (std::size_t f = 0; f < kFieldCount; ++f)
    avg_length_[f] = docs_.empty() ? 0.0 : double(total[f]) / double(docs_.size());
}

SearchResult LinearScanSearcher::search(const SearchQuery& q, const SynonymTable* synonyms) const {
  validate(q);
  auto terms = query_terms(q, synonyms);
  const double n = double(docs_.size());
  std::vector<Hit> hits;
  for (std::uint32_t d = 0; d < docs_.size(); ++d) {
    const auto& doc = docs_[d];
    if (!facet_match(doc, q)) continue;
    if (q.bbox && !(doc.point && contains(*q.bbox, *doc.point))) continue;
    double score = 0;
    bool matched = terms.empty();
    if (!terms.empty()) {
      std::array<std::vector<std::string>, kFieldCount> toks;
      for (std::size_t f = 0; f < kFieldCount; ++f) toks[f] = field_tokens(doc, f);
      for (const auto& [term, weight] : terms) {
        for (std::size_t f = 0; f < kFieldCount; ++f) {
          auto tf = std::count(toks[f].begin(), toks[f].end(), term);
          if (tf == 0) continue;
          matched = true;
          double df = double(df_[f].at(term));
          double part = bm25(double(tf), df, n, double(toks[f].size()), avg_length_[f], params_);
          score += weight * params_.boost[f] * part;
        }
      }
    }
    if (!matched) continue;
    Hit h{d, score, std::nullopt};
    if (q.sort == SortMode::Distance && doc.point) h.distance_km = haversine_km(*q.origin, *doc.point);
    hits.push_back(h);
  }
  SearchResult out;
  out.facets = empty_facets();
  for (const auto& h : hits) {
    for (std::size_t f = 0; f < kFacetCount; ++f) {
      auto vals = docs_[h.doc].facet_values(FacetField(f));
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (const auto& v : vals) ++out.facets[kFacetNames[f]][v];
    }
  }
  finish(hits, q, out);
  return out;
}

// --- synonym extraction -----------------------------------------------------

namespace {

bool is_german(const rdf::Graph& g, const rdf::Term& entry) {
  for (const auto& o : g.objects(entry, search::lexicon::kLanguage)) {
    std::string code = o.value();
    if (o.is_iri()) code = code.substr(code.find_last_of("/#") + 1);
    code = text::to_lower(code);
    if (code == "de" || code == "deu" || code == "ger") return true;
  }
  return false;
}

bool is_noun(const rdf::Graph& g, const rdf::Term& entry) {
  for (const auto& o : g.objects(entry, search::lexicon::kPartOfSpeech))
    if (o.is_iri() && o.value() == search::lexicon::kNoun) return true;
  return false;
}

// First written form in term order.
std::optional<std::string> canonical_form(const rdf::Graph& g, const rdf::Term& node) {
  for (const auto& f : g.objects(node, search::lexicon::kCanonicalForm)) {
    if (f.is_literal()) return normalize_term(f.value());
    for (const auto& w : g.objects(f, search::lexicon::kWrittenRep))
      if (w.is_literal()) return normalize_term(w.value());
  }
  return std::nullopt;
}

}  // namespace

SynonymTable extract_synonyms(const rdf::Graph& lex, const std::set<std::string>* corpus, ExtractStats* stats) {
  ExtractStats st;
  SynonymTable table;
  for (const auto& entry : lex.subjects_of_type(lexicon::kLexicalEntry)) {
    // 1: German nouns
    if (!is_german(lex, entry) || !is_noun(lex, entry)) continue;
    ++st.german_nouns;
    // 2: with at least one synonym
    auto links = lex.objects(entry, lexicon::kSynonym);
    if (links.empty()) continue;
    ++st.with_synonyms;
    // 3: canonical form of the noun
    auto noun = canonical_form(lex, entry);
    if (!noun || noun->empty()) continue;
    // 4: canonical forms of the synonyms
    std::vector<std::string> syns;
    for (const auto& s : links) {
      if (s.is_literal()) syns.push_back(normalize_term(s.value()));
      else if (auto f = canonical_form(lex, s)) syns.push_back(*f);
    }
    if (corpus && !corpus->count(*noun)) continue;
    table.add(*noun, syns);
  }
  for (const auto& [noun, syns] : table.entries()) st.synonyms += syns.size();
  st.kept = table.size();
  if (stats) *stats = st;
  return table;
}

std::set<std::string> corpus_terms(const std::vector<DocEntry>& docs) {
  std::set<std::string> out;
  for (const auto& d : docs) {
    for (const auto* list : {&d.titles, &d.descriptions})
      for (const auto& ls : *list)
        for (auto& t : tokenize(ls.text)) out.insert(std::move(t));
  }
  return out;
}

}  // namespace metacat::search
