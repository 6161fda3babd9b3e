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

#include "metacat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cctype>
#include <random>
#include <set>

namespace metacat::bench {

using search::DocEntry;
using search::SearchQuery;

namespace {

const char* const kSyllables[] = {"stadt", "bahn", "halte", "stelle", "ver",  "kehr", "um",    "welt", "was",
                                  "ser",   "schul", "netz", "plan",   "karte", "bau", "fläche", "wahl", "kreis",
                                  "park",  "haus",  "amt",  "rad",    "weg",  "strom", "wald",  "feld", "luft",
                                  "lärm",  "bus",   "linie", "grund", "stück", "müll", "zone",  "bad",  "markt"};
constexpr std::size_t kVocab = 4000;

const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> words = [] {
    std::mt19937_64 r(7);
    std::set<std::string> seen;
    std::vector<std::string> out;
    const std::size_t ns = std::size(kSyllables);
    while (out.size() < kVocab) {
      std::string w = kSyllables[r() % ns];
      std::size_t extra = 1 + r() % 2;
      for (std::size_t i = 0; i < extra; ++i) w += kSyllables[r() % ns];
      if (r() % 25 == 0) w = std::string(kSyllables[r() % ns]) + "-" + w;
      if (seen.insert(w).second) out.push_back(w);
    }
    return out;
  }();
  return words;
}

class Zipf {
 public:
  explicit Zipf(std::size_t n) : cdf_(n) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) cdf_[i] = acc += 1.0 / double(i + 1);
    for (auto& c : cdf_) c /= acc;
  }
  std::size_t operator()(std::mt19937_64& r) const {
    double u = std::uniform_real_distribution<double>(0, 1)(r);
    return std::size_t(std::lower_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

std::string phrase(std::mt19937_64& r, const Zipf& z, std::size_t words) {
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) out += ' ';
    std::string w = vocabulary()[std::min(z(r), kVocab - 1)];
    if (r() % 3 == 0) w[0] = char(std::toupper(static_cast<unsigned char>(w[0])));
    out += w;
  }
  return out;
}

const std::vector<std::string>& themes() {
  static const std::vector<std::string> t = [] {
    std::vector<std::string> out;
    for (const char* c : {"AGRI", "ECON", "EDUC", "ENER", "ENVI", "GOVE", "HEAL", "INTR", "JUST", "REGI", "SOCI",
                          "TECH", "TRAN"})
      out.push_back(std::string("http://publications.europa.eu/resource/authority/data-theme/") + c);
    return out;
  }();
  return t;
}

std::string publisher(std::size_t i) { return "http://example.org/org/" + std::to_string(i); }
std::string catalog(std::size_t i) { return "http://example.org/catalog/" + std::to_string(i); }
std::string license(std::size_t i) { return "http://example.org/license/" + std::to_string(i); }

// Query terms skip the head of the distribution, which behaves like stop words.
std::string query_text(std::mt19937_64& r, const Zipf& z) {
  std::size_t n = 1 + r() % 2;
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rank;
    do rank = z(r);
    while (rank < 20);
    if (i) out += ' ';
    out += vocabulary()[rank];
  }
  return out;
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

bool same(const search::SearchResult& a, const search::SearchResult& b) {
  if (a.total != b.total || a.hits.size() != b.hits.size() || a.facets != b.facets) return false;
  for (std::size_t i = 0; i < a.hits.size(); ++i)
    if (a.hits[i].doc != b.hits[i].doc || a.hits[i].score != b.hits[i].score) return false;
  return true;
}

}  // namespace

std::vector<DocEntry> synthetic_corpus(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 r(seed);
  Zipf words(kVocab), pubs(200), cats(10), lics(12);
  std::vector<DocEntry> docs;
  docs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    DocEntry d;
    char iri[64];
    std::snprintf(iri, sizeof iri, "http://example.org/dataset/%07zu", i);
    d.dataset = iri;
    d.titles.push_back({phrase(r, words, 3 + r() % 4), "de"});
    if (r() % 4 == 0) d.titles.push_back({phrase(r, words, 3), "en"});
    d.descriptions.push_back({phrase(r, words, 15 + r() % 26), "de"});
    std::size_t nk = 2 + r() % 3;
    for (std::size_t k = 0; k < nk; ++k) d.keywords.push_back({phrase(r, words, 1), "de"});
    std::size_t nt = r() % 3;
    for (std::size_t k = 0; k < nt; ++k) {
      const auto& t = themes()[r() % themes().size()];
      if (std::find(d.categories.begin(), d.categories.end(), t) == d.categories.end()) d.categories.push_back(t);
    }
    if (r() % 10) d.publisher = publisher(pubs(r));
    d.catalog = catalog(cats(r));
    if (r() % 5) d.license = license(lics(r));
    if (r() % 3) d.point = dcat::GeoPoint{47.3 + double(r() % 7800) / 1000.0, 5.9 + double(r() % 9100) / 1000.0};
    d.quality = double(r() % 51) / 10.0;
    docs.push_back(std::move(d));
  }
  return docs;
}

std::vector<SearchQuery> simple_queries(const std::vector<DocEntry>&, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 r(seed);
  Zipf words(kVocab);
  std::vector<SearchQuery> out;
  for (std::size_t i = 0; i < n; ++i) {
    SearchQuery q;
    q.text = query_text(r, words);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<SearchQuery> facet_queries(const std::vector<DocEntry>& docs, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 r(seed ^ 0x5bd1e995u);
  Zipf words(kVocab);
  std::vector<SearchQuery> out;
  for (std::size_t i = 0; i < n; ++i) {
    SearchQuery q;
    q.text = query_text(r, words);
    q.facets[search::FacetField::Category].values.insert(themes()[r() % themes().size()]);
    if (r() % 2 && !docs.empty()) {
      const auto& d = docs[r() % docs.size()];
      if (d.publisher) q.facets[search::FacetField::Publisher].values.insert(*d.publisher);
    }
    if (r() % 2) q.facets[search::FacetField::License].values.insert(license(r() % 12));
    out.push_back(std::move(q));
  }
  return out;
}

Report run_search_bench(const Config& cfg) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  auto docs = synthetic_corpus(cfg.docs, cfg.seed);
  rep.docs = docs.size();
  search::InvertedIndex idx;
  rep.build_ms = time_ms([&] { idx = search::InvertedIndex::build(docs); });
  search::LinearScanSearcher scan(docs);

  auto run = [&](const std::vector<SearchQuery>& qs, Timing& t) {
    std::vector<double> a, b;
    for (const auto& q : qs) {
      search::SearchResult ra, rb;
      a.push_back(time_ms([&] { ra = idx.search(q); }));
      b.push_back(time_ms([&] { rb = scan.search(q); }));
      if (!same(ra, rb)) ++rep.mismatches;
    }
    t.indexed_median_ms = median(a);
    t.scan_median_ms = median(b);
  };
  run(simple_queries(docs, cfg.queries, cfg.seed), rep.simple);
  run(facet_queries(docs, cfg.queries, cfg.seed), rep.facet);
  rep.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string format_report(const Report& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "docs %zu, index build %.0f ms\n"
                "simple queries: indexed %.3f ms, scan %.3f ms, speedup %.1fx\n"
                "facet queries:  indexed %.3f ms, scan %.3f ms, speedup %.1fx\n"
                "result mismatches %zu, total %.1f s\n",
                r.docs, r.build_ms, r.simple.indexed_median_ms, r.simple.scan_median_ms, r.simple.speedup(),
                r.facet.indexed_median_ms, r.facet.scan_median_ms, r.facet.speedup(), r.mismatches, r.total_seconds);
  return buf;
}

}  // namespace metacat::bench
