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
#include <string>
#include <vector>

#include "metacat/search.hpp"

namespace metacat::bench {

/// Synthetic portal-like corpus: Zipf-distributed vocabulary, German-style
/// compound words, facet values and points inside Germany. Deterministic for
/// a given seed.
std::vector<search::DocEntry> synthetic_corpus(std::size_t n, std::uint64_t seed);

/// Text-only queries and the same kind of queries with one or two facet
/// filters.
std::vector<search::SearchQuery> simple_queries(const std::vector<search::DocEntry>& docs, std::size_t n,
                                                std::uint64_t seed);
std::vector<search::SearchQuery> facet_queries(const std::vector<search::DocEntry>& docs, std::size_t n,
                                               std::uint64_t seed);

struct Config {
  std::size_t docs = 50000;
  std::size_t queries = 40;  // per query kind
  std::uint64_t seed = 42;
};

struct Timing {
  double indexed_median_ms = 0;
  double scan_median_ms = 0;
  double speedup() const { return indexed_median_ms > 0 ? scan_median_ms / indexed_median_ms : 0; }
};

struct Report {
  std::size_t docs = 0;
  double build_ms = 0;
  Timing simple;
  Timing facet;
  std::size_t mismatches = 0;  // queries where index and scan disagree
  double total_seconds = 0;
};

/// Times InvertedIndex::search against LinearScanSearcher::search on the same
/// queries and checks that both return identical pages and totals.
Report run_search_bench(const Config& cfg);

std::string format_report(const Report& r);

}  // namespace metacat::bench
