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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "metacat/dcat.hpp"
#include "metacat/quality.hpp"
#include "metacat/rdf.hpp"

namespace metacat::dedup {

/// Lowercases scheme and host, drops default ports (80/443), strips trailing
/// slashes from non-root paths and decodes percent-encoded unreserved
/// characters. Idempotent. A URL without `scheme://host` comes back trimmed
/// with `*valid` set to false.
std::string normalize_url(std::string_view url, bool* valid = nullptr);

/// Jaccard coefficient of the character-trigram sets (code points, no
/// padding). Strings shorter than three characters compare by equality.
double trigram_similarity(std::string_view a, std::string_view b);

struct Evidence {
  std::string dataset_a;  // dataset_a < dataset_b
  std::string dataset_b;
  std::string url_a;
  std::string url_b;
  double similarity = 0;

  bool operator==(const Evidence&) const = default;
};

struct DuplicateCluster {
  std::vector<std::string> members;  // sorted, size >= 2
  std::vector<Evidence> evidence;    // one row per linked pair, sorted

  bool operator==(const DuplicateCluster&) const = default;
};

/// Datasets are linked when any pair of their normalized download URLs has
/// trigram similarity >= threshold; clusters are connected components,
/// ordered by smallest member. Throws ValidationError unless threshold is in
/// (0,1].
///
/// Candidate pairs come from a prefix-filtered trigram index, which is exact
/// for every threshold (a pair can only reach the threshold if the rarest
/// trigrams of both URLs overlap).
std::vector<DuplicateCluster> find_duplicates(const std::vector<dcat::DatasetRecord>& records, double threshold);

/// One skos:exactMatch triple per unordered member pair, smaller IRI as subject.
rdf::Graph emit_links(const std::vector<DuplicateCluster>& clusters);

/// CSV with header `dataset_a,dataset_b,url_a,url_b,similarity`.
std::string csv_report(const std::vector<DuplicateCluster>& clusters);

/// Cross-source evidence per clustered dataset, as consumed by the quality
/// metrics.
std::map<std::string, quality::DuplicateEvidence> evidence_by_dataset(
    const std::vector<dcat::DatasetRecord>& records, const std::vector<DuplicateCluster>& clusters);

}  // namespace metacat::dedup
