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
// Download-URL corpora for the duplicate detector.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "metacat/dcat.hpp"
#include "metacat/dedup.hpp"

namespace gen {

inline metacat::dcat::DatasetRecord rec(const std::string& iri, std::vector<std::string> downloads) {
  metacat::dcat::DatasetRecord r;
  r.iri = iri;
  int i = 0;
  for (auto& u : downloads) {
    metacat::dcat::Distribution d;
    d.node = metacat::rdf::Term::iri(iri + "/dist/" + std::to_string(i++));
    d.download_url = std::move(u);
    r.distributions.push_back(d);
  }
  return r;
}

inline std::vector<std::vector<std::string>> members(const std::vector<metacat::dedup::DuplicateCluster>& cs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cs) out.push_back(c.members);
  return out;
}

inline std::map<std::string, std::vector<std::string>> oracle_urls(const std::vector<metacat::dcat::DatasetRecord>& records) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& r : records) {
    for (const auto& d : r.distributions) {
      if (d.download_url) out[r.iri].push_back(metacat::dedup::normalize_url(*d.download_url));
    }
  }
  return out;
}

// URLs drawn from a small template space so that near-duplicates at every
// threshold band occur.
inline std::string near_url(std::mt19937_64& rng) {
  static const std::vector<std::string> hosts{"data.example.org", "opendata.stadt.example", "geo.example.net"};
  static const std::vector<std::string> dirs{"files", "download", "export/csv", "api/v1"};
  static const std::vector<std::string> names{"haltestellen", "baustellen", "parkplaetze", "schulen", "wahl"};
  static const std::vector<std::string> ext{".csv", ".json", ".xlsx", ""};
  std::string u = "http://" + hosts[rng() % hosts.size()] + "/" + dirs[rng() % dirs.size()] + "/" +
                  names[rng() % names.size()];
  if (rng() % 2) u += "-" + std::to_string(2015 + rng() % 8);
  u += ext[rng() % ext.size()];
  if (rng() % 5 == 0) u += "?v=" + std::to_string(rng() % 3);
  return u;
}

inline std::vector<metacat::dcat::DatasetRecord> random_corpus(std::mt19937_64& rng, std::size_t n) {
  std::vector<metacat::dcat::DatasetRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> urls;
    for (std::size_t k = rng() % 3; k > 0; --k) urls.push_back(near_url(rng));
    auto r = rec("http://ex.org/ds/" + std::to_string(1000 + i), urls);
    if (rng() % 7 == 0 && !r.distributions.empty()) r.distributions[0].download_url.reset();
    out.push_back(r);
  }
  return out;
}


}  // namespace gen
