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
// All-pairs reference for duplicate detection over already-normalized URLs.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::set<std::string> trigrams(const std::string& s) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + 3 <= s.size(); ++i) out.insert(s.substr(i, 3));
  return out;
}

// ASCII only; the generators never produce anything else.
inline double jaccard(const std::string& a, const std::string& b) {
  if (a.size() < 3 || b.size() < 3) return a == b ? 1.0 : 0.0;
  auto ta = trigrams(a), tb = trigrams(b);
  std::size_t inter = 0;
  for (const auto& t : ta) inter += tb.count(t);
  return double(inter) / double(ta.size() + tb.size() - inter);
}

/// dataset -> normalized URLs; returns components of size >= 2, each sorted,
/// ordered by first member.
inline std::vector<std::vector<std::string>> clusters(const std::map<std::string, std::vector<std::string>>& urls,
                                                      double threshold) {
  std::vector<std::string> ids;
  for (const auto& [k, v] : urls) ids.push_back(k);
  std::vector<std::size_t> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::map<std::string, std::set<std::string>> grams;
  for (const auto& [k, v] : urls)
    for (const auto& u : v) grams.try_emplace(u, trigrams(u));
  auto sim = [&](const std::string& a, const std::string& b) {
    if (a.size() < 3 || b.size() < 3) return a == b ? 1.0 : 0.0;
    const auto& ta = grams.at(a);
    const auto& tb = grams.at(b);
    std::size_t inter = 0;
    for (const auto& t : ta) inter += tb.count(t);
    return double(inter) / double(ta.size() + tb.size() - inter);
  };
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      bool linked = false;
      for (const auto& a : urls.at(ids[i]))
        for (const auto& b : urls.at(ids[j]))
          if (!linked) linked = sim(a, b) >= threshold;
      if (linked) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[find(i)].push_back(ids[i]);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
