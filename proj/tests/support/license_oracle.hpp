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
// Set-based restatement of the license algebra, read straight from the TSV.

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

struct OLicense {
  std::string id;
  std::set<std::string> perms, duties, prohibs;
};

inline std::set<std::string> split_attrs(const std::string& s) {
  std::set<std::string> out;
  if (s == "-" || s.empty()) return out;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, '|')) out.insert(x);
  return out;
}

inline std::vector<OLicense> read_license_tsv(const std::string& path) {
  std::ifstream in(path);
  std::vector<OLicense> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string f[6];
    for (auto& x : f) std::getline(ss, x, '\t');
    out.push_back({f[0], split_attrs(f[3]), split_attrs(f[4]), split_attrs(f[5])});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

template <typename S>
bool subset(const S& a, const S& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct OComposite {
  std::set<std::string> perms, duties, prohibs;
  std::set<std::string> pins;
};

inline OComposite compose(const std::vector<OLicense>& in) {
  OComposite c;
  c.perms = in.front().perms;
  for (const auto& l : in) {
    std::set<std::string> keep;
    for (const auto& p : c.perms)
      if (l.perms.count(p)) keep.insert(p);
    c.perms = keep;
    c.duties.insert(l.duties.begin(), l.duties.end());
    c.prohibs.insert(l.prohibs.begin(), l.prohibs.end());
    if (l.duties.count("share_alike")) c.pins.insert(l.id);
  }
  return c;
}

inline bool compatible(const std::vector<OLicense>& in) {
  auto c = compose(in);
  if (c.pins.size() > 1) return false;
  for (const auto& l : in) {
    if (!c.pins.count(l.id)) continue;
    for (const auto& p : l.perms)
      if (c.prohibs.count(p)) return false;
  }
  return true;
}

inline std::vector<std::string> candidates(const std::vector<OLicense>& in, const std::vector<OLicense>& db) {
  std::vector<std::string> out;
  if (!compatible(in)) return out;
  auto c = compose(in);
  for (const auto& l : db) {
    if (!subset(l.perms, c.perms)) continue;
    if (!subset(c.duties, l.duties)) continue;
    if (!subset(c.prohibs, l.prohibs)) continue;
    if (!c.pins.empty() && !c.pins.count(l.id)) continue;
    out.push_back(l.id);
  }
  return out;
}

}  // namespace oracle
