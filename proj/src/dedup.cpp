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

#include "metacat/dedup.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <unordered_map>

#include "metacat/error.hpp"
#include "metacat/text.hpp"
#include "metacat/vocab.hpp"

namespace metacat::dedup {

namespace {

bool unreserved(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '.' ||
         c == '_' || c == '~';
}

int hex(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string decode_unreserved(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      int hi = hex(s[i + 1]), lo = hex(s[i + 2]);
      if (hi >= 0 && lo >= 0) {
        char c = static_cast<char>(hi * 16 + lo);
        if (unreserved(c)) {
          out += c;
          i += 2;
          continue;
        }
      }
    }
    out += s[i];
  }
  return out;
}

bool valid_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
  });
}

}  // namespace

std::string normalize_url(std::string_view url, bool* valid) {
  auto u = text::trim(url);
  auto fail = [&] {
    if (valid) *valid = false;
    return std::string(u);
  };
  auto sep = u.find("://");
  if (sep == std::string_view::npos || !valid_scheme(u.substr(0, sep))) return fail();
  std::string scheme = text::to_lower(u.substr(0, sep));
  auto rest = u.substr(sep + 3);
  auto auth_end = rest.find_first_of("/?#");
  auto authority = rest.substr(0, auth_end);
  auto tail = auth_end == std::string_view::npos ? std::string_view{} : rest.substr(auth_end);

  std::string userinfo;
  if (auto at = authority.rfind('@'); at != std::string_view::npos) {
    userinfo = std::string(authority.substr(0, at + 1));
    authority.remove_prefix(at + 1);
  }
  std::string_view host = authority, port;
  auto colon = authority.rfind(':');
  auto bracket = authority.rfind(']');
  if (colon != std::string_view::npos && (bracket == std::string_view::npos || colon > bracket)) {
    host = authority.substr(0, colon);
    port = authority.substr(colon + 1);
  }
  if (host.empty()) return fail();
  if ((scheme == "http" && port == "80") || (scheme == "https" && port == "443")) port = {};

  auto frag = tail.find('#');
  auto query = tail.find('?');
  auto path_end = std::min(frag, query);
  std::string path = decode_unreserved(tail.substr(0, path_end));
  while (path.size() > 1 && path.back() == '/') path.pop_back();
  std::string after;
  if (path_end != std::string_view::npos) {
    auto q = tail.substr(path_end);
    auto f = q.find('#');
    after = decode_unreserved(q.substr(0, f));
    if (f != std::string_view::npos) after += q.substr(f);
  }

  if (valid) *valid = true;
  std::string out = scheme + "://" + userinfo + text::to_lower(host);
  if (!port.empty()) out += ":" + std::string(port);
  return out + path + after;
}

namespace {

using Trigrams = std::vector<std::uint64_t>;  // sorted, unique

Trigrams trigrams_of(std::u32string_view s) {
  Trigrams out;
  for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
    out.push_back((std::uint64_t(s[i]) << 42) | (std::uint64_t(s[i + 1]) << 21) | std::uint64_t(s[i + 2]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t overlap(const Trigrams& a, const Trigrams& b) {
  std::size_t n = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else ++n, ++i, ++j;
  }
  return n;
}

double jaccard(const Trigrams& a, const Trigrams& b) {
  auto n = overlap(a, b);
  return double(n) / double(a.size() + b.size() - n);
}

}  // namespace

double trigram_similarity(std::string_view a, std::string_view b) {
  auto ua = text::decode_utf8(a), ub = text::decode_utf8(b);
  if (ua.size() < 3 || ub.size() < 3) return ua == ub ? 1.0 : 0.0;
  return jaccard(trigrams_of(ua), trigrams_of(ub));
}

std::vector<DuplicateCluster> find_duplicates(const std::vector<dcat::DatasetRecord>& records, double threshold) {
  if (!(threshold > 0 && threshold <= 1)) throw ValidationError("threshold must be in (0,1]");

  // dataset -> normalized download URLs
  std::map<std::string, std::set<std::string>> by_dataset;
  for (const auto& r : records) {
    for (const auto& d : r.distributions) {
      if (d.download_url) by_dataset[r.iri].insert(normalize_url(*d.download_url));
    }
  }
  std::vector<std::string> datasets;
  std::map<std::string, std::vector<std::size_t>> url_owners;
  for (const auto& [iri, urls] : by_dataset) {
    for (const auto& u : urls) url_owners[u].push_back(datasets.size());
    datasets.push_back(iri);
  }

  struct Url {
    std::string text;
    std::vector<std::size_t> owners;
    Trigrams grams;
    bool short_text;
  };
  std::vector<Url> urls;
  for (auto& [u, owners] : url_owners) {
    auto cps = text::decode_utf8(u);
    urls.push_back({u, std::move(owners), trigrams_of(cps), cps.size() < 3});
  }

  // best evidence per dataset pair; strings are only copied at the end
  struct Best {
    double sim;
    const std::string* ua;
    const std::string* ub;
  };
  std::map<std::pair<std::size_t, std::size_t>, Best> links;
  auto link = [&](std::size_t da, std::size_t db, const std::string* ua, const std::string* ub, double sim) {
    if (da == db) return;
    if (db < da) std::swap(da, db), std::swap(ua, ub);
    auto [it, fresh] = links.try_emplace(std::make_pair(da, db), Best{sim, ua, ub});
    if (fresh) return;
    auto& cur = it->second;
    if (sim > cur.sim || (sim == cur.sim && std::tie(*ua, *ub) < std::tie(*cur.ua, *cur.ub))) cur = {sim, ua, ub};
  };
  for (const auto& u : urls) {
    for (std::size_t i = 0; i < u.owners.size(); ++i)
      for (std::size_t j = i + 1; j < u.owners.size(); ++j) link(u.owners[i], u.owners[j], &u.text, &u.text, 1.0);
  }

  // Prefix filtering: order each URL's trigrams rarest first; two sets with
  // Jaccard >= t must share a trigram within the first |A| - ceil(t|A|) + 1.
  std::unordered_map<std::uint64_t, std::size_t> freq;
  for (const auto& u : urls)
    for (auto g : u.grams) ++freq[g];
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> postings;
  for (std::size_t i = 0; i < urls.size(); ++i) {
    const auto& u = urls[i];
    if (u.short_text || u.grams.empty()) continue;
    auto order = u.grams;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return std::tie(freq[a], a) < std::tie(freq[b], b); });
    auto need = static_cast<std::size_t>(std::ceil(threshold * double(order.size()) - 1e-9));
    std::size_t prefix = order.size() - std::max<std::size_t>(need, 1) + 1;
    std::set<std::size_t> candidates;
    for (std::size_t k = 0; k < prefix; ++k) {
      auto& list = postings[order[k]];
      candidates.insert(list.begin(), list.end());
      list.push_back(i);
    }
    for (auto j : candidates) {
      double sim = jaccard(u.grams, urls[j].grams);
      if (sim < threshold) continue;
      for (auto a : urls[j].owners)
        for (auto b : u.owners) link(a, b, &urls[j].text, &u.text, sim);
    }
  }

  std::vector<std::size_t> parent(datasets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [pair, b] : links) parent[find(pair.first)] = find(pair.second);

  std::map<std::size_t, DuplicateCluster> groups;
  for (std::size_t i = 0; i < datasets.size(); ++i) groups[find(i)].members.push_back(datasets[i]);
  for (const auto& [pair, b] : links) {
    groups[find(pair.first)].evidence.push_back({datasets[pair.first], datasets[pair.second], *b.ua, *b.ub, b.sim});
  }
  std::vector<DuplicateCluster> out;
  for (auto& [root, c] : groups) {
    if (c.members.size() < 2) continue;
    std::sort(c.members.begin(), c.members.end());
    std::sort(c.evidence.begin(), c.evidence.end(), [](const Evidence& a, const Evidence& b) {
      return std::tie(a.dataset_a, a.dataset_b) < std::tie(b.dataset_a, b.dataset_b);
    });
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.members < b.members; });
  return out;
}

rdf::Graph emit_links(const std::vector<DuplicateCluster>& clusters) {
  rdf::Graph g;
  auto p = rdf::Term::iri(std::string(vocab::kSkosExactMatch));
  for (const auto& c : clusters) {
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (std::size_t j = i + 1; j < c.members.size(); ++j)
        g.add(rdf::Term::iri(c.members[i]), p, rdf::Term::iri(c.members[j]));
  }
  return g;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_report(const std::vector<DuplicateCluster>& clusters) {
  std::string out = "dataset_a,dataset_b,url_a,url_b,similarity\n";
  for (const auto& c : clusters) {
    for (const auto& e : c.evidence) {
      char sim[32];
      std::snprintf(sim, sizeof sim, "%.6f", e.similarity);
      out += csv_field(e.dataset_a) + ',' + csv_field(e.dataset_b) + ',' + csv_field(e.url_a) + ',' +
             csv_field(e.url_b) + ',' + sim + '\n';
    }
  }
  return out;
}

std::map<std::string, quality::DuplicateEvidence> evidence_by_dataset(const std::vector<dcat::DatasetRecord>& records,
                                                                      const std::vector<DuplicateCluster>& clusters) {
  std::map<std::string, const dcat::DatasetRecord*> by_iri;
  for (const auto& r : records) by_iri.emplace(r.iri, &r);
  auto own_urls = [&](const std::string& iri) {
    std::vector<std::string> out;
    if (auto it = by_iri.find(iri); it != by_iri.end()) {
      for (const auto& d : it->second->distributions) {
        if (d.download_url) out.push_back(normalize_url(*d.download_url));
      }
    }
    return out;
  };

  std::map<std::string, quality::DuplicateEvidence> out;
  for (const auto& c : clusters) {
    for (const auto& m : c.members) {
      quality::DuplicateEvidence ev;
      std::set<std::string> elsewhere, catalogs;
      for (const auto& o : c.members) {
        if (o == m) continue;
        ev.others.push_back(o);
        for (auto& u : own_urls(o)) elsewhere.insert(std::move(u));
        auto it = by_iri.find(o);
        if (it != by_iri.end() && it->second->catalog) catalogs.insert(*it->second->catalog);
      }
      for (const auto& e : c.evidence) {
        if (e.dataset_a == m) elsewhere.insert(e.url_a);
        if (e.dataset_b == m) elsewhere.insert(e.url_b);
      }
      auto it = by_iri.find(m);
      if (it != by_iri.end() && it->second->catalog) catalogs.erase(*it->second->catalog);
      for (const auto& u : own_urls(m)) ev.matched_distributions += elsewhere.count(u) > 0;
      ev.other_catalogs = catalogs.size();
      out[m] = std::move(ev);
    }
  }
  return out;
}

}  // namespace metacat::dedup
