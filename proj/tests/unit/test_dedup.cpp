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

#include <random>

#include "dedup_gen.hpp"
#include "dedup_oracle.hpp"
#include "doctest.h"
#include "metacat/dedup.hpp"
#include "metacat/error.hpp"
#include "metacat/vocab.hpp"

using namespace metacat;
using dedup::normalize_url;

using gen::members;
using gen::near_url;
using gen::oracle_urls;
using gen::random_corpus;
using gen::rec;

TEST_CASE("normalize_url examples") {
  CHECK(normalize_url("HTTP://Example.org/data/") == "http://example.org/data");
  CHECK(normalize_url("http://example.org:80/a") == "http://example.org/a");
  CHECK(normalize_url("http://example.org/a") == "http://example.org/a");
  CHECK(normalize_url("https://example.org:443/a") == "https://example.org/a");
  CHECK(normalize_url("http://example.org:443/a") == "http://example.org:443/a");
  CHECK(normalize_url("http://example.org/") == "http://example.org/");
  CHECK(normalize_url("http://example.org/a//?x=1") == "http://example.org/a?x=1");
  CHECK(normalize_url("http://example.org/%7Euser/%41b%2Fc") == "http://example.org/~user/Ab%2Fc");
  CHECK(normalize_url("  http://Ex.ORG/Path  ") == "http://ex.org/Path");
  bool valid = true;
  CHECK(normalize_url("  not a url ") == "not a url");
  CHECK_FALSE(normalize_url("mailto:x@example.org", &valid).empty());
  CHECK_FALSE(valid);
  normalize_url("http://example.org", &valid);
  CHECK(valid);
}

TEST_CASE("normalize_url is idempotent") {
  std::mt19937_64 rng(17);
  const std::vector<std::string> tricky{"HTTP://A.b:80//", "https://x.org:443/%7e%7E/", "ftp://Host:21/x/",
                                        "http://u:P@Host.ORG:8080/a/b/", "junk", "http://h/%2541/", ""};
  for (const auto& u : tricky) CHECK(normalize_url(normalize_url(u)) == normalize_url(u));
  for (int i = 0; i < 500; ++i) {
    auto u = near_url(rng);
    if (rng() % 2) u += "/";
    if (rng() % 3 == 0) u.replace(0, 4, "HTTP");
    auto n = normalize_url(u);
    CHECK(normalize_url(n) == n);
  }
}

TEST_CASE("trigram similarity examples") {
  CHECK(dedup::trigram_similarity("abcd", "abcd") == 1.0);
  CHECK(dedup::trigram_similarity("abc", "xyz") == 0.0);
  CHECK(dedup::trigram_similarity("abcd", "abce") == doctest::Approx(1.0 / 3));
  CHECK(dedup::trigram_similarity("ab", "ab") == 1.0);
  CHECK(dedup::trigram_similarity("ab", "abc") == 0.0);
  CHECK(dedup::trigram_similarity("", "") == 1.0);
  CHECK(dedup::trigram_similarity("aaaa", "aaa") == 1.0);  // equal trigram sets
  // code points, not bytes
  CHECK(dedup::trigram_similarity("äöü", "äöü") == 1.0);
  CHECK(dedup::trigram_similarity("äöüx", "äöüy") == doctest::Approx(1.0 / 3));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto a = near_url(rng), b = near_url(rng);
    CHECK(dedup::trigram_similarity(a, b) == doctest::Approx(oracle::jaccard(a, b)));
    CHECK(dedup::trigram_similarity(a, b) == dedup::trigram_similarity(b, a));
  }
}

TEST_CASE("find_duplicates examples") {
  auto a = rec("http://ex.org/a", {"http://files.example.org/x.csv"});
  auto b = rec("http://ex.org/b", {"http://files.example.org/x.csv"});
  auto cs = dedup::find_duplicates({a, b}, 1.0);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].members == std::vector<std::string>{"http://ex.org/a", "http://ex.org/b"});
  REQUIRE(cs[0].evidence.size() == 1);
  CHECK(cs[0].evidence[0].similarity == 1.0);

  auto c = rec("http://ex.org/c", {"http://files.example.org/y/"});
  auto d = rec("http://ex.org/d", {"HTTP://files.example.org:80/y"});
  CHECK(members(dedup::find_duplicates({c, d}, 1.0)).size() == 1);

  dcat::DatasetRecord empty1, empty2;
  empty1.iri = "http://ex.org/e1";
  empty2.iri = "http://ex.org/e2";
  CHECK(dedup::find_duplicates({empty1, empty2}, 0.5).empty());
  CHECK(dedup::find_duplicates({}, 0.5).empty());

  // access URLs are not download URLs
  auto e = rec("http://ex.org/e", {});
  dcat::Distribution dist;
  dist.node = rdf::Term::iri("http://ex.org/e/d");
  dist.access_url = "http://files.example.org/x.csv";
  e.distributions.push_back(dist);
  CHECK(dedup::find_duplicates({a, e}, 1.0).empty());

  // one dataset listing the same URL twice is not its own duplicate
  CHECK(dedup::find_duplicates({rec("http://ex.org/s", {"http://x.org/f", "http://x.org/f/"})}, 1.0).empty());

  CHECK_THROWS_AS(dedup::find_duplicates({a}, 0.0), ValidationError);
  CHECK_THROWS_AS(dedup::find_duplicates({a}, 1.5), ValidationError);
}

TEST_CASE("clusters are connected components") {
  // a~b and b~c by exact URL, a and c share nothing
  auto a = rec("http://ex.org/a", {"http://x.org/1"});
  auto b = rec("http://ex.org/b", {"http://x.org/1", "http://x.org/2"});
  auto c = rec("http://ex.org/c", {"http://x.org/2"});
  auto z = rec("http://ex.org/0", {"http://x.org/9"});
  auto cs = dedup::find_duplicates({c, z, b, a}, 1.0);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].members.size() == 3);
  CHECK(cs[0].evidence.size() == 2);
  auto links = dedup::emit_links(cs);
  CHECK(links.size() == 3);
  for (const auto& t : links) {
    CHECK(t.predicate.value() == vocab::kSkosExactMatch);
    CHECK(t.subject.value() < t.object.value());
  }
  CHECK(dedup::emit_links({}).empty());

  auto report = dedup::csv_report(cs);
  CHECK(report.rfind("dataset_a,dataset_b,url_a,url_b,similarity\n", 0) == 0);
  CHECK(std::count(report.begin(), report.end(), '\n') == 3);

  auto ev = dedup::evidence_by_dataset({a, b, c, z}, cs);
  CHECK(ev.size() == 3);
  CHECK(ev.at("http://ex.org/b").others == std::vector<std::string>{"http://ex.org/a", "http://ex.org/c"});
  CHECK(ev.at("http://ex.org/b").matched_distributions == 2);
  CHECK(ev.at("http://ex.org/a").matched_distributions == 1);
}

TEST_CASE("emit_links pair counts") {
  dedup::DuplicateCluster two{{"http://a", "http://b"}, {}};
  dedup::DuplicateCluster three{{"http://c", "http://d", "http://e"}, {}};
  CHECK(dedup::emit_links({two}).size() == 1);
  CHECK(dedup::emit_links({three}).size() == 3);
  CHECK(dedup::emit_links({two, three}).size() == 4);
}

TEST_CASE("planted clusters are recovered exactly at threshold 1.0") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 20; ++round) {
    std::vector<dcat::DatasetRecord> records;
    std::vector<std::vector<std::string>> planted;
    std::size_t k = 1 + rng() % 10;
    int next = 0;
    auto iri = [&] { return "http://ex.org/p/" + std::to_string(100000 + (rng() % 900000)) + "-" + std::to_string(next++); };
    for (std::size_t c = 0; c < k; ++c) {
      std::string url = "http://planted.example.org/cluster/" + std::to_string(round) + "/" + std::to_string(c) +
                        "/file-" + std::to_string(rng() % 100000) + ".csv";
      std::vector<std::string> ms;
      for (std::size_t m = 0, n = 2 + rng() % 4; m < n; ++m) {
        // surface variants that normalize to the same URL
        std::string v = url;
        if (rng() % 3 == 0) v += "/";
        if (rng() % 3 == 0) v.replace(0, 7, "HTTP://");
        if (rng() % 3 == 0) v.insert(v.find(".org") + 4, ":80");
        auto id = iri();
        std::vector<std::string> urls{v};
        if (rng() % 2) urls.push_back("http://noise.example.org/" + id + "/" + std::to_string(rng()));
        records.push_back(rec(id, urls));
        ms.push_back(id);
      }
      std::sort(ms.begin(), ms.end());
      planted.push_back(ms);
    }
    for (std::size_t i = 0, n = rng() % 100; i < n && records.size() < 200; ++i) {
      auto id = iri();
      records.push_back(rec(id, {"http://single.example.org/" + id + "/" + std::to_string(rng())}));
    }
    std::shuffle(records.begin(), records.end(), rng);
    std::sort(planted.begin(), planted.end());
    CHECK(records.size() <= 200);
    CHECK(members(dedup::find_duplicates(records, 1.0)) == planted);
    CHECK(members(dedup::find_duplicates(records, 1.0)) == oracle::clusters(oracle_urls(records), 1.0));
  }
}

TEST_CASE("threshold sweep equals the all-pairs oracle") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    auto records = random_corpus(rng, 20 + rng() % 181);
    auto urls = oracle_urls(records);
    for (double t : {0.5, 0.8, 0.9, 1.0}) {
      INFO("round " << round << " threshold " << t);
      auto got = dedup::find_duplicates(records, t);
      CHECK(members(got) == oracle::clusters(urls, t));
      for (const auto& c : got) {
        for (const auto& e : c.evidence) {
          CHECK(e.similarity >= t);
          CHECK(e.similarity == doctest::Approx(oracle::jaccard(e.url_a, e.url_b)));
        }
      }
    }
  }
}

TEST_CASE("raising the threshold never enlarges a cluster") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 500; ++round) {
    auto records = random_corpus(rng, 5 + rng() % 40);
    double lo = 0.05 + (rng() % 95) / 100.0;
    double hi = std::min(1.0, lo + (rng() % 50) / 100.0);
    auto low = dedup::find_duplicates(records, lo);
    auto high = dedup::find_duplicates(records, hi);
    for (const auto& c : high) {
      bool contained = std::any_of(low.begin(), low.end(), [&](const auto& big) {
        return std::includes(big.members.begin(), big.members.end(), c.members.begin(), c.members.end());
      });
      CHECK(contained);
    }
  }
}
