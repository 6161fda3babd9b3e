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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "metacat/dcat.hpp"
#include "metacat/error.hpp"
#include "metacat/vocab.hpp"
#include "record_gen.hpp"

using namespace metacat;
using dcat::DatasetRecord;

TEST_CASE("only a title") {
  auto g = rdf::parse_ntriples("<http://ex/d> <http://purl.org/dc/terms/title> \"Titel\"@de .\n");
  auto r = dcat::from_graph(g, "http://ex/d");
  REQUIRE(r.titles.size() == 1);
  CHECK(r.titles[0] == dcat::LangString{"Titel", "de"});
  CHECK(r.descriptions.empty());
  CHECK(r.distributions.empty());
  CHECK_FALSE(r.publisher);
  CHECK(r.extra.empty());
}

TEST_CASE("two distributions and a wrong IRI") {
  auto g = rdf::parse_turtle(R"(
@prefix dcat: <http://www.w3.org/ns/dcat#> .
@prefix dct: <http://purl.org/dc/terms/> .
<http://ex/d> a dcat:Dataset ;
  dcat:distribution <http://ex/d/2> , <http://ex/d/1> .
<http://ex/d/1> dcat:downloadURL <http://ex/a.csv> ; dcat:mediaType "text/csv" .
<http://ex/d/2> dcat:accessURL <http://ex/api> ; dct:license <http://creativecommons.org/licenses/by/4.0/> .
)");
  auto r = dcat::from_graph(g, "http://ex/d");
  REQUIRE(r.distributions.size() == 2);
  CHECK(r.distributions[0].node.value() == "http://ex/d/1");
  CHECK(r.distributions[0].download_url == "http://ex/a.csv");
  CHECK(r.distributions[1].license == "http://creativecommons.org/licenses/by/4.0/");
  CHECK_THROWS_AS(dcat::from_graph(g, "http://ex/other"), NotFoundError);
}

TEST_CASE("malformed values become warnings and stay in extra") {
  auto g = rdf::parse_turtle(R"(
@prefix dct: <http://purl.org/dc/terms/> .
<http://ex/d> dct:issued "yesterday" ; dct:title "T" ; <http://ex/custom> "kept" .
)");
  auto r = dcat::from_graph(g, "http://ex/d");
  CHECK_FALSE(r.issued);
  CHECK_FALSE(r.warnings.empty());
  CHECK(r.extra.size() == 2);
  auto back = dcat::to_graph(r);
  for (const auto& t : g) CHECK(back.contains(t));
  CHECK(back.size() == g.size() + 1);  // plus the rdf:type triple
}

TEST_CASE("IRI-only record maps to one type triple") {
  DatasetRecord r;
  r.iri = "http://ex/d";
  auto g = dcat::to_graph(r);
  REQUIRE(g.size() == 1);
  CHECK(g.begin()->predicate.value() == vocab::kRdfType);
  CHECK(g.begin()->object.value() == vocab::kDcatDataset);
}

TEST_CASE("three keywords give three keyword triples") {
  DatasetRecord r;
  r.iri = "http://ex/d";
  r.keywords = {{"a", "de"}, {"b", "de"}, {"c", ""}};
  auto g = dcat::to_graph(r);
  std::size_t n = 0;
  for (const auto& t : g) n += t.predicate.value() == vocab::kDcatKeyword;
  CHECK(n == 3);
}

TEST_CASE("round trip on randomized records") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    DatasetRecord r = gen::random_record(rng, "http://ex.org/ds/" + std::to_string(i));
    auto back = dcat::from_graph(dcat::to_graph(r), r.iri);
    CHECK(back.warnings.empty());
    bool same = gen::canonical(back) == gen::canonical(r);
    CHECK(same);
    if (!same) {
      MESSAGE(rdf::serialize_ntriples(dcat::to_graph(gen::canonical(r))));
      MESSAGE(rdf::serialize_ntriples(dcat::to_graph(gen::canonical(back))));
    }
    CHECK(dcat::from_graph(dcat::to_graph(back), r.iri) == back);
  }
}

TEST_CASE("from_graph is total on random slices") {
  std::mt19937_64 rng(5);
  const char* preds[] = {vocab::kDctTitle.data(), vocab::kDctIssued.data(), vocab::kDctPublisher.data(),
                         vocab::kDcatDistributionProp.data(), vocab::kDcatContactPoint.data(),
                         vocab::kDctSpatial.data(), vocab::kDctTemporal.data(), vocab::kDcatByteSize.data()};
  for (int i = 0; i < 300; ++i) {
    rdf::Graph g;
    auto root = rdf::Term::iri("http://ex/d");
    std::vector<rdf::Term> nodes{root, rdf::Term::blank("x"), rdf::Term::iri("http://ex/n"),
                                 rdf::Term::literal("12"), rdf::Term::literal(""),
                                 rdf::Term::literal("2020-01-01")};
    g.add(root, rdf::Term::iri(std::string(vocab::kRdfType)), rdf::Term::iri(std::string(vocab::kDcatDataset)));
    for (int k = 0; k < 12; ++k) {
      auto s = nodes[rng() % 3];
      g.add(s, rdf::Term::iri(preds[rng() % 8]), nodes[rng() % nodes.size()]);
    }
    CHECK_NOTHROW(dcat::from_graph(g, "http://ex/d"));
  }
}

TEST_CASE("ISO-8601 parsing") {
  CHECK(dcat::is_iso8601("2020"));
  CHECK(dcat::is_iso8601("2020-02-29"));
  CHECK(dcat::is_iso8601("2020-02-29T10:00:00Z"));
  CHECK(dcat::is_iso8601("2020-02-29T10:00:00.5+02:00"));
  CHECK_FALSE(dcat::is_iso8601("2021-02-29"));
  CHECK_FALSE(dcat::is_iso8601("29.02.2020"));
  CHECK(dcat::parse_iso8601("1970-01-02") == 86400);
  CHECK(dcat::parse_iso8601("2000-01-01T00:00:00+01:00") == 946684800 - 3600);
}

TEST_CASE("preferred language order") {
  std::vector<dcat::LangString> v{{"fr", "fr"}, {"en", "en"}, {"plain", ""}};
  CHECK(dcat::preferred(v) == "en");
  v.push_back({"de", "de"});
  CHECK(dcat::preferred(v) == "de");
  CHECK_FALSE(dcat::preferred({}));
}
