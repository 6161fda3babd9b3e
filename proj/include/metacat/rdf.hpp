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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace metacat::rdf {

enum class TermKind : std::uint8_t { Iri = 0, Blank = 1, Literal = 2 };

/// An RDF term: IRI, blank node or literal.
///
/// IRIs must be non-empty and contain a scheme separator. Literal language
/// tags are stored lowercased and never coexist with a datatype; plain
/// `xsd:string` / `rdf:langString` datatypes are dropped on construction.
class Term {
 public:
  Term() = default;

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string language = {}, std::string datatype = {});

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
  bool is_blank() const noexcept { return kind_ == TermKind::Blank; }
  bool is_literal() const noexcept { return kind_ == TermKind::Literal; }
  bool is_resource() const noexcept { return kind_ != TermKind::Literal; }

  /// IRI string, blank label or lexical form.
  const std::string& value() const noexcept { return value_; }
  const std::string& language() const noexcept { return language_; }
  const std::string& datatype() const noexcept { return datatype_; }

  std::string to_ntriples() const;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  TermKind kind_ = TermKind::Iri;
  std::string value_;
  std::string language_;
  std::string datatype_;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  /// Throws ValidationError unless predicate is an IRI and subject is not a
  /// literal.
  Triple(Term s, Term p, Term o);

  std::string to_ntriples() const;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

/// A set of triples, iterated in term order.
class Graph {
 public:
  using container = std::set<Triple>;
  using const_iterator = container::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> init) : triples_(init) {}

  bool insert(Triple t) { return triples_.insert(std::move(t)).second; }
  void add(const Term& s, const Term& p, const Term& o) { triples_.emplace(s, p, o); }
  bool erase(const Triple& t) { return triples_.erase(t) > 0; }
  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  void merge(const Graph& other) { triples_.insert(other.begin(), other.end()); }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }
  const container& triples() const noexcept { return triples_; }

  /// All objects of (subject, predicate, *).
  std::vector<Term> objects(const Term& subject, std::string_view predicate) const;
  /// Subjects of (*, rdf:type, type_iri), in term order.
  std::vector<Term> subjects_of_type(std::string_view type_iri) const;

  bool operator==(const Graph&) const = default;

 private:
  container triples_;
};

/// Parses N-Triples. Blank node labels are rewritten to stable labels derived
/// from (doc_id, local label) so graphs from different documents stay apart.
/// Throws ParseError carrying the 1-based line number.
Graph parse_ntriples(std::string_view text, std::string_view doc_id = {});

/// Parses the Turtle subset used for fixtures: @prefix/@base/PREFIX, `a`,
/// predicate and object lists, `[...]` blank node property lists, quoted and
/// long-quoted literals, numbers and booleans. Collections are rejected.
Graph parse_turtle(std::string_view text, std::string_view doc_id = {});

/// Picks parse_turtle for `.ttl` paths and parse_ntriples otherwise. The file
/// name is the blank-node scope.
Graph parse_file(const std::string& path);

/// One statement per line in term order; the output is byte-stable.
std::string serialize_ntriples(const Graph& graph);

/// Skolem label used for a blank node `local` read from document `doc_id`.
std::string skolem_label(std::string_view doc_id, std::string_view local);

/// Three-way lookup structure over an immutable triple set. Each map is keyed
/// by the N-Triples form of the term and lists triple ids in ascending order.
class TripleIndex {
 public:
  explicit TripleIndex(const Graph& graph);

  std::vector<Triple> query(const std::optional<Term>& subject, const std::optional<Term>& predicate,
                            const std::optional<Term>& object) const;

  std::size_t size() const noexcept { return triples_.size(); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  bool has_subject(const Term& subject) const;

  /// Consistency check: every map covers exactly the triple id range.
  bool consistent() const;

 private:
  using Postings = std::unordered_map<std::string, std::vector<std::uint32_t>>;
  static const std::vector<std::uint32_t>* find(const Postings& map, const Term& key);

  std::vector<Triple> triples_;
  Postings by_subject_;
  Postings by_predicate_;
  Postings by_object_;
};

struct SliceStats {
  std::size_t queries = 0;
  std::size_t visited = 0;
};

/// Breadth-first reachability slice rooted at `dataset`. Objects typed
/// dcat:Dataset or dcat:Catalog (other than the root) are not expanded.
/// Throws NotFoundError when the root never occurs as a subject.
Graph slice_dataset(const TripleIndex& index, const Term& dataset, SliceStats* stats = nullptr);

struct DatasetSlice {
  std::string dataset;
  Graph graph;
};

/// One slice per IRI subject typed dcat:Dataset, ordered by dataset IRI.
std::vector<DatasetSlice> split_dataset_graphs(const Graph& graph);

}  // namespace metacat::rdf
