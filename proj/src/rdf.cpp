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

#include "metacat/rdf.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "metacat/error.hpp"
#include "metacat/text.hpp"
#include "metacat/vocab.hpp"

namespace metacat::rdf {

// ---------------------------------------------------------------------------
// Terms

Term Term::iri(std::string value) {
  if (value.empty() || value.find(':') == std::string::npos) {
    throw ValidationError("not an absolute IRI: '" + value + "'");
  }
  Term t;
  t.kind_ = TermKind::Iri;
  t.value_ = std::move(value);
  return t;
}

Term Term::blank(std::string label) {
  if (label.empty()) throw ValidationError("empty blank node label");
  Term t;
  t.kind_ = TermKind::Blank;
  t.value_ = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string language, std::string datatype) {
  if (!language.empty() && !datatype.empty() && datatype != vocab::kRdfLangString) {
    throw ValidationError("literal cannot carry both a language tag and a datatype");
  }
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  t.language_ = text::to_lower(language);
  if (datatype != vocab::kXsdString && datatype != vocab::kRdfLangString) t.datatype_ = std::move(datatype);
  return t;
}

namespace {

void escape_iri(std::string& out, std::string_view iri) {
  for (char32_t cp : text::decode_utf8(iri)) {
    if (cp <= 0x20 || cp == '<' || cp == '>' || cp == '"' || cp == '{' || cp == '}' || cp == '|' ||
        cp == '^' || cp == '`' || cp == '\\') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(cp));
      out += buf;
    } else {
      text::append_utf8(out, cp);
    }
  }
}

void escape_literal(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

std::string Term::to_ntriples() const {
  std::string out;
  switch (kind_) {
    case TermKind::Iri:
      out.push_back('<');
      escape_iri(out, value_);
      out.push_back('>');
      break;
    case TermKind::Blank:
      out = "_:" + value_;
      break;
    case TermKind::Literal:
      out.push_back('"');
      escape_literal(out, value_);
      out.push_back('"');
      if (!language_.empty()) {
        out += "@" + language_;
      } else if (!datatype_.empty()) {
        out += "^^<";
        escape_iri(out, datatype_);
        out.push_back('>');
      }
      break;
  }
  return out;
}

Triple::Triple(Term s, Term p, Term o) : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (!predicate.is_iri()) throw ValidationError("predicate must be an IRI");
  if (subject.is_literal()) throw ValidationError("subject must not be a literal");
}

std::string Triple::to_ntriples() const {
  return subject.to_ntriples() + " " + predicate.to_ntriples() + " " + object.to_ntriples() + " .";
}

std::vector<Term> Graph::objects(const Term& subject, std::string_view predicate) const {
  std::vector<Term> out;
  // A default Term is the smallest IRI, so this lands on the subject's first triple.
  for (auto it = triples_.lower_bound(Triple(subject, Term(), Term())); it != triples_.end() && it->subject == subject;
       ++it) {
    if (it->predicate.value() == predicate) out.push_back(it->object);
  }
  return out;
}

std::vector<Term> Graph::subjects_of_type(std::string_view type_iri) const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    if (t.predicate.value() == vocab::kRdfType && t.object.is_iri() && t.object.value() == type_iri) {
      out.push_back(t.subject);
    }
  }
  return out;
}

std::string skolem_label(std::string_view doc_id, std::string_view local) {
  std::string key(doc_id);
  key.push_back('\x1f');
  key.append(local);
  return "b" + text::hex64(text::fnv1a64(key));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

/// Shared character cursor for the N-Triples and Turtle readers.
class Cursor {
 public:
  Cursor(std::string_view text, std::string_view doc_id) : text_(text), doc_id_(doc_id) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }
  std::size_t line() const { return line_; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !eof(); ++i) get();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  /// Skips spaces and tabs (N-Triples) or all whitespace and comments (Turtle).
  void skip_inline_ws() {
    while (peek() == ' ' || peek() == '\t') get();
  }
  void skip_ws_and_comments() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        get();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  char32_t read_hex(int digits) {
    char32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char c = peek();
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else fail("bad hex digit in escape");
      get();
      cp = cp * 16 + static_cast<char32_t>(v);
    }
    return cp;
  }

  std::string read_iriref() {
    expect('<');
    std::string out;
    while (true) {
      if (eof()) fail("unterminated IRI");
      char c = get();
      if (c == '>') break;
      if (c == '\\') {
        char e = get();
        if (e == 'u') text::append_utf8(out, read_hex(4));
        else if (e == 'U') text::append_utf8(out, read_hex(8));
        else fail("bad escape in IRI");
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`') {
        fail("illegal character in IRI");
      }
      out.push_back(c);
    }
    return out;
  }

  std::string read_blank_label() {
    if (!starts_with("_:")) fail("expected blank node");
    advance(2);
    std::string label;
    while (!eof()) {
      char c = peek();
      auto uc = static_cast<unsigned char>(c);
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
          uc >= 0x80) {
        label.push_back(get());
      } else if (c == '.') {
        // A dot belongs to the label only when followed by more label chars.
        char n = peek(1);
        if ((n >= 'a' && n <= 'z') || (n >= 'A' && n <= 'Z') || (n >= '0' && n <= '9') || n == '_' || n == '-') {
          label.push_back(get());
        } else {
          break;
        }
      } else {
        break;
      }
    }
    if (label.empty()) fail("empty blank node label");
    return skolem_label(doc_id_, label);
  }

  void read_escape(std::string& out) {
    char e = get();
    switch (e) {
      case 't': out.push_back('\t'); break;
      case 'b': out.push_back('\b'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 'f': out.push_back('\f'); break;
      case '"': out.push_back('"'); break;
      case '\'': out.push_back('\''); break;
      case '\\': out.push_back('\\'); break;
      case 'u': text::append_utf8(out, read_hex(4)); break;
      case 'U': text::append_utf8(out, read_hex(8)); break;
      default: fail(std::string("bad string escape \\") + e);
    }
  }

  /// Reads a quoted string body. Supports single-line "..." / '...' and, when
  /// `allow_long` is set, """...""" / '''...'''.
  std::string read_quoted(bool allow_long) {
    char q = peek();
    if (q != '"' && (q != '\'' || !allow_long)) fail("expected string literal");
    std::string out;
    bool long_form = allow_long && peek(1) == q && peek(2) == q;
    if (long_form) {
      advance(3);
      while (true) {
        if (eof()) fail("unterminated long string");
        if (peek() == q && peek(1) == q && peek(2) == q && peek(3) != q) {
          advance(3);
          break;
        }
        char c = get();
        if (c == '\\') read_escape(out);
        else out.push_back(c);
      }
      return out;
    }
    get();
    while (true) {
      if (eof()) fail("unterminated string");
      char c = get();
      if (c == q) break;
      if (c == '\n' || c == '\r') fail("newline in string literal");
      if (c == '\\') read_escape(out);
      else out.push_back(c);
    }
    return out;
  }

  std::string read_langtag() {
    expect('@');
    std::string tag;
    while (!eof()) {
      char c = peek();
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9' && !tag.empty()) ||
          (c == '-' && !tag.empty())) {
        tag.push_back(get());
      } else {
        break;
      }
    }
    if (tag.empty() || tag.back() == '-') fail("malformed language tag");
    return tag;
  }

 private:
  std::string_view text_;
  std::string_view doc_id_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

Term make_term(Cursor& c, auto&& factory) {
  try {
    return factory();
  } catch (const ValidationError& e) {
    c.fail(e.what());
  }
}

}  // namespace

Graph parse_ntriples(std::string_view text, std::string_view doc_id) {
  Graph g;
  Cursor c(text, doc_id);
  while (!c.eof()) {
    c.skip_inline_ws();
    if (c.peek() == '\r' || c.peek() == '\n') {
      c.get();
      continue;
    }
    if (c.eof()) break;
    if (c.peek() == '#') {
      while (!c.eof() && c.peek() != '\n') c.get();
      continue;
    }

    Term subject;
    if (c.peek() == '<') {
      std::string v = c.read_iriref();
      subject = make_term(c, [&] { return Term::iri(v); });
    } else if (c.peek() == '_') {
      subject = Term::blank(c.read_blank_label());
    } else {
      c.fail("expected subject");
    }
    c.skip_inline_ws();
    if (c.peek() != '<') c.fail("expected predicate IRI");
    std::string pv = c.read_iriref();
    Term predicate = make_term(c, [&] { return Term::iri(pv); });
    c.skip_inline_ws();

    Term object;
    if (c.peek() == '<') {
      std::string v = c.read_iriref();
      object = make_term(c, [&] { return Term::iri(v); });
    } else if (c.peek() == '_') {
      object = Term::blank(c.read_blank_label());
    } else if (c.peek() == '"') {
      std::string lexical = c.read_quoted(false);
      std::string lang, datatype;
      if (c.peek() == '@') {
        lang = c.read_langtag();
      } else if (c.peek() == '^' && c.peek(1) == '^') {
        c.advance(2);
        datatype = c.read_iriref();
      }
      object = make_term(c, [&] { return Term::literal(lexical, lang, datatype); });
    } else {
      c.fail("expected object");
    }
    c.skip_inline_ws();
    c.expect('.');
    c.skip_inline_ws();
    if (c.peek() == '#') {
      while (!c.eof() && c.peek() != '\n') c.get();
    }
    if (!c.eof() && c.peek() != '\n' && c.peek() != '\r') c.fail("trailing content after statement");
    g.insert(Triple(std::move(subject), std::move(predicate), std::move(object)));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Turtle subset

namespace {

class TurtleReader {
 public:
  TurtleReader(std::string_view text, std::string_view doc_id) : c_(text, doc_id), doc_id_(doc_id) {}

  Graph run() {
    while (true) {
      c_.skip_ws_and_comments();
      if (c_.eof()) break;
      if (c_.starts_with("@prefix")) {
        c_.advance(7);
        read_prefix_decl();
        c_.skip_ws_and_comments();
        c_.expect('.');
      } else if (c_.starts_with("@base")) {
        c_.advance(5);
        c_.skip_ws_and_comments();
        base_ = c_.read_iriref();
        c_.skip_ws_and_comments();
        c_.expect('.');
      } else if (keyword("PREFIX")) {
        read_prefix_decl();
      } else if (keyword("BASE")) {
        c_.skip_ws_and_comments();
        base_ = c_.read_iriref();
      } else {
        read_triples();
        c_.skip_ws_and_comments();
        c_.expect('.');
      }
    }
    return std::move(graph_);
  }

 private:
  bool keyword(std::string_view kw) {
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char ch = c_.peek(i);
      if (std::toupper(static_cast<unsigned char>(ch)) != kw[i]) return false;
    }
    char after = c_.peek(kw.size());
    if (after != ' ' && after != '\t' && after != '\n' && after != '\r') return false;
    c_.advance(kw.size());
    return true;
  }

  void read_prefix_decl() {
    c_.skip_ws_and_comments();
    std::string prefix;
    while (!c_.eof() && c_.peek() != ':') {
      char ch = c_.peek();
      if (ch == ' ' || ch == '\t' || ch == '\n') c_.fail("malformed prefix name");
      prefix.push_back(c_.get());
    }
    c_.expect(':');
    c_.skip_ws_and_comments();
    prefixes_[prefix] = resolve(c_.read_iriref());
  }

  std::string resolve(std::string iri) const {
    if (iri.find(':') != std::string::npos || base_.empty()) return iri;
    if (!iri.empty() && iri[0] == '#') {
      auto hash = base_.find('#');
      return base_.substr(0, hash) + iri;
    }
    auto slash = base_.rfind('/');
    return (slash == std::string::npos ? base_ : base_.substr(0, slash + 1)) + iri;
  }

  Term iri_term(std::string v) {
    return make_term(c_, [&] { return Term::iri(std::move(v)); });
  }

  Term fresh_blank() { return Term::blank(skolem_label(doc_id_, "anon" + std::to_string(++anon_))); }

  Term read_prefixed_name() {
    std::string prefix;
    while (!c_.eof() && c_.peek() != ':') {
      char ch = c_.peek();
      auto uc = static_cast<unsigned char>(ch);
      if (!(std::isalnum(uc) || ch == '_' || ch == '-' || ch == '.' || uc >= 0x80)) c_.fail("malformed prefixed name");
      prefix.push_back(c_.get());
    }
    c_.expect(':');
    std::string local;
    while (!c_.eof()) {
      char ch = c_.peek();
      auto uc = static_cast<unsigned char>(ch);
      if (std::isalnum(uc) || ch == '_' || ch == '-' || ch == ':' || uc >= 0x80 || ch == '%') {
        local.push_back(c_.get());
      } else if (ch == '\\') {
        c_.get();
        local.push_back(c_.get());
      } else if (ch == '.') {
        char n = c_.peek(1);
        auto un = static_cast<unsigned char>(n);
        if (std::isalnum(un) || n == '_' || n == '-' || n == ':' || un >= 0x80) local.push_back(c_.get());
        else break;
      } else {
        break;
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) c_.fail("undeclared prefix '" + prefix + "'");
    return iri_term(it->second + local);
  }

  Term read_iri_like() {
    if (c_.peek() == '<') return iri_term(resolve(c_.read_iriref()));
    return read_prefixed_name();
  }

  Term read_subject() {
    char ch = c_.peek();
    if (ch == '<' ) return read_iri_like();
    if (ch == '_' && c_.peek(1) == ':') return Term::blank(c_.read_blank_label());
    if (ch == '[') {
      c_.get();
      Term node = fresh_blank();
      c_.skip_ws_and_comments();
      if (c_.peek() != ']') read_predicate_object_list(node);
      c_.skip_ws_and_comments();
      c_.expect(']');
      return node;
    }
    if (ch == '(') c_.fail("RDF collections are not supported");
    return read_prefixed_name();
  }

  Term read_predicate() {
    if (c_.peek() == 'a') {
      char n = c_.peek(1);
      if (n == ' ' || n == '\t' || n == '\n' || n == '\r' || n == '<' || n == '[' || n == '"') {
        c_.get();
        return Term::iri(std::string(vocab::kRdfType));
      }
    }
    return read_iri_like();
  }

  Term read_number() {
    std::string num;
    while (!c_.eof()) {
      char ch = c_.peek();
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' || ch == 'e' || ch == 'E') {
        num.push_back(c_.get());
      } else if (ch == '.' && std::isdigit(static_cast<unsigned char>(c_.peek(1)))) {
        num.push_back(c_.get());
      } else {
        break;
      }
    }
    std::string dt(vocab::kXsdInteger);
    if (num.find_first_of("eE") != std::string::npos) dt = vocab::kXsdDouble;
    else if (num.find('.') != std::string::npos) dt = vocab::kXsdDecimal;
    return Term::literal(num, {}, dt);
  }

  Term read_object() {
    char ch = c_.peek();
    if (ch == '"' || ch == '\'') {
      std::string lexical = c_.read_quoted(true);
      if (c_.peek() == '@') return make_term(c_, [&] { return Term::literal(lexical, c_.read_langtag()); });
      if (c_.peek() == '^' && c_.peek(1) == '^') {
        c_.advance(2);
        Term dt = read_iri_like();
        return Term::literal(lexical, {}, dt.value());
      }
      return Term::literal(lexical);
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ((ch == '-' || ch == '+') && std::isdigit(static_cast<unsigned char>(c_.peek(1))))) {
      return read_number();
    }
    if (c_.starts_with("true") || c_.starts_with("false")) {
      std::size_t n = c_.starts_with("true") ? 4 : 5;
      char after = c_.peek(n);
      if (!std::isalnum(static_cast<unsigned char>(after)) && after != ':') {
        std::string v = n == 4 ? "true" : "false";
        c_.advance(n);
        return Term::literal(v, {}, std::string(vocab::kXsdBoolean));
      }
    }
    return read_subject();
  }

  void read_predicate_object_list(const Term& subject) {
    while (true) {
      c_.skip_ws_and_comments();
      Term predicate = read_predicate();
      while (true) {
        c_.skip_ws_and_comments();
        Term object = read_object();
        graph_.insert(Triple(subject, predicate, std::move(object)));
        c_.skip_ws_and_comments();
        if (c_.peek() != ',') break;
        c_.get();
      }
      c_.skip_ws_and_comments();
      if (c_.peek() != ';') break;
      while (c_.peek() == ';') {
        c_.get();
        c_.skip_ws_and_comments();
      }
      if (c_.peek() == '.' || c_.peek() == ']') break;
    }
  }

  void read_triples() {
    bool bracket_subject = c_.peek() == '[';
    Term subject = read_subject();
    c_.skip_ws_and_comments();
    if (bracket_subject && c_.peek() == '.') return;
    read_predicate_object_list(subject);
  }

  Cursor c_;
  std::string_view doc_id_;
  std::unordered_map<std::string, std::string> prefixes_;
  std::string base_;
  Graph graph_;
  std::size_t anon_ = 0;
};

}  // namespace

Graph parse_turtle(std::string_view text, std::string_view doc_id) { return TurtleReader(text, doc_id).run(); }

Graph parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string body = ss.str();
  std::string name = path.substr(path.find_last_of('/') + 1);
  try {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".ttl") == 0) return parse_turtle(body, name);
    return parse_ntriples(body, name);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), path);
  }
}

std::string serialize_ntriples(const Graph& graph) {
  std::string out;
  for (const auto& t : graph) {
    out += t.to_ntriples();
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Index and slicing

TripleIndex::TripleIndex(const Graph& graph) : triples_(graph.begin(), graph.end()) {
  for (std::uint32_t id = 0; id < triples_.size(); ++id) {
    const auto& t = triples_[id];
    by_subject_[t.subject.to_ntriples()].push_back(id);
    by_predicate_[t.predicate.to_ntriples()].push_back(id);
    by_object_[t.object.to_ntriples()].push_back(id);
  }
}

const std::vector<std::uint32_t>* TripleIndex::find(const Postings& map, const Term& key) {
  auto it = map.find(key.to_ntriples());
  return it == map.end() ? nullptr : &it->second;
}

bool TripleIndex::has_subject(const Term& subject) const { return find(by_subject_, subject) != nullptr; }

std::vector<Triple> TripleIndex::query(const std::optional<Term>& subject, const std::optional<Term>& predicate,
                                       const std::optional<Term>& object) const {
  std::vector<Triple> out;
  if (!subject && !predicate && !object) return triples_;

  // Drive from the shortest bound posting list, filter on the rest.
  const std::vector<std::uint32_t>* driver = nullptr;
  auto consider = [&](const Postings& map, const std::optional<Term>& key) -> bool {
    if (!key) return true;
    const auto* list = find(map, *key);
    if (!list) return false;
    if (!driver || list->size() < driver->size()) driver = list;
    return true;
  };
  if (!consider(by_subject_, subject) || !consider(by_predicate_, predicate) || !consider(by_object_, object)) {
    return out;
  }
  for (std::uint32_t id : *driver) {
    const auto& t = triples_[id];
    if (subject && t.subject != *subject) continue;
    if (predicate && t.predicate != *predicate) continue;
    if (object && t.object != *object) continue;
    out.push_back(t);
  }
  return out;
}

bool TripleIndex::consistent() const {
  auto covers = [&](const Postings& map) {
    std::vector<bool> seen(triples_.size(), false);
    std::size_t total = 0;
    for (const auto& [key, ids] : map) {
      for (auto id : ids) {
        if (id >= triples_.size() || seen[id]) return false;
        seen[id] = true;
        ++total;
      }
    }
    return total == triples_.size();
  };
  return covers(by_subject_) && covers(by_predicate_) && covers(by_object_);
}

Graph slice_dataset(const TripleIndex& index, const Term& dataset, SliceStats* stats) {
  SliceStats local;
  SliceStats& st = stats ? *stats : local;
  st = {};
  if (!index.has_subject(dataset)) throw NotFoundError("dataset not found: " + dataset.to_ntriples());

  const Term type = Term::iri(std::string(vocab::kRdfType));
  std::unordered_set<std::string> stop;
  for (auto cls : {vocab::kDcatDataset, vocab::kDcatCatalog}) {
    ++st.queries;
    for (const auto& t : index.query(std::nullopt, type, Term::iri(std::string(cls)))) {
      stop.insert(t.subject.to_ntriples());
    }
  }
  stop.erase(dataset.to_ntriples());

  Graph out;
  std::unordered_set<std::string> visited{dataset.to_ntriples()};
  std::deque<Term> queue{dataset};
  while (!queue.empty()) {
    Term node = std::move(queue.front());
    queue.pop_front();
    ++st.visited;
    ++st.queries;
    for (auto& t : index.query(node, std::nullopt, std::nullopt)) {
      if (t.object.is_resource()) {
        auto key = t.object.to_ntriples();
        if (!stop.count(key) && visited.insert(key).second) queue.push_back(t.object);
      }
      out.insert(std::move(t));
    }
  }
  return out;
}

std::vector<DatasetSlice> split_dataset_graphs(const Graph& graph) {
  TripleIndex index(graph);
  std::vector<DatasetSlice> out;
  for (const auto& subject : graph.subjects_of_type(vocab::kDcatDataset)) {
    if (!subject.is_iri()) continue;
    out.push_back({subject.value(), slice_dataset(index, subject)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dataset < b.dataset; });
  return out;
}

}  // namespace metacat::rdf
