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

#include "metacat/clean.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "embedded_data.hpp"
#include "metacat/error.hpp"
#include "metacat/text.hpp"
#include "metacat/vocab.hpp"

namespace metacat::clean {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

MediaTypeTable MediaTypeTable::parse(std::string_view text) {
  MediaTypeTable table;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(text, '\n')) {
    ++line_no;
    auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected alias=media/type", line_no);
    auto key = text::trim(line.substr(0, eq));
    auto value = text::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("empty alias or media type", line_no);
    table.add(std::string(key), std::string(value));
  }
  return table;
}

MediaTypeTable MediaTypeTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read media type table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), path);
  }
}

const MediaTypeTable& MediaTypeTable::bundled() {
  static const MediaTypeTable table = parse(embedded::find("media-types.txt").value());
  return table;
}

void MediaTypeTable::add(std::string alias, std::string media_type) {
  alias = text::to_lower(alias);
  media_type = text::to_lower(media_type);
  types_.insert(media_type);
  aliases_[media_type] = media_type;
  aliases_[alias] = media_type;
}

std::pair<std::string, bool> MediaTypeTable::normalize(std::string_view value) const {
  std::string v = text::to_lower(text::trim(value));
  auto it = aliases_.find(v);
  if (it != aliases_.end()) return {it->second, true};
  return {v, false};
}

std::pair<std::string, bool> normalize_media_type(std::string_view value) {
  return MediaTypeTable::bundled().normalize(value);
}

namespace {

bool blank_text(const std::string& s) { return text::collapse_whitespace(s).empty(); }

}  // namespace

std::pair<Graph, CleanReport> clean(const Graph& slice, const CleanConfig& config) {
  CleanReport report;
  const MediaTypeTable& types = config.media_types ? *config.media_types : MediaTypeTable::bundled();

  // Nodes that had content before cleaning; only these can become "empty".
  std::set<Term> described;
  for (const auto& t : slice) described.insert(t.subject);

  Graph g;
  for (const auto& t : slice) {
    if (t.object.is_literal()) {
      if (config.remove_empty && blank_text(t.object.value())) {
        ++report.empty_removed;
        continue;
      }
      const auto& lang = t.object.language();
      if (!lang.empty() && !config.allowed_languages.empty()) {
        // "de-DE" passes when "de" is allowed.
        auto primary = lang.substr(0, lang.find('-'));
        if (!config.allowed_languages.count(lang) && !config.allowed_languages.count(primary)) {
          ++report.language_removed;
          continue;
        }
      }
      if (config.normalize_formats &&
          (t.predicate.value() == vocab::kDcatMediaType || t.predicate.value() == vocab::kDctFormat)) {
        auto [normalized, known] = types.normalize(t.object.value());
        if (normalized != t.object.value()) {
          ++report.formats_normalized;
          g.add(t.subject, t.predicate, Term::literal(normalized));
          continue;
        }
      }
    }
    g.insert(t);
  }

  if (config.remove_empty) {
    // Drop links to blank nodes without content and to nodes that lost all of
    // their content above, until nothing changes.
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<Term> has_content;
      for (const auto& t : g) has_content.insert(t.subject);
      std::vector<Triple> dead;
      for (const auto& t : g) {
        if (!t.object.is_resource() || has_content.count(t.object)) continue;
        if (t.object.is_blank() || described.count(t.object)) dead.push_back(t);
      }
      for (const auto& t : dead) {
        g.erase(t);
        ++report.structures_pruned;
        changed = true;
      }
    }
  }

  if (config.catalog_id) {
    auto datasets = g.subjects_of_type(vocab::kDcatDataset);
    if (!datasets.empty()) {
      const Term& root = datasets.front();
      const Term part_of = Term::iri(std::string(vocab::kDctIsPartOf));
      const Term catalog = Term::iri(*config.catalog_id);
      for (const auto& o : g.objects(root, vocab::kDctIsPartOf)) {
        if (o != catalog) g.erase(Triple(root, part_of, o));
      }
      g.add(root, part_of, catalog);
      report.catalog_set = true;
    }
  }
  return {std::move(g), report};
}

}  // namespace metacat::clean
