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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "metacat/rdf.hpp"

namespace metacat::clean {

/// Alias table mapping free-form format names onto IANA media types.
///
/// File format: UTF-8, `#` starts a comment, one `alias=media/type` per line.
/// Keys and values are lowercased. Every value is also a known type in its
/// own right, which keeps normalization idempotent.
class MediaTypeTable {
 public:
  MediaTypeTable() = default;

  static MediaTypeTable parse(std::string_view text);
  static MediaTypeTable load(const std::string& path);
  /// The table compiled into the library (data/media-types.txt).
  static const MediaTypeTable& bundled();

  void add(std::string alias, std::string media_type);

  /// (normalized value, known). Unknown values come back trimmed and lowercased.
  std::pair<std::string, bool> normalize(std::string_view value) const;
  bool is_known_type(std::string_view media_type) const { return types_.count(std::string(media_type)) > 0; }
  std::size_t size() const { return aliases_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> aliases_;
  std::set<std::string, std::less<>> types_;
};

/// Convenience wrapper over the bundled table.
std::pair<std::string, bool> normalize_media_type(std::string_view value);

struct CleanConfig {
  /// Lowercase language tags to keep; empty keeps every language.
  std::set<std::string> allowed_languages;
  bool remove_empty = true;
  bool normalize_formats = true;
  std::optional<std::string> catalog_id;
  /// Defaults to MediaTypeTable::bundled().
  const MediaTypeTable* media_types = nullptr;
};

struct CleanReport {
  std::size_t empty_removed = 0;
  std::size_t language_removed = 0;
  std::size_t structures_pruned = 0;
  std::size_t formats_normalized = 0;
  bool catalog_set = false;

  bool operator==(const CleanReport&) const = default;
};

/// Removes empty literals and disallowed-language literals, prunes structures
/// left without content (to a fixpoint), normalizes media-type/format
/// literals and sets the catalog membership of the slice's dataset.
std::pair<rdf::Graph, CleanReport> clean(const rdf::Graph& slice, const CleanConfig& config);

}  // namespace metacat::clean
