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
#include <string>
#include <string_view>
#include <vector>

#include "metacat/clean.hpp"
#include "metacat/quality.hpp"
#include "metacat/rdf.hpp"

namespace metacat::pipeline {

/// `key=value` lines; `#` and `!` start comments, keys and values are
/// trimmed, later keys win. Throws ConfigError (with the line) for a line
/// without `=` or an empty key.
std::map<std::string, std::string> parse_properties(std::string_view text, const std::string& source = "<config>");

struct PipelineConfig {
  std::string input;   // file or directory of .nt/.ttl files
  std::string output;  // output directory
  std::optional<std::string> index_output;  // default <output>/index.bin

  bool run_clean = true;
  bool run_enrich = true;
  bool run_quality = true;
  bool run_dedup = true;

  clean::CleanConfig catfish;
  std::optional<std::string> media_types_path;

  double language_threshold = 0.75;
  bool detect_language = true;
  bool annotate_places = true;
  std::optional<std::string> gazetteer_path;

  quality::CivetConfig civet;
  bool evaluation_time_set = false;  // otherwise taken from the wall clock at run time
  std::optional<std::string> license_db_path;
  std::optional<std::string> provider_db_path;
  std::optional<std::string> community_db_path;

  double dedup_threshold = 0.9;
  unsigned workers = 0;  // 0 = hardware concurrency

  int service_port = 8080;
  std::string cors_origin;

  /// Unknown keys, one message each.
  std::vector<std::string> warnings;

  std::string index_path() const;
};

/// Builds a config from properties. Relative paths resolve against
/// `base_dir`. Throws ConfigError for missing required keys (io.input,
/// io.output) and malformed values.
PipelineConfig make_config(const std::map<std::string, std::string>& props, const std::string& base_dir = ".");
PipelineConfig load_config(const std::string& path);

struct SkippedSlice {
  std::string dataset;
  std::string reason;
};

struct RunReport {
  std::size_t files = 0;
  std::size_t triples = 0;
  std::size_t datasets = 0;  // slices after split
  // clean
  std::size_t empty_removed = 0;
  std::size_t language_removed = 0;
  std::size_t formats_normalized = 0;
  // enrich
  std::size_t language_tags_set = 0;
  std::size_t places_added = 0;
  // quality
  std::size_t scored = 0;
  std::size_t measurements = 0;
  std::size_t not_computed = 0;
  // dedup
  std::size_t clusters = 0;
  std::size_t links = 0;
  // write
  std::size_t written = 0;
  std::size_t indexed = 0;
  std::vector<SkippedSlice> skipped;
};

/// read, split, clean, enrich, quality, dedup, write. Output layout under
/// config.output: datasets/<hash>.nt, quality.nt, links.nt, not-computed.log,
/// plus the index at index_path(). Throws NotFoundError for a missing input,
/// ParseError for unreadable RDF and ConfigError for bad settings.
RunReport run_pipeline(const PipelineConfig& config);

/// Parses a file, or every .nt/.ttl file below a directory in path order,
/// into one graph. Throws NotFoundError when `path` does not exist.
rdf::Graph read_input(const std::string& path, std::size_t* files = nullptr);

/// File name of a dataset's slice below datasets/.
std::string slice_file_name(const std::string& dataset);

std::string format_report(const RunReport& report);

enum ExitCode : int { kOk = 0, kFailure = 1, kMissingInput = 2, kParseFailure = 3, kConfigFailure = 4 };

}  // namespace metacat::pipeline
