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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metacat/rdf.hpp"

namespace metacat::dcat {

/// Text value with an optional (lowercase) language tag.
struct LangString {
  std::string text;
  std::string lang;

  auto operator<=>(const LangString&) const = default;
};

struct AgentRef {
  std::optional<std::string> iri;
  std::optional<std::string> name;
  std::optional<std::string> homepage;
  std::optional<std::string> email;

  bool empty() const { return !iri && !name && !homepage && !email; }
  bool operator==(const AgentRef&) const = default;
};

struct ContactInfo {
  std::optional<std::string> name;
  std::optional<std::string> email;
  std::optional<std::string> url;
  std::optional<std::string> phone;
  std::optional<std::string> address;

  bool empty() const { return !name && !email && !url && !phone && !address; }
  bool operator==(const ContactInfo&) const = default;
};

enum class PlaceLevel { Nuts0, Nuts1, Nuts2, Nuts3, Lau, Point, Unspecified };

const char* to_string(PlaceLevel level);
/// Accepts "NUTS0".."NUTS3", "LAU", "POINT" (case-insensitive).
std::optional<PlaceLevel> parse_place_level(std::string_view s);

struct GeoPoint {
  double lat = 0;
  double lon = 0;

  bool valid() const { return lat >= -90 && lat <= 90 && lon >= -180 && lon <= 180; }
  bool operator==(const GeoPoint&) const = default;
};

struct GeoAnnotation {
  std::optional<std::string> place_iri;
  std::string place_name;
  PlaceLevel level = PlaceLevel::Unspecified;
  /// Absent for spatial references that carry no coordinates.
  std::optional<GeoPoint> centroid;

  bool operator==(const GeoAnnotation&) const = default;
};

struct TimeSpan {
  std::optional<std::string> start;
  std::optional<std::string> end;

  bool operator==(const TimeSpan&) const = default;
};

struct Distribution {
  /// IRI or blank node identifying the distribution.
  rdf::Term node;
  std::optional<std::string> access_url;
  std::optional<std::string> download_url;
  std::optional<std::string> media_type;
  std::optional<std::string> format;
  std::optional<std::string> license;
  std::optional<std::uint64_t> byte_size;
  std::optional<std::string> issued;
  std::optional<std::string> modified;

  bool operator==(const Distribution&) const = default;
};

/// Typed view of one dataset slice. IRIs are plain strings; timestamps keep
/// their ISO-8601 lexical form. Triples the model does not map are kept in
/// `extra` so that to_graph() reproduces them.
struct DatasetRecord {
  std::string iri;
  std::vector<LangString> titles;
  std::vector<LangString> descriptions;
  std::vector<LangString> keywords;
  std::vector<std::string> themes;
  std::optional<AgentRef> publisher;
  std::optional<std::string> catalog;
  std::optional<std::string> issued;
  std::optional<std::string> modified;
  std::optional<std::string> accrual_periodicity;
  std::vector<GeoAnnotation> spatial;
  std::optional<TimeSpan> temporal;
  std::optional<std::string> landing_page;
  std::optional<ContactInfo> contact_point;
  std::optional<std::string> identifier;
  std::optional<std::string> version;
  std::vector<std::string> languages;
  std::vector<Distribution> distributions;

  rdf::Graph extra;
  std::vector<std::string> warnings;

  /// Field-wise equality on the modeled fields plus `extra`; warnings are
  /// diagnostics and do not take part.
  bool operator==(const DatasetRecord& other) const;
};

/// Fields counted by the extent metrics, in a fixed order.
inline constexpr std::size_t kTrackedFieldCount = 14;
extern const char* const kTrackedFieldNames[kTrackedFieldCount];
/// Presence flags for the tracked fields, same order as kTrackedFieldNames.
std::vector<bool> tracked_fields(const DatasetRecord& record);

/// Lenient mapping of a slice onto a record. Unknown predicates go to
/// `extra`, malformed values produce warnings. Throws NotFoundError if the
/// dataset never occurs as a subject.
DatasetRecord from_graph(const rdf::Graph& slice, const std::string& dataset);

/// Reverse mapping; from_graph(to_graph(r), r.iri) == r.
rdf::Graph to_graph(const DatasetRecord& record);

/// True for `YYYY`, `YYYY-MM`, `YYYY-MM-DD` and `YYYY-MM-DDThh:mm[:ss[.f]][Z|±hh:mm]`.
bool is_iso8601(std::string_view s);
/// Seconds since the Unix epoch for an ISO-8601 value (UTC; missing parts
/// default to the start of the period).
std::optional<std::int64_t> parse_iso8601(std::string_view s);

/// Preferred text for display: German first, then English, then untagged,
/// then anything.
std::optional<std::string> preferred(const std::vector<LangString>& values);

}  // namespace metacat::dcat
