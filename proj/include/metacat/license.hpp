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
#include <string_view>
#include <unordered_map>
#include <vector>

namespace metacat::license {

// Attribute sets are bit masks.
namespace perm {
inline constexpr std::uint8_t kCommercialUse = 1;
inline constexpr std::uint8_t kModification = 2;
inline constexpr std::uint8_t kDistribution = 4;
inline constexpr std::uint8_t kSublicensing = 8;
inline constexpr std::uint8_t kAll = 15;
}  // namespace perm

namespace duty {
inline constexpr std::uint8_t kAttribution = 1;
inline constexpr std::uint8_t kShareAlike = 2;
inline constexpr std::uint8_t kNoticePreservation = 4;
inline constexpr std::uint8_t kAll = 7;
}  // namespace duty

// Prohibitions reuse the permission bits; only these two may be prohibited.
inline constexpr std::uint8_t kProhibitable = perm::kCommercialUse | perm::kModification;

std::vector<std::string> permission_names(std::uint8_t mask);
std::vector<std::string> duty_names(std::uint8_t mask);
/// Throws ValidationError on an unknown name.
std::uint8_t parse_permission(std::string_view name);
std::uint8_t parse_duty(std::string_view name);

struct LicenseSpec {
  std::string id;  // IRI
  std::string name;
  std::uint8_t permissions = 0;
  std::uint8_t duties = 0;
  std::uint8_t prohibitions = 0;
  bool open = false;
  bool known = true;

  bool share_alike() const { return duties & duty::kShareAlike; }
  /// Public-domain style: every permission, no duties, no prohibitions.
  bool public_domain() const { return permissions == perm::kAll && duties == 0 && prohibitions == 0; }
  /// Falls into one of the attribution / share-alike / public-domain classes.
  bool classifiable() const { return known && ((duties & (duty::kAttribution | duty::kShareAlike)) || public_domain()); }

  bool operator==(const LicenseSpec&) const = default;
};

/// Placeholder for an IRI the database does not know.
LicenseSpec unknown_license(std::string id);

struct CompositeTerms {
  std::uint8_t permissions = 0;
  std::uint8_t duties = 0;
  std::uint8_t prohibitions = 0;
  std::vector<std::string> share_alike_pins;  // sorted ids

  bool operator==(const CompositeTerms&) const = default;
};

enum class ConflictKind { ShareAlikeClash, PermissionProhibitionClash, UnknownLicense };
const char* to_string(ConflictKind kind);

struct Conflict {
  ConflictKind kind;
  std::vector<std::string> licenses;  // ids involved, sorted
  std::string details;

  bool operator==(const Conflict&) const = default;
};

struct Verdict {
  bool compatible = true;
  std::vector<Conflict> conflicts;
};

/// Inputs are treated as a set keyed by id. Throws ValidationError when empty.
CompositeTerms compose(const std::vector<LicenseSpec>& inputs);
Verdict check_compatibility(const std::vector<LicenseSpec>& inputs);
/// Licenses from `db` the combination may be republished under, ordered by
/// id. Empty for incompatible inputs.
std::vector<LicenseSpec> relicensing_candidates(const std::vector<LicenseSpec>& inputs,
                                                const std::vector<LicenseSpec>& db);

class LicenseDb {
 public:
  LicenseDb() = default;
  explicit LicenseDb(std::vector<LicenseSpec> licenses);

  /// TSV: id, name, open, permissions, duties, prohibitions.
  static LicenseDb parse(std::string_view tsv, const std::string& source = "<licenses>");
  static LicenseDb load(const std::string& path);
  static const LicenseDb& bundled();

  /// Scheme and trailing slash are ignored when matching.
  const LicenseSpec* find(std::string_view iri) const;
  /// Known entry or an unknown placeholder.
  LicenseSpec resolve(std::string_view iri) const;
  const std::vector<LicenseSpec>& all() const { return licenses_; }
  std::size_t size() const { return licenses_.size(); }

  static std::string normalize_iri(std::string_view iri);

 private:
  std::vector<LicenseSpec> licenses_;  // sorted by id
  std::unordered_map<std::string, std::size_t> by_key_;
};

}  // namespace metacat::license
