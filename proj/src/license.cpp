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

#include "metacat/license.hpp"

#include <algorithm>
#include <set>

#include "embedded_data.hpp"
#include "file_util.hpp"
#include "metacat/error.hpp"
#include "metacat/text.hpp"

namespace metacat::license {

namespace {

struct Named {
  const char* name;
  std::uint8_t bit;
};

constexpr Named kPermissions[] = {{"commercial_use", perm::kCommercialUse},
                                  {"modification", perm::kModification},
                                  {"distribution", perm::kDistribution},
                                  {"sublicensing", perm::kSublicensing}};
constexpr Named kDuties[] = {{"attribution", duty::kAttribution},
                             {"share_alike", duty::kShareAlike},
                             {"notice_preservation", duty::kNoticePreservation}};

template <std::size_t N>
std::vector<std::string> names_of(std::uint8_t mask, const Named (&table)[N]) {
  std::vector<std::string> out;
  for (const auto& n : table) {
    if (mask & n.bit) out.emplace_back(n.name);
  }
  return out;
}

template <std::size_t N>
std::uint8_t bit_of(std::string_view name, const Named (&table)[N], const char* what) {
  for (const auto& n : table) {
    if (name == n.name) return n.bit;
  }
  throw ValidationError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

template <std::size_t N>
std::uint8_t parse_list(std::string_view field, const Named (&table)[N], const char* what) {
  field = text::trim(field);
  if (field.empty() || field == "-") return 0;
  std::uint8_t mask = 0;
  for (const auto& part : text::split(field, '|')) mask |= bit_of(text::trim(part), table, what);
  return mask;
}

/// Inputs as a set: one entry per id, sorted.
std::vector<const LicenseSpec*> as_set(const std::vector<LicenseSpec>& inputs) {
  std::vector<const LicenseSpec*> v;
  for (const auto& l : inputs) v.push_back(&l);
  std::sort(v.begin(), v.end(), [](auto* a, auto* b) { return a->id < b->id; });
  v.erase(std::unique(v.begin(), v.end(), [](auto* a, auto* b) { return a->id == b->id; }), v.end());
  return v;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

std::vector<std::string> permission_names(std::uint8_t mask) { return names_of(mask, kPermissions); }
std::vector<std::string> duty_names(std::uint8_t mask) { return names_of(mask, kDuties); }
std::uint8_t parse_permission(std::string_view name) { return bit_of(name, kPermissions, "permission"); }
std::uint8_t parse_duty(std::string_view name) { return bit_of(name, kDuties, "duty"); }

LicenseSpec unknown_license(std::string id) {
  LicenseSpec l;
  l.id = std::move(id);
  l.name = l.id;
  l.known = false;
  return l;
}

const char* to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::ShareAlikeClash: return "share_alike_clash";
    case ConflictKind::PermissionProhibitionClash: return "permission_prohibition_clash";
    case ConflictKind::UnknownLicense: return "unknown_license";
  }
  return "?";
}

CompositeTerms compose(const std::vector<LicenseSpec>& inputs) {
  if (inputs.empty()) throw ValidationError("compose needs at least one license");
  CompositeTerms c;
  c.permissions = perm::kAll;
  for (const auto* l : as_set(inputs)) {
    c.permissions &= l->permissions;
    c.duties |= l->duties;
    c.prohibitions |= l->prohibitions;
    if (l->share_alike()) c.share_alike_pins.push_back(l->id);
  }
  return c;
}

Verdict check_compatibility(const std::vector<LicenseSpec>& inputs) {
  auto set = as_set(inputs);
  if (set.empty()) throw ValidationError("compatibility check needs at least one license");
  Verdict v;
  for (const auto* l : set) {
    if (!l->known) {
      v.conflicts.push_back({ConflictKind::UnknownLicense, {l->id}, "license not in the database: " + l->id});
    }
  }
  auto c = compose(inputs);
  if (c.share_alike_pins.size() > 1) {
    v.conflicts.push_back({ConflictKind::ShareAlikeClash, c.share_alike_pins,
                           "more than one share-alike license: " + join(c.share_alike_pins, ", ")});
  }
  for (const auto* pin : set) {
    if (!pin->share_alike()) continue;
    std::uint8_t clash = c.prohibitions & pin->permissions;
    if (!clash) continue;
    std::vector<std::string> involved{pin->id};
    for (const auto* l : set) {
      if (l->prohibitions & clash) involved.push_back(l->id);
    }
    std::sort(involved.begin(), involved.end());
    v.conflicts.push_back({ConflictKind::PermissionProhibitionClash, involved,
                           pin->id + " requires " + join(permission_names(clash), ", ") +
                               " which another input prohibits"});
  }
  v.compatible = v.conflicts.empty();
  return v;
}

std::vector<LicenseSpec> relicensing_candidates(const std::vector<LicenseSpec>& inputs,
                                                const std::vector<LicenseSpec>& db) {
  std::vector<LicenseSpec> out;
  if (!check_compatibility(inputs).compatible) return out;
  auto c = compose(inputs);
  for (const auto& l : db) {
    if ((l.permissions & ~c.permissions) != 0) continue;
    if ((c.duties & ~l.duties) != 0) continue;
    if ((c.prohibitions & ~l.prohibitions) != 0) continue;
    if (!c.share_alike_pins.empty() &&
        !std::binary_search(c.share_alike_pins.begin(), c.share_alike_pins.end(), l.id))
      continue;
    out.push_back(l);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

// ---- database ----

std::string LicenseDb::normalize_iri(std::string_view iri) {
  auto v = text::trim(iri);
  for (std::string_view scheme : {"https://", "http://"}) {
    if (v.substr(0, scheme.size()) == scheme) {
      v.remove_prefix(scheme.size());
      break;
    }
  }
  while (!v.empty() && v.back() == '/') v.remove_suffix(1);
  return text::to_lower(v);
}

LicenseDb::LicenseDb(std::vector<LicenseSpec> licenses) : licenses_(std::move(licenses)) {
  std::sort(licenses_.begin(), licenses_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < licenses_.size(); ++i) {
    const auto& l = licenses_[i];
    if (l.permissions & l.prohibitions)
      throw ValidationError("license " + l.id + " both permits and prohibits the same attribute");
    if (!by_key_.emplace(normalize_iri(l.id), i).second) throw ValidationError("duplicate license " + l.id);
  }
}

LicenseDb LicenseDb::parse(std::string_view tsv, const std::string& source) {
  std::vector<LicenseSpec> out;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(tsv, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto f = text::split(line, '\t');
    if (f.size() != 6) throw ParseError("expected 6 tab-separated fields", line_no, source);
    LicenseSpec l;
    l.id = std::string(text::trim(f[0]));
    l.name = std::string(text::trim(f[1]));
    auto open = text::to_lower(text::trim(f[2]));
    if (open != "true" && open != "false") throw ParseError("open must be true or false", line_no, source);
    l.open = open == "true";
    try {
      l.permissions = parse_list(f[3], kPermissions, "permission");
      l.duties = parse_list(f[4], kDuties, "duty");
      l.prohibitions = parse_list(f[5], kPermissions, "prohibition");
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no, source);
    }
    if (l.prohibitions & ~kProhibitable) throw ParseError("only commercial_use and modification can be prohibited", line_no, source);
    out.push_back(std::move(l));
  }
  return LicenseDb(std::move(out));
}

LicenseDb LicenseDb::load(const std::string& path) { return parse(detail::read_file(path, "license table"), path); }

const LicenseDb& LicenseDb::bundled() {
  static const LicenseDb db = [] {
    auto body = embedded::find("licenses.tsv");
    if (!body) throw IoError("bundled license table missing");
    return parse(*body, "licenses.tsv");
  }();
  return db;
}

const LicenseSpec* LicenseDb::find(std::string_view iri) const {
  auto it = by_key_.find(normalize_iri(iri));
  return it == by_key_.end() ? nullptr : &licenses_[it->second];
}

LicenseSpec LicenseDb::resolve(std::string_view iri) const {
  if (const auto* l = find(iri)) return *l;
  return unknown_license(std::string(iri));
}

}  // namespace metacat::license
