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

#include "metacat/dcat.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "metacat/error.hpp"
#include "metacat/text.hpp"
#include "metacat/vocab.hpp"

namespace metacat::dcat {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

const char* to_string(PlaceLevel level) {
  switch (level) {
    case PlaceLevel::Nuts0: return "NUTS0";
    case PlaceLevel::Nuts1: return "NUTS1";
    case PlaceLevel::Nuts2: return "NUTS2";
    case PlaceLevel::Nuts3: return "NUTS3";
    case PlaceLevel::Lau: return "LAU";
    case PlaceLevel::Point: return "POINT";
    case PlaceLevel::Unspecified: return "UNSPECIFIED";
  }
  return "UNSPECIFIED";
}

std::optional<PlaceLevel> parse_place_level(std::string_view s) {
  std::string v = text::to_lower(text::trim(s));
  if (v == "nuts0") return PlaceLevel::Nuts0;
  if (v == "nuts1") return PlaceLevel::Nuts1;
  if (v == "nuts2") return PlaceLevel::Nuts2;
  if (v == "nuts3") return PlaceLevel::Nuts3;
  if (v == "lau") return PlaceLevel::Lau;
  if (v == "point") return PlaceLevel::Point;
  return std::nullopt;
}

bool DatasetRecord::operator==(const DatasetRecord& o) const {
  return iri == o.iri && titles == o.titles && descriptions == o.descriptions && keywords == o.keywords &&
         themes == o.themes && publisher == o.publisher && catalog == o.catalog && issued == o.issued &&
         modified == o.modified && accrual_periodicity == o.accrual_periodicity && spatial == o.spatial &&
         temporal == o.temporal && landing_page == o.landing_page && contact_point == o.contact_point &&
         identifier == o.identifier && version == o.version && languages == o.languages &&
         distributions == o.distributions && extra == o.extra;
}

const char* const kTrackedFieldNames[kTrackedFieldCount] = {
    "title",    "description", "keyword", "theme",    "publisher",    "issued",     "modified",
    "accrualPeriodicity", "spatial", "temporal", "landingPage", "contactPoint", "identifier", "language"};

std::vector<bool> tracked_fields(const DatasetRecord& r) {
  return {!r.titles.empty(),
          !r.descriptions.empty(),
          !r.keywords.empty(),
          !r.themes.empty(),
          r.publisher.has_value(),
          r.issued.has_value(),
          r.modified.has_value(),
          r.accrual_periodicity.has_value(),
          !r.spatial.empty(),
          r.temporal.has_value(),
          r.landing_page.has_value(),
          r.contact_point.has_value(),
          r.identifier.has_value(),
          !r.languages.empty()};
}

// ---------------------------------------------------------------------------
// Timestamps

namespace {

bool digits(std::string_view s, std::size_t pos, std::size_t n) {
  if (pos + n > s.size()) return false;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

int num(std::string_view s, std::size_t pos, std::size_t n) {
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

// Howard Hinnant's days_from_civil.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

unsigned days_in_month(int y, int m) {
  static const unsigned dm[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  return m == 2 && leap ? 29 : dm[m - 1];
}

}  // namespace

std::optional<std::int64_t> parse_iso8601(std::string_view s) {
  s = text::trim(s);
  if (!digits(s, 0, 4)) return std::nullopt;
  int year = num(s, 0, 4), month = 1, day = 1, hour = 0, minute = 0, second = 0, offset = 0;
  std::size_t p = 4;
  if (p < s.size()) {
    if (s[p] != '-' || !digits(s, p + 1, 2)) return std::nullopt;
    month = num(s, p + 1, 2);
    p += 3;
    if (p < s.size()) {
      if (s[p] != '-' || !digits(s, p + 1, 2)) return std::nullopt;
      day = num(s, p + 1, 2);
      p += 3;
    }
  }
  if (month < 1 || month > 12 || day < 1 || static_cast<unsigned>(day) > days_in_month(year, month)) {
    return std::nullopt;
  }
  if (p < s.size()) {
    if (p != 10 || (s[p] != 'T' && s[p] != 't') || !digits(s, p + 1, 2) || s.size() < p + 6 || s[p + 3] != ':' ||
        !digits(s, p + 4, 2)) {
      return std::nullopt;
    }
    hour = num(s, p + 1, 2);
    minute = num(s, p + 4, 2);
    p += 6;
    if (p < s.size() && s[p] == ':') {
      if (!digits(s, p + 1, 2)) return std::nullopt;
      second = num(s, p + 1, 2);
      p += 3;
      if (p < s.size() && s[p] == '.') {
        ++p;
        std::size_t start = p;
        while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
        if (p == start) return std::nullopt;
      }
    }
    if (hour > 24 || minute > 59 || second > 60) return std::nullopt;
    if (p < s.size()) {
      if (s[p] == 'Z' || s[p] == 'z') {
        ++p;
      } else if ((s[p] == '+' || s[p] == '-') && digits(s, p + 1, 2) && p + 6 == s.size() && s[p + 3] == ':' &&
                 digits(s, p + 4, 2)) {
        int sign = s[p] == '-' ? -1 : 1;
        offset = sign * (num(s, p + 1, 2) * 3600 + num(s, p + 4, 2) * 60);
        p += 6;
      } else {
        return std::nullopt;
      }
    }
  }
  if (p != s.size()) return std::nullopt;
  return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second - offset;
}

bool is_iso8601(std::string_view s) { return parse_iso8601(s).has_value(); }

std::optional<std::string> preferred(const std::vector<LangString>& values) {
  for (const char* lang : {"de", "en", ""}) {
    for (const auto& v : values) {
      if (v.lang == lang) return v.text;
    }
  }
  if (!values.empty()) return values.front().text;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Graph -> record

namespace {

std::string format_decimal(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

std::optional<double> parse_decimal(std::string_view s) {
  s = text::trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string strip_scheme(const std::string& v, std::string_view scheme) {
  if (v.size() > scheme.size() && text::to_lower(v.substr(0, scheme.size())) == scheme) {
    return v.substr(scheme.size());
  }
  return v;
}

/// Tracks which slice triples the mapping consumed.
class Mapper {
 public:
  Mapper(const Graph& slice, DatasetRecord& record) : slice_(slice), record_(record) {
    for (const auto& t : slice) by_subject_[t.subject].push_back(&t);
  }

  bool has_subject(const Term& node) const { return by_subject_.count(node) > 0; }

  const std::vector<const Triple*>& outgoing(const Term& node) const {
    static const std::vector<const Triple*> none;
    auto it = by_subject_.find(node);
    return it == by_subject_.end() ? none : it->second;
  }

  void consume(const Triple* t) { consumed_.insert(t); }

  void warn(const std::string& msg) { record_.warnings.push_back(msg); }

  /// Consumes every outgoing triple of `node` whose predicate is `p`.
  std::vector<const Triple*> take(const Term& node, std::string_view p) {
    std::vector<const Triple*> out;
    for (const auto* t : outgoing(node)) {
      if (t->predicate.value() == p) out.push_back(t);
    }
    return out;
  }

  /// Single-valued field: first value wins, the rest stay in `extra`.
  template <typename Accept>
  void single(const Term& node, std::string_view p, const char* field, Accept&& accept) {
    bool done = false;
    for (const auto* t : take(node, p)) {
      if (done) {
        warn(std::string("multiple values for ") + field + "; keeping the first");
        continue;
      }
      if (accept(t->object)) {
        consume(t);
        done = true;
      } else {
        warn(std::string("malformed value for ") + field + ": " + t->object.to_ntriples());
      }
    }
  }

  std::optional<std::string> single_text(const Term& node, std::string_view p, const char* field) {
    std::optional<std::string> out;
    single(node, p, field, [&](const Term& o) {
      out = o.value();
      return true;
    });
    return out;
  }

  std::optional<std::string> single_date(const Term& node, std::string_view p, const char* field) {
    std::optional<std::string> out;
    single(node, p, field, [&](const Term& o) {
      if (!o.is_literal() || !is_iso8601(o.value())) return false;
      out = o.value();
      return true;
    });
    return out;
  }

  std::optional<std::string> single_iri(const Term& node, std::string_view p, const char* field) {
    std::optional<std::string> out;
    single(node, p, field, [&](const Term& o) {
      if (!o.is_iri()) return false;
      out = o.value();
      return true;
    });
    return out;
  }

  void consume_type(const Term& node, std::string_view type) {
    for (const auto* t : take(node, vocab::kRdfType)) {
      if (t->object.is_iri() && t->object.value() == type) consume(t);
    }
  }

  std::vector<LangString> lang_strings(const Term& node, std::string_view p, const char* field) {
    std::vector<LangString> out;
    for (const auto* t : take(node, p)) {
      if (!t->object.is_literal()) {
        warn(std::string("non-literal ") + field + ": " + t->object.to_ntriples());
        continue;
      }
      consume(t);
      out.push_back({t->object.value(), t->object.language()});
    }
    return out;
  }

  AgentRef agent(const Term& node) {
    AgentRef a;
    if (node.is_iri()) a.iri = node.value();
    consume_type(node, vocab::kFoafAgent);
    single(node, vocab::kFoafName, "publisher name", [&](const Term& o) {
      if (!o.is_literal()) return false;
      a.name = o.value();
      return true;
    });
    a.homepage = single_iri(node, vocab::kFoafHomepage, "publisher homepage");
    single(node, vocab::kFoafMbox, "publisher email", [&](const Term& o) {
      if (o.is_blank()) return false;
      a.email = strip_scheme(o.value(), "mailto:");
      return true;
    });
    return a;
  }

  ContactInfo contact(const Term& node) {
    ContactInfo c;
    consume_type(node, vocab::kVcardKind);
    single(node, vocab::kVcardFn, "contact name", [&](const Term& o) {
      if (!o.is_literal()) return false;
      c.name = o.value();
      return true;
    });
    single(node, vocab::kVcardHasEmail, "contact email", [&](const Term& o) {
      if (o.is_blank()) return false;
      c.email = strip_scheme(o.value(), "mailto:");
      return true;
    });
    single(node, vocab::kVcardHasUrl, "contact url", [&](const Term& o) {
      if (o.is_blank()) return false;
      c.url = o.value();
      return true;
    });
    single(node, vocab::kVcardHasTelephone, "contact phone", [&](const Term& o) {
      if (o.is_blank()) return false;
      c.phone = strip_scheme(o.value(), "tel:");
      return true;
    });
    single(node, vocab::kVcardHasAddress, "contact address", [&](const Term& o) {
      if (!o.is_literal()) return false;
      c.address = o.value();
      return true;
    });
    return c;
  }

  GeoAnnotation place(const Term& node) {
    GeoAnnotation g;
    if (node.is_literal()) {
      g.place_name = node.value();
      return g;
    }
    if (node.is_iri()) g.place_iri = node.value();
    bool named = false;
    for (auto p : {vocab::kSkosPrefLabel, vocab::kRdfsLabel}) {
      if (named) break;
      single(node, p, "place name", [&](const Term& o) {
        if (!o.is_literal()) return false;
        g.place_name = o.value();
        named = true;
        return true;
      });
    }
    single(node, vocab::kPlaceLevel, "place level", [&](const Term& o) {
      auto lvl = o.is_literal() ? parse_place_level(o.value()) : std::nullopt;
      if (!lvl) return false;
      g.level = *lvl;
      return true;
    });
    std::optional<double> lat, lon;
    const Triple *lat_t = nullptr, *lon_t = nullptr;
    for (const auto* t : take(node, vocab::kGeoLat)) {
      if (!lat && t->object.is_literal()) lat = parse_decimal(t->object.value()), lat_t = t;
    }
    for (const auto* t : take(node, vocab::kGeoLong)) {
      if (!lon && t->object.is_literal()) lon = parse_decimal(t->object.value()), lon_t = t;
    }
    if (lat && lon) {
      GeoPoint pt{*lat, *lon};
      if (pt.valid()) {
        g.centroid = pt;
        consume(lat_t);
        consume(lon_t);
      } else {
        warn("coordinates out of range for " + node.to_ntriples());
      }
    }
    return g;
  }

  Distribution distribution(const Term& node) {
    Distribution d;
    d.node = node;
    consume_type(node, vocab::kDcatDistribution);
    auto url = [&](std::string_view p, const char* field) {
      std::optional<std::string> out;
      single(node, p, field, [&](const Term& o) {
        if (o.is_blank()) return false;
        out = o.value();
        return true;
      });
      return out;
    };
    d.access_url = url(vocab::kDcatAccessUrl, "accessURL");
    d.download_url = url(vocab::kDcatDownloadUrl, "downloadURL");
    d.media_type = url(vocab::kDcatMediaType, "mediaType");
    d.format = url(vocab::kDctFormat, "format");
    d.license = single_iri(node, vocab::kDctLicense, "license");
    single(node, vocab::kDcatByteSize, "byteSize", [&](const Term& o) {
      if (!o.is_literal()) return false;
      auto v = text::trim(o.value());
      std::uint64_t n = 0;
      auto res = std::from_chars(v.data(), v.data() + v.size(), n);
      if (res.ec != std::errc()) return false;
      if (res.ptr != v.data() + v.size()) {
        // Accept decimals with an all-zero fraction ("1024.0").
        std::string_view rest(res.ptr, v.data() + v.size() - res.ptr);
        if (rest.size() < 2 || rest[0] != '.' || rest.find_first_not_of('0', 1) != std::string_view::npos) {
          return false;
        }
      }
      d.byte_size = n;
      return true;
    });
    d.issued = single_date(node, vocab::kDctIssued, "distribution issued");
    d.modified = single_date(node, vocab::kDctModified, "distribution modified");
    return d;
  }

  void finish() {
    for (const auto& t : slice_) {
      if (!consumed_.count(&t)) record_.extra.insert(t);
    }
  }

 private:
  const Graph& slice_;
  DatasetRecord& record_;
  std::map<Term, std::vector<const Triple*>> by_subject_;
  std::set<const Triple*> consumed_;
};

template <typename T, typename Less = std::less<>>
void sort_unique(std::vector<T>& v, Less less = {}) {
  std::sort(v.begin(), v.end(), less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

DatasetRecord from_graph(const Graph& slice, const std::string& dataset) {
  DatasetRecord r;
  r.iri = dataset;
  Term root = Term::iri(dataset);
  Mapper m(slice, r);
  if (!m.has_subject(root)) throw NotFoundError("dataset not found in slice: " + dataset);

  m.consume_type(root, vocab::kDcatDataset);
  r.titles = m.lang_strings(root, vocab::kDctTitle, "title");
  r.descriptions = m.lang_strings(root, vocab::kDctDescription, "description");
  r.keywords = m.lang_strings(root, vocab::kDcatKeyword, "keyword");
  for (const auto* t : m.take(root, vocab::kDcatTheme)) {
    if (t->object.is_iri()) {
      m.consume(t);
      r.themes.push_back(t->object.value());
    } else {
      m.warn("non-IRI theme: " + t->object.to_ntriples());
    }
  }

  m.single(root, vocab::kDctPublisher, "publisher", [&](const Term& o) {
    if (o.is_literal()) {
      r.publisher = AgentRef{std::nullopt, o.value(), std::nullopt, std::nullopt};
      return true;
    }
    auto a = m.agent(o);
    if (a.empty()) return false;
    r.publisher = std::move(a);
    return true;
  });

  r.catalog = m.single_iri(root, vocab::kDctIsPartOf, "catalog");
  r.issued = m.single_date(root, vocab::kDctIssued, "issued");
  r.modified = m.single_date(root, vocab::kDctModified, "modified");
  r.accrual_periodicity = m.single_iri(root, vocab::kDctAccrualPeriodicity, "accrualPeriodicity");

  for (const auto* t : m.take(root, vocab::kDctSpatial)) {
    auto g = m.place(t->object);
    if (!g.place_iri && g.place_name.empty()) {
      m.warn("empty spatial reference");
      continue;
    }
    m.consume(t);
    r.spatial.push_back(std::move(g));
  }

  m.single(root, vocab::kDctTemporal, "temporal", [&](const Term& o) {
    if (o.is_literal()) return false;
    TimeSpan span;
    span.start = m.single_date(o, vocab::kDcatStartDate, "temporal start");
    span.end = m.single_date(o, vocab::kDcatEndDate, "temporal end");
    if (!span.start && !span.end) return false;
    r.temporal = span;
    return true;
  });

  r.landing_page = m.single_iri(root, vocab::kDcatLandingPage, "landingPage");
  m.single(root, vocab::kDcatContactPoint, "contactPoint", [&](const Term& o) {
    if (o.is_literal()) return false;
    auto c = m.contact(o);
    if (c.empty()) return false;
    r.contact_point = std::move(c);
    return true;
  });
  m.single(root, vocab::kDctIdentifier, "identifier", [&](const Term& o) {
    if (!o.is_literal()) return false;
    r.identifier = o.value();
    return true;
  });
  m.single(root, vocab::kOwlVersionInfo, "version", [&](const Term& o) {
    if (!o.is_literal()) return false;
    r.version = o.value();
    return true;
  });
  for (const auto* t : m.take(root, vocab::kDctLanguage)) {
    if (t->object.is_blank()) continue;
    m.consume(t);
    r.languages.push_back(t->object.value());
  }
  for (const auto* t : m.take(root, vocab::kDcatDistributionProp)) {
    if (t->object.is_literal()) {
      m.warn("literal distribution: " + t->object.to_ntriples());
      continue;
    }
    m.consume(t);
    r.distributions.push_back(m.distribution(t->object));
  }

  m.finish();
  sort_unique(r.themes);
  sort_unique(r.languages);
  std::stable_sort(r.distributions.begin(), r.distributions.end(),
                   [](const Distribution& a, const Distribution& b) { return a.node < b.node; });
  return r;
}

// ---------------------------------------------------------------------------
// Record -> graph

namespace {

Term iri(std::string_view v) { return Term::iri(std::string(v)); }
Term lit(const std::string& v) { return Term::literal(v); }

Term date_literal(const std::string& v) {
  if (v.size() == 10) return Term::literal(v, {}, std::string(vocab::kXsdDate));
  if (v.size() > 10) return Term::literal(v, {}, std::string(vocab::kXsdDateTime));
  return Term::literal(v);
}

/// IRI when the value looks absolute, literal otherwise.
Term iri_or_literal(const std::string& v) {
  if (!v.empty() && v.find(':') != std::string::npos && v.find(' ') == std::string::npos) return Term::iri(v);
  return Term::literal(v);
}

Term local_blank(const std::string& dataset, const std::string& role) {
  return Term::blank(rdf::skolem_label(dataset, role));
}

}  // namespace

Graph to_graph(const DatasetRecord& r) {
  Graph g;
  const Term root = Term::iri(r.iri);
  auto add = [&](const Term& s, std::string_view p, const Term& o) { g.add(s, iri(p), o); };

  add(root, vocab::kRdfType, iri(vocab::kDcatDataset));
  for (const auto& t : r.titles) add(root, vocab::kDctTitle, Term::literal(t.text, t.lang));
  for (const auto& t : r.descriptions) add(root, vocab::kDctDescription, Term::literal(t.text, t.lang));
  for (const auto& t : r.keywords) add(root, vocab::kDcatKeyword, Term::literal(t.text, t.lang));
  for (const auto& t : r.themes) add(root, vocab::kDcatTheme, iri(t));

  if (r.publisher && !r.publisher->empty()) {
    const auto& a = *r.publisher;
    if (!a.iri && a.name && !a.homepage && !a.email) {
      add(root, vocab::kDctPublisher, lit(*a.name));
    } else {
      Term node = a.iri ? iri(*a.iri) : local_blank(r.iri, "publisher");
      add(root, vocab::kDctPublisher, node);
      add(node, vocab::kRdfType, iri(vocab::kFoafAgent));
      if (a.name) add(node, vocab::kFoafName, lit(*a.name));
      if (a.homepage) add(node, vocab::kFoafHomepage, iri(*a.homepage));
      if (a.email) add(node, vocab::kFoafMbox, iri("mailto:" + *a.email));
    }
  }
  if (r.catalog) add(root, vocab::kDctIsPartOf, iri(*r.catalog));
  if (r.issued) add(root, vocab::kDctIssued, date_literal(*r.issued));
  if (r.modified) add(root, vocab::kDctModified, date_literal(*r.modified));
  if (r.accrual_periodicity) add(root, vocab::kDctAccrualPeriodicity, iri(*r.accrual_periodicity));

  for (const auto& s : r.spatial) {
    bool bare = !s.centroid && s.level == PlaceLevel::Unspecified;
    if (!s.place_iri && bare) {
      add(root, vocab::kDctSpatial, lit(s.place_name));
      continue;
    }
    Term node = s.place_iri ? iri(*s.place_iri)
                            : local_blank(r.iri, "spatial:" + s.place_name + ":" + to_string(s.level) + ":" +
                                                     (s.centroid ? format_decimal(s.centroid->lat) + "," +
                                                                       format_decimal(s.centroid->lon)
                                                                 : std::string()));
    add(root, vocab::kDctSpatial, node);
    if (!s.place_name.empty()) add(node, vocab::kSkosPrefLabel, lit(s.place_name));
    if (s.level != PlaceLevel::Unspecified) add(node, vocab::kPlaceLevel, lit(to_string(s.level)));
    if (s.centroid) {
      add(node, vocab::kGeoLat, Term::literal(format_decimal(s.centroid->lat), {}, std::string(vocab::kXsdDecimal)));
      add(node, vocab::kGeoLong, Term::literal(format_decimal(s.centroid->lon), {}, std::string(vocab::kXsdDecimal)));
    }
  }

  if (r.temporal && (r.temporal->start || r.temporal->end)) {
    Term node = local_blank(r.iri, "temporal");
    add(root, vocab::kDctTemporal, node);
    if (r.temporal->start) add(node, vocab::kDcatStartDate, date_literal(*r.temporal->start));
    if (r.temporal->end) add(node, vocab::kDcatEndDate, date_literal(*r.temporal->end));
  }
  if (r.landing_page) add(root, vocab::kDcatLandingPage, iri(*r.landing_page));
  if (r.contact_point && !r.contact_point->empty()) {
    const auto& c = *r.contact_point;
    Term node = local_blank(r.iri, "contact");
    add(root, vocab::kDcatContactPoint, node);
    add(node, vocab::kRdfType, iri(vocab::kVcardKind));
    if (c.name) add(node, vocab::kVcardFn, lit(*c.name));
    if (c.email) add(node, vocab::kVcardHasEmail, iri("mailto:" + *c.email));
    if (c.url) add(node, vocab::kVcardHasUrl, iri_or_literal(*c.url));
    if (c.phone) add(node, vocab::kVcardHasTelephone, lit(*c.phone));
    if (c.address) add(node, vocab::kVcardHasAddress, lit(*c.address));
  }
  if (r.identifier) add(root, vocab::kDctIdentifier, lit(*r.identifier));
  if (r.version) add(root, vocab::kOwlVersionInfo, lit(*r.version));
  for (const auto& l : r.languages) add(root, vocab::kDctLanguage, iri_or_literal(l));

  for (const auto& d : r.distributions) {
    add(root, vocab::kDcatDistributionProp, d.node);
    add(d.node, vocab::kRdfType, iri(vocab::kDcatDistribution));
    if (d.access_url) add(d.node, vocab::kDcatAccessUrl, iri_or_literal(*d.access_url));
    if (d.download_url) add(d.node, vocab::kDcatDownloadUrl, iri_or_literal(*d.download_url));
    if (d.media_type) add(d.node, vocab::kDcatMediaType, lit(*d.media_type));
    if (d.format) add(d.node, vocab::kDctFormat, lit(*d.format));
    if (d.license) add(d.node, vocab::kDctLicense, iri(*d.license));
    if (d.byte_size) {
      add(d.node, vocab::kDcatByteSize,
          Term::literal(std::to_string(*d.byte_size), {}, std::string(vocab::kXsdNonNegativeInteger)));
    }
    if (d.issued) add(d.node, vocab::kDctIssued, date_literal(*d.issued));
    if (d.modified) add(d.node, vocab::kDctModified, date_literal(*d.modified));
  }

  g.merge(r.extra);
  return g;
}

}  // namespace metacat::dcat
