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

#include "metacat/service.hpp"

#include <httplib.h>

#include <charconv>
#include <cmath>
#include <json.hpp>

#include "metacat/error.hpp"
#include "metacat/rdf.hpp"
#include "metacat/text.hpp"

namespace metacat::service {

using json = nlohmann::json;

namespace {

std::optional<std::string> pick_text(const std::vector<dcat::LangString>& v) {
  for (const char* lang : {"de", "en", ""})
    for (const auto& ls : v)
      if (ls.lang == lang) return ls.text;
  if (v.empty()) return std::nullopt;
  return v.front().text;
}

json opt(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }
json opt(const std::optional<double>& d) { return d ? json(*d) : json(nullptr); }
json point(const std::optional<dcat::GeoPoint>& p) {
  return p ? json{{"lat", p->lat}, {"lon", p->lon}} : json(nullptr);
}

json lang_list(const std::vector<dcat::LangString>& v) {
  json a = json::array();
  for (const auto& ls : v) a.push_back({{"text", ls.text}, {"lang", ls.lang}});
  return a;
}

Response ok(const json& j) { return {200, j.dump(), "application/json"}; }

json facets_json(const search::FacetCounts& f) {
  json out = json::object();
  for (const auto& [field, counts] : f) {
    json m = json::object();
    for (const auto& [v, n] : counts) m[v] = n;
    out[field] = std::move(m);
  }
  return out;
}

std::size_t parse_count(const std::string& name, const std::string& v) {
  std::size_t n = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ValidationError(name + " must be a positive integer");
  return n;
}

double parse_number(const std::string& name, const std::string& v) {
  double d = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), d);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(d))
    throw ValidationError(name + " must be a number");
  return d;
}

std::string percent_decode(std::string_view s) { return httplib::detail::decode_url(std::string(s), false); }

}  // namespace

Params parse_query_string(std::string_view query) {
  httplib::Params raw;
  httplib::detail::parse_query_text(std::string(query), raw);
  return Params(raw.begin(), raw.end());
}

Response error_response(int status, const std::string& code, const std::string& message) {
  return {status, json{{"status", status}, {"code", code}, {"message", message}}.dump(), "application/json"};
}

search::SearchQuery parse_search_params(const Params& params) {
  search::SearchQuery q;
  std::optional<std::string> lat, lon;
  for (const auto& [key, value] : params) {
    if (key == "q") {
      q.text = value;
    } else if (auto f = search::parse_facet_field(key)) {
      if (!value.empty()) q.facets[*f].values.insert(value);
    } else if (key.rfind("facet_mode.", 0) == 0) {
      auto f = search::parse_facet_field(std::string_view(key).substr(11));
      if (!f) throw ValidationError("unknown facet field in " + key);
      if (value == "and") q.facets[*f].mode = search::Combinator::And;
      else if (value == "or") q.facets[*f].mode = search::Combinator::Or;
      else throw ValidationError(key + " must be 'and' or 'or'");
    } else if (key == "bbox") {
      auto parts = text::split(value, ',');
      if (parts.size() != 4) throw ValidationError("bbox needs swLat,swLon,neLat,neLon");
      q.bbox = search::BoundingBox{{parse_number("bbox", parts[0]), parse_number("bbox", parts[1])},
                                   {parse_number("bbox", parts[2]), parse_number("bbox", parts[3])}};
    } else if (key == "sort") {
      if (value == "relevance") q.sort = search::SortMode::Relevance;
      else if (value == "distance") q.sort = search::SortMode::Distance;
      else throw ValidationError("sort must be 'relevance' or 'distance'");
    } else if (key == "lat") {
      lat = value;
    } else if (key == "lon") {
      lon = value;
    } else if (key == "synonyms") {
      if (value == "true") q.synonyms = true;
      else if (value == "false") q.synonyms = false;
      else throw ValidationError("synonyms must be 'true' or 'false'");
    } else if (key == "page") {
      q.page = parse_count("page", value);
    } else if (key == "size") {
      q.size = parse_count("size", value);
    }
  }
  if (lat.has_value() != lon.has_value()) throw ValidationError("lat and lon go together");
  if (lat) q.origin = dcat::GeoPoint{parse_number("lat", *lat), parse_number("lon", *lon)};
  search::validate(q);
  return q;
}

Response handle_search(const Snapshot& s, const Params& params) {
  search::SearchQuery q;
  try {
    q = parse_search_params(params);
  } catch (const ValidationError& e) {
    return error_response(400, "bad_request", e.what());
  }
  auto res = s.index.search(q, &s.synonyms);
  json results = json::array();
  for (const auto& h : res.hits) {
    const auto& d = s.index.doc(h.doc);
    results.push_back({{"iri", d.dataset},
                       {"title", opt(pick_text(d.titles))},
                       {"description", opt(pick_text(d.descriptions))},
                       {"publisher", opt(d.publisher)},
                       {"catalog", opt(d.catalog)},
                       {"license", opt(d.license)},
                       {"quality", opt(d.quality)},
                       {"point", point(d.point)},
                       {"score", h.score},
                       {"distance_km", opt(h.distance_km)}});
  }
  return ok({{"total", res.total},
             {"page", res.page},
             {"size", res.size},
             {"results", std::move(results)},
             {"facets", facets_json(res.facets)}});
}

Response handle_dataset(const Snapshot& s, const std::string& iri) {
  auto id = s.index.find(iri);
  if (!id) return error_response(404, "not_found", "no dataset " + iri);
  const auto& d = s.index.doc(*id);
  return ok({{"iri", d.dataset},
             {"titles", lang_list(d.titles)},
             {"descriptions", lang_list(d.descriptions)},
             {"keywords", lang_list(d.keywords)},
             {"categories", d.categories},
             {"publisher", opt(d.publisher)},
             {"catalog", opt(d.catalog)},
             {"license", opt(d.license)},
             {"quality", opt(d.quality)},
             {"point", point(d.point)}});
}

Response handle_facets(const Snapshot& s) {
  search::SearchQuery q;
  auto res = s.index.search(q);
  return ok({{"total", res.total}, {"facets", facets_json(res.facets)}});
}

Response handle_quality(const Snapshot& s, const std::string& iri) {
  auto it = s.quality.find(iri);
  if (it == s.quality.end() && !s.index.find(iri)) return error_response(404, "not_found", "no dataset " + iri);
  static const std::vector<quality::Measurement> kNone;
  const auto& ms = it == s.quality.end() ? kNone : it->second;
  json metrics = json::array();
  for (const auto& m : ms) {
    const auto* desc = quality::find_descriptor(m.key);
    metrics.push_back({{"key", m.key}, {"dimension", desc ? json(desc->dimension) : json(nullptr)}, {"score", m.value}});
  }
  return ok({{"iri", iri}, {"aggregate", opt(quality::aggregate(ms))}, {"metrics", std::move(metrics)}});
}

Response handle_license_check(const Snapshot& s, const std::string& body) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::exception&) {
    return error_response(400, "bad_request", "body is not JSON");
  }
  if (!req.is_object() || !req.contains("licenses") || !req["licenses"].is_array())
    return error_response(400, "bad_request", "expected {\"licenses\": [iri, ...]}");
  std::vector<license::LicenseSpec> specs;
  json unknown = json::array();
  for (const auto& l : req["licenses"]) {
    if (!l.is_string()) return error_response(400, "bad_request", "license entries must be strings");
    auto spec = s.licenses.resolve(l.get<std::string>());
    if (!spec.known) unknown.push_back(spec.id);
    specs.push_back(std::move(spec));
  }
  if (specs.empty()) return error_response(400, "bad_request", "license list is empty");
  auto verdict = license::check_compatibility(specs);
  json conflicts = json::array();
  for (const auto& c : verdict.conflicts)
    conflicts.push_back({{"kind", license::to_string(c.kind)}, {"licenses", c.licenses}, {"details", c.details}});
  json candidates = json::array();
  for (const auto& c : license::relicensing_candidates(specs, s.licenses.all()))
    candidates.push_back({{"id", c.id}, {"name", c.name}});
  return ok({{"compatible", verdict.compatible},
             {"conflicts", std::move(conflicts)},
             {"candidates", std::move(candidates)},
             {"unknown", std::move(unknown)}});
}

Response handle_health(const Snapshot& s) { return ok({{"status", "ok"}, {"docs", s.index.size()}}); }

// --- routing ------------------------------------------------------------------

Service::Service(std::shared_ptr<const Snapshot> snapshot) : current_(std::move(snapshot)) {
  if (!current_) throw ValidationError("service needs a snapshot");
}

void Service::publish(std::shared_ptr<const Snapshot> snapshot) {
  if (!snapshot) throw ValidationError("cannot publish an empty snapshot");
  std::lock_guard lock(mu_);
  current_ = std::move(snapshot);
}

std::shared_ptr<const Snapshot> Service::snapshot() const {
  std::lock_guard lock(mu_);
  return current_;
}

Response Service::handle(const Request& req) const {
  auto snap = snapshot();
  try {
    std::string_view path = req.path;
    if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
    auto tail = [&](std::string_view prefix) -> std::optional<std::string> {
      if (path.size() <= prefix.size() || path.substr(0, prefix.size()) != prefix) return std::nullopt;
      return percent_decode(path.substr(prefix.size()));
    };
    if (req.method == "GET") {
      if (path == "/api/search") return handle_search(*snap, req.params);
      if (path == "/api/facets") return handle_facets(*snap);
      if (path == "/healthz") return handle_health(*snap);
      if (auto iri = tail("/api/datasets/")) return handle_dataset(*snap, *iri);
      if (auto iri = tail("/api/quality/")) return handle_quality(*snap, *iri);
    } else if (req.method == "POST" && path == "/api/licenses/check") {
      return handle_license_check(*snap, req.body);
    }
    return error_response(404, "not_found", "no route for " + req.method + " " + std::string(path));
  } catch (const ValidationError& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

std::shared_ptr<const Snapshot> load_snapshot(const std::string& index_path,
                                              const std::optional<std::string>& quality_path,
                                              const std::optional<std::string>& synonyms_path) {
  auto s = std::make_shared<Snapshot>();
  s->index = search::InvertedIndex::load(index_path);
  if (quality_path) s->quality = quality::parse_dqv_all(rdf::parse_file(*quality_path));
  if (synonyms_path) s->synonyms = search::SynonymTable::load(*synonyms_path);
  return s;
}

// --- HTTP front end -------------------------------------------------------------

HttpServer::HttpServer(Service& service, ServerConfig config)
    : service_(service), config_(std::move(config)), server_(std::make_unique<httplib::Server>()) {
  // catch-all handlers so the body is read before dispatch and every route,
  // known or not, answers with the JSON conventions of Service::handle
  auto dispatch = [this](const httplib::Request& hreq, httplib::Response& hres) {
    if (!config_.cors_origin.empty()) {
      hres.set_header("Access-Control-Allow-Origin", config_.cors_origin);
      hres.set_header("Vary", "Origin");
    }
    if (hreq.method == "OPTIONS") {
      if (!config_.cors_origin.empty()) {
        hres.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        hres.set_header("Access-Control-Allow-Headers", "Content-Type");
      }
      hres.status = 204;
      return;
    }
    Request req;
    req.method = hreq.method;
    req.path = hreq.target.substr(0, hreq.target.find('?'));
    for (const auto& [k, v] : hreq.params) req.params.emplace(k, v);
    req.body = hreq.body;
    auto res = service_.handle(req);
    hres.status = res.status;
    hres.set_content(res.body, res.content_type);
  };
  const std::string any = ".*";
  server_->Get(any, dispatch);
  server_->Post(any, dispatch);
  server_->Put(any, dispatch);
  server_->Delete(any, dispatch);
  server_->Patch(any, dispatch);
  server_->Options(any, dispatch);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start() {
  if (config_.port == 0) {
    port_ = server_->bind_to_any_port(config_.host);
  } else {
    port_ = server_->bind_to_port(config_.host, config_.port) ? config_.port : -1;
  }
  if (port_ <= 0) throw IoError("cannot bind " + config_.host + ":" + std::to_string(config_.port));
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void HttpServer::wait() {
  // stop() may race a waiter on another thread; only one of them joins
  std::lock_guard lock(join_mu_);
  if (thread_.joinable()) thread_.join();
}

void HttpServer::stop() {
  if (server_) server_->stop();
  wait();
}

}  // namespace metacat::service
