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

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "metacat/license.hpp"
#include "metacat/quality.hpp"
#include "metacat/search.hpp"

namespace httplib {
class Server;
}

namespace metacat::service {

/// Everything a request reads. Immutable once published.
struct Snapshot {
  search::InvertedIndex index;
  search::SynonymTable synonyms;
  std::map<std::string, std::vector<quality::Measurement>> quality;
  license::LicenseDb licenses = license::LicenseDb::bundled();
};

/// Reads `index.bin`; quality (N-Triples DQV) and synonyms (TSV) are optional.
std::shared_ptr<const Snapshot> load_snapshot(const std::string& index_path,
                                              const std::optional<std::string>& quality_path = std::nullopt,
                                              const std::optional<std::string>& synonyms_path = std::nullopt);

using Params = std::multimap<std::string, std::string>;

/// `a=1&b=x%20y` into decoded parameters, as the HTTP front end sees them.
Params parse_query_string(std::string_view query);

struct Request {
  std::string method = "GET";
  std::string path;  // raw, still percent-encoded
  Params params;     // decoded query parameters
  std::string body;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// JSON error body `{status, code, message}`.
Response error_response(int status, const std::string& code, const std::string& message);

/// Maps search parameters onto a query. Throws ValidationError on malformed
/// values; the caller turns that into a 400.
search::SearchQuery parse_search_params(const Params& params);

Response handle_search(const Snapshot& s, const Params& params);
Response handle_dataset(const Snapshot& s, const std::string& iri);
Response handle_facets(const Snapshot& s);
Response handle_quality(const Snapshot& s, const std::string& iri);
Response handle_license_check(const Snapshot& s, const std::string& body);
Response handle_health(const Snapshot& s);

/// Routes requests to the handlers above over the current snapshot. Each
/// request pins the snapshot it started with, so `publish` never disturbs
/// requests in flight.
class Service {
 public:
  explicit Service(std::shared_ptr<const Snapshot> snapshot);

  void publish(std::shared_ptr<const Snapshot> snapshot);
  std::shared_ptr<const Snapshot> snapshot() const;

  Response handle(const Request& req) const;

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const Snapshot> current_;
};

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string cors_origin;  // empty disables CORS headers
};

/// httplib front end. `start` binds and serves on a background thread.
class HttpServer {
 public:
  HttpServer(Service& service, ServerConfig config);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Returns the bound port. Throws IoError when binding fails.
  int start();
  /// Blocks until `stop` is called from elsewhere.
  void wait();
  void stop();

 private:
  Service& service_;
  ServerConfig config_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::mutex join_mu_;
  int port_ = 0;
};

}  // namespace metacat::service
