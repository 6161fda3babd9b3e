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

#include <httplib.h>

#include "metacat/quality.hpp"

namespace metacat::quality {

namespace {

constexpr int kTimeoutSeconds = 10;

bool probe(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return false;
  auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") return false;
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") return false;
#endif
  auto path_start = url.find('/', scheme_end + 3);
  std::string origin = url.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client cli(origin);
  cli.set_follow_location(true);
  cli.set_connection_timeout(kTimeoutSeconds, 0);
  cli.set_read_timeout(kTimeoutSeconds, 0);
  cli.set_write_timeout(kTimeoutSeconds, 0);
  auto ok = [](const httplib::Result& r) { return r && r->status >= 200 && r->status < 300; };
  auto head = cli.Head(path);
  if (ok(head)) return true;
  // some servers refuse HEAD; retry with GET before giving up
  if (head && (head->status == 405 || head->status == 501 || head->status == 403)) return ok(cli.Get(path));
  return false;
}

}  // namespace

UrlProber http_url_prober() { return probe; }

}  // namespace metacat::quality
