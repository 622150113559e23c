// Copyright 2026 The IdeaReader Authors.
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

#include "http_client.h"

#include "httplib.h"

namespace ideareader {

std::string_view ProviderError::kind_name(Kind kind) {
  switch (kind) {
    case Kind::kNetwork: return "network failure";
    case Kind::kTimeout: return "timeout";
    case Kind::kStatus: return "bad status";
    case Kind::kMalformedBody: return "malformed body";
    case Kind::kDimensionMismatch: return "dimension mismatch";
    case Kind::kRowCountMismatch: return "row count mismatch";
  }
  return "provider error";
}

}  // namespace ideareader

namespace ideareader::internal {
namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path prefix without trailing slash
};

SplitUrl split_url(std::string_view url) {
  std::size_t scheme = url.find("://");
  std::size_t host_start = scheme == std::string_view::npos ? 0 : scheme + 3;
  std::size_t slash = url.find('/', host_start);
  SplitUrl out;
  if (slash == std::string_view::npos) {
    out.origin = std::string(url);
  } else {
    out.origin = std::string(url.substr(0, slash));
    out.prefix = std::string(url.substr(slash));
  }
  while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  return out;
}

}  // namespace

nlohmann::json post_json(const ProviderEndpoint& endpoint,
                         std::string_view route, const nlohmann::json& body) {
  if (!endpoint.enabled())
    throw ProviderError(ProviderError::Kind::kNetwork, "no provider configured");
  SplitUrl url = split_url(*endpoint.base_url);
  httplib::Client client(url.origin);
  client.set_connection_timeout(endpoint.timeout);
  client.set_read_timeout(endpoint.timeout);
  client.set_write_timeout(endpoint.timeout);

  std::string path = url.prefix + std::string(route);
  httplib::Result res = client.Post(path, body.dump(), "application/json");
  if (!res) {
    httplib::Error err = res.error();
    // A read that hits the deadline shows up as Error::Read.
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read)
      throw ProviderError(ProviderError::Kind::kTimeout,
                          *endpoint.base_url + " did not answer in time");
    throw ProviderError(ProviderError::Kind::kNetwork,
                        *endpoint.base_url + ": " + httplib::to_string(err));
  }
  if (res->status != 200)
    throw ProviderError(ProviderError::Kind::kStatus,
                        path + " returned HTTP " + std::to_string(res->status));
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProviderError(ProviderError::Kind::kMalformedBody, e.what());
  }
}

}  // namespace ideareader::internal
