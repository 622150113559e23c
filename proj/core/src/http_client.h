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

#ifndef IDEAREADER_SRC_HTTP_CLIENT_H_
#define IDEAREADER_SRC_HTTP_CLIENT_H_

#include <string>
#include <string_view>

#include "ideareader/provider.h"
#include "json.hpp"

namespace ideareader::internal {

// POSTs `body` as JSON to {base_url}{route} and returns the parsed response.
// Every failure mode surfaces as a ProviderError of the matching kind.
nlohmann::json post_json(const ProviderEndpoint& endpoint,
                         std::string_view route, const nlohmann::json& body);

}  // namespace ideareader::internal

#endif  // IDEAREADER_SRC_HTTP_CLIENT_H_
