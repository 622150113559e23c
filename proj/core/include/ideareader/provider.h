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

#ifndef IDEAREADER_PROVIDER_H_
#define IDEAREADER_PROVIDER_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ideareader/errors.h"

namespace ideareader {

// An optional remote model service. Without a base URL every consumer runs
// its deterministic offline fallback instead.
struct ProviderEndpoint {
  std::optional<std::string> base_url;
  std::chrono::milliseconds timeout{10000};
  // Only meaningful for embedding providers.
  std::size_t expected_dim = 768;
  // Maximum number of texts sent per request.
  std::size_t batch_size = 64;

  bool enabled() const { return base_url.has_value() && !base_url->empty(); }
};

class ProviderError : public Error {
 public:
  enum class Kind {
    kNetwork,
    kTimeout,
    kStatus,
    kMalformedBody,
    kDimensionMismatch,
    kRowCountMismatch,
  };

  ProviderError(Kind kind, const std::string& message)
      : Error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  Kind kind() const { return kind_; }

  static std::string_view kind_name(Kind kind);

 private:
  Kind kind_;
};

}  // namespace ideareader

#endif  // IDEAREADER_PROVIDER_H_
