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

#include "provenance.h"

#include <cctype>
#include <vector>

#include "ideareader/survey.h"
#include "ideareader/text.h"

namespace ideareader::testing {
namespace {

bool iequals_prefix(const std::string& s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i])))
      return false;
  }
  return s.size() == prefix.size() || !std::isalnum(static_cast<unsigned char>(s[prefix.size()]));
}

// Every way the tail after a subject could read once its first word is put
// in the past tense.
std::vector<std::string> rewrites(const std::string& tail) {
  std::vector<std::string> out{tail};
  std::size_t start = tail.find_first_not_of(" \t");
  if (start == 0 || start == std::string::npos) return out;
  std::size_t end = start;
  while (end < tail.size() && std::isalpha(static_cast<unsigned char>(tail[end]))) ++end;
  std::string word = tail.substr(start, end - start);
  std::string lower = text::to_lower(word);
  for (const auto& v : survey::reporting_verbs()) {
    if (lower != v.base && lower != v.third_person) continue;
    std::string past(v.past);
    if (std::isupper(static_cast<unsigned char>(word[0])))
      past[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(past[0])));
    out.push_back(tail.substr(0, start) + past + tail.substr(end));
  }
  return out;
}

}  // namespace

bool traces_to_source(const std::string& aligned, const std::string& tag,
                      const PaperRecord& paper) {
  if (aligned.compare(0, tag.size(), tag) != 0) return false;
  const std::string rest = aligned.substr(tag.size());

  std::vector<std::string> sources = text::split_sentences(paper.abstract);
  sources.emplace_back(text::trim(paper.title));
  for (const std::string& s : sources) {
    if (rest == ": " + s) return true;
    for (std::string_view pattern : survey::subject_patterns()) {
      if (!iequals_prefix(s, pattern)) continue;
      for (const std::string& r : rewrites(s.substr(pattern.size()))) {
        if (r == rest) return true;
      }
    }
  }
  return false;
}

}  // namespace ideareader::testing
