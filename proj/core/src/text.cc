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

#include "ideareader/text.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace ideareader::text {
namespace {

constexpr std::array<std::string_view, 50> kStopwords = {
    "a",     "about", "an",   "and",  "are",   "as",    "at",   "be",
    "been",  "being", "but",  "by",   "can",   "do",    "for",  "from",
    "had",   "has",   "have", "if",   "in",    "into",  "is",   "it",
    "its",   "no",    "not",  "of",   "on",    "or",    "our",  "so",
    "such",  "than",  "that", "the",  "then",  "these", "this", "those",
    "to",    "was",   "we",   "were", "what",  "which", "who",  "whom",
    "will",  "with",
};

constexpr std::array<std::string_view, 5> kAbbreviations = {
    "e.g.", "i.e.", "et al.", "Fig.", "Eq.",
};

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c >= 0x80;
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// True when text[0, end) finishes with a guarded abbreviation that starts at
// a word boundary.
bool ends_with_abbreviation(std::string_view text, std::size_t end) {
  std::string_view head = text.substr(0, end);
  for (std::string_view abbr : kAbbreviations) {
    if (head.size() < abbr.size()) continue;
    if (head.substr(head.size() - abbr.size()) != abbr) continue;
    std::size_t start = head.size() - abbr.size();
    if (start == 0 || !is_word_byte(static_cast<unsigned char>(head[start - 1])))
      return true;
  }
  return false;
}

}  // namespace

std::span<const std::string_view> stopwords() { return kStopwords; }

bool is_stopword(std::string_view token) {
  return std::binary_search(kStopwords.begin(), kStopwords.end(), token);
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && !is_word_byte(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && is_word_byte(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) words.push_back(to_lower(s.substr(start, i - start)));
  }
  return words;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> tokens = split_words(s);
  std::erase_if(tokens, [](const std::string& t) {
    return t.size() < 2 || is_stopword(t);
  });
  return tokens;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_sentences(std::string_view s) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = trim(s.substr(start, end - start));
    if (!piece.empty()) sentences.emplace_back(piece);
    start = end;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c != '.' && c != '!' && c != '?') continue;
    bool at_boundary = i + 1 == s.size() || is_space(s[i + 1]);
    if (!at_boundary) continue;
    if (c == '.' && ends_with_abbreviation(s, i + 1)) continue;
    emit(i + 1);
  }
  emit(s.size());
  return sentences;
}

std::string title_case(std::string_view s) {
  std::string out(s);
  bool at_word_start = true;
  for (char& c : out) {
    if (c == ' ') {
      at_word_start = true;
    } else {
      if (at_word_start && c >= 'a' && c <= 'z')
        c = static_cast<char>(c - 'a' + 'A');
      at_word_start = false;
    }
  }
  return out;
}

bool starts_with_ignore_case(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  return to_lower(s.substr(0, prefix.size())) == to_lower(prefix);
}

}  // namespace ideareader::text
