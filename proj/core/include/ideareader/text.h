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

#ifndef IDEAREADER_TEXT_H_
#define IDEAREADER_TEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ideareader::text {

// Version tag of the built-in stopword list. Bump whenever the list changes.
inline constexpr std::string_view kStopwordListVersion = "en-50-v1";

// The 50 built-in English function words, lowercase.
std::span<const std::string_view> stopwords();
bool is_stopword(std::string_view token);

// Lowercases ASCII letters; other bytes pass through unchanged.
std::string to_lower(std::string_view s);

// Splits on every run of non-alphanumeric ASCII characters and lowercases.
// Bytes >= 0x80 are kept inside tokens so UTF-8 words stay intact. No tokens
// are dropped.
std::vector<std::string> split_words(std::string_view s);

// The analyzer shared by TF-IDF and topic labelling: split_words, then drop
// tokens shorter than 2 characters and stopwords.
std::vector<std::string> tokenize(std::string_view s);

// Splits text into sentences. A sentence ends at '.', '!' or '?' followed by
// whitespace or end of text, except after the guarded abbreviations
// "e.g.", "i.e.", "et al.", "Fig." and "Eq.". Sentences are trimmed; trailing
// text without a terminator forms a final sentence.
std::vector<std::string> split_sentences(std::string_view s);

std::string_view trim(std::string_view s);

// Uppercases the first letter of every space-separated word.
std::string title_case(std::string_view s);

bool starts_with_ignore_case(std::string_view s, std::string_view prefix);

}  // namespace ideareader::text

#endif  // IDEAREADER_TEXT_H_
