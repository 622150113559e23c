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

#ifndef IDEAREADER_ERRORS_H_
#define IDEAREADER_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ideareader {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed corpus lines, unknown ids, invalid configs.
// The command-line tool maps these to exit status 2.
class DataError : public Error {
 public:
  using Error::Error;
};

class CorpusError : public DataError {
 public:
  CorpusError(const std::string& message, std::size_t line = 0)
      : DataError(line == 0 ? message
                            : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  // 1-based line number of the offending record, 0 when not line-specific.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownPaperError : public DataError {
 public:
  explicit UnknownPaperError(const std::string& id)
      : DataError("unknown paper id '" + id + "'"), id_(id) {}

  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class ConfigError : public DataError {
 public:
  using DataError::DataError;
};

// A contract violation inside the library itself.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ideareader

#endif  // IDEAREADER_ERRORS_H_
