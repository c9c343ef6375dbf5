// Copyright 2026 The Tensorparse Authors.
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

#ifndef TENSORPARSE_ERRORS_H_
#define TENSORPARSE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tensorparse {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input. `location` is a 1-based line number for line-oriented
// sources and a 0-based character offset for logical-form text.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t location)
      : Error(message), location_(location) {}

  std::size_t location() const { return location_; }

 private:
  std::size_t location_;
};

// An entity or relation id that does not resolve in the graph catalogs.
class ReferenceError : public Error {
 public:
  explicit ReferenceError(const std::string &id)
      : Error("unknown id: " + id), id_(id) {}

  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

// Invalid configuration or too little data for the requested operation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A logical form outside the supported template shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tensorparse

#endif  // TENSORPARSE_ERRORS_H_
