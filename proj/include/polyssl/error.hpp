// Copyright (c) 2026 PolySSL Authors
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

#ifndef POLYSSL_ERROR_HPP_
#define POLYSSL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace polyssl {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition (bad position, empty set, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Input too short for the augmentation sampler (length <= 3).
class GateError : public ArgumentError {
 public:
  explicit GateError(const std::string& msg) : ArgumentError(msg) {}
};

// Malformed or inconsistent data files (parse errors, validation errors,
// checkpoint/inventory fingerprint mismatches).
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

// Invalid run configuration or synthetic-task spec.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace polyssl

#endif  // POLYSSL_ERROR_HPP_
