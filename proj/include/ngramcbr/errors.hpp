// Copyright 2026 The ngramcbr Authors
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

#ifndef NGRAMCBR_ERRORS_HPP_
#define NGRAMCBR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ngramcbr {

// Base for all data-level failures raised by this library. Caller
// programming errors (bad k range, zero lengths) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file content; the message carries "file:line".
class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what) {}
};

// Well-formed input that violates a table invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Structurally broken index file.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Index fingerprints do not match the loaded lexicons or configuration.
class StaleIndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace ngramcbr

#endif  // NGRAMCBR_ERRORS_HPP_
