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

#ifndef NGRAMCBR_TEXT_HPP_
#define NGRAMCBR_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ngramcbr {

// Uppercase fold for ASCII letters; every other byte passes through, so
// non-ASCII text survives unchanged.
std::string fold_upper(std::string_view text);

// Bytes that make up tokens: ASCII alphanumerics plus any non-ASCII byte.
bool is_token_byte(unsigned char c);

std::string trim(std::string_view text);

// Splits on a separator, keeping empty fields.
std::vector<std::string> split(std::string_view text, char sep);

// Field escaping for tab-separated files: backslash, tab, newline.
std::string escape_field(std::string_view text);
std::string unescape_field(std::string_view text);

std::uint64_t fnv1a64(std::string_view data);
std::string to_hex16(std::uint64_t value);

struct NumberedLine {
  int number = 0;  // 1-based position in the file
  std::string text;
};

// Reads a text file and drops blank lines and '#' comment lines. Tolerates
// CRLF endings. Throws Error when the file cannot be opened.
std::vector<NumberedLine> read_content_lines(const std::string& path);

}  // namespace ngramcbr

#endif  // NGRAMCBR_TEXT_HPP_
