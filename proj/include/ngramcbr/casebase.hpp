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

#ifndef NGRAMCBR_CASEBASE_HPP_
#define NGRAMCBR_CASEBASE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "ngramcbr/config.hpp"
#include "ngramcbr/lexicons.hpp"

namespace ngramcbr {

struct Case {
  std::string id;        // unique within a case base
  std::string problem;   // non-empty free text
  std::string solution;  // free text

  bool operator==(const Case&) const = default;
};

struct IndexEntry {
  Case source;
  std::vector<std::string> canonical_tokens;  // preprocessed problem

  bool operator==(const IndexEntry&) const = default;
};

// Preprocessed case base plus digests of the lexicons and configuration it
// was built with. Retrieval refuses an index whose digests do not match.
struct CaseIndex {
  std::vector<IndexEntry> entries;
  std::string bundle_fingerprint;
  std::string config_fingerprint;

  bool operator==(const CaseIndex&) const = default;
};

// Case files are "ID<TAB>PROBLEM<TAB>SOLUTION" lines with '#' comments;
// literal tabs, newlines and backslashes inside fields are escaped as \t,
// \n and \\. Throws ParseError / ValidationError.
std::vector<Case> parse_casebase(const std::filesystem::path& path);

CaseIndex build_index(const std::vector<Case>& cases,
                      const LexiconBundle& bundle,
                      const PipelineConfig& config);

// Plain text format: a "NGRAMCBR-INDEX v1" header line, the two
// fingerprints, then one record per case.
void save_index(const CaseIndex& index, const std::filesystem::path& path);

// Verifies the stored fingerprints against the given bundle and config
// (StaleIndexError on mismatch) and the file structure (FormatError).
// When verify_entries is set, every entry is re-preprocessed and compared,
// which catches tampered token lists.
CaseIndex load_index(const std::filesystem::path& path,
                     const LexiconBundle& bundle, const PipelineConfig& config,
                     bool verify_entries = false);

}  // namespace ngramcbr

#endif  // NGRAMCBR_CASEBASE_HPP_
