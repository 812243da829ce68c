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

#ifndef NGRAMCBR_RETRIEVAL_HPP_
#define NGRAMCBR_RETRIEVAL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ngramcbr/casebase.hpp"
#include "ngramcbr/config.hpp"
#include "ngramcbr/pipeline.hpp"
#include "ngramcbr/rational.hpp"

namespace ngramcbr {

struct TokenMatch {
  std::string query_token;
  std::string best_case_token;  // empty when the case has no tokens
  Rational similarity{0};

  bool operator==(const TokenMatch&) const = default;
};

struct RetrievalResult {
  std::string case_id;
  Rational case_score{0};    // in [0, 100]
  bool subset_match = false; // query tokens all appear in the case
  std::vector<TokenMatch> per_token;

  bool operator==(const RetrievalResult&) const = default;
};

struct RetrievalOutcome {
  // False when preprocessing removed everything; distinct from "nothing
  // scored above the threshold", which leaves this true and results empty.
  bool query_has_content = false;
  PreprocessedText query;
  std::vector<RetrievalResult> results;
};

// 100 for identical tokens, otherwise the best-k percentile.
Rational token_similarity(const std::string& query_token,
                          const std::string& case_token,
                          const PipelineConfig& config);

// Mean over query tokens of the best similarity against any case token;
// ties pick the earliest case token, and an empty case scores 0. A query
// whose tokens all appear in the case scores exactly 100.
RetrievalResult score_case(const std::vector<std::string>& query_tokens,
                           const std::vector<std::string>& case_tokens,
                           const PipelineConfig& config);

// Preprocesses the query and ranks every case at or above the retrieval
// threshold, best score first, id as the tie-break. Throws StaleIndexError
// when the index digests do not match the bundle/config.
RetrievalOutcome retrieve(std::string_view query_text, const CaseIndex& index,
                          const LexiconBundle& bundle,
                          const PipelineConfig& config);

}  // namespace ngramcbr

#endif  // NGRAMCBR_RETRIEVAL_HPP_
