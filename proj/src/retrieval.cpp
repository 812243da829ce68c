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

#include "ngramcbr/retrieval.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ngramcbr/errors.hpp"
#include "ngramcbr/ngram.hpp"
#include "ngramcbr/text.hpp"

namespace ngramcbr {

Rational token_similarity(const std::string& query_token,
                          const std::string& case_token,
                          const PipelineConfig& config) {
  std::string q = fold_upper(query_token);
  std::string c = fold_upper(case_token);
  if (q == c) return Rational(100);
  return best_k_similarity(q, c, config.grams).percentile;
}

RetrievalResult score_case(const std::vector<std::string>& query_tokens,
                           const std::vector<std::string>& case_tokens,
                           const PipelineConfig& config) {
  if (query_tokens.empty()) {
    throw std::invalid_argument("query has no tokens");
  }

  RetrievalResult result;
  result.subset_match = true;
  std::set<std::string> case_set(case_tokens.begin(), case_tokens.end());

  Rational sum(0);
  for (const std::string& q : query_tokens) {
    TokenMatch match;
    match.query_token = q;
    for (const std::string& c : case_tokens) {
      Rational s = token_similarity(q, c, config);
      if (match.best_case_token.empty() || s > match.similarity) {
        match.best_case_token = c;
        match.similarity = s;
      }
    }
    if (!case_set.count(q)) result.subset_match = false;
    sum += match.similarity;
    result.per_token.push_back(std::move(match));
  }
  result.case_score = sum / Rational(static_cast<long long>(query_tokens.size()));
  return result;
}

RetrievalOutcome retrieve(std::string_view query_text, const CaseIndex& index,
                          const LexiconBundle& bundle,
                          const PipelineConfig& config) {
  if (index.bundle_fingerprint != bundle_fingerprint(bundle) ||
      index.config_fingerprint != config_fingerprint(config)) {
    throw StaleIndexError(
        "index was built with different lexicons or configuration; rebuild "
        "it");
  }

  RetrievalOutcome outcome;
  outcome.query = preprocess(query_text, bundle, config);
  outcome.query_has_content = !outcome.query.canonical_tokens.empty();
  if (!outcome.query_has_content) return outcome;

  for (const IndexEntry& entry : index.entries) {
    RetrievalResult result =
        score_case(outcome.query.canonical_tokens, entry.canonical_tokens,
                   config);
    result.case_id = entry.source.id;
    if (result.case_score >= config.retrieval_threshold) {
      outcome.results.push_back(std::move(result));
    }
  }

  std::stable_sort(outcome.results.begin(), outcome.results.end(),
                   [](const RetrievalResult& a, const RetrievalResult& b) {
                     if (a.case_score != b.case_score) {
                       return a.case_score > b.case_score;
                     }
                     return a.case_id < b.case_id;
                   });
  return outcome;
}

}  // namespace ngramcbr
