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

#ifndef NGRAMCBR_PIPELINE_HPP_
#define NGRAMCBR_PIPELINE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngramcbr/config.hpp"
#include "ngramcbr/lexicons.hpp"

namespace ngramcbr {

enum class TokenFate { kept, filtered, exception };

// Full history of one surface token. Later fields stay empty once the
// token is filtered; exception tokens carry their unchanged word through
// every stage.
struct TokenTrace {
  std::string surface;
  std::string after_etymology;
  TokenFate stage1 = TokenFate::kept;
  std::optional<std::string> after_correction;
  std::optional<std::string> after_synonym;
  std::optional<TokenFate> stage2;

  bool operator==(const TokenTrace&) const = default;
};

struct PreprocessedText {
  std::vector<std::string> canonical_tokens;  // survivors, original order
  std::vector<TokenTrace> traces;             // one per surface token

  bool operator==(const PreprocessedText&) const = default;
};

// Checkpoints between pipeline stages, for tracing and tests.
enum class PipelineStage {
  etymology,     // all tokens, root forms
  stage1_filter, // function words removed
  correction,    // unknown words replaced
  synonym,       // canonical synonym forms
  noise_filter,  // final canonical tokens
};

// Uppercased maximal runs of token bytes; punctuation and whitespace
// separate, so "run, run!" becomes RUN RUN.
std::vector<std::string> tokenize(std::string_view text);

// The staged canonicalization: tokenize, root lookup, first stop filter,
// spell correction (context = roots of the other surviving content
// tokens), synonym replacement, second stop filter. Exception words skip
// every rewrite but are always kept.
PreprocessedText preprocess(std::string_view text, const LexiconBundle& bundle,
                            const PipelineConfig& config);

// Token list as it stood after the given stage.
std::vector<std::string> tokens_after(const PreprocessedText& text,
                                      PipelineStage stage);

}  // namespace ngramcbr

#endif  // NGRAMCBR_PIPELINE_HPP_
