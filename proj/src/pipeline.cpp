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

#include "ngramcbr/pipeline.hpp"

#include "ngramcbr/analysis.hpp"
#include "ngramcbr/text.hpp"

namespace ngramcbr {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (is_token_byte(c)) {
      current += static_cast<char>(c);
    } else if (!current.empty()) {
      tokens.push_back(fold_upper(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(fold_upper(current));
  return tokens;
}

PreprocessedText preprocess(std::string_view text, const LexiconBundle& bundle,
                            const PipelineConfig& config) {
  PreprocessedText result;

  for (const std::string& token : tokenize(text)) {
    TokenTrace trace;
    trace.surface = token;

    // Exception words skip every rewrite, including the root lookup.
    if (classify_token(token, FilterStage::stage1, bundle) ==
        TokenClass::exception) {
      trace.after_etymology = token;
      trace.stage1 = TokenFate::exception;
      trace.after_correction = token;
      trace.after_synonym = token;
      trace.stage2 = TokenFate::exception;
      result.traces.push_back(std::move(trace));
      continue;
    }

    trace.after_etymology = root_of(token, bundle);
    switch (classify_token(trace.after_etymology, FilterStage::stage1, bundle)) {
      case TokenClass::filtered:
        trace.stage1 = TokenFate::filtered;
        break;
      case TokenClass::exception:
        trace.stage1 = TokenFate::exception;
        trace.after_correction = trace.after_etymology;
        trace.after_synonym = trace.after_etymology;
        trace.stage2 = TokenFate::exception;
        break;
      case TokenClass::content:
        trace.stage1 = TokenFate::kept;
        break;
    }
    result.traces.push_back(std::move(trace));
  }

  // Content tokens that survived the first filter; every one of them sees
  // the roots of all the others as correction context.
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    if (result.traces[i].stage1 == TokenFate::kept) survivors.push_back(i);
  }

  for (std::size_t i : survivors) {
    TokenTrace& trace = result.traces[i];

    std::set<std::string> context_roots;
    for (std::size_t j : survivors) {
      if (j != i) context_roots.insert(result.traces[j].after_etymology);
    }

    std::string corrected = trace.after_etymology;
    if (config.correction.enabled) {
      corrected = correct_word(trace.after_etymology, context_roots, bundle,
                               config.weights, config.correction,
                               config.grams)
                      .replacement;
    }
    trace.after_correction = corrected;
    trace.after_synonym = canonical_synonym(corrected, bundle);

    switch (classify_token(*trace.after_synonym, FilterStage::stage2, bundle)) {
      case TokenClass::filtered:
        trace.stage2 = TokenFate::filtered;
        break;
      case TokenClass::exception:
        trace.stage2 = TokenFate::exception;
        break;
      case TokenClass::content:
        trace.stage2 = TokenFate::kept;
        break;
    }
  }

  for (const TokenTrace& trace : result.traces) {
    if (trace.stage1 == TokenFate::filtered) continue;
    if (trace.stage2 && *trace.stage2 == TokenFate::filtered) continue;
    result.canonical_tokens.push_back(*trace.after_synonym);
  }
  return result;
}

std::vector<std::string> tokens_after(const PreprocessedText& text,
                                      PipelineStage stage) {
  std::vector<std::string> tokens;
  for (const TokenTrace& trace : text.traces) {
    if (stage == PipelineStage::etymology) {
      tokens.push_back(trace.after_etymology);
      continue;
    }
    if (trace.stage1 == TokenFate::filtered) continue;
    switch (stage) {
      case PipelineStage::stage1_filter:
        tokens.push_back(trace.after_etymology);
        break;
      case PipelineStage::correction:
        tokens.push_back(*trace.after_correction);
        break;
      case PipelineStage::synonym:
        tokens.push_back(*trace.after_synonym);
        break;
      case PipelineStage::noise_filter:
        if (!trace.stage2 || *trace.stage2 != TokenFate::filtered) {
          tokens.push_back(*trace.after_synonym);
        }
        break;
      case PipelineStage::etymology:
        break;  // handled above
    }
  }
  return tokens;
}

}  // namespace ngramcbr
