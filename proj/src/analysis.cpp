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

#include "ngramcbr/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "ngramcbr/text.hpp"

namespace ngramcbr {

namespace {

// 100 * |a n b| / min(|a|, |b|); empty knowledge on either side scores 0.
Rational overlap_score(const std::set<std::string>& a,
                       const std::set<std::string>& b) {
  if (a.empty() || b.empty()) return Rational(0);
  long long common = 0;
  for (const std::string& word : a) {
    if (b.count(word)) ++common;
  }
  long long denom = static_cast<long long>(std::min(a.size(), b.size()));
  return Rational(100 * common, denom);
}

void check_weights(const FactorWeights& w) {
  Rational zero(0);
  if (w.phonetic < zero || w.lexicon < zero || w.context < zero ||
      w.domain < zero) {
    throw std::invalid_argument("factor weights must be non-negative");
  }
  if (w.phonetic + w.lexicon + w.context + w.domain == zero) {
    throw std::invalid_argument("factor weights must not all be zero");
  }
}

}  // namespace

PhonemeSequence phoneme_sequence(std::string_view word,
                                 const PhonemeRules& rules) {
  std::string folded = fold_upper(word);
  PhonemeSequence sequence;
  std::size_t pos = 0;
  while (pos < folded.size()) {
    std::size_t cap = std::min(rules.max_grapheme_len, folded.size() - pos);
    const std::string* symbol = nullptr;
    std::size_t matched = 1;
    for (std::size_t len = cap; len >= 1; --len) {
      auto it = rules.rules.find(folded.substr(pos, len));
      if (it != rules.rules.end()) {
        symbol = &it->second;
        matched = len;
        break;
      }
    }
    if (symbol) {
      sequence.symbols.push_back(*symbol);
    } else {
      // No rule (digits, raw bytes): the byte stands for itself.
      char c = folded[pos];
      std::string fallback = "/";
      fallback += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
      fallback += "/";
      sequence.symbols.push_back(fallback);
    }
    pos += matched;
  }
  return sequence;
}

MorphemeDecomposition morphemes(const std::string& word,
                                const LexiconBundle& bundle) {
  std::string folded = fold_upper(word);
  for (std::size_t len = folded.size(); len >= 1; --len) {
    std::string prefix = folded.substr(0, len);
    if (bundle.vocabulary.count(prefix)) {
      MorphemeDecomposition decomposition{prefix, {}};
      if (len < folded.size()) {
        decomposition.affixes.push_back(folded.substr(len));
      }
      return decomposition;
    }
  }
  return {folded, {}};
}

CandidateEvaluation evaluate_candidate(
    const std::string& word, const std::string& candidate,
    const std::set<std::string>& context_roots, const LexiconBundle& bundle,
    const FactorWeights& weights, GramRange range) {
  check_weights(weights);
  std::string folded_word = fold_upper(word);
  std::string folded_candidate = fold_upper(candidate);
  if (!bundle.vocabulary.count(folded_candidate)) {
    throw std::invalid_argument("candidate is not a vocabulary word: " +
                                folded_candidate);
  }

  CandidateEvaluation eval;
  eval.candidate = folded_candidate;

  eval.f_lexicon =
      best_k_similarity(folded_word, folded_candidate, range).percentile;

  PhonemeSequence word_phonemes = phoneme_sequence(folded_word, bundle.phonemes);
  PhonemeSequence candidate_phonemes =
      phoneme_sequence(folded_candidate, bundle.phonemes);
  eval.f_phonetic =
      best_k_similarity(word_phonemes.symbols, candidate_phonemes.symbols,
                        range)
          .percentile;

  std::set<std::string> candidate_keywords;
  if (auto it = bundle.pragmatic.keywords.find(folded_candidate);
      it != bundle.pragmatic.keywords.end()) {
    candidate_keywords = it->second;
  }
  eval.f_context = overlap_score(candidate_keywords, context_roots);
  eval.f_domain = overlap_score(candidate_keywords, bundle.domain.keywords);

  Rational weighted = weights.phonetic * eval.f_phonetic +
                      weights.lexicon * eval.f_lexicon +
                      weights.context * eval.f_context +
                      weights.domain * eval.f_domain;
  Rational total = weights.phonetic + weights.lexicon + weights.context +
                   weights.domain;
  eval.combined = weighted / total;
  return eval;
}

CorrectionResult correct_word(const std::string& word,
                              const std::set<std::string>& context_roots,
                              const LexiconBundle& bundle,
                              const FactorWeights& weights,
                              const CorrectionConfig& config,
                              GramRange range) {
  check_weights(weights);
  std::string folded = fold_upper(word);
  if (bundle.vocabulary.count(folded)) {
    return {folded, {}};
  }

  std::vector<CandidateEvaluation> evaluations;
  for (const std::string& candidate : bundle.vocabulary) {
    Rational f_lexicon =
        best_k_similarity(folded, candidate, range).percentile;
    if (f_lexicon < config.candidate_floor) continue;
    evaluations.push_back(evaluate_candidate(folded, candidate, context_roots,
                                             bundle, weights, range));
  }

  std::sort(evaluations.begin(), evaluations.end(),
            [](const CandidateEvaluation& a, const CandidateEvaluation& b) {
              if (a.combined != b.combined) return a.combined > b.combined;
              if (a.f_lexicon != b.f_lexicon) return a.f_lexicon > b.f_lexicon;
              return a.candidate < b.candidate;
            });

  std::string replacement = folded;
  if (!evaluations.empty() &&
      evaluations.front().combined >= config.accept_threshold) {
    replacement = evaluations.front().candidate;
  }
  return {replacement, std::move(evaluations)};
}

}  // namespace ngramcbr
