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

#ifndef NGRAMCBR_ANALYSIS_HPP_
#define NGRAMCBR_ANALYSIS_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ngramcbr/lexicons.hpp"
#include "ngramcbr/ngram.hpp"
#include "ngramcbr/rational.hpp"

namespace ngramcbr {

struct PhonemeSequence {
  std::vector<std::string> symbols;

  bool operator==(const PhonemeSequence&) const = default;
};

// Root plus what is left after it. The affix list is empty when the word
// is exactly a vocabulary root.
struct MorphemeDecomposition {
  std::string root;
  std::vector<std::string> affixes;

  bool operator==(const MorphemeDecomposition&) const = default;
};

// Non-negative, sum must be positive.
struct FactorWeights {
  Rational phonetic{1};
  Rational lexicon{1};
  Rational context{1};
  Rational domain{1};

  bool operator==(const FactorWeights&) const = default;
};

struct CandidateEvaluation {
  std::string candidate;
  Rational f_phonetic{0};
  Rational f_lexicon{0};
  Rational f_context{0};
  Rational f_domain{0};
  Rational combined{0};

  bool operator==(const CandidateEvaluation&) const = default;
};

struct CorrectionConfig {
  Rational candidate_floor{40};   // minimum f_lexicon to evaluate fully
  Rational accept_threshold{60};  // minimum combined score to replace
  bool enabled = true;            // lets callers ablate the stage
};

struct CorrectionResult {
  std::string replacement;
  std::vector<CandidateEvaluation> evaluations;  // ranked, for tracing
};

// Greedy longest-match transcription; the identity rules installed at load
// time make it total, and unknown bytes fall back to themselves.
PhonemeSequence phoneme_sequence(std::string_view word,
                                 const PhonemeRules& rules);

// Longest vocabulary word that prefixes the input, with the remainder as a
// single affix; falls back to the whole word with no affixes.
MorphemeDecomposition morphemes(const std::string& word,
                                const LexiconBundle& bundle);

// Scores one vocabulary candidate as a replacement for a word:
//   f_lexicon   best-k percentile over letters
//   f_phonetic  best-k percentile over phoneme symbols
//   f_context   100 * |pragmatic(candidate) n context| / min(sizes), 0 when
//               either set is empty
//   f_domain    same against the domain keywords
//   combined    weighted mean of the four
// The candidate must be a vocabulary word (std::invalid_argument).
CandidateEvaluation evaluate_candidate(const std::string& word,
                                       const std::string& candidate,
                                       const std::set<std::string>& context_roots,
                                       const LexiconBundle& bundle,
                                       const FactorWeights& weights,
                                       GramRange range);

// Vocabulary words pass through untouched. Unknown words are scored
// against every vocabulary candidate whose f_lexicon reaches the floor;
// the best combined score wins when it reaches the acceptance threshold,
// otherwise the word is kept. Ties prefer higher f_lexicon, then the
// lexicographically smaller candidate. Evaluations come back sorted by
// that same ranking.
CorrectionResult correct_word(const std::string& word,
                              const std::set<std::string>& context_roots,
                              const LexiconBundle& bundle,
                              const FactorWeights& weights,
                              const CorrectionConfig& config, GramRange range);

}  // namespace ngramcbr

#endif  // NGRAMCBR_ANALYSIS_HPP_
