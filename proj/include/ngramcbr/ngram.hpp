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

#ifndef NGRAMCBR_NGRAM_HPP_
#define NGRAMCBR_NGRAM_HPP_

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "ngramcbr/rational.hpp"

namespace ngramcbr {

// Multiset of the contiguous length-k grams of one source. Every key has
// length k (letters) or k symbols; counts sum to max(0, length - k + 1).
struct GramProfile {
  int k = 0;
  std::map<std::string, int> counts;
  int source_length = 0;

  bool operator==(const GramProfile&) const = default;
};

struct SimilarityScore {
  Rational score{0};       // in [0, 100]
  Rational percentile{0};  // length-adjusted, in [0, 100]

  bool operator==(const SimilarityScore&) const = default;
};

struct GramRange {
  int k_min = 2;
  int k_max = 5;
};

// Case-folds the text and counts its k-grams. k < 1 is an argument error.
GramProfile gram_profile(std::string_view text, int k);

// Same over a symbol sequence (one entry per phoneme); gram keys are the
// concatenated symbols.
GramProfile gram_profile(std::span<const std::string> symbols, int k);

// Similarity of two profiles built with the same k:
//
//   100 * sum over shared grams of min(count_a, count_b)
//       / sum over all grams of max(count_a, count_b)
//
// When both profiles are empty (both sources shorter than k) the sources
// carry no gram evidence; they score 100 when equal and 0 otherwise, which
// keeps short words comparable.
Rational score_profiles(const GramProfile& a, const GramProfile& b,
                        bool sources_equal);

Rational ngram_score(std::string_view a, std::string_view b, int k);
Rational ngram_score(std::span<const std::string> a,
                     std::span<const std::string> b, int k);

// Length-adjusted score: min(100, score * 20 / (len_a + len_b)). Lengths
// must be positive; score must be in [0, 100].
Rational percentile(const Rational& score, int len_a, int len_b);

// Evaluates every k in [k_min, min(k_max, max(len a, len b))] and returns
// the pair with the greatest percentile; ties go to the smaller k. When
// both sources are shorter than k_min the empty-profile rule above applies
// at k_min. Zero-length sources count as length 1 for the adjustment.
SimilarityScore best_k_similarity(std::string_view a, std::string_view b,
                                  GramRange range);
SimilarityScore best_k_similarity(std::span<const std::string> a,
                                  std::span<const std::string> b,
                                  GramRange range);

}  // namespace ngramcbr

#endif  // NGRAMCBR_NGRAM_HPP_
