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

#include "ngramcbr/ngram.hpp"

#include <algorithm>
#include <stdexcept>

#include "ngramcbr/text.hpp"

namespace ngramcbr {

namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("gram size must be at least 1");
}

void check_range(GramRange range) {
  if (range.k_min < 1 || range.k_min > range.k_max) {
    throw std::invalid_argument("bad gram range");
  }
}

}  // namespace

GramProfile gram_profile(std::string_view text, int k) {
  check_k(k);
  std::string folded = fold_upper(text);
  GramProfile profile;
  profile.k = k;
  profile.source_length = static_cast<int>(folded.size());
  for (int i = 0; i + k <= profile.source_length; ++i) {
    ++profile.counts[folded.substr(i, k)];
  }
  return profile;
}

GramProfile gram_profile(std::span<const std::string> symbols, int k) {
  check_k(k);
  GramProfile profile;
  profile.k = k;
  profile.source_length = static_cast<int>(symbols.size());
  for (int i = 0; i + k <= profile.source_length; ++i) {
    std::string key;
    for (int j = 0; j < k; ++j) key += symbols[i + j];
    ++profile.counts[key];
  }
  return profile;
}

Rational score_profiles(const GramProfile& a, const GramProfile& b,
                        bool sources_equal) {
  if (a.counts.empty() && b.counts.empty()) {
    return sources_equal ? Rational(100) : Rational(0);
  }

  // Shared evidence over total evidence: the numerator collects the
  // overlapping count of every shared gram, the denominator the combined
  // count of every gram seen in either source.
  long long shared = 0;
  long long total = 0;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() && ib != b.counts.end()) {
    if (ia->first < ib->first) {
      total += ia->second;
      ++ia;
    } else if (ib->first < ia->first) {
      total += ib->second;
      ++ib;
    } else {
      shared += std::min(ia->second, ib->second);
      total += std::max(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.counts.end(); ++ia) total += ia->second;
  for (; ib != b.counts.end(); ++ib) total += ib->second;

  return Rational(100 * shared, total);
}

Rational ngram_score(std::string_view a, std::string_view b, int k) {
  return score_profiles(gram_profile(a, k), gram_profile(b, k),
                        fold_upper(a) == fold_upper(b));
}

Rational ngram_score(std::span<const std::string> a,
                     std::span<const std::string> b, int k) {
  bool equal = std::equal(a.begin(), a.end(), b.begin(), b.end());
  return score_profiles(gram_profile(a, k), gram_profile(b, k), equal);
}

Rational percentile(const Rational& score, int len_a, int len_b) {
  if (len_a < 1 || len_b < 1) {
    throw std::invalid_argument("lengths must be positive");
  }
  if (score < Rational(0) || score > Rational(100)) {
    throw std::invalid_argument("score out of range");
  }
  Rational adjusted = score * Rational(20, len_a + len_b);
  return std::min(adjusted, Rational(100));
}

namespace {

// Shared best-k loop; each callable builds one source's profile at k.
template <typename ProfileA, typename ProfileB>
SimilarityScore best_k_impl(ProfileA profile_a, ProfileB profile_b,
                            bool sources_equal, int len_a, int len_b,
                            GramRange range) {
  check_range(range);
  int hi = std::min(range.k_max, std::max(len_a, len_b));
  int lo = range.k_min;
  if (hi < lo) hi = lo;  // both sources short: the empty-profile rule decides

  int pct_a = std::max(len_a, 1);
  int pct_b = std::max(len_b, 1);

  SimilarityScore best;
  bool first = true;
  for (int k = lo; k <= hi; ++k) {
    Rational score = score_profiles(profile_a(k), profile_b(k), sources_equal);
    Rational pct = percentile(score, pct_a, pct_b);
    if (first || pct > best.percentile) {
      best = {score, pct};
      first = false;
    }
  }
  return best;
}

}  // namespace

SimilarityScore best_k_similarity(std::string_view a, std::string_view b,
                                  GramRange range) {
  std::string fa = fold_upper(a);
  std::string fb = fold_upper(b);
  auto profile_a = [&](int k) { return gram_profile(std::string_view(fa), k); };
  auto profile_b = [&](int k) { return gram_profile(std::string_view(fb), k); };
  return best_k_impl(profile_a, profile_b, fa == fb,
                     static_cast<int>(fa.size()),
                     static_cast<int>(fb.size()), range);
}

SimilarityScore best_k_similarity(std::span<const std::string> a,
                                  std::span<const std::string> b,
                                  GramRange range) {
  bool equal = std::equal(a.begin(), a.end(), b.begin(), b.end());
  auto profile_a = [&](int k) { return gram_profile(a, k); };
  auto profile_b = [&](int k) { return gram_profile(b, k); };
  return best_k_impl(profile_a, profile_b, equal,
                     static_cast<int>(a.size()),
                     static_cast<int>(b.size()), range);
}

}  // namespace ngramcbr
