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

// Brute-force reference for the gram arithmetic, kept deliberately naive
// and free of library code: substrings go into plain lists, counts come
// from linear scans, and fractions are compared by cross multiplication.

#ifndef NGRAMCBR_TESTS_SUPPORT_ORACLE_HPP_
#define NGRAMCBR_TESTS_SUPPORT_ORACLE_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "ngramcbr/rational.hpp"

namespace oracle {

struct Fraction {
  long long num = 0;
  long long den = 1;  // always positive
};

inline std::vector<std::string> grams(const std::string& s, int k) {
  std::vector<std::string> out;
  if (k < 1) return out;
  for (std::size_t i = 0; i + k <= s.size(); ++i) {
    out.push_back(s.substr(i, static_cast<std::size_t>(k)));
  }
  return out;
}

inline long long count_of(const std::vector<std::string>& list,
                          const std::string& gram) {
  long long n = 0;
  for (const std::string& g : list) {
    if (g == gram) ++n;
  }
  return n;
}

// Scores two pre-extracted gram lists; sources_equal settles the case
// where both lists are empty and no gram evidence exists.
inline Fraction score_lists(const std::vector<std::string>& grams_a,
                            const std::vector<std::string>& grams_b,
                            bool sources_equal) {
  if (grams_a.empty() && grams_b.empty()) {
    return {sources_equal ? 100 : 0, 1};
  }

  std::vector<std::string> all = grams_a;
  all.insert(all.end(), grams_b.begin(), grams_b.end());

  long long shared = 0;
  long long total = 0;
  std::vector<std::string> seen;
  for (const std::string& g : all) {
    bool duplicate = false;
    for (const std::string& s : seen) {
      if (s == g) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    seen.push_back(g);
    long long in_a = count_of(grams_a, g);
    long long in_b = count_of(grams_b, g);
    shared += std::min(in_a, in_b);
    total += std::max(in_a, in_b);
  }
  return {100 * shared, total};
}

// Inputs are expected pre-folded (tests use uppercase strings).
inline Fraction score(const std::string& a, const std::string& b, int k) {
  return score_lists(grams(a, k), grams(b, k), a == b);
}

// min(100, score * 20 / (len_a + len_b)) as a fraction.
inline Fraction percentile(Fraction score, long long len_a, long long len_b) {
  Fraction adjusted{score.num * 20, score.den * (len_a + len_b)};
  if (adjusted.num > 100 * adjusted.den) return {100, 1};
  return adjusted;
}

inline bool fraction_less(const Fraction& a, const Fraction& b) {
  return a.num * b.den < b.num * a.den;
}

inline bool matches(const ngramcbr::Rational& value, const Fraction& f) {
  return value.numerator() * f.den == f.num * value.denominator();
}

}  // namespace oracle

#endif  // NGRAMCBR_TESTS_SUPPORT_ORACLE_HPP_
