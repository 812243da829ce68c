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

#ifndef NGRAMCBR_RATIONAL_HPP_
#define NGRAMCBR_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace ngramcbr {

// Similarity scores, thresholds and weights stay exact rationals end to
// end; rounding happens only when a value is printed.
using Rational = boost::rational<long long>;

double to_double(const Rational& r);

// Nearest integer, halves rounded up (90.909... -> 91, 35.5 -> 36).
long long round_half_up(const Rational& r);

// Accepts "42", "35.29" and "1000/11", ignoring surrounding whitespace.
// Throws Error on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: plain integer when the denominator is 1, "n/d" otherwise.
std::string format_rational(const Rational& r);

// Fixed two decimal places, used for factor breakdowns.
std::string format_fixed2(const Rational& r);

}  // namespace ngramcbr

#endif  // NGRAMCBR_RATIONAL_HPP_
