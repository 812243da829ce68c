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

#include "ngramcbr/rational.hpp"

#include <cctype>
#include <cstdio>

#include "ngramcbr/errors.hpp"

namespace ngramcbr {

namespace {

long long floor_div(long long a, long long b) {
  // b is always positive here (boost keeps denominators positive).
  long long q = a / b;
  long long r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

}  // namespace

double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

long long round_half_up(const Rational& r) {
  Rational shifted = r + Rational(1, 2);
  return floor_div(shifted.numerator(), shifted.denominator());
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }

  auto read_digits = [&](long long& out, int& count) {
    out = 0;
    count = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (count >= 18) throw Error("number too large: " + std::string(text));
      out = out * 10 + (text[pos] - '0');
      ++count;
      ++pos;
    }
  };

  long long whole = 0;
  int whole_digits = 0;
  read_digits(whole, whole_digits);

  Rational value(whole);
  bool any_digits = whole_digits > 0;

  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    long long frac = 0;
    int frac_digits = 0;
    read_digits(frac, frac_digits);
    if (frac_digits > 0) {
      long long scale = 1;
      for (int i = 0; i < frac_digits; ++i) scale *= 10;
      value += Rational(frac, scale);
      any_digits = true;
    }
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    long long den = 0;
    int den_digits = 0;
    read_digits(den, den_digits);
    if (den_digits == 0 || den == 0) {
      throw Error("bad rational: " + std::string(text));
    }
    value = Rational(whole, den);
  }

  if (!any_digits || pos != text.size()) {
    throw Error("bad rational: " + std::string(text));
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += "/";
    out += std::to_string(r.denominator());
  }
  return out;
}

std::string format_fixed2(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", to_double(r));
  return buf;
}

}  // namespace ngramcbr
