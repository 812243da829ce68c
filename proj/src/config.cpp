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

#include "ngramcbr/config.hpp"

#include <sstream>

#include "ngramcbr/errors.hpp"
#include "ngramcbr/text.hpp"

namespace ngramcbr {

namespace {

int parse_int(std::string_view key, std::string_view value) {
  Rational r = parse_rational(value);
  if (r.denominator() != 1) {
    throw Error("config key " + std::string(key) + " needs an integer, got " +
                std::string(value));
  }
  return static_cast<int>(r.numerator());
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw Error("config key " + std::string(key) + " needs true or false");
}

void check_unit_range(const char* name, const Rational& value) {
  if (value < Rational(0) || value > Rational(100)) {
    throw ValidationError(std::string(name) + " must lie in [0, 100]");
  }
}

}  // namespace

void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value) {
  if (key == "k_min") {
    config.grams.k_min = parse_int(key, value);
  } else if (key == "k_max") {
    config.grams.k_max = parse_int(key, value);
  } else if (key == "weight_phonetic") {
    config.weights.phonetic = parse_rational(value);
  } else if (key == "weight_lexicon") {
    config.weights.lexicon = parse_rational(value);
  } else if (key == "weight_context") {
    config.weights.context = parse_rational(value);
  } else if (key == "weight_domain") {
    config.weights.domain = parse_rational(value);
  } else if (key == "candidate_floor") {
    config.correction.candidate_floor = parse_rational(value);
  } else if (key == "accept_threshold") {
    config.correction.accept_threshold = parse_rational(value);
  } else if (key == "retrieval_threshold") {
    config.retrieval_threshold = parse_rational(value);
  } else if (key == "correction_enabled") {
    config.correction.enabled = parse_bool(key, value);
  } else {
    throw Error("unknown config key: " + std::string(key));
  }
}

PipelineConfig load_config_file(const std::filesystem::path& path,
                                PipelineConfig base) {
  std::string file = path.string();
  for (const NumberedLine& line : read_content_lines(file)) {
    std::size_t eq = line.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError(file, line.number, "expected key=value");
    }
    std::string key = trim(line.text.substr(0, eq));
    std::string value = trim(line.text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ParseError(file, line.number, "expected key=value");
    }
    try {
      set_config_value(base, key, value);
    } catch (const Error& e) {
      throw ParseError(file, line.number, e.what());
    }
  }
  validate_config(base);
  return base;
}

void validate_config(const PipelineConfig& config) {
  if (config.grams.k_min < 1) {
    throw ValidationError("k_min must be at least 1");
  }
  if (config.grams.k_min > config.grams.k_max) {
    throw ValidationError("k_min must not exceed k_max");
  }
  Rational zero(0);
  const FactorWeights& w = config.weights;
  if (w.phonetic < zero || w.lexicon < zero || w.context < zero ||
      w.domain < zero) {
    throw ValidationError("weights must be non-negative");
  }
  if (w.phonetic + w.lexicon + w.context + w.domain == zero) {
    throw ValidationError("weights must not all be zero");
  }
  check_unit_range("candidate_floor", config.correction.candidate_floor);
  check_unit_range("accept_threshold", config.correction.accept_threshold);
  check_unit_range("retrieval_threshold", config.retrieval_threshold);
}

std::string config_to_text(const PipelineConfig& config) {
  std::ostringstream out;
  out << "k_min=" << config.grams.k_min << "\n";
  out << "k_max=" << config.grams.k_max << "\n";
  out << "weight_phonetic=" << format_rational(config.weights.phonetic) << "\n";
  out << "weight_lexicon=" << format_rational(config.weights.lexicon) << "\n";
  out << "weight_context=" << format_rational(config.weights.context) << "\n";
  out << "weight_domain=" << format_rational(config.weights.domain) << "\n";
  out << "candidate_floor=" << format_rational(config.correction.candidate_floor)
      << "\n";
  out << "accept_threshold="
      << format_rational(config.correction.accept_threshold) << "\n";
  out << "correction_enabled="
      << (config.correction.enabled ? "true" : "false") << "\n";
  out << "retrieval_threshold=" << format_rational(config.retrieval_threshold)
      << "\n";
  return out.str();
}

std::string config_fingerprint(const PipelineConfig& config) {
  return to_hex16(fnv1a64(config_to_text(config)));
}

}  // namespace ngramcbr
