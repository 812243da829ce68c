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

#ifndef NGRAMCBR_CONFIG_HPP_
#define NGRAMCBR_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "ngramcbr/analysis.hpp"
#include "ngramcbr/ngram.hpp"
#include "ngramcbr/rational.hpp"

namespace ngramcbr {

// Everything tunable about preprocessing and retrieval. Defaults reproduce
// the shipped lexicon walkthrough in the README.
struct PipelineConfig {
  GramRange grams;                  // k_min=2, k_max=5
  FactorWeights weights;            // equal weights
  CorrectionConfig correction;      // floor 40, accept 60
  Rational retrieval_threshold{70}; // in [0, 100]
};

// Config files are flat "key=value" lines with '#' comments. Keys:
//   k_min, k_max, weight_phonetic, weight_lexicon, weight_context,
//   weight_domain, candidate_floor, accept_threshold, retrieval_threshold,
//   correction_enabled
// Numeric values accept "42", "35.29" or "1000/11" spellings.
void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value);

// Applies a config file on top of `base` and validates the result.
PipelineConfig load_config_file(const std::filesystem::path& path,
                                PipelineConfig base);

// Bounds and ordering checks; throws ValidationError.
void validate_config(const PipelineConfig& config);

// Canonical key=value rendering (also what --show-config prints).
std::string config_to_text(const PipelineConfig& config);

// Stable 16-hex-digit digest of the canonical rendering.
std::string config_fingerprint(const PipelineConfig& config);

}  // namespace ngramcbr

#endif  // NGRAMCBR_CONFIG_HPP_
