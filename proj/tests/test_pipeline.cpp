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

#include <doctest.h>

#include <string>
#include <vector>

#include "support/fixtures.hpp"

using ngramcbr::LexiconBundle;
using ngramcbr::PipelineConfig;
using ngramcbr::PipelineStage;
using ngramcbr::PreprocessedText;
using ngramcbr::TokenFate;
using V = std::vector<std::string>;

TEST_CASE("tokenize splits on punctuation and folds case") {
  CHECK(ngramcbr::tokenize("THE SYSEM HANGING WHEN DOING INSTALLATION") ==
        V{"THE", "SYSEM", "HANGING", "WHEN", "DOING", "INSTALLATION"});
  CHECK(ngramcbr::tokenize("") == V{});
  CHECK(ngramcbr::tokenize("run, run!") == V{"RUN", "RUN"});
  CHECK(ngramcbr::tokenize("  spaced\t\nout  ") == V{"SPACED", "OUT"});
  CHECK(ngramcbr::tokenize("x86-64") == V{"X86", "64"});
}

TEST_CASE("preprocess walks the misspelled query through every stage") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  PreprocessedText out = ngramcbr::preprocess(
      "THE SYSEM HANGING WHEN DOING INSTALLATION", bundle, config);

  CHECK(ngramcbr::tokens_after(out, PipelineStage::etymology) ==
        V{"THE", "SYSEM", "HANG", "WHEN", "DO", "INSTALL"});
  CHECK(ngramcbr::tokens_after(out, PipelineStage::stage1_filter) ==
        V{"SYSEM", "HANG", "DO", "INSTALL"});
  CHECK(ngramcbr::tokens_after(out, PipelineStage::correction) ==
        V{"SYSTEM", "HANG", "DO", "INSTALL"});
  CHECK(ngramcbr::tokens_after(out, PipelineStage::synonym) ==
        V{"SOFTWARE", "CRASH", "DO", "RUN"});
  CHECK(ngramcbr::tokens_after(out, PipelineStage::noise_filter) ==
        V{"SOFTWARE", "CRASH", "RUN"});
  CHECK(out.canonical_tokens == V{"SOFTWARE", "CRASH", "RUN"});
}

TEST_CASE("preprocess canonicalizes the stored problem text the same way") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  PreprocessedText out = ngramcbr::preprocess(
      "SOFTWARE CRASHES WHEN I RUN A PROCESS", bundle, config);
  CHECK(out.canonical_tokens == V{"SOFTWARE", "CRASH", "RUN", "PROCESS"});
}

TEST_CASE("all-stop-word input canonicalizes to nothing") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  CHECK(ngramcbr::preprocess("THE A WHEN", bundle, config).canonical_tokens ==
        V{});
}

TEST_CASE("traces of stage1-filtered tokens carry no later values") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  PreprocessedText out =
      ngramcbr::preprocess("THE SYSEM HANGING", bundle, config);
  REQUIRE(out.traces.size() == 3);
  const ngramcbr::TokenTrace& the = out.traces[0];
  CHECK(the.surface == "THE");
  CHECK(the.stage1 == TokenFate::filtered);
  CHECK_FALSE(the.after_correction.has_value());
  CHECK_FALSE(the.after_synonym.has_value());
  CHECK_FALSE(the.stage2.has_value());

  const ngramcbr::TokenTrace& sysem = out.traces[1];
  CHECK(sysem.surface == "SYSEM");
  CHECK(sysem.after_etymology == "SYSEM");
  CHECK(sysem.stage1 == TokenFate::kept);
  CHECK(sysem.after_correction == "SYSTEM");
  CHECK(sysem.after_synonym == "SOFTWARE");
  CHECK(sysem.stage2 == TokenFate::kept);
}

TEST_CASE("exception words pass through every stage verbatim") {
  LexiconBundle bundle = fixtures::demo_bundle();
  bundle.exceptions.words.insert("ACMEPRODUCT");
  bundle.exceptions.words.insert("HANGING");
  ngramcbr::finalize_bundle(bundle);
  PipelineConfig config;

  PreprocessedText out =
      ngramcbr::preprocess("acmeproduct hanging the", bundle, config);
  CHECK(out.canonical_tokens == V{"ACMEPRODUCT", "HANGING"});
  // Exception status is decided on the surface form, before the root
  // lookup would have turned HANGING into HANG.
  CHECK(out.traces[1].after_etymology == "HANGING");
  CHECK(out.traces[1].stage1 == TokenFate::exception);
  CHECK(out.traces[1].stage2 == TokenFate::exception);
}

TEST_CASE("duplicates and order survive the pipeline") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  PreprocessedText out =
      ngramcbr::preprocess("CRASH! crash... PROCESS crash", bundle, config);
  CHECK(out.canonical_tokens == V{"CRASH", "CRASH", "PROCESS", "CRASH"});
}

TEST_CASE("preprocessing a canonical output is a fixed point") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  for (const char* text :
       {"THE SYSEM HANGING WHEN DOING INSTALLATION",
        "SOFTWARE CRASHES WHEN I RUN A PROCESS", "PRINTER OFFLINE"}) {
    PreprocessedText once = ngramcbr::preprocess(text, bundle, config);
    std::string joined;
    for (const std::string& token : once.canonical_tokens) {
      if (!joined.empty()) joined += ' ';
      joined += token;
    }
    PreprocessedText twice = ngramcbr::preprocess(joined, bundle, config);
    CAPTURE(text);
    REQUIRE(twice.canonical_tokens == once.canonical_tokens);
  }
}

TEST_CASE("preprocess is deterministic") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  const char* text = "THE SYSEM HANGING WHEN DOING INSTALLATION";
  PreprocessedText a = ngramcbr::preprocess(text, bundle, config);
  PreprocessedText b = ngramcbr::preprocess(text, bundle, config);
  CHECK(a == b);
}

TEST_CASE("disabling correction leaves unknown roots in place") {
  LexiconBundle bundle = fixtures::demo_bundle();
  PipelineConfig config;
  config.correction.enabled = false;
  PreprocessedText out = ngramcbr::preprocess(
      "THE SYSEM HANGING WHEN DOING INSTALLATION", bundle, config);
  CHECK(ngramcbr::tokens_after(out, PipelineStage::correction) ==
        V{"SYSEM", "HANG", "DO", "INSTALL"});
  CHECK(out.canonical_tokens == V{"SYSEM", "CRASH", "RUN"});
}
