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

// Command line front end. Subcommands: index, query, correct, score,
// preprocess. Exit codes: 0 success with results, 1 success with an empty
// result, 2 usage error, 3 data error.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngramcbr/analysis.hpp"
#include "ngramcbr/casebase.hpp"
#include "ngramcbr/config.hpp"
#include "ngramcbr/errors.hpp"
#include "ngramcbr/lexicons.hpp"
#include "ngramcbr/ngram.hpp"
#include "ngramcbr/pipeline.hpp"
#include "ngramcbr/rational.hpp"
#include "ngramcbr/retrieval.hpp"
#include "ngramcbr/text.hpp"

namespace {

using namespace ngramcbr;

struct CommonOptions {
  std::string lexicon_dir;
  std::string config_file;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::optional<std::string> weight_phonetic;
  std::optional<std::string> weight_lexicon;
  std::optional<std::string> weight_context;
  std::optional<std::string> weight_domain;
  std::optional<std::string> candidate_floor;
  std::optional<std::string> accept_threshold;
  std::optional<std::string> retrieval_threshold;
  bool show_config = false;
};

// CLI11 validator so that malformed numeric flags fail at parse time.
const CLI::Validator RationalValue(
    [](std::string& value) {
      try {
        parse_rational(value);
      } catch (const Error&) {
        return "not a number: " + value;
      }
      return std::string();
    },
    "NUMBER");

void add_config_flags(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--config", options.config_file,
                  "configuration file with key=value lines");
  cmd->add_option("--kmin", options.k_min, "smallest gram size");
  cmd->add_option("--kmax", options.k_max, "largest gram size");
  cmd->add_option("--weight-phonetic", options.weight_phonetic,
                  "phonetic factor weight")
      ->check(RationalValue);
  cmd->add_option("--weight-lexicon", options.weight_lexicon,
                  "lexical factor weight")
      ->check(RationalValue);
  cmd->add_option("--weight-context", options.weight_context,
                  "context factor weight")
      ->check(RationalValue);
  cmd->add_option("--weight-domain", options.weight_domain,
                  "domain factor weight")
      ->check(RationalValue);
  cmd->add_option("--candidate-floor", options.candidate_floor,
                  "minimum lexical score to evaluate a candidate")
      ->check(RationalValue);
  cmd->add_option("--accept-threshold", options.accept_threshold,
                  "minimum combined score to accept a correction")
      ->check(RationalValue);
  cmd->add_option("--threshold", options.retrieval_threshold,
                  "minimum case score to report")
      ->check(RationalValue);
  cmd->add_flag("--show-config", options.show_config,
                "print the effective configuration and exit");
}

void add_lexicons_flag(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--lexicons", options.lexicon_dir, "lexicon directory")
      ->envname("NGRAMCBR_LEXICONS")
      ->required();
}

// Flags override file values, file values override built-in defaults.
PipelineConfig effective_config(const CommonOptions& options) {
  PipelineConfig config;
  if (!options.config_file.empty()) {
    config = load_config_file(options.config_file, config);
  }
  if (options.k_min) config.grams.k_min = *options.k_min;
  if (options.k_max) config.grams.k_max = *options.k_max;
  if (options.weight_phonetic) {
    config.weights.phonetic = parse_rational(*options.weight_phonetic);
  }
  if (options.weight_lexicon) {
    config.weights.lexicon = parse_rational(*options.weight_lexicon);
  }
  if (options.weight_context) {
    config.weights.context = parse_rational(*options.weight_context);
  }
  if (options.weight_domain) {
    config.weights.domain = parse_rational(*options.weight_domain);
  }
  if (options.candidate_floor) {
    config.correction.candidate_floor =
        parse_rational(*options.candidate_floor);
  }
  if (options.accept_threshold) {
    config.correction.accept_threshold =
        parse_rational(*options.accept_threshold);
  }
  if (options.retrieval_threshold) {
    config.retrieval_threshold = parse_rational(*options.retrieval_threshold);
  }
  validate_config(config);
  return config;
}

const char* fate_name(TokenFate fate) {
  switch (fate) {
    case TokenFate::kept: return "kept";
    case TokenFate::filtered: return "filtered";
    case TokenFate::exception: return "exception";
  }
  return "?";
}

std::string joined(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

void print_trace(const PreprocessedText& text) {
  std::cout << "# stage etymology: "
            << joined(tokens_after(text, PipelineStage::etymology)) << "\n";
  std::cout << "# stage stage1-filter: "
            << joined(tokens_after(text, PipelineStage::stage1_filter)) << "\n";
  std::cout << "# stage correction: "
            << joined(tokens_after(text, PipelineStage::correction)) << "\n";
  std::cout << "# stage synonym: "
            << joined(tokens_after(text, PipelineStage::synonym)) << "\n";
  std::cout << "# stage noise-filter: "
            << joined(tokens_after(text, PipelineStage::noise_filter)) << "\n";
  for (const TokenTrace& trace : text.traces) {
    std::cout << "# token " << trace.surface << ": root="
              << trace.after_etymology << " stage1=" << fate_name(trace.stage1);
    if (trace.after_correction) {
      std::cout << " corrected=" << *trace.after_correction;
    }
    if (trace.after_synonym) {
      std::cout << " synonym=" << *trace.after_synonym;
    }
    if (trace.stage2) {
      std::cout << " stage2=" << fate_name(*trace.stage2);
    }
    std::cout << "\n";
  }
}

// Context for one-shot correction: roots of the content words of the
// context text, mirroring what the pipeline would see.
std::set<std::string> context_roots_of(const std::string& text,
                                       const LexiconBundle& bundle) {
  std::set<std::string> roots;
  for (const std::string& token : tokenize(text)) {
    if (classify_token(token, FilterStage::stage1, bundle) !=
        TokenClass::content) {
      continue;
    }
    std::string root = root_of(token, bundle);
    if (classify_token(root, FilterStage::stage1, bundle) ==
        TokenClass::content) {
      roots.insert(root);
    }
  }
  return roots;
}

int run_index(const CommonOptions& options, const std::string& casebase_path,
              const std::string& out_path) {
  PipelineConfig config = effective_config(options);
  if (options.show_config) {
    std::cout << config_to_text(config);
    return 0;
  }
  LexiconBundle bundle = load_lexicon_bundle(options.lexicon_dir);
  std::vector<Case> cases = parse_casebase(casebase_path);
  CaseIndex index = build_index(cases, bundle, config);
  save_index(index, out_path);
  std::cerr << "indexed " << index.entries.size() << " cases into "
            << out_path << "\n";
  return 0;
}

int run_query(const CommonOptions& options, const std::string& index_path,
              const std::string& text, bool explain) {
  PipelineConfig config = effective_config(options);
  if (options.show_config) {
    std::cout << config_to_text(config);
    return 0;
  }
  LexiconBundle bundle = load_lexicon_bundle(options.lexicon_dir);
  CaseIndex index = load_index(index_path, bundle, config);
  RetrievalOutcome outcome = retrieve(text, index, bundle, config);

  for (std::size_t i = 0; i < outcome.results.size(); ++i) {
    const RetrievalResult& result = outcome.results[i];
    std::cout << (i + 1) << "\t" << escape_field(result.case_id) << "\t"
              << round_half_up(result.case_score) << "\t";
    for (const IndexEntry& entry : index.entries) {
      if (entry.source.id == result.case_id) {
        std::cout << escape_field(entry.source.solution);
        break;
      }
    }
    std::cout << "\n";
  }
  if (explain) print_trace(outcome.query);

  if (!outcome.query_has_content) {
    std::cerr << "query has no content after preprocessing\n";
    return 1;
  }
  if (outcome.results.empty()) {
    std::cerr << "no case scored at or above "
              << format_rational(config.retrieval_threshold) << "\n";
    return 1;
  }
  return 0;
}

int run_correct(const CommonOptions& options, const std::string& word,
                const std::string& context_text) {
  PipelineConfig config = effective_config(options);
  if (options.show_config) {
    std::cout << config_to_text(config);
    return 0;
  }
  LexiconBundle bundle = load_lexicon_bundle(options.lexicon_dir);
  std::set<std::string> context = context_roots_of(context_text, bundle);
  CorrectionResult result =
      correct_word(word, context, bundle, config.weights, config.correction,
                   config.grams);

  std::cout << result.replacement << "\n";
  for (const CandidateEvaluation& eval : result.evaluations) {
    std::cout << eval.candidate << "\t" << format_fixed2(eval.f_phonetic)
              << "\t" << format_fixed2(eval.f_lexicon) << "\t"
              << format_fixed2(eval.f_context) << "\t"
              << format_fixed2(eval.f_domain) << "\t"
              << format_fixed2(eval.combined) << "\n";
  }

  std::string folded = fold_upper(word);
  bool known = bundle.vocabulary.count(folded) > 0;
  return (known || result.replacement != folded) ? 0 : 1;
}

int run_score(const CommonOptions& options, std::optional<int> single_k,
              const std::string& a, const std::string& b) {
  PipelineConfig config = effective_config(options);
  if (options.show_config) {
    std::cout << config_to_text(config);
    return 0;
  }
  Rational score;
  Rational pct;
  if (single_k) {
    score = ngram_score(a, b, *single_k);
    pct = percentile(score, static_cast<int>(fold_upper(a).size()),
                     static_cast<int>(fold_upper(b).size()));
  } else {
    SimilarityScore best = best_k_similarity(a, b, config.grams);
    score = best.score;
    pct = best.percentile;
  }
  std::cout << round_half_up(score) << "\t" << round_half_up(pct) << "\n";
  return 0;
}

int run_preprocess(const CommonOptions& options, const std::string& text) {
  PipelineConfig config = effective_config(options);
  if (options.show_config) {
    std::cout << config_to_text(config);
    return 0;
  }
  LexiconBundle bundle = load_lexicon_bundle(options.lexicon_dir);
  PreprocessedText result = preprocess(text, bundle, config);
  std::cout << joined(result.canonical_tokens) << "\n";
  print_trace(result);
  return result.canonical_tokens.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"case retrieval over n-gram similarity with staged text "
               "canonicalization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  CommonOptions index_opts;
  std::string index_casebase;
  std::string index_out;
  CLI::App* index_cmd =
      app.add_subcommand("index", "preprocess a case base and save the index");
  add_lexicons_flag(index_cmd, index_opts);
  add_config_flags(index_cmd, index_opts);
  index_cmd->add_option("--casebase", index_casebase, "case base file")
      ->required();
  index_cmd->add_option("--out", index_out, "index file to write")->required();

  CommonOptions query_opts;
  std::string query_index;
  std::string query_text;
  bool query_explain = false;
  CLI::App* query_cmd =
      app.add_subcommand("query", "rank cases against a problem description");
  add_lexicons_flag(query_cmd, query_opts);
  add_config_flags(query_cmd, query_opts);
  query_cmd->add_option("--index", query_index, "index file")->required();
  query_cmd->add_flag("--explain", query_explain,
                      "print the preprocessing trace after the results");
  query_cmd->add_option("text", query_text, "query text")->required();

  CommonOptions correct_opts;
  std::string correct_word_arg;
  std::string correct_context;
  CLI::App* correct_cmd =
      app.add_subcommand("correct", "spell-correct one word");
  add_lexicons_flag(correct_cmd, correct_opts);
  add_config_flags(correct_cmd, correct_opts);
  correct_cmd->add_option("--context", correct_context,
                          "surrounding text that supplies context roots");
  correct_cmd->add_option("word", correct_word_arg, "word to correct")
      ->required();

  CommonOptions score_opts;
  std::optional<int> score_k;
  std::string score_a;
  std::string score_b;
  CLI::App* score_cmd =
      app.add_subcommand("score", "similarity of two words");
  add_config_flags(score_cmd, score_opts);
  CLI::Option* k_opt =
      score_cmd->add_option("--k", score_k, "evaluate exactly this gram size");
  score_cmd->add_option("word1", score_a, "first word")->required();
  score_cmd->add_option("word2", score_b, "second word")->required();

  CommonOptions preprocess_opts;
  std::string preprocess_text;
  CLI::App* preprocess_cmd = app.add_subcommand(
      "preprocess", "show the canonical tokens for a text");
  add_lexicons_flag(preprocess_cmd, preprocess_opts);
  add_config_flags(preprocess_cmd, preprocess_opts);
  preprocess_cmd->add_option("text", preprocess_text, "text to preprocess")
      ->required();

  // --k pins one gram size; the range flags make no sense beside it.
  k_opt->excludes(score_cmd->get_option("--kmin"));
  k_opt->excludes(score_cmd->get_option("--kmax"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (index_cmd->parsed()) {
      return run_index(index_opts, index_casebase, index_out);
    }
    if (query_cmd->parsed()) {
      return run_query(query_opts, query_index, query_text, query_explain);
    }
    if (correct_cmd->parsed()) {
      return run_correct(correct_opts, correct_word_arg, correct_context);
    }
    if (score_cmd->parsed()) {
      return run_score(score_opts, score_k, score_a, score_b);
    }
    if (preprocess_cmd->parsed()) {
      return run_preprocess(preprocess_opts, preprocess_text);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
