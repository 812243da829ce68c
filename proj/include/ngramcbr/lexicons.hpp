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

#ifndef NGRAMCBR_LEXICONS_HPP_
#define NGRAMCBR_LEXICONS_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ngramcbr {

// Surface form -> root word. Chains are at most one level deep: a root
// never appears as a key unless it maps to itself.
struct EtymologyLexicon {
  std::map<std::string, std::string> entries;

  bool operator==(const EtymologyLexicon&) const = default;
};

// One interchangeable word group. The canonical word is always a member of
// its own set.
struct SynonymSet {
  std::string canonical;
  std::set<std::string> members;

  bool operator==(const SynonymSet&) const = default;
};

// Groups are pairwise disjoint; no word belongs to two sets.
struct SynonymTable {
  std::vector<SynonymSet> sets;

  bool operator==(const SynonymTable&) const = default;
};

struct StopLists {
  std::set<std::string> function_words;  // first filter pass
  std::set<std::string> noise_words;     // second filter pass

  bool operator==(const StopLists&) const = default;
};

// Words the filters must never remove (product names, proper nouns).
struct ExceptionList {
  std::set<std::string> words;

  bool operator==(const ExceptionList&) const = default;
};

// Root word -> keywords describing where the word is typically used.
// Every listed root has a non-empty keyword set.
struct PragmaticKnowledge {
  std::map<std::string, std::set<std::string>> keywords;

  bool operator==(const PragmaticKnowledge&) const = default;
};

struct DomainProfile {
  std::set<std::string> keywords;

  bool operator==(const DomainProfile&) const = default;
};

// Grapheme -> phoneme symbol, applied longest match first. After loading,
// every single letter has a rule; absent letters receive the identity rule
// ("/x/" for letter X), which keeps transcription total.
struct PhonemeRules {
  std::map<std::string, std::string> rules;
  std::size_t max_grapheme_len = 1;

  bool operator==(const PhonemeRules&) const = default;
};

struct LexiconBundle {
  EtymologyLexicon etymology;
  SynonymTable synonyms;
  StopLists stops;
  ExceptionList exceptions;
  PragmaticKnowledge pragmatic;
  DomainProfile domain;
  PhonemeRules phonemes;

  // Union of etymology roots, synonym members and pragmatic keys. Derived
  // by finalize_bundle; membership here is what "known word" means.
  std::set<std::string> vocabulary;

  bool operator==(const LexiconBundle&) const = default;
};

enum class FilterStage { stage1, stage2 };

enum class TokenClass { exception, filtered, content };

// Validates all table invariants, folds nothing (words are folded at load
// time), normalizes synonym set order, installs identity phoneme rules for
// missing letters and derives the vocabulary. Throws ValidationError.
void finalize_bundle(LexiconBundle& bundle);

std::set<std::string> derive_vocabulary(const LexiconBundle& bundle);

// Loads the lexicon directory. etymology.tsv is required; synonyms.tsv,
// function_words.txt, noise_words.txt, exceptions.txt, domain.txt,
// pragmatic.tsv and phonemes.tsv default to empty tables when absent.
// Throws ParseError / ValidationError.
LexiconBundle load_lexicon_bundle(const std::filesystem::path& dir);

// Writes the bundle back out in canonical (sorted) form. Reloading the
// result yields an identical bundle.
void save_lexicon_bundle(const LexiconBundle& bundle,
                         const std::filesystem::path& dir);

// Stable 16-hex-digit digest of the bundle's canonical serialization.
std::string bundle_fingerprint(const LexiconBundle& bundle);

// Root lookup; words without an entry are their own root.
std::string root_of(const std::string& word, const LexiconBundle& bundle);

// Canonical member of the synonym set containing the word, or the word
// itself when it belongs to no set.
std::string canonical_synonym(const std::string& root,
                              const LexiconBundle& bundle);

// Exception membership wins over both stop lists.
TokenClass classify_token(const std::string& word, FilterStage stage,
                          const LexiconBundle& bundle);

}  // namespace ngramcbr

#endif  // NGRAMCBR_LEXICONS_HPP_
