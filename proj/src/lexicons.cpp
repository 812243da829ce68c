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

#include "ngramcbr/lexicons.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ngramcbr/errors.hpp"
#include "ngramcbr/text.hpp"

namespace ngramcbr {

namespace {

namespace fs = std::filesystem;

constexpr const char* kEtymologyFile = "etymology.tsv";
constexpr const char* kSynonymsFile = "synonyms.tsv";
constexpr const char* kFunctionWordsFile = "function_words.txt";
constexpr const char* kNoiseWordsFile = "noise_words.txt";
constexpr const char* kExceptionsFile = "exceptions.txt";
constexpr const char* kDomainFile = "domain.txt";
constexpr const char* kPragmaticFile = "pragmatic.tsv";
constexpr const char* kPhonemesFile = "phonemes.tsv";

// A word field: trimmed, folded, free of embedded whitespace.
std::string parse_word(const std::string& file, int line,
                       const std::string& raw, const char* what) {
  std::string word = trim(raw);
  if (word.empty()) {
    throw ParseError(file, line, std::string("empty ") + what);
  }
  if (word.find_first_of(" \t") != std::string::npos) {
    throw ParseError(file, line,
                     std::string("expected a single word for ") + what);
  }
  return fold_upper(word);
}

std::vector<std::string> two_fields(const std::string& file, int line,
                                    const std::string& raw) {
  std::vector<std::string> fields = split(raw, '\t');
  if (fields.size() != 2) {
    throw ParseError(file, line, "expected 2 tab-separated fields, found " +
                                     std::to_string(fields.size()));
  }
  return fields;
}

std::set<std::string> parse_word_list(const std::string& file, int line,
                                      const std::string& raw,
                                      const char* what) {
  std::set<std::string> words;
  for (const std::string& item : split(raw, ',')) {
    words.insert(parse_word(file, line, item, what));
  }
  return words;
}

void load_etymology(const fs::path& path, EtymologyLexicon& out) {
  std::string file = path.string();
  for (const NumberedLine& line : read_content_lines(file)) {
    std::vector<std::string> fields = two_fields(file, line.number, line.text);
    std::string surface = parse_word(file, line.number, fields[0], "surface word");
    std::string root = parse_word(file, line.number, fields[1], "root word");
    auto [it, inserted] = out.entries.emplace(surface, root);
    if (!inserted && it->second != root) {
      throw ParseError(file, line.number,
                       "conflicting entries for " + surface);
    }
  }
}

void load_synonyms(const fs::path& path, SynonymTable& out) {
  std::string file = path.string();
  for (const NumberedLine& line : read_content_lines(file)) {
    std::vector<std::string> fields = two_fields(file, line.number, line.text);
    SynonymSet set;
    set.canonical = parse_word(file, line.number, fields[0], "canonical word");
    set.members = parse_word_list(file, line.number, fields[1], "synonym member");
    set.members.insert(set.canonical);
    out.sets.push_back(std::move(set));
  }
}

void load_word_file(const fs::path& path, std::set<std::string>& out) {
  std::string file = path.string();
  for (const NumberedLine& line : read_content_lines(file)) {
    out.insert(parse_word(file, line.number, line.text, "word"));
  }
}

void load_pragmatic(const fs::path& path, PragmaticKnowledge& out) {
  std::string file = path.string();
  for (const NumberedLine& line : read_content_lines(file)) {
    std::vector<std::string> fields = two_fields(file, line.number, line.text);
    std::string root = parse_word(file, line.number, fields[0], "root word");
    if (out.keywords.count(root)) {
      throw ParseError(file, line.number, "duplicate entry for " + root);
    }
    out.keywords[root] =
        parse_word_list(file, line.number, fields[1], "keyword");
  }
}

void load_phonemes(const fs::path& path, PhonemeRules& out) {
  std::string file = path.string();
  for (const NumberedLine& line : read_content_lines(file)) {
    std::vector<std::string> fields = two_fields(file, line.number, line.text);
    std::string grapheme =
        parse_word(file, line.number, fields[0], "grapheme");
    std::string symbol = trim(fields[1]);
    if (symbol.empty() || symbol.find_first_of(" \t") != std::string::npos) {
      throw ParseError(file, line.number, "bad phoneme symbol");
    }
    auto [it, inserted] = out.rules.emplace(grapheme, symbol);
    if (!inserted && it->second != symbol) {
      throw ParseError(file, line.number,
                       "conflicting rules for " + grapheme);
    }
  }
}

std::string identity_symbol(char letter) {
  std::string symbol = "/";
  symbol += static_cast<char>(letter - 'A' + 'a');
  symbol += "/";
  return symbol;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

std::string join(const std::set<std::string>& words, char sep) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += sep;
    out += w;
  }
  return out;
}

std::string serialize_etymology(const EtymologyLexicon& t) {
  std::string out;
  for (const auto& [surface, root] : t.entries) {
    out += surface + "\t" + root + "\n";
  }
  return out;
}

std::string serialize_synonyms(const SynonymTable& t) {
  std::string out;
  for (const SynonymSet& set : t.sets) {
    out += set.canonical + "\t" + join(set.members, ',') + "\n";
  }
  return out;
}

std::string serialize_words(const std::set<std::string>& words) {
  std::string out;
  for (const std::string& w : words) out += w + "\n";
  return out;
}

std::string serialize_pragmatic(const PragmaticKnowledge& t) {
  std::string out;
  for (const auto& [root, keywords] : t.keywords) {
    out += root + "\t" + join(keywords, ',') + "\n";
  }
  return out;
}

std::string serialize_phonemes(const PhonemeRules& t) {
  std::string out;
  for (const auto& [grapheme, symbol] : t.rules) {
    out += grapheme + "\t" + symbol + "\n";
  }
  return out;
}

}  // namespace

std::set<std::string> derive_vocabulary(const LexiconBundle& bundle) {
  std::set<std::string> vocabulary;
  for (const auto& [surface, root] : bundle.etymology.entries) {
    vocabulary.insert(root);
  }
  for (const SynonymSet& set : bundle.synonyms.sets) {
    vocabulary.insert(set.members.begin(), set.members.end());
  }
  for (const auto& [root, keywords] : bundle.pragmatic.keywords) {
    vocabulary.insert(root);
  }
  return vocabulary;
}

void finalize_bundle(LexiconBundle& bundle) {
  for (const auto& [surface, root] : bundle.etymology.entries) {
    if (surface.empty() || root.empty()) {
      throw ValidationError("etymology entry with empty text");
    }
    auto it = bundle.etymology.entries.find(root);
    if (it != bundle.etymology.entries.end() && it->second != root) {
      throw ValidationError("etymology chain deeper than one level: " +
                            surface + " -> " + root + " -> " + it->second);
    }
  }

  std::set<std::string> seen_members;
  for (SynonymSet& set : bundle.synonyms.sets) {
    if (set.canonical.empty()) {
      throw ValidationError("synonym set with empty canonical word");
    }
    set.members.insert(set.canonical);
    for (const std::string& member : set.members) {
      if (!seen_members.insert(member).second) {
        throw ValidationError("word in two synonym sets: " + member);
      }
    }
  }
  std::sort(bundle.synonyms.sets.begin(), bundle.synonyms.sets.end(),
            [](const SynonymSet& a, const SynonymSet& b) {
              return a.canonical < b.canonical;
            });

  for (const std::string& word : bundle.exceptions.words) {
    if (bundle.stops.function_words.count(word) ||
        bundle.stops.noise_words.count(word)) {
      throw ValidationError("exception word also on a stop list: " + word);
    }
  }

  for (const auto& [root, keywords] : bundle.pragmatic.keywords) {
    if (keywords.empty()) {
      throw ValidationError("pragmatic entry with no keywords: " + root);
    }
  }

  for (char letter = 'A'; letter <= 'Z'; ++letter) {
    bundle.phonemes.rules.emplace(std::string(1, letter),
                                  identity_symbol(letter));
  }
  bundle.phonemes.max_grapheme_len = 1;
  for (const auto& [grapheme, symbol] : bundle.phonemes.rules) {
    bundle.phonemes.max_grapheme_len =
        std::max(bundle.phonemes.max_grapheme_len, grapheme.size());
  }

  bundle.vocabulary = derive_vocabulary(bundle);
}

LexiconBundle load_lexicon_bundle(const std::filesystem::path& dir) {
  LexiconBundle bundle;

  fs::path etymology = dir / kEtymologyFile;
  if (!fs::exists(etymology)) {
    throw ValidationError("missing required file " + etymology.string());
  }
  load_etymology(etymology, bundle.etymology);

  auto optional = [&](const char* name) -> fs::path {
    fs::path path = dir / name;
    return fs::exists(path) ? path : fs::path();
  };

  if (fs::path p = optional(kSynonymsFile); !p.empty()) {
    load_synonyms(p, bundle.synonyms);
  }
  if (fs::path p = optional(kFunctionWordsFile); !p.empty()) {
    load_word_file(p, bundle.stops.function_words);
  }
  if (fs::path p = optional(kNoiseWordsFile); !p.empty()) {
    load_word_file(p, bundle.stops.noise_words);
  }
  if (fs::path p = optional(kExceptionsFile); !p.empty()) {
    load_word_file(p, bundle.exceptions.words);
  }
  if (fs::path p = optional(kDomainFile); !p.empty()) {
    load_word_file(p, bundle.domain.keywords);
  }
  if (fs::path p = optional(kPragmaticFile); !p.empty()) {
    load_pragmatic(p, bundle.pragmatic);
  }
  if (fs::path p = optional(kPhonemesFile); !p.empty()) {
    load_phonemes(p, bundle.phonemes);
  }

  finalize_bundle(bundle);
  return bundle;
}

void save_lexicon_bundle(const LexiconBundle& bundle,
                         const std::filesystem::path& dir) {
  fs::create_directories(dir);
  write_file(dir / kEtymologyFile, serialize_etymology(bundle.etymology));
  write_file(dir / kSynonymsFile, serialize_synonyms(bundle.synonyms));
  write_file(dir / kFunctionWordsFile,
             serialize_words(bundle.stops.function_words));
  write_file(dir / kNoiseWordsFile, serialize_words(bundle.stops.noise_words));
  write_file(dir / kExceptionsFile, serialize_words(bundle.exceptions.words));
  write_file(dir / kDomainFile, serialize_words(bundle.domain.keywords));
  write_file(dir / kPragmaticFile, serialize_pragmatic(bundle.pragmatic));
  write_file(dir / kPhonemesFile, serialize_phonemes(bundle.phonemes));
}

std::string bundle_fingerprint(const LexiconBundle& bundle) {
  std::string text;
  text += "etymology\n" + serialize_etymology(bundle.etymology);
  text += "synonyms\n" + serialize_synonyms(bundle.synonyms);
  text += "function_words\n" + serialize_words(bundle.stops.function_words);
  text += "noise_words\n" + serialize_words(bundle.stops.noise_words);
  text += "exceptions\n" + serialize_words(bundle.exceptions.words);
  text += "domain\n" + serialize_words(bundle.domain.keywords);
  text += "pragmatic\n" + serialize_pragmatic(bundle.pragmatic);
  text += "phonemes\n" + serialize_phonemes(bundle.phonemes);
  return to_hex16(fnv1a64(text));
}

std::string root_of(const std::string& word, const LexiconBundle& bundle) {
  std::string folded = fold_upper(word);
  auto it = bundle.etymology.entries.find(folded);
  return it != bundle.etymology.entries.end() ? it->second : folded;
}

std::string canonical_synonym(const std::string& root,
                              const LexiconBundle& bundle) {
  std::string folded = fold_upper(root);
  for (const SynonymSet& set : bundle.synonyms.sets) {
    if (set.members.count(folded)) return set.canonical;
  }
  return folded;
}

TokenClass classify_token(const std::string& word, FilterStage stage,
                          const LexiconBundle& bundle) {
  std::string folded = fold_upper(word);
  if (bundle.exceptions.words.count(folded)) return TokenClass::exception;
  const std::set<std::string>& stops = stage == FilterStage::stage1
                                           ? bundle.stops.function_words
                                           : bundle.stops.noise_words;
  if (stops.count(folded)) return TokenClass::filtered;
  return TokenClass::content;
}

}  // namespace ngramcbr
