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

#include "ngramcbr/casebase.hpp"

#include <fstream>
#include <set>

#include "ngramcbr/errors.hpp"
#include "ngramcbr/pipeline.hpp"
#include "ngramcbr/text.hpp"

namespace ngramcbr {

namespace {

constexpr const char* kIndexHeader = "NGRAMCBR-INDEX v1";

}  // namespace

std::vector<Case> parse_casebase(const std::filesystem::path& path) {
  std::string file = path.string();
  std::vector<Case> cases;
  std::set<std::string> seen_ids;

  for (const NumberedLine& line : read_content_lines(file)) {
    std::vector<std::string> fields = split(line.text, '\t');
    if (fields.size() != 3) {
      throw ParseError(file, line.number,
                       "expected 3 tab-separated fields, found " +
                           std::to_string(fields.size()));
    }
    Case c;
    c.id = unescape_field(trim(fields[0]));
    c.problem = unescape_field(fields[1]);
    c.solution = unescape_field(fields[2]);
    if (c.id.empty()) throw ParseError(file, line.number, "empty case id");
    if (trim(c.problem).empty()) {
      throw ParseError(file, line.number, "empty problem text");
    }
    if (!seen_ids.insert(c.id).second) {
      throw ValidationError(file + ": duplicate case id " + c.id);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

CaseIndex build_index(const std::vector<Case>& cases,
                      const LexiconBundle& bundle,
                      const PipelineConfig& config) {
  CaseIndex index;
  index.bundle_fingerprint = bundle_fingerprint(bundle);
  index.config_fingerprint = config_fingerprint(config);
  for (const Case& c : cases) {
    IndexEntry entry;
    entry.source = c;
    entry.canonical_tokens = preprocess(c.problem, bundle, config)
                                 .canonical_tokens;
    index.entries.push_back(std::move(entry));
  }
  return index;
}

void save_index(const CaseIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());

  out << kIndexHeader << "\n";
  out << "bundle\t" << index.bundle_fingerprint << "\n";
  out << "config\t" << index.config_fingerprint << "\n";
  for (const IndexEntry& entry : index.entries) {
    out << escape_field(entry.source.id) << "\t"
        << escape_field(entry.source.problem) << "\t"
        << escape_field(entry.source.solution) << "\t";
    for (std::size_t i = 0; i < entry.canonical_tokens.size(); ++i) {
      if (i) out << " ";
      out << entry.canonical_tokens[i];
    }
    out << "\n";
  }
  if (!out) throw Error("write failed for " + path.string());
}

CaseIndex load_index(const std::filesystem::path& path,
                     const LexiconBundle& bundle, const PipelineConfig& config,
                     bool verify_entries) {
  std::string file = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + file);

  auto next_line = [&](std::string& out) {
    if (!std::getline(in, out)) return false;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
  };

  std::string line;
  if (!next_line(line) || line != kIndexHeader) {
    throw FormatError(file + ": not a " + std::string(kIndexHeader) + " file");
  }

  CaseIndex index;
  auto read_fingerprint = [&](const char* tag) {
    if (!next_line(line)) {
      throw FormatError(file + ": truncated header");
    }
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 2 || fields[0] != tag || fields[1].size() != 16) {
      throw FormatError(file + ": bad " + std::string(tag) + " line");
    }
    return fields[1];
  };
  index.bundle_fingerprint = read_fingerprint("bundle");
  index.config_fingerprint = read_fingerprint("config");

  if (index.bundle_fingerprint != bundle_fingerprint(bundle) ||
      index.config_fingerprint != config_fingerprint(config)) {
    throw StaleIndexError(file +
                          ": index was built with different lexicons or "
                          "configuration; rebuild it");
  }

  std::set<std::string> seen_ids;
  while (next_line(line)) {
    if (line.empty()) {
      throw FormatError(file + ": blank record line");
    }
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 4) {
      throw FormatError(file + ": bad record: " + line);
    }
    IndexEntry entry;
    entry.source.id = unescape_field(fields[0]);
    entry.source.problem = unescape_field(fields[1]);
    entry.source.solution = unescape_field(fields[2]);
    if (entry.source.id.empty() || trim(entry.source.problem).empty()) {
      throw FormatError(file + ": bad record: " + line);
    }
    if (!seen_ids.insert(entry.source.id).second) {
      throw ValidationError(file + ": duplicate case id " + entry.source.id);
    }
    for (const std::string& token : split(fields[3], ' ')) {
      if (!token.empty()) entry.canonical_tokens.push_back(token);
    }
    if (verify_entries) {
      std::vector<std::string> expected =
          preprocess(entry.source.problem, bundle, config).canonical_tokens;
      if (expected != entry.canonical_tokens) {
        throw ValidationError(file + ": stored tokens for case " +
                              entry.source.id +
                              " do not match preprocessing");
      }
    }
    index.entries.push_back(std::move(entry));
  }
  return index;
}

}  // namespace ngramcbr
