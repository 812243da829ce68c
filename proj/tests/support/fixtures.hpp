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

#ifndef NGRAMCBR_TESTS_SUPPORT_FIXTURES_HPP_
#define NGRAMCBR_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngramcbr/lexicons.hpp"

namespace fixtures {

class TempDir {
 public:
  TempDir() {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "ngramcbr-test-XXXXXX")
            .string();
    std::vector<char> buf(pattern.begin(), pattern.end());
    buf.push_back('\0');
    if (mkdtemp(buf.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path_ = buf.data();
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

// The troubleshooting bundle shipped under data/lexicons, rebuilt in memory
// so unit tests need no filesystem access.
inline ngramcbr::LexiconBundle demo_bundle() {
  ngramcbr::LexiconBundle bundle;
  bundle.etymology.entries = {
      {"HANGING", "HANG"},        {"HANGS", "HANG"},
      {"HUNG", "HANG"},           {"CRASHES", "CRASH"},
      {"CRASHED", "CRASH"},       {"CRASHING", "CRASH"},
      {"DOING", "DO"},            {"DOES", "DO"},
      {"INSTALLATION", "INSTALL"},{"INSTALLATIONS", "INSTALL"},
      {"INSTALLING", "INSTALL"},  {"INSTALLED", "INSTALL"},
      {"RUNNING", "RUN"},         {"RUNS", "RUN"},
      {"PROCESSES", "PROCESS"},   {"PROCESSING", "PROCESS"},
      {"SYSTEMS", "SYSTEM"},
  };
  bundle.synonyms.sets = {
      {"SOFTWARE", {"SYSTEM"}},
      {"CRASH", {"HANG"}},
      {"RUN", {"INSTALL"}},
  };
  bundle.stops.function_words = {"THE", "A",  "AN", "AND", "WHEN", "WHILE",
                                 "I",   "IT", "IS", "OF",  "TO",   "MY",
                                 "ON",  "IN"};
  bundle.stops.noise_words = {"DO",    "THE", "A",  "AN", "AND", "WHEN",
                              "WHILE", "I",   "IT", "IS", "OF",  "TO",
                              "MY",    "ON",  "IN"};
  bundle.pragmatic.keywords = {
      {"SYSTEM", {"COMPUTER", "MACHINE", "DEVICE", "SOFTWARE"}},
      {"SOFTWARE", {"PROGRAM", "APPLICATION", "COMPUTER"}},
      {"CRASH", {"ERROR", "FREEZE", "FAILURE"}},
      {"HANG", {"FREEZE", "STUCK", "DELAY"}},
      {"INSTALL", {"SETUP", "PACKAGE", "SOFTWARE"}},
      {"RUN", {"EXECUTE", "PROGRAM", "PROCESS"}},
      {"PROCESS", {"TASK", "PROGRAM", "COMPUTER"}},
  };
  bundle.domain.keywords = {"COMPUTER",    "SOFTWARE", "HARDWARE", "MACHINE",
                            "DEVICE",      "APPLICATION", "PROGRAM",
                            "PROCESS",     "MEMORY",   "DISK",     "NETWORK",
                            "DRIVER"};
  bundle.phonemes.rules = {
      {"PH", "/f/"},  {"CK", "/k/"}, {"CH", "/ch/"}, {"SH", "/sh/"},
      {"TH", "/th/"}, {"WH", "/w/"}, {"QU", "/kw/"}, {"EE", "/i/"},
      {"EA", "/i/"},  {"OO", "/u/"},
  };
  ngramcbr::finalize_bundle(bundle);
  return bundle;
}

}  // namespace fixtures

#endif  // NGRAMCBR_TESTS_SUPPORT_FIXTURES_HPP_
