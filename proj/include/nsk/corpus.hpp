#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nsk {

/// An expected value with a note of how it was obtained.
struct Expected {
  nlohmann::json value;
  std::string source;  // "derived" or "trivial"
  std::string oracle;
};

struct CorpusSurface {
  std::string file;
  std::string note;
  std::optional<Expected> chi;
  std::map<std::string, Expected> bound;  // k, g, b, s, q, badRemnantDisks, flags, exitCode, or error
};

struct CorpusEntry {
  std::string name;
  std::string tri;
  std::string description;
  std::map<std::string, Expected> expect;  // t, v, e, f, eN, rankH1Z2, orientable
  std::vector<CorpusSurface> surfaces;
};

/// Reads `dir`/corpus.json. Throws Error(Syntax) when an expectation lacks a
/// value or a source tag, Error(Io) when the file is missing.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct Mismatch {
  std::string where;  // entry name or surface file
  std::string field;
  std::string expected;
  std::string actual;
};

struct CorpusResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;
  std::optional<std::string> error;  // unexpected exception
  bool passed() const { return mismatches.empty() && !error; }
};

/// Runs the whole pipeline on one entry and compares against its expectations.
CorpusResult run_entry(const std::filesystem::path& dir, const CorpusEntry& entry);

/// Directory holding the bundled corpus: $NSK_CORPUS if set, else the source tree's corpus/.
std::filesystem::path default_corpus_dir();

}  // namespace nsk
