#pragma once

#include <string>
#include <vector>

#include "morse.hpp"
#include "simplify.hpp"

namespace gridknot {

struct CorpusEntry {
  std::string name;
  std::string morse_file;  // relative to the corpus directory
  MorseStats expected;
  Verdict expected_verdict = Verdict::Inconclusive;
  std::string note;
  MorseWord word;
};

// Reads <dir>/index.txt and every referenced Morse file; fails naming the
// entry when a file is missing or its stats disagree with the index.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

}  // namespace gridknot
