#include "corpus.hpp"

#include <fstream>
#include <sstream>

namespace gridknot {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::string index = read_file(dir + "/index.txt");
  std::vector<CorpusEntry> out;
  std::istringstream lines(index);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::istringstream fields(line);
    CorpusEntry e;
    int b_count = 0, cr_count = 0, m_count = 0;
    std::string verdict_word;
    if (!(fields >> e.name >> e.morse_file >> b_count >> cr_count >> m_count >>
          verdict_word))
      throw Error("corpus index line " + std::to_string(number) + " malformed");
    std::getline(fields, e.note);
    if (auto nb = e.note.find_first_not_of(" \t"); nb != std::string::npos)
      e.note = e.note.substr(nb);
    e.expected = {b_count, cr_count, m_count};
    auto v = verdict_from_name(verdict_word);
    if (!v) throw Error("corpus entry " + e.name + ": bad verdict " + verdict_word);
    e.expected_verdict = *v;
    std::string word_text;
    try {
      word_text = read_file(dir + "/" + e.morse_file);
    } catch (const Error&) {
      throw Error("corpus entry " + e.name + ": missing file " + e.morse_file);
    }
    try {
      e.word = parse_morse(word_text);
    } catch (const std::exception& ex) {
      throw Error("corpus entry " + e.name + ": " + ex.what());
    }
    MorseStats s = morse_stats(e.word);
    if (s.maxima != e.expected.maxima || s.crossings != e.expected.crossings ||
        s.complexity != e.expected.complexity)
      throw Error("corpus entry " + e.name + ": recorded stats (b=" +
                  std::to_string(e.expected.maxima) + ", cr=" +
                  std::to_string(e.expected.crossings) + ", M=" +
                  std::to_string(e.expected.complexity) + ") disagree with the file (b=" +
                  std::to_string(s.maxima) + ", cr=" + std::to_string(s.crossings) +
                  ", M=" + std::to_string(s.complexity) + ")");
    out.push_back(std::move(e));
  }
  if (out.empty()) throw Error("corpus index is empty");
  return out;
}

}  // namespace gridknot
