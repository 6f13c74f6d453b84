#pragma once

#include <string>
#include <vector>

#include "cpl/error.hpp"

namespace cpl {

// Frame-level token sequence of length T; may contain the blank token.
using Alignment = std::vector<int>;
// Blank-free token sequence (the result of the collapse transformation);
// true repeats are allowed.
using Transcription = std::vector<int>;

// Token ids are dense in [0, V). Id 0 is the CTC blank, id 1 the word
// boundary; both are fixed so file formats and word-level metrics are
// stable across configurations.
struct TokenAlphabet {
  static constexpr int kBlank = 0;
  static constexpr int kBoundary = 1;

  std::string symbols;  // symbols[id] is the printable character for id

  int size() const { return static_cast<int>(symbols.size()); }

  static TokenAlphabet make_default(int vocab_size) {
    static const std::string pool = "#|abcdefghijklmnopqrstuvwxyz";
    if (vocab_size < 3 || vocab_size > static_cast<int>(pool.size()))
      throw ConfigError("vocab size must be in [3, " + std::to_string(pool.size()) + "]");
    TokenAlphabet a;
    a.symbols = pool.substr(0, vocab_size);
    return a;
  }

  char symbol(int id) const { return symbols.at(id); }

  int id_of(char c) const {
    auto pos = symbols.find(c);
    if (pos == std::string::npos)
      throw DataError(std::string("unknown token symbol '") + c + "'");
    return static_cast<int>(pos);
  }

  std::string to_string(const std::vector<int>& tokens) const {
    std::string s;
    s.reserve(tokens.size());
    for (int id : tokens) s.push_back(symbol(id));
    return s;
  }

  std::vector<int> parse(const std::string& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (char c : s) out.push_back(id_of(c));
    return out;
  }
};

inline bool contains_blank(const std::vector<int>& tokens) {
  for (int id : tokens)
    if (id == TokenAlphabet::kBlank) return true;
  return false;
}

}  // namespace cpl
