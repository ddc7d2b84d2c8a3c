#ifndef TWINLAB_WORDS_IO_HPP
#define TWINLAB_WORDS_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/words/word.hpp"

namespace twinlab::words {

// Word file format:
//   k=<alphabet size>
//   <symbol> <symbol> ...      one word per line, whitespace separated

inline std::vector<Word> read_words(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw invalid_input("word file: missing 'k=<int>' header");
    if (line.rfind("k=", 0) != 0) throw invalid_input("word file: header must be 'k=<int>', got '" + line + "'");
    std::uint32_t k = 0;
    try {
        std::size_t used = 0;
        const unsigned long parsed = std::stoul(line.substr(2), &used);
        if (used != line.size() - 2) throw invalid_input("trailing characters");
        k = static_cast<std::uint32_t>(parsed);
    } catch (const std::exception&) {
        throw invalid_input("word file: malformed header '" + line + "'");
    }
    std::vector<Word> words;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<Symbol> symbols;
        long long value = 0;
        while (row >> value) {
            if (value < 1) throw invalid_input("word file: symbols must be positive integers");
            symbols.push_back(static_cast<Symbol>(value));
        }
        if (!row.eof()) throw invalid_input("word file: non-integer token in line '" + line + "'");
        words.emplace_back(std::move(symbols), k);
    }
    return words;
}

inline void write_words(std::ostream& out, const std::vector<Word>& words) {
    if (words.empty()) throw invalid_parameter("write_words: need at least one word to fix the alphabet");
    const auto k = words.front().alphabet_size();
    out << "k=" << k << '\n';
    for (const auto& w : words) {
        if (w.alphabet_size() != k) throw invalid_parameter("write_words: words disagree on alphabet size");
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
        out << '\n';
    }
}

}  // namespace twinlab::words

#endif  // TWINLAB_WORDS_IO_HPP
