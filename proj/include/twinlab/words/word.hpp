#ifndef TWINLAB_WORDS_WORD_HPP
#define TWINLAB_WORDS_WORD_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/harness/rng.hpp"

namespace twinlab::words {

using Symbol = std::uint32_t;

/// A finite sequence over the alphabet {1..k}, k >= 2.
class Word {
public:
    Word(std::vector<Symbol> symbols, std::uint32_t alphabet_size)
        : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
        if (alphabet_size_ < 2) throw invalid_parameter("alphabet size must be >= 2");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] < 1 || symbols_[i] > alphabet_size_)
                throw invalid_input("symbol " + std::to_string(symbols_[i]) + " at position " +
                                    std::to_string(i) + " outside {1.." + std::to_string(alphabet_size_) + "}");
    }

    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }
    [[nodiscard]] std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;
    std::uint32_t alphabet_size_;
};

/// Uniform word drawn from an existing stream. Power-of-two alphabets consume
/// log2(k) bits per symbol from each 64-bit draw; others use one bounded draw
/// per symbol.
inline Word random_word(std::size_t n, std::uint32_t k, harness::RngStream& rng) {
    if (k < 2) throw invalid_parameter("random_word: alphabet size must be >= 2");
    std::vector<Symbol> symbols(n);
    if (std::has_single_bit(k)) {
        const int bits = std::countr_zero(k);
        const int per_draw = 64 / bits;
        const std::uint64_t mask = k - 1;
        std::size_t i = 0;
        while (i < n) {
            std::uint64_t draw = rng.next();
            for (int j = 0; j < per_draw && i < n; ++j, ++i) {
                symbols[i] = static_cast<Symbol>(draw & mask) + 1;
                draw >>= bits;
            }
        }
    } else {
        for (auto& s : symbols) s = static_cast<Symbol>(rng.below(k)) + 1;
    }
    return Word(std::move(symbols), k);
}

inline Word random_word(std::size_t n, std::uint32_t k, std::uint64_t seed) {
    auto rng = harness::derive_stream(seed, 0);
    return random_word(n, k, rng);
}

}  // namespace twinlab::words

#endif  // TWINLAB_WORDS_WORD_HPP
