#ifndef TWINLAB_HARNESS_RNG_HPP
#define TWINLAB_HARNESS_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace twinlab::harness {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bit-exact reference:
///   z += 0x9E3779B97F4A7C15
///   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Combine a seed with a stream index:  key = mix64(seed ^ mix64(stream_id ^ 0xD1B54A32D192ED03)).
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    return mix64(seed ^ mix64(stream_id ^ 0xD1B54A32D192ED03ULL));
}

/**
 * Deterministic random stream: xoshiro256** (Blackman, Vigna) whose four
 * state words are the first four SplitMix64 outputs starting from
 * stream_key(seed, stream_id). The algorithm is pinned; every value drawn
 * from a stream is a pure function of (seed, stream_id) and the call
 * sequence, on every platform.
 *
 * Satisfies UniformRandomBitGenerator, but the bounded/real helpers below
 * should be preferred over <random> distributions, whose output is
 * implementation-defined.
 */
namespace detail {
__extension__ using uint128 = unsigned __int128;
}  // namespace detail

class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : seed_(seed), stream_id_(stream_id) {
        std::uint64_t sm = stream_key(seed, stream_id);
        for (auto& word : state_) {
            word = mix64(sm);
            sm += 0x9E3779B97F4A7C15ULL;
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next(); }

    result_type next() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection; bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        detail::uint128 m = static_cast<detail::uint128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<detail::uint128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in the open interval (0, 1).
    double uniform_open01() noexcept {
        return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
    }

    /// Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::span<T> items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::array<std::uint64_t, 4> state_{};
};

inline RngStream derive_stream(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    return RngStream(seed, stream_id);
}

/// Fold several integers into one stream id (for (k, r, trial)-style indices).
template <typename... Ts>
constexpr std::uint64_t stream_id_of(Ts... parts) noexcept {
    std::uint64_t h = 0x6A09E667F3BCC909ULL;
    ((h = mix64(h ^ static_cast<std::uint64_t>(parts))), ...);
    return h;
}

}  // namespace twinlab::harness

#endif  // TWINLAB_HARNESS_RNG_HPP
