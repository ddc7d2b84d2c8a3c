#ifndef TWINLAB_PERMS_PERMUTATION_HPP
#define TWINLAB_PERMS_PERMUTATION_HPP

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/harness/rng.hpp"

namespace twinlab::perms {

using Value = std::uint32_t;

/// A bijection on {1..n}, stored as its one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<Value> values) : values_(std::move(values)) {
        std::vector<bool> seen(values_.size() + 1, false);
        for (Value v : values_) {
            if (v < 1 || v > values_.size() || seen[v])
                throw invalid_input("not a permutation of {1.." + std::to_string(values_.size()) + "}");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<Value> v(n);
        std::iota(v.begin(), v.end(), Value{1});
        return Permutation(std::move(v), unchecked_tag{});
    }

    [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    Value operator[](std::size_t i) const noexcept { return values_[i]; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct unchecked_tag {};
    Permutation(std::vector<Value> values, unchecked_tag) : values_(std::move(values)) {}

    friend Permutation random_permutation(std::size_t, harness::RngStream&);

    std::vector<Value> values_;
};

/// Uniform over all n! permutations (Fisher-Yates on the identity).
inline Permutation random_permutation(std::size_t n, harness::RngStream& rng) {
    std::vector<Value> v(n);
    std::iota(v.begin(), v.end(), Value{1});
    rng.shuffle(std::span<Value>(v));
    return Permutation(std::move(v), Permutation::unchecked_tag{});
}

inline Permutation random_permutation(std::size_t n, std::uint64_t seed) {
    auto rng = harness::derive_stream(seed, 0);
    return random_permutation(n, rng);
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_PERMUTATION_HPP
