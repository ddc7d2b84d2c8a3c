#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "twinlab/words/bounds.hpp"
#include "twinlab/words/experiment.hpp"
#include "twinlab/words/io.hpp"
#include "twinlab/words/scan.hpp"
#include "twinlab/words/word.hpp"

using namespace twinlab;
using namespace twinlab::words;
using Catch::Approx;

namespace {

Word mk(std::vector<Symbol> s, std::uint32_t k = 0) {
    std::uint32_t kk = k;
    if (kk == 0) {
        kk = 2;
        for (auto v : s) kk = std::max(kk, v);
    }
    return Word(std::move(s), kk);
}

// r-power of subblock length m at some start, by direct comparison
bool has_power(const Word& w, std::size_t r, std::size_t m) {
    for (std::size_t s = 0; s + r * m <= w.size(); ++s) {
        bool ok = true;
        for (std::size_t j = m; j < r * m && ok; ++j) ok = w[s + j] == w[s + j - m];
        if (ok) return true;
    }
    return false;
}

bool has_long_run(const MatchIndicator& b, std::size_t len) {
    std::size_t run = 0;
    for (bool bit : b.bits) {
        run = bit ? run + 1 : 0;
        if (run >= len) return true;
    }
    return len == 0;
}

Word word_from_index(std::uint64_t idx, std::size_t n, std::uint32_t k) {
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = static_cast<Symbol>(idx % k) + 1;
        idx /= k;
    }
    return Word(std::move(s), k);
}

}  // namespace

TEST_CASE("word invariants", "[words]") {
    CHECK_THROWS_AS(Word({1, 2}, 1), invalid_parameter);
    CHECK_THROWS_AS(Word({1, 3}, 2), invalid_input);
    CHECK_THROWS_AS(Word({0}, 2), invalid_input);
    CHECK(Word({}, 2).empty());
}

TEST_CASE("random_word", "[words]") {
    CHECK(random_word(5, 3, 42) == random_word(5, 3, 42));
    CHECK(random_word(0, 2, 42).empty());
    CHECK_THROWS_AS(random_word(5, 1, 42), invalid_parameter);
    for (std::uint32_t k : {2u, 3u, 5u, 8u}) {
        const auto w = random_word(1000, k, 9);
        for (auto s : w.symbols()) REQUIRE((s >= 1 && s <= k));
    }

    const std::size_t n = 1000000;
    const auto w = random_word(n, 2, 2024);
    const auto ones = std::count(w.symbols().begin(), w.symbols().end(), 1u);
    CHECK(std::abs(static_cast<double>(ones) - n / 2.0) <= 3.0 * std::sqrt(n / 4.0));

    const auto w3 = random_word(300000, 3, 5);
    for (Symbol s = 1; s <= 3; ++s) {
        const double c = static_cast<double>(std::count(w3.symbols().begin(), w3.symbols().end(), s));
        CHECK(std::abs(c - 100000.0) <= 3.0 * std::sqrt(300000.0 * (1.0 / 3) * (2.0 / 3)));
    }
}

TEST_CASE("match_indicator", "[words]") {
    CHECK(match_indicator(mk({1, 2, 1, 2, 1}), 2).bits == std::vector<bool>{true, true, true});
    CHECK(match_indicator(mk({1, 2, 3, 4}), 1).bits == std::vector<bool>{false, false, false});
    CHECK(match_indicator(mk({4, 4, 4, 4, 4, 4, 4}, 4), 3).bits == std::vector<bool>(4, true));
    CHECK(match_indicator(mk({1, 2, 1}), 3).bits.empty());
    CHECK_THROWS_AS(match_indicator(mk({1, 2, 1}), 4), invalid_parameter);
    CHECK_THROWS_AS(match_indicator(mk({1, 2, 1}), 0), invalid_parameter);
}

TEST_CASE("max_rpower_length examples", "[words]") {
    CHECK(max_rpower_length(mk({1, 2, 1, 2, 1}), 2) == 2);
    CHECK(max_rpower_length(mk({1, 1, 1, 1, 1, 1, 1}), 3) == 2);
    CHECK(max_rpower_length(mk({1, 2, 3, 4, 5}), 2) == 0);
    CHECK(max_rpower_length(Word({}, 2), 2) == 0);
    CHECK(brute_force_max_rpower(mk({1, 2, 1, 2, 1}), 2) == 2);
    CHECK(brute_force_max_rpower(Word({}, 2), 3) == 0);
    CHECK_THROWS_AS(max_rpower_length(mk({1, 2}), 1), invalid_parameter);
    CHECK_THROWS_AS(brute_force_max_rpower(mk({1, 2}), 1), invalid_parameter);

    const auto wit = max_rpower(mk({3, 1, 2, 1, 2, 3}), 2);
    CHECK(wit.length == 2);
    CHECK(wit.start == 1);
}

TEST_CASE("max_power_of_length examples", "[words]") {
    CHECK(max_power_of_length(mk({1, 1, 1, 1, 1}), 1) == 5);
    CHECK(max_power_of_length(mk({1, 2, 1, 2, 1, 2}), 2) == 3);
    CHECK(max_power_of_length(mk({1, 2, 3}), 2) == 1);
    CHECK(max_power_of_length(mk({1, 2, 3}), 3) == 1);
    CHECK_THROWS_AS(max_power_of_length(mk({1, 2, 3}), 4), invalid_parameter);
}

TEST_CASE("scanner agrees with brute force on every binary word up to length 10", "[words][oracle]") {
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::uint64_t idx = 0; idx < (1ULL << n); ++idx) {
            const auto w = word_from_index(idx, n, 2);
            for (std::size_t r : {2u, 3u, 4u}) REQUIRE(max_rpower_length(w, r) == brute_force_max_rpower(w, r));
        }
}

TEST_CASE("scanner agrees with brute force on random words", "[words][oracle]") {
    harness::RngStream rng(77, 0);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + rng.below(12);
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.below(2));
        const auto w = random_word(n, k, rng);
        for (std::size_t r : {2u, 3u}) REQUIRE(max_rpower_length(w, r) == brute_force_max_rpower(w, r));
    }
    for (int i = 0; i < 2000; ++i) {
        const auto w = random_word(60, 2, rng);
        for (std::size_t r : {2u, 3u, 5u}) REQUIRE(max_rpower_length(w, r) == brute_force_max_rpower(w, r));
    }
}

TEST_CASE("power iff long run of the match indicator", "[words]") {
    harness::RngStream rng(8, 1);
    for (int i = 0; i < 500; ++i) {
        const auto w = random_word(40, 2, rng);
        for (std::size_t m = 1; m <= 10; ++m)
            for (std::size_t r = 2; r * m <= 40; ++r)
                REQUIRE(has_power(w, r, m) == has_long_run(match_indicator(w, m), (r - 1) * m));
    }
}

TEST_CASE("monotonicity and duality", "[words]") {
    harness::RngStream rng(3, 3);
    for (int i = 0; i < 300; ++i) {
        const auto w = random_word(1 + rng.below(80), 2 + static_cast<std::uint32_t>(rng.below(2)), rng);
        for (std::size_t r = 2; r <= 6; ++r) REQUIRE(max_rpower_length(w, r + 1) <= max_rpower_length(w, r));
        // an r-power of block length >= m exists iff some m' >= m has R(m') >= r
        std::vector<std::size_t> best_from(w.size() + 2, 0);
        for (std::size_t m = w.size(); m >= 1; --m) {
            const auto R = max_power_of_length(w, m);
            REQUIRE(R >= 1);
            best_from[m] = std::max(best_from[m + 1], R);
        }
        for (std::size_t m = 1; m <= w.size(); ++m)
            for (std::size_t r = 2; r <= 8; ++r) REQUIRE((best_from[m] >= r) == (max_rpower_length(w, r) >= m));
    }
}

TEST_CASE("theory centers", "[words][bounds]") {
    CHECK(theory_center_M(1024, 2, 2) == Approx(10.0));
    CHECK(theory_center_M(1, 5, 3) == 0.0);
    CHECK(theory_center_M(6561, 3, 3) == Approx(4.0));
    CHECK(theory_center_R(4096, 2, 3) == Approx(5.0));
    CHECK(theory_center_M(100000, 2, 2) == Approx(16.6096).epsilon(1e-4));
    CHECK_THROWS_AS(theory_center_M(10, 1, 2), invalid_parameter);
    CHECK_THROWS_AS(theory_center_R(10, 2, 0), invalid_parameter);
}

TEST_CASE("tail bounds", "[words][bounds]") {
    CHECK(theory_tail_M(100, 2, 2, 3.0, TailSide::upper) == Approx(0.125));
    CHECK(theory_tail_M(100, 7, 4, 0.0, TailSide::upper) == 1.0);
    CHECK(theory_tail_M(100, 2, 2, 1.0, TailSide::lower, 1.0) == Approx(std::exp(-1.0)));
    CHECK(theory_tail_R(100, 2, 3, 1.0, TailSide::upper) == Approx(0.125));
    CHECK(theory_tail_R(100, 2, 3, 0.0, TailSide::upper) == 1.0);
    CHECK_THROWS_AS(theory_tail_M(100, 2, 2, -0.5, TailSide::upper), invalid_parameter);
    CHECK_THROWS_AS(theory_tail_R(100, 2, 2, -0.5, TailSide::lower), invalid_parameter);
    CHECK(theory_tail_M(TailBoundSpec{100, 2, 2, 3.0, 0.5}, TailSide::upper) == Approx(0.125));

    for (std::uint64_t k : {2u, 3u})
        for (std::uint64_t r : {2u, 3u}) {
            double prev = 2.0;
            for (double t = 0.0; t <= 6.0; t += 0.25) {
                const double u = theory_tail_M(1000, k, r, t, TailSide::upper);
                const double l = theory_tail_M(1000, k, r, t, TailSide::lower);
                const double ur = theory_tail_R(1000, k, r, t, TailSide::upper);
                const double lr = theory_tail_R(1000, k, r, t, TailSide::lower);
                for (double v : {u, l, ur, lr}) REQUIRE((v >= 0.0 && v <= 1.0));
                REQUIRE(u <= prev);
                prev = u;
            }
        }
}

TEST_CASE("experiment summaries", "[words][experiment]") {
    const auto one = mc_experiment_M(200, 2, 2, 1, 5);
    CHECK(one.trials == 1);
    CHECK(one.min == one.max);
    CHECK(one.mean == one.min);

    ExperimentOptions serial;
    ExperimentOptions parallel;
    parallel.threads = 4;
    const auto a = mc_experiment_M(2000, 2, 2, 64, 11, serial);
    const auto b = mc_experiment_M(2000, 2, 2, 64, 11, parallel);
    CHECK(a.values == b.values);
    CHECK(report_M(2000, 2, 2, 64, 11, serial).dump(true) == report_M(2000, 2, 2, 64, 11, parallel).dump(true));
    CHECK(report_R(2000, 3, 2, 32, 11, serial).dump() == report_R(2000, 3, 2, 32, 11, parallel).dump());

    // trial i is the word on stream i
    for (std::size_t i = 0; i < 4; ++i) {
        auto rng = harness::derive_stream(11, i);
        CHECK(static_cast<double>(max_rpower_length(random_word(2000, 2, rng), 2)) == a.values[i]);
    }

    double prev = 1.0;
    for (const auto& [th, f] : a.empirical_tail) {
        CHECK((f >= 0.0 && f <= 1.0));
        CHECK(f <= prev);
        prev = f;
    }
    CHECK_THROWS_AS(mc_experiment_M(100, 2, 2, 0, 1), invalid_parameter);
    CHECK_THROWS_AS(mc_experiment_R(10, 2, 11, 3, 1), invalid_parameter);
}

TEST_CASE("word file round trip", "[words][io]") {
    const std::vector<Word> ws{Word({1, 2, 3}, 3), Word({}, 3), Word({3, 3}, 3)};
    std::ostringstream out;
    write_words(out, ws);
    CHECK(out.str().rfind("k=3\n", 0) == 0);
    std::istringstream in(out.str());
    CHECK(read_words(in) == ws);

    std::istringstream bad("k=2\n1 3\n");
    CHECK_THROWS_AS(read_words(bad), invalid_input);
    std::istringstream no_header("1 2\n");
    CHECK_THROWS_AS(read_words(no_header), invalid_input);
}
