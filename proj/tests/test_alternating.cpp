#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "twinlab/alternating/extrema.hpp"
#include "twinlab/alternating/formula.hpp"
#include "twinlab/alternating/patterns.hpp"
#include "twinlab/alternating/rational.hpp"
#include "twinlab/alternating/simulate.hpp"

using namespace twinlab;
using namespace twinlab::alternating;
using perms::Permutation;
using perms::Value;
using Catch::Approx;

namespace {

// The displayed conditions, written out independently of check_good:
// p1 < p2 > p3 < ... up to p_{k-1}, then p_{k-2}, p_{k-1}, p_k monotone.
bool displayed_good(const std::vector<int>& p) {
    const std::size_t k = p.size();
    for (std::size_t i = 0; i + 1 < k - 1; ++i) {
        const bool want_up = i % 2 == 0;
        if ((p[i] < p[i + 1]) != want_up) return false;
    }
    const int a = p[k - 3], b = p[k - 2], c = p[k - 1];
    return (a < b && b < c) || (a > b && b > c);
}

std::int64_t choose(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.empty();
}

bool alternating_at(const Permutation& p, const std::vector<std::size_t>& pos) {
    std::vector<Value> v;
    for (auto i : pos) v.push_back(p[i]);
    return std::is_sorted(pos.begin(), pos.end()) && is_alternating<Value>(v);
}

}  // namespace

TEST_CASE("count_extrema", "[alternating][extrema]") {
    for (std::size_t n = 2; n <= 8; ++n) CHECK(count_extrema(Permutation::identity(n)) == 2);
    CHECK(count_extrema(Permutation::identity(1)) == 1);
    CHECK(count_extrema(Permutation({2, 1, 3})) == 3);
    CHECK(count_extrema(Permutation({1, 3, 2, 4})) == 4);
}

TEST_CASE("sloped positions", "[alternating][extrema]") {
    CHECK(sloped_positions(Permutation::identity(5)) == std::vector<std::size_t>{1, 2, 3});
    CHECK(sloped_positions(Permutation({1, 3, 2, 4})).empty());
    CHECK(sloped_positions(Permutation({2, 1})).empty());
}

TEST_CASE("interior positions split into sloped and extremal", "[alternating][extrema]") {
    for (std::size_t n = 3; n <= 8; ++n) {
        std::vector<Value> v(n);
        std::iota(v.begin(), v.end(), Value{1});
        do {
            const Permutation p(v);
            REQUIRE(sloped_positions(p).size() + (count_extrema(p) - 2) == n - 2);
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("mean extrema close to 2n/3", "[alternating][extrema]") {
    const auto s = mc_extrema(10000, 100, 17);
    CHECK(std::abs(s.mean - 20000.0 / 3.0) <= 0.01 * 20000.0 / 3.0);
    CHECK(mc_extrema(10000, 8, 3).values == mc_extrema(10000, 8, 3, 4).values);
}

TEST_CASE("check_good examples", "[alternating][patterns]") {
    std::vector<int> p{1, 2, 3};
    std::size_t good = 0;
    do {
        if (p[0] < p[1] && check_good<int>(p, Convention::text)) {
            ++good;
            CHECK(p == std::vector<int>{1, 2, 3});
        }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(good == 1);

    const std::vector<int> q{2, 4, 3, 1};
    CHECK(check_good<int>(q, Convention::text));
    CHECK_FALSE(check_good<int>(q, Convention::appendix));
    CHECK(parse_convention("text") == Convention::text);
    CHECK_THROWS_AS(parse_convention("other"), invalid_parameter);
}

TEST_CASE("text convention matches the displayed conditions", "[alternating][patterns]") {
    for (std::size_t k = 3; k <= 6; ++k) {
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 1);
        do {
            REQUIRE(check_good<int>(p, Convention::text) == displayed_good(p));
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("small count tables", "[alternating][patterns]") {
    const auto t = count_good_bruteforce(4, Convention::text);
    CHECK(t.at(1, 3, true) == 1);
    CHECK(t.total(3) == 1);
    CHECK(t.at(1, 4, true) == 1);
    CHECK(t.at(2, 4, true) == 1);
    CHECK(t.at(3, 4, false) == 1);
    CHECK(t.total(4) == 3);
    CHECK(t.to_csv().rfind("p1,k,x,count\n1,3,false,0\n1,3,true,1\n", 0) == 0);
    CHECK_THROWS_AS(count_good_bruteforce(11, Convention::text), invalid_parameter);
    CHECK_THROWS_AS(count_good_dp(2, Convention::text), invalid_parameter);
}

TEST_CASE("dp equals brute force for k <= 9", "[alternating][patterns][oracle]") {
    for (Convention c : {Convention::text, Convention::appendix}) {
        const auto bf = count_good_bruteforce(9, c);
        const auto dp = count_good_dp(9, c);
        CHECK(bf.same_counts(dp));
        for (std::uint32_t k = 3; k <= 9; ++k)
            for (std::uint32_t p1 = 1; p1 <= k; ++p1)
                for (bool x : {false, true}) REQUIRE(bf.at(p1, k, x) == dp.at(p1, k, x));
    }
}

TEST_CASE("good patterns are a subset of up-down starts", "[alternating][patterns]") {
    const auto dp = count_good_dp(12, Convention::text);
    // up-down permutations (Euler zigzag numbers) bound the alternating prefix count from above
    const std::vector<std::uint64_t> factorial{1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800,
                                               479001600};
    for (std::uint32_t k = 3; k <= 12; ++k) CHECK(dp.total(k) <= factorial[k] / 2);
}

TEST_CASE("second_round_probability at max_k = 4 is 16/315", "[alternating][formula]") {
    // Independent expansion: enumerate S_3 and S_4, tabulate c(p1, k, X) with the
    // displayed conditions, and add every term over the common denominator 7!.
    std::map<std::tuple<int, int, bool>, std::int64_t> c;
    for (int k = 3; k <= 4; ++k) {
        std::vector<int> p(static_cast<std::size_t>(k));
        std::iota(p.begin(), p.end(), 1);
        do {
            if (p[0] < p[1] && displayed_good(p)) ++c[{p[0], k, p[static_cast<std::size_t>(k) - 2] > p[0]}];
        } while (std::next_permutation(p.begin(), p.end()));
    }
    const std::int64_t denom = 5040;
    std::int64_t num = 0;
    for (int k1 = 3; k1 <= 4; ++k1)
        for (int k2 = 3; k2 <= 4; ++k2) {
            std::int64_t f = 1;
            for (int i = 2; i <= k1 + k2 - 1; ++i) f *= i;
            for (int p1 = 1; p1 <= k1; ++p1)
                for (int p2 = 1; p2 <= k2; ++p2) {
                    const std::int64_t term = 2 * choose(k1 - p1 + p2 - 1, k1 - p1) *
                                              choose(k2 - p2 + p1 - 1, k2 - p2) * 2 * c[{p1, k1, true}] *
                                              c[{p2, k2, false}];
                    num += term * (denom / f);
                }
        }
    const std::int64_t g = std::gcd(num, denom);
    REQUIRE(num / g == 16);
    REQUIRE(denom / g == 315);

    const auto value = second_round_probability(4, Convention::text);
    CHECK(value == ExactRational(16, 315));
    CHECK(value.to_fraction_string() == "16/315");
}

TEST_CASE("truncated sums", "[alternating][formula]") {
    CHECK(second_round_probability(3, Convention::text) == ExactRational(0));
    CHECK(lower_bound_constant(3, Convention::text) == ExactRational(1, 3));
    ExactRational prev;
    for (std::uint32_t k = 3; k <= 13; ++k) {
        const auto v = second_round_probability(k, Convention::text);
        REQUIRE(v >= prev);
        REQUIRE(std::abs(v.to_double() - std::stod(v.to_decimal(18))) < 1e-12);
        prev = v;
    }
    const auto gain = second_round_gain(13, Convention::text);
    CHECK(gain >= ExactRational(989, 10000));
    CHECK(gain < ExactRational(11, 100));
    CHECK(lower_bound_constant(13, Convention::text) >= ExactRational(1, 3) + ExactRational(989, 10000));
    CHECK(gain * ExactRational(2) == prev);
    CHECK_THROWS_AS(second_round_probability(2, Convention::text), invalid_parameter);
    CHECK_THROWS_AS(second_round_probability(count_good_dp(5, Convention::text), 6), invalid_parameter);
}

TEST_CASE("convention arbitration", "[alternating][formula]") {
    const auto arb = arbitrate_convention(13);
    REQUIRE(arb.winner.has_value());
    CHECK(*arb.winner == Convention::text);
    REQUIRE(arb.results.size() == 2);
    CHECK(arb.results[0].reaches_target);
    // the literal appendix indexing asks p_{k-2} to be a turning point and
    // p_{k-3}, p_{k-2}, p_{k-1} to be monotone at once, so nothing passes for k >= 4
    CHECK(arb.results[1].probability == ExactRational(0));
    CHECK(count_good_dp(13, Convention::appendix).total(13) == 0);
}

TEST_CASE("exact rational", "[alternating][rational]") {
    const ExactRational a(6, 8);
    CHECK(a.to_fraction_string() == "3/4");
    CHECK(ExactRational(4, -2).to_fraction_string() == "-2");
    CHECK(ExactRational(1, 3).to_decimal(5) == "0.33333");
    CHECK(ExactRational(2, 3).to_decimal(4) == "0.6667");
    CHECK(ExactRational(-1, 8).to_decimal(2) == "-0.13");
    CHECK_THROWS_AS(ExactRational(1, 0), invalid_parameter);
    CHECK_THROWS_AS(a / ExactRational(0), invalid_parameter);
    FactorialTable f;
    CHECK(f(25).str() == "15511210043330985984000000");
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("two-round procedure", "[alternating][simulate]") {
    CHECK_THROWS_AS(two_round_procedure(Permutation::identity(3)), invalid_parameter);
    auto rng = harness::derive_stream(4, 0);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 4 + rng.below(200);
        const auto p = perms::random_permutation(n, rng);
        const auto res = two_round_procedure(p);
        REQUIRE(alternating_at(p, res.a));
        REQUIRE(alternating_at(p, res.b));
        REQUIRE(disjoint(res.a, res.b));
        REQUIRE(res.min_size() == std::min(res.size_a(), res.size_b()));
    }
    const auto a = simulate_two_round_procedure(1000, 9);
    const auto b = simulate_two_round_procedure(1000, 9);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
}

TEST_CASE("junction drops at most two positions", "[alternating][simulate]") {
    auto rng = harness::derive_stream(6, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = perms::random_permutation(50 + rng.below(50), rng);
        const auto pi = p.values();
        const std::size_t mid = pi.size() / 2;
        const auto left = alternating::detail::two_rounds(pi, 0, mid);
        const auto right = alternating::detail::two_rounds(pi, mid, pi.size());
        const auto res = two_round_procedure(p);
        REQUIRE(res.size_a() + 2 >= left.first.size() + right.second.size());
        REQUIRE(res.size_b() + 2 >= left.second.size() + right.first.size());
    }
}

TEST_CASE("two-round concentration at moderate n", "[alternating][simulate]") {
    const auto s = mc_two_round(20000, 20, 3);
    CHECK(s.mean / 20000.0 > 1.0 / 3.0 + 0.08);
    CHECK(s.mean / 20000.0 < 1.0 / 3.0 + 0.12);
    CHECK(mc_two_round(2000, 16, 5).values == mc_two_round(2000, 16, 5, 3).values);
}

TEST_CASE("sloped same-side estimate", "[alternating][simulate]") {
    const std::vector<Value> pi{1, 2, 3, 7, 6, 5, 4, 8};
    // sloped positions 1, 2, 4, 5; value 6 at position 4 has both neighbours (3 and 5) below it
    const auto c = sloped_same_side_counts(pi);
    CHECK(c.eligible == 2);
    CHECK(c.same_side == 1);
    CHECK(c.window == 3);

    const auto e = mc_sloped_same_side(100000, 4, 12);
    CHECK(e.conditional == Approx(0.605).margin(0.02));
    CHECK(e.joint == Approx(0.2017).margin(0.01));
    CHECK(e.gain == Approx(e.joint / 2));
    const auto f = mc_sloped_same_side(100000, 4, 12, 4);
    CHECK(e.same_side == f.same_side);
    CHECK(e.window == f.window);
    CHECK_THROWS_AS(mc_sloped_same_side(9, 1, 1), invalid_parameter);
}
