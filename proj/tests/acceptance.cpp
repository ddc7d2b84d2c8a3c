// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "twinlab/alternating/extrema.hpp"
#include "twinlab/alternating/formula.hpp"
#include "twinlab/alternating/patterns.hpp"
#include "twinlab/alternating/simulate.hpp"
#include "twinlab/perms/bruteforce.hpp"
#include "twinlab/perms/experiment.hpp"
#include "twinlab/perms/geometry.hpp"
#include "twinlab/words/experiment.hpp"
#include "twinlab/words/scan.hpp"
#include "twinlab/words/word.hpp"

using namespace twinlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// criterion 1
Outcome constant_in_range() {
    using namespace alternating;
    const auto arb = arbitrate_convention(13);
    if (!arb.winner) return {false, "no convention reaches 0.0989"};
    const auto gain = second_round_gain(13, *arb.winner);
    const bool ok = gain >= ExactRational(989, 10000) && gain < ExactRational(11, 100);
    return {ok, fmt("winner=%s gain=%s (%s)", std::string(to_string(*arb.winner)).c_str(),
                    gain.to_fraction_string().c_str(), gain.to_decimal(12).c_str())};
}

// criterion 2
Outcome dp_matches_bruteforce() {
    using namespace alternating;
    for (Convention c : {Convention::text, Convention::appendix}) {
        const auto dp = count_good_dp(9, c);
        const auto bf = count_good_bruteforce(9, c);
        for (std::uint32_t k = 3; k <= 9; ++k)
            for (std::uint32_t p1 = 1; p1 <= k; ++p1)
                for (bool x : {false, true})
                    if (dp.at(p1, k, x) != bf.at(p1, k, x))
                        return {false, fmt("%s: c(%u,%u,%d) dp=%llu bruteforce=%llu", std::string(to_string(c)).c_str(),
                                           p1, k, int(x), (unsigned long long)dp.at(p1, k, x),
                                           (unsigned long long)bf.at(p1, k, x))};
    }
    return {true, "k<=9, text and appendix, all c(p1,k,X) equal"};
}

// criterion 3: direct enumeration of the goodness conditions and the double sum over 7!
Outcome sixteen_over_315() {
    auto good = [](const std::vector<int>& p) {
        const std::size_t k = p.size();
        for (std::size_t i = 0; i + 2 < k; ++i)
            if ((p[i] < p[i + 1]) != (i % 2 == 0)) return false;
        const int a = p[k - 3], b = p[k - 2], c = p[k - 1];
        return (a < b && b < c) || (a > b && b > c);
    };
    auto choose = [](std::int64_t n, std::int64_t r) -> std::int64_t {
        if (r < 0 || r > n) return 0;
        std::int64_t out = 1;
        for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
        return out;
    };
    std::map<std::tuple<int, int, bool>, std::int64_t> c;
    for (int k = 3; k <= 4; ++k) {
        std::vector<int> p(static_cast<std::size_t>(k));
        std::iota(p.begin(), p.end(), 1);
        do {
            if (good(p)) ++c[{p[0], k, p[static_cast<std::size_t>(k) - 2] > p[0]}];
        } while (std::next_permutation(p.begin(), p.end()));
    }
    const std::int64_t denom = 5040;
    std::int64_t num = 0;
    for (int k1 = 3; k1 <= 4; ++k1)
        for (int k2 = 3; k2 <= 4; ++k2) {
            std::int64_t f = 1;
            for (int i = 2; i <= k1 + k2 - 1; ++i) f *= i;
            for (int p1 = 1; p1 <= k1; ++p1)
                for (int p2 = 1; p2 <= k2; ++p2)
                    num += 4 * choose(k1 - p1 + p2 - 1, k1 - p1) * choose(k2 - p2 + p1 - 1, k2 - p2) *
                           c[{p1, k1, true}] * c[{p2, k2, false}] * (denom / f);
        }
    const std::int64_t g = std::gcd(num, denom);
    const auto lib = alternating::second_round_probability(4, alternating::Convention::text);
    const bool ok = num / g == 16 && denom / g == 315 && lib == alternating::ExactRational(16, 315);
    return {ok, fmt("expansion=%lld/%lld library=%s", (long long)(num / g), (long long)(denom / g),
                    lib.to_fraction_string().c_str())};
}

// criterion 4
Outcome scanner_matches_bruteforce() {
    using namespace words;
    std::size_t checked = 0;
    for (std::size_t r : {2u, 3u})
        for (std::uint32_t bits = 0; bits < 1024; ++bits) {
            std::vector<words::Symbol> v(10);
            for (std::size_t i = 0; i < 10; ++i) v[i] = 1 + ((bits >> i) & 1);
            const Word w(v, 2);
            if (max_rpower_length(w, r) != brute_force_max_rpower(w, r))
                return {false, fmt("binary word %u, r=%zu", bits, r)};
            ++checked;
        }
    for (std::size_t r : {2u, 3u})
        for (std::uint64_t i = 0; i < 10000; ++i) {
            auto rng = harness::derive_stream(4000 + r, i);
            const auto w = random_word(30, 3, rng);
            if (max_rpower_length(w, r) != brute_force_max_rpower(w, r))
                return {false, fmt("ternary word %llu, r=%zu", (unsigned long long)i, r)};
            ++checked;
        }
    return {true, fmt("%zu words agree", checked)};
}

// criterion 5
Outcome m_tails() {
    const std::size_t n = 100000, trials = 2000;
    const auto s = words::mc_experiment_M(n, 2, 2, trials, 5);
    const double center = words::theory_center_M(n, 2, 2);
    std::string detail = fmt("center=%.3f mean=%.3f", center, s.mean);
    bool ok = std::abs(s.mean - 16.61) <= 3.0 && std::abs(center - 16.61) < 0.01;
    for (int t = 1; t <= 3; ++t) {
        double hits = 0;
        for (double v : s.values) hits += v >= center + t ? 1 : 0;
        const double p = hits / trials;
        const double bound = std::pow(2.0, -t) + 3.0 * std::sqrt(p * (1 - p) / trials);
        ok = ok && p <= bound;
        detail += fmt(" P(M>=c+%d)=%.4f<=%.4f", t, p, bound);
    }
    return {ok, detail};
}

// criterion 6
Outcome r_offset_stable() {
    double lo = 1e9, hi = -1e9;
    std::string detail;
    for (std::size_t n : {1000u, 10000u, 100000u, 1000000u}) {
        const auto s = words::mc_experiment_R(n, 2, 3, 500, 6);
        const double offset = s.mean - (std::log(double(n)) / (3 * std::log(2.0)) + 1.0);
        lo = std::min(lo, offset);
        hi = std::max(hi, offset);
        detail += fmt("n=%zu:%+.3f ", n, offset);
    }
    detail += fmt("range=%.3f", hi - lo);
    return {hi - lo < 0.5, detail};
}

// criterion 7
Outcome partition_soundness() {
    const auto params = perms::desk_params();
    const auto two = perms::mc_partition_success(2, {50, 100, 500}, 300, 7, params);
    const auto three = perms::mc_partition_success(3, {1000}, 100, 8, params);
    std::size_t runs = 0, invalid = 0;
    for (const auto* rows : {&two, &three})
        for (const auto& row : *rows) {
            runs += row.trials;
            invalid += row.invalid;
        }
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < two.size(); ++i) {
        const double se = std::hypot(two[i].standard_error(), two[i + 1].standard_error());
        monotone = monotone && two[i + 1].rate() >= two[i].rate() - 2 * se;
    }
    const bool ok = runs >= 1000 && invalid == 0 && two.back().rate() >= 0.9 && monotone;
    return {ok, fmt("runs=%zu violations=%zu k=2 rates r=50:%.3f r=100:%.3f r=500:%.3f; k=3 r=1000: %zu/%zu succeeded",
                    runs, invalid, two[0].rate(), two[1].rate(), two[2].rate(), three[0].successes, three[0].trials)};
}

// criterion 8
Outcome twin_fraction_grows() {
    const auto f2 = perms::tight_twin_fraction(2, 2, false, 0, 0);
    const auto f3 = perms::tight_twin_fraction(3, 2, false, 0, 0);
    const auto f4 = perms::tight_twin_fraction(4, 2, false, 100000, 8);
    const double se4 = std::sqrt(f4.fraction() * (1 - f4.fraction()) / double(f4.total));
    const bool ok = f3.fraction() > f2.fraction() && f4.fraction() - 3 * se4 > f3.fraction();
    return {ok, fmt("r=2:%.4f r=3:%.4f r=4:%.4f(+-%.4f, %llu samples)", f2.fraction(), f3.fraction(), f4.fraction(),
                    se4, (unsigned long long)f4.total)};
}

// criterion 9
Outcome extrema_ratio() {
    const auto s = alternating::mc_extrema(10000, 100, 9);
    const double ratio = s.mean / 10000.0;
    return {ratio >= 0.660 && ratio <= 0.673, fmt("mean/n=%.5f", ratio)};
}

// criterion 10
Outcome two_round_and_slope() {
    const auto s = alternating::mc_two_round(100000, 50, 10);
    const double ratio = s.mean / 100000.0;
    const double lo = 1.0 / 3 + 0.095, hi = 1.0 / 3 + 0.105;
    const auto est = alternating::mc_sloped_same_side(1000000, 4, 10);
    const double trunc = alternating::second_round_probability(13, alternating::Convention::text).to_double();
    const double se = est.per_trial_joint.standard_error();
    const bool ok = ratio >= lo && ratio <= hi && est.joint > trunc - 3 * se;
    return {ok, fmt("min/n=%.5f in [%.5f,%.5f]; joint=%.5f vs %.5f-3*%.5f", ratio, lo, hi, est.joint, trunc, se)};
}

// criterion 11
Outcome two_round_spread() {
    const auto s = alternating::mc_two_round(10000, 200, 11);
    return {s.stddev <= 10 * std::sqrt(10000.0), fmt("sd=%.2f bound=%.1f", s.stddev, 10 * std::sqrt(10000.0))};
}

// criterion 12
Outcome reproducible() {
    auto words_doc = [](unsigned threads) {
        words::ExperimentOptions opt;
        opt.threads = threads;
        return words::report_M(20000, 2, 2, 200, 12, opt).dump();
    };
    auto perms_doc = [](unsigned threads) {
        std::ostringstream os;
        for (const auto& row : perms::mc_partition_success(2, {100, 500}, 24, 12, perms::desk_params(), threads)) {
            os << row.r << ' ' << row.successes << ' ' << row.invalid;
            for (const auto& [label, count] : row.failures) os << ' ' << label << '=' << count;
            os << '\n';
        }
        return os.str();
    };
    auto alt_doc = [](unsigned threads) {
        const auto s = alternating::mc_two_round(5000, 40, 12, threads);
        const auto e = alternating::mc_sloped_same_side(5000, 40, 12, threads);
        std::ostringstream os;
        os.precision(17);
        for (double v : s.values) os << v << ',';
        os << e.same_side << ' ' << e.window << ' ' << e.joint;
        return os.str();
    };
    const auto w = words_doc(1);
    const auto p = perms_doc(1);
    const auto a = alt_doc(1);
    const bool ok = w == words_doc(1) && w == words_doc(8) && p == perms_doc(1) && p == perms_doc(8) &&
                    a == alt_doc(1) && a == alt_doc(8);
    return {ok, fmt("words %zu bytes, perms %zu bytes, alt %zu bytes; threads 1 vs 8", w.size(), p.size(), a.size())};
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> checks{
        constant_in_range, dp_matches_bruteforce, sixteen_over_315, scanner_matches_bruteforce,
        m_tails,           r_offset_stable,       partition_soundness, twin_fraction_grows,
        extrema_ratio,     two_round_and_slope,   two_round_spread,    reproducible};
    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = checks[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu: %s  %s  [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures;
}
