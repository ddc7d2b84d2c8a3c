// twinlab command-line driver. Every subcommand parses flags, calls into the
// header library and writes one document (JSON or CSV). Numerical work lives
// in the library; this file only wires parameters to it.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twinlab/twinlab.hpp"

namespace {

using json = nlohmann::json;
using namespace twinlab;

enum Exit { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

struct Common {
    std::uint64_t seed = 1;
    std::size_t trials = 1;
    std::string out;
    std::string format = "json";
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& c, std::size_t default_trials) {
    c.trials = default_trials;
    cmd->add_option("--seed", c.seed, "master seed")->capture_default_str();
    cmd->add_option("--trials", c.trials, "number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out, "write the document here instead of stdout");
    cmd->add_option("--format", c.format, "output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", c.threads, "worker threads (results do not depend on it)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

// The document goes to --out (summary line on stdout) or to stdout (summary on stderr).
void emit(const Common& c, const json& doc, const std::string& csv, const std::string& line) {
    const std::string body = c.format == "csv" ? csv : doc.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << body;
        std::cerr << line << '\n';
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw invalid_input("cannot open '" + c.out + "' for writing");
    f << body;
    std::cout << line << '\n';
}

json base_doc(const std::string& experiment, std::uint64_t seed) {
    return {{"experiment", experiment}, {"tool_version", tool_version}, {"seed", seed}};
}

std::string csv_line(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto& c : cells) out += (out.empty() ? "" : ",") + c;
    return out + "\n";
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string verdict_line(const harness::ExperimentReport& report) {
    std::string s;
    for (const auto& [name, v] : report.verdicts()) s += " " + name + "=" + (v.pass ? "pass" : "FAIL");
    return s;
}

json exact_json(const alternating::ExactRational& v) {
    return {{"fraction", v.to_fraction_string()}, {"decimal", v.to_decimal(12)}};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// ---------------------------------------------------------------- words

struct WordsScan {
    Common c;
    std::vector<std::size_t> random;  // n k
    std::string input;
    std::size_t r = 2;
    std::optional<std::size_t> m;
};

int run_words_scan(const WordsScan& o) {
    std::vector<words::Word> list;
    json params{{"r", o.r}};
    if (!o.input.empty()) {
        std::istringstream in(read_file(o.input));
        list = words::read_words(in);
        params["input"] = o.input;
    } else {
        if (o.random.size() != 2) throw invalid_parameter("words scan: give --random <n> <k> or --input <file>");
        const auto n = o.random[0];
        const auto k = static_cast<std::uint32_t>(o.random[1]);
        params["n"] = n;
        params["k"] = k;
        params["trials"] = o.c.trials;
        for (std::size_t i = 0; i < o.c.trials; ++i) {
            auto rng = harness::derive_stream(o.c.seed, i);
            list.push_back(words::random_word(n, k, rng));
        }
    }
    if (o.m) params["m"] = *o.m;
    json rows = json::array();
    std::string csv = o.m ? csv_line({"word", "n", "k", "M", "start", "R"}) : csv_line({"word", "n", "k", "M", "start"});
    std::string line;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& w = list[i];
        const auto wit = words::max_rpower(w, o.r);
        json row{{"word", i}, {"n", w.size()}, {"k", w.alphabet_size()}, {"M", wit.length}, {"start", wit.start}};
        std::string cells = std::to_string(i) + "," + std::to_string(w.size()) + "," +
                            std::to_string(w.alphabet_size()) + "," + std::to_string(wit.length) + "," +
                            std::to_string(wit.start);
        if (o.m) {
            const auto R = words::max_power_of_length(w, *o.m);
            row["R"] = R;
            cells += "," + std::to_string(R);
        }
        rows.push_back(row);
        csv += cells + "\n";
        if (i == 0)
            line = "M=" + std::to_string(wit.length) + " witness start=" + std::to_string(wit.start) +
                   " m=" + std::to_string(wit.length) + (o.m ? " R=" + std::to_string(row["R"].get<std::size_t>()) : "");
    }
    if (list.size() > 1) line += " (first of " + std::to_string(list.size()) + " words)";
    auto doc = base_doc("words.scan", o.c.seed);
    doc["params"] = params;
    doc["results"] = rows;
    emit(o.c, doc, csv, line);
    return exit_ok;
}

struct WordsExperiment {
    Common c;
    std::size_t n = 100000;
    std::uint32_t k = 2;
    std::size_t order = 2;  // r for tails, m for rstat
    std::vector<double> offsets{1.0, 2.0, 3.0};
    double c_lower = words::default_c_lower;
    double window = 3.0;
};

int run_words_report(const WordsExperiment& o, bool tails) {
    words::ExperimentOptions opt;
    opt.threads = o.c.threads;
    opt.offsets = o.offsets;
    opt.c_lower = o.c_lower;
    opt.mean_window = o.window;
    const auto report = tails ? words::report_M(o.n, o.k, o.order, o.c.trials, o.c.seed, opt)
                              : words::report_R(o.n, o.k, o.order, o.c.trials, o.c.seed, opt);
    const auto& s = report.summaries().begin()->second;
    const std::string stat = report.summaries().begin()->first;
    const double center = report.theory_values().at("center").get<double>();
    emit(o.c, report.to_json(), harness::samples_csv(s),
         stat + " mean=" + num(s.mean) + " center=" + num(center) + verdict_line(report));
    return report.all_pass() ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- perms

struct PermsGeometryFlags {
    std::string preset = "default";
    std::optional<double> c_t;
    std::optional<double> c_w;

    [[nodiscard]] perms::GeometryParams params() const {
        auto p = preset == "desk" ? perms::desk_params() : perms::GeometryParams{};
        if (c_t) p.c_t = *c_t;
        if (c_w) p.c_w = *c_w;
        return p;
    }
};

void add_geometry_flags(CLI::App* cmd, PermsGeometryFlags& g) {
    cmd->add_option("--preset", g.preset, "claim cutoffs and constants")
        ->capture_default_str()
        ->check(CLI::IsMember({"default", "desk"}));
    cmd->add_option("--c-t", g.c_t, "grid constant: t = round(c_t n^(4/13))");
    cmd->add_option("--c-w", g.c_w, "strip constant: w = round(c_w n^(6/13))");
}

json params_json(const perms::GeometryParams& p) {
    return {{"c_t", p.c_t},
            {"c_w", p.c_w},
            {"tol_cell_count", p.claims.cell_count},
            {"tol_triangle_count", p.claims.triangle_count},
            {"tol_strip_cell", p.claims.strip_cell},
            {"require_empty_corners", p.claims.require_empty_corners}};
}

struct PermsPartition {
    Common c;
    PermsGeometryFlags geo;
    std::size_t n = 1000;
    std::size_t k = 2;
    std::string points;
    std::string emit_svg;
};

int run_perms_partition(const PermsPartition& o) {
    const auto gp = o.geo.params();
    json params{{"k", o.k}, {"preset", o.geo.preset}, {"geometry", params_json(gp)}};
    std::vector<perms::PointSet> sets;
    if (!o.points.empty()) {
        std::istringstream in(read_file(o.points));
        sets.push_back(perms::read_points_csv(in));
        params["points"] = o.points;
        params["n"] = sets.back().size();
    } else {
        params["n"] = o.n;
        params["trials"] = o.c.trials;
        for (std::size_t i = 0; i < o.c.trials; ++i) {
            auto rng = harness::derive_stream(o.c.seed, i);
            sets.push_back(perms::random_pointset(o.n, rng));
        }
    }
    json runs = json::array();
    std::string csv = csv_line({"trial", "class", "index", "x", "y"});
    std::size_t failures = 0;
    std::string first_line;
    for (std::size_t t = 0; t < sets.size(); ++t) {
        const auto& ps = sets[t];
        const auto result = perms::partition_prefix(ps, o.k, gp);
        json run{{"trial", t}, {"ok", result.ok()}};
        std::optional<perms::Geometry> geometry;
        const std::size_t keep = ps.size() - ps.size() % o.k;
        if (o.k >= 2) {
            try {
                geometry = perms::plan_geometry(keep, o.k, gp);
                run["geometry"] = {{"n", geometry->n}, {"t", geometry->t}, {"w", geometry->w},
                                   {"cell_side", geometry->cell_side}};
            } catch (const perms::geometry_infeasible&) {
            }
        }
        if (keep != ps.size()) run["dropped"] = ps.size() - keep;
        std::string line;
        if (result.ok()) {
            const auto& part = *result.partition;
            if (keep == ps.size()) run["verified"] = perms::verify_partition(ps, part, o.k);
            run["classes"] = perms::partition_json(part);
            for (std::size_t ci = 0; ci < part.classes.size(); ++ci)
                for (auto i : part.classes[ci])
                    csv += std::to_string(t) + "," + std::to_string(ci) + "," + std::to_string(i) + "," +
                           num(ps[i].x) + "," + num(ps[i].y) + "\n";
            line = "partition: " + std::to_string(part.classes.size()) + " ascending classes of size " +
                   std::to_string(o.k);
        } else {
            ++failures;
            run["failure"] = perms::failure_json(*result.failure);
            line = "no partition: " + result.failure->message();
        }
        if (t == 0) {
            first_line = line;
            if (!o.emit_svg.empty()) {
                if (!geometry) throw invalid_input("--emit-svg: no geometry to draw (" + line + ")");
                // the drawing uses the point set rescaled like partition_prefix does
                std::ofstream svg(o.emit_svg, std::ios::binary);
                if (!svg) throw invalid_input("cannot open '" + o.emit_svg + "' for writing");
                svg << perms::partition_svg(ps, *geometry, result.ok() && keep == ps.size() ? &*result.partition
                                                                                          : nullptr);
            }
        }
        runs.push_back(run);
    }
    auto doc = base_doc("perms.partition", o.c.seed);
    doc["params"] = params;
    doc["runs"] = runs;
    doc["failures"] = failures;
    if (sets.size() > 1)
        first_line = std::to_string(sets.size() - failures) + "/" + std::to_string(sets.size()) +
                     " point sets partitioned; first: " + first_line;
    emit(o.c, doc, csv, first_line);
    return failures == 0 ? exit_ok : exit_failure;
}

struct PermsProb {
    Common c;
    PermsGeometryFlags geo;
    std::size_t k = 2;
    std::vector<std::size_t> r{50, 100, 500};
};

int run_perms_prob(const PermsProb& o) {
    const auto gp = o.geo.params();
    const auto rows = perms::mc_partition_success(o.k, o.r, o.c.trials, o.c.seed, gp, o.c.threads);
    json out = json::array();
    std::string csv = csv_line({"k", "r", "trials", "successes", "invalid", "rate", "stderr"});
    std::string line = "k=" + std::to_string(o.k);
    std::size_t invalid = 0;
    for (const auto& row : rows) {
        out.push_back({{"k", row.k},
                       {"r", row.r},
                       {"trials", row.trials},
                       {"successes", row.successes},
                       {"invalid", row.invalid},
                       {"rate", row.rate()},
                       {"stderr", row.standard_error()},
                       {"failures", row.failures}});
        csv += csv_line({std::to_string(row.k), std::to_string(row.r), std::to_string(row.trials),
                         std::to_string(row.successes), std::to_string(row.invalid), num(row.rate()),
                         num(row.standard_error())});
        line += " r=" + std::to_string(row.r) + ":" + num(row.rate());
        invalid += row.invalid;
    }
    auto doc = base_doc("perms.prob", o.c.seed);
    doc["params"] = {{"k", o.k}, {"r", o.r}, {"trials", o.c.trials}, {"preset", o.geo.preset},
                     {"geometry", params_json(gp)}};
    doc["rows"] = out;
    emit(o.c, doc, csv, line + (invalid ? " INVALID PARTITIONS: " + std::to_string(invalid) : ""));
    return invalid == 0 ? exit_ok : exit_failure;
}

struct PermsOracle {
    Common c;
    std::vector<perms::Value> perm;
    std::size_t k = 2;
    std::size_t r = 2;
    bool similar = false;
    bool exhaustive = false;
};

int run_perms_oracle(const PermsOracle& o) {
    const bool increasing = !o.similar;
    auto doc = base_doc("perms.oracle", o.c.seed);
    if (!o.perm.empty()) {
        const perms::Permutation p(o.perm);
        const bool found = perms::exists_partition_bruteforce(p, o.k, increasing);
        doc["params"] = {{"perm", o.perm}, {"k", o.k}, {"require_increasing", increasing}};
        doc["exists"] = found;
        emit(o.c, doc, csv_line({"k", "require_increasing", "exists"}) +
                           csv_line({std::to_string(o.k), increasing ? "true" : "false", found ? "true" : "false"}),
             std::string(found ? "partition exists" : "no partition") + " into " +
                 std::to_string(p.size() / o.k) + " " + (increasing ? "increasing" : "similar") +
                 " subsequences of length " + std::to_string(o.k));
        return exit_ok;
    }
    const auto f = perms::tight_twin_fraction(o.r, o.k, increasing, o.exhaustive ? 0 : o.c.trials, o.c.seed,
                                              o.c.threads);
    doc["params"] = {{"r", o.r}, {"k", o.k}, {"require_increasing", increasing}, {"exhaustive", f.exhaustive},
                     {"trials", o.exhaustive ? 0 : o.c.trials}};
    doc["hits"] = f.hits;
    doc["total"] = f.total;
    doc["fraction"] = f.fraction();
    emit(o.c, doc,
         csv_line({"r", "k", "hits", "total", "fraction"}) +
             csv_line({std::to_string(f.r), std::to_string(f.k), std::to_string(f.hits), std::to_string(f.total),
                       num(f.fraction())}),
         "fraction=" + num(f.fraction()) + " (" + std::to_string(f.hits) + "/" + std::to_string(f.total) + ")");
    return exit_ok;
}

// ---------------------------------------------------------------- alternating

struct AltCounts {
    Common c;
    std::uint32_t max_k = 9;
    std::string convention = "text";
    std::string method = "dp";
};

int run_alt_counts(const AltCounts& o) {
    const auto conv = alternating::parse_convention(o.convention);
    const auto table = o.method == "bruteforce" ? alternating::count_good_bruteforce(o.max_k, conv)
                                                : alternating::count_good_dp(o.max_k, conv);
    json counts = json::array();
    for (const auto& [key, n] : table.counts)
        counts.push_back({{"p1", key.p1}, {"k", key.k}, {"x", key.x}, {"count", n}});
    json totals = json::object();
    for (std::uint32_t k = 3; k <= o.max_k; ++k) totals[std::to_string(k)] = table.total(k);
    auto doc = base_doc("alt.counts", o.c.seed);
    doc["params"] = {{"max_k", o.max_k}, {"convention", o.convention}, {"method", o.method}};
    doc["counts"] = counts;
    doc["totals"] = totals;
    emit(o.c, doc, table.to_csv(),
         "good patterns up to k=" + std::to_string(o.max_k) + " (" + o.convention +
             "): total at k=" + std::to_string(o.max_k) + " is " + std::to_string(table.total(o.max_k)));
    return exit_ok;
}

struct AltConstant {
    Common c;
    std::uint32_t max_k = 13;
    std::string convention = "auto";
    std::string target = "989/10000";
};

alternating::ExactRational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return {alternating::BigInt(s), alternating::BigInt(1)};
        return {alternating::BigInt(s.substr(0, slash)), alternating::BigInt(s.substr(slash + 1))};
    } catch (const std::runtime_error&) {
        throw invalid_parameter("malformed rational '" + s + "' (expected num/den)");
    }
}

int run_alt_constant(const AltConstant& o) {
    using alternating::Convention;
    const auto target = parse_rational(o.target);
    auto doc = base_doc("alt.constant", o.c.seed);
    doc["params"] = {{"max_k", o.max_k}, {"convention", o.convention}, {"target", target.to_fraction_string()}};
    std::vector<alternating::ConventionResult> results;
    std::optional<Convention> chosen;
    if (o.convention == "auto") {
        auto arb = alternating::arbitrate_convention(o.max_k, target);
        results = std::move(arb.results);
        chosen = arb.winner;
    } else {
        const auto conv = alternating::parse_convention(o.convention);
        alternating::ConventionResult r{conv, alternating::second_round_probability(o.max_k, conv), {}, false};
        r.gain = r.probability / alternating::ExactRational(2);
        r.reaches_target = r.gain >= target;
        if (r.reaches_target) chosen = conv;
        results.push_back(std::move(r));
    }
    json per = json::object();
    std::string csv = csv_line({"convention", "probability", "probability_decimal", "gain", "gain_decimal",
                                "lower_bound_constant", "reaches_target"});
    for (const auto& r : results) {
        const auto lb = alternating::ExactRational(1, 3) + r.gain;
        per[std::string(to_string(r.convention))] = {{"probability", exact_json(r.probability)},
                                                     {"gain", exact_json(r.gain)},
                                                     {"lower_bound_constant", exact_json(lb)},
                                                     {"reaches_target", r.reaches_target}};
        csv += csv_line({std::string(to_string(r.convention)), r.probability.to_fraction_string(),
                         r.probability.to_decimal(12), r.gain.to_fraction_string(), r.gain.to_decimal(12),
                         lb.to_decimal(12), r.reaches_target ? "true" : "false"});
    }
    doc["conventions"] = per;
    doc["winning_convention"] = chosen ? json(std::string(to_string(*chosen))) : json(nullptr);
    std::string line;
    if (chosen) {
        const auto& r = *std::find_if(results.begin(), results.end(),
                                      [&](const auto& x) { return x.convention == *chosen; });
        doc["constant"] = exact_json(r.gain);
        line = r.gain.to_fraction_string() + " = " + r.gain.to_decimal(12) + " (convention " +
               std::string(to_string(*chosen)) + ")";
    } else {
        doc["constant"] = nullptr;
        line = "no convention reaches " + target.to_decimal(4) + " at max_k=" + std::to_string(o.max_k);
    }
    emit(o.c, doc, csv, line);
    return chosen ? exit_ok : exit_failure;
}

struct AltSimulate {
    Common c;
    std::size_t n = 100000;
    std::string statistic = "two-round";
};

int run_alt_simulate(const AltSimulate& o) {
    const double n = static_cast<double>(o.n);
    harness::ExperimentReport report("alt.simulate", o.c.seed);
    report.param("n", o.n).param("trials", o.c.trials).param("statistic", o.statistic);
    std::string line;
    if (o.statistic == "extrema") {
        const auto s = alternating::mc_extrema(o.n, o.c.trials, o.c.seed, o.c.threads);
        const double expect = 2.0 * n / 3.0;
        report.summary("extrema", s).theory("two_thirds_n", expect);
        const double dev = std::abs(s.mean - expect);
        report.verdict("mean_within_1pct", {dev <= 0.01 * expect, 0.01 * expect - dev, "extrema", "two_thirds_n"});
        line = "extrema mean/n=" + num(s.mean / n);
    } else {
        const auto s = alternating::mc_two_round(o.n, o.c.trials, o.c.seed, o.c.threads);
        const double lo = (1.0 / 3.0 + 0.095) * n;
        const double hi = (1.0 / 3.0 + 0.105) * n;
        report.summary("min_size", s).theory("window_low", lo).theory("window_high", hi);
        report.theory("sd_bound", 10.0 * std::sqrt(n));
        report.verdict("mean_above_low", {s.mean >= lo, s.mean - lo, "min_size", "window_low"});
        report.verdict("mean_below_high", {s.mean <= hi, hi - s.mean, "min_size", "window_high"});
        if (s.trials > 1)
            report.verdict("sd_within_bound",
                           {s.stddev <= 10.0 * std::sqrt(n), 10.0 * std::sqrt(n) - s.stddev, "min_size", "sd_bound"});
        line = "min(|A|,|B|) mean/n=" + num(s.mean / n) + " sd=" + num(s.stddev);
    }
    const auto& s = report.summaries().begin()->second;
    emit(o.c, report.to_json(), harness::samples_csv(s), line + verdict_line(report));
    return report.all_pass() ? exit_ok : exit_failure;
}

struct AltSlope {
    Common c;
    std::size_t n = 1000000;
    std::uint32_t max_k = 13;
    std::string convention = "text";
};

int run_alt_slope(const AltSlope& o) {
    const auto conv = alternating::parse_convention(o.convention);
    const auto est = alternating::mc_sloped_same_side(o.n, o.c.trials, o.c.seed, o.c.threads);
    const auto truncation = alternating::second_round_probability(o.max_k, conv);
    harness::ExperimentReport report("alt.slope", o.c.seed);
    report.param("n", o.n).param("trials", o.c.trials).param("max_k", o.max_k).param("convention", o.convention);
    report.summary("joint", est.per_trial_joint);
    report.theory("truncated_probability", truncation.to_double());
    report.theory("truncated_probability_fraction", truncation.to_fraction_string());
    report.theory("conditional", est.conditional);
    report.theory("joint", est.joint);
    report.theory("gain", est.gain);
    report.theory("eligible", est.eligible);
    report.theory("same_side", est.same_side);
    report.theory("window", est.window);
    // pooled ratio with a per-trial standard error; one trial has no spread estimate, so the bound is the point value
    const double se = est.per_trial_joint.standard_error();
    const double margin = est.joint - (truncation.to_double() - 3.0 * se);
    report.verdict("exceeds_truncation", {margin >= 0.0, margin, "joint", "truncated_probability"});
    emit(o.c, report.to_json(), harness::samples_csv(est.per_trial_joint),
         "joint=" + num(est.joint) + " conditional=" + num(est.conditional) + " gain=" + num(est.gain) +
             " truncation=" + truncation.to_decimal(6) + verdict_line(report));
    return report.all_pass() ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twinlab: twins in words, permutations and alternating subsequences"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    auto* words_cmd = app.add_subcommand("words", "maximum powers in random words")->require_subcommand(1);
    auto* perms_cmd = app.add_subcommand("perms", "ascending partitions of random point sets")->require_subcommand(1);
    auto* alt_cmd = app.add_subcommand("alt", "alternating twins constant")->require_subcommand(1);

    WordsScan scan;
    auto* scan_cmd = words_cmd->add_subcommand("scan", "maximum r-power (and optionally R for one m) of words");
    add_common(scan_cmd, scan.c, 1);
    scan_cmd->add_option("--random", scan.random, "draw --trials random words of length n over k letters")
        ->expected(2);
    scan_cmd->add_option("--input", scan.input, "word file (header k=<int>, one word per line)");
    scan_cmd->add_option("--r", scan.r, "power order")->capture_default_str();
    scan_cmd->add_option("--m", scan.m, "also report the maximum power of subblock length m");

    WordsExperiment tails;
    auto* tails_cmd = words_cmd->add_subcommand("tails", "Monte Carlo tail check for the maximum r-power length");
    add_common(tails_cmd, tails.c, 2000);
    tails_cmd->add_option("--n", tails.n)->capture_default_str();
    tails_cmd->add_option("--k", tails.k)->capture_default_str();
    tails_cmd->add_option("--r", tails.order, "power order")->capture_default_str();
    tails_cmd->add_option("--offsets", tails.offsets, "offsets t above the center")->capture_default_str();
    tails_cmd->add_option("--c-lower", tails.c_lower, "constant in the lower tail bound")->capture_default_str();
    tails_cmd->add_option("--window", tails.window, "allowed |mean - center|")->capture_default_str();

    WordsExperiment rstat;
    rstat.n = 1000000;
    rstat.order = 3;
    auto* rstat_cmd = words_cmd->add_subcommand("rstat", "Monte Carlo check for the maximum power of length m");
    add_common(rstat_cmd, rstat.c, 500);
    rstat_cmd->add_option("--n", rstat.n)->capture_default_str();
    rstat_cmd->add_option("--k", rstat.k)->capture_default_str();
    rstat_cmd->add_option("--m", rstat.order, "subblock length")->capture_default_str();
    rstat_cmd->add_option("--offsets", rstat.offsets, "offsets u above the center")->capture_default_str();
    rstat_cmd->add_option("--c-lower", rstat.c_lower, "constant in the lower tail bound")->capture_default_str();
    rstat_cmd->add_option("--window", rstat.window, "allowed mean - center")->capture_default_str();

    PermsPartition part;
    auto* part_cmd = perms_cmd->add_subcommand("partition", "partition a point set into ascending k-sets");
    add_common(part_cmd, part.c, 1);
    add_geometry_flags(part_cmd, part.geo);
    part_cmd->add_option("--n", part.n, "number of random points")->capture_default_str();
    part_cmd->add_option("--k", part.k, "class size")->capture_default_str()->check(CLI::PositiveNumber);
    part_cmd->add_option("--points", part.points, "read points from CSV (header x,y) instead");
    part_cmd->add_option("--emit-svg", part.emit_svg, "draw the grid and classes of the first point set");

    PermsProb prob;
    auto* prob_cmd = perms_cmd->add_subcommand("prob", "success rate of the partition construction");
    add_common(prob_cmd, prob.c, 100);
    add_geometry_flags(prob_cmd, prob.geo);
    prob_cmd->add_option("--k", prob.k)->capture_default_str()->check(CLI::PositiveNumber);
    prob_cmd->add_option("--r", prob.r, "numbers of classes")->delimiter(',')->capture_default_str();

    PermsOracle oracle;
    auto* oracle_cmd = perms_cmd->add_subcommand("oracle", "brute-force partition existence");
    add_common(oracle_cmd, oracle.c, 10000);
    oracle_cmd->add_option("--perm", oracle.perm, "permutation in one-line notation, e.g. 3,1,2")->delimiter(',');
    oracle_cmd->add_option("--k", oracle.k)->capture_default_str()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--r", oracle.r, "without --perm: fraction over permutations of [r k]")
        ->capture_default_str();
    oracle_cmd->add_flag("--similar", oracle.similar, "order-isomorphic classes instead of increasing ones");
    oracle_cmd->add_flag("--exhaustive", oracle.exhaustive, "enumerate all permutations (r k <= 10)");

    AltCounts counts;
    auto* counts_cmd = alt_cmd->add_subcommand("counts", "table of good pattern counts c(p1, k, X)");
    add_common(counts_cmd, counts.c, 1);
    counts_cmd->add_option("--max-k", counts.max_k)->capture_default_str();
    counts_cmd->add_option("--convention", counts.convention)
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "appendix"}));
    counts_cmd->add_option("--method", counts.method)->capture_default_str()->check(CLI::IsMember({"dp", "bruteforce"}));

    AltConstant constant;
    auto* constant_cmd = alt_cmd->add_subcommand("constant", "exact truncated second-round gain");
    add_common(constant_cmd, constant.c, 1);
    constant_cmd->add_option("--max-k", constant.max_k)->capture_default_str();
    constant_cmd->add_option("--convention", constant.convention, "auto picks the first reaching --target")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "text", "appendix"}));
    constant_cmd->add_option("--target", constant.target, "gain to reach, as num/den")->capture_default_str();

    AltSimulate sim;
    auto* sim_cmd = alt_cmd->add_subcommand("simulate", "two-round procedure or extrema count on random permutations");
    add_common(sim_cmd, sim.c, 50);
    sim_cmd->add_option("--n", sim.n)->capture_default_str();
    sim_cmd->add_option("--statistic", sim.statistic)
        ->capture_default_str()
        ->check(CLI::IsMember({"two-round", "extrema"}));

    AltSlope slope;
    auto* slope_cmd = alt_cmd->add_subcommand("slope", "frequency of sloped positions with same-side neighbours");
    add_common(slope_cmd, slope.c, 1);
    slope_cmd->add_option("--n", slope.n)->capture_default_str();
    slope_cmd->add_option("--max-k", slope.max_k, "truncation compared against")->capture_default_str();
    slope_cmd->add_option("--convention", slope.convention)
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "appendix"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*scan_cmd) return run_words_scan(scan);
        if (*tails_cmd) return run_words_report(tails, true);
        if (*rstat_cmd) return run_words_report(rstat, false);
        if (*part_cmd) return run_perms_partition(part);
        if (*prob_cmd) return run_perms_prob(prob);
        if (*oracle_cmd) return run_perms_oracle(oracle);
        if (*counts_cmd) return run_alt_counts(counts);
        if (*constant_cmd) return run_alt_constant(constant);
        if (*sim_cmd) return run_alt_simulate(sim);
        if (*slope_cmd) return run_alt_slope(slope);
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
