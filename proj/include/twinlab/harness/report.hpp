#ifndef TWINLAB_HARNESS_REPORT_HPP
#define TWINLAB_HARNESS_REPORT_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "twinlab/errors.hpp"
#include "twinlab/harness/stats.hpp"

namespace twinlab {

inline constexpr const char* tool_version = "twinlab 1.0.0";

namespace harness {

struct Verdict {
    bool pass = false;
    double margin = 0.0;  // positive when passing with room to spare
    std::string summary;  // key into ExperimentReport::summaries
    std::string theory;   // key into ExperimentReport::theory
};

/**
 * Parameters, sample summaries, theoretical values and pass/fail verdicts of
 * one experiment. Serialization is deterministic: keys are sorted and doubles
 * are printed in shortest round-trip form, so identical inputs always give
 * byte-identical documents.
 */
class ExperimentReport {
public:
    ExperimentReport(std::string experiment, std::uint64_t seed)
        : experiment_(std::move(experiment)), seed_(seed) {}

    template <typename T>
    ExperimentReport& param(const std::string& key, T value) {
        params_[key] = std::move(value);
        return *this;
    }

    ExperimentReport& summary(const std::string& key, McSummary s) {
        summaries_.insert_or_assign(key, std::move(s));
        return *this;
    }

    ExperimentReport& theory(const std::string& key, nlohmann::json value) {
        theory_[key] = std::move(value);
        return *this;
    }

    /// Throws invalid_parameter unless both referenced entries already exist.
    ExperimentReport& verdict(const std::string& key, Verdict v) {
        if (!summaries_.contains(v.summary))
            throw invalid_parameter("verdict '" + key + "' references unknown summary '" + v.summary + "'");
        if (!theory_.contains(v.theory))
            throw invalid_parameter("verdict '" + key + "' references unknown theory value '" + v.theory + "'");
        verdicts_.insert_or_assign(key, std::move(v));
        return *this;
    }

    [[nodiscard]] const std::map<std::string, McSummary>& summaries() const { return summaries_; }
    [[nodiscard]] const std::map<std::string, Verdict>& verdicts() const { return verdicts_; }
    [[nodiscard]] const nlohmann::json& theory_values() const { return theory_; }
    [[nodiscard]] const nlohmann::json& params() const { return params_; }

    [[nodiscard]] bool all_pass() const {
        for (const auto& [_, v] : verdicts_)
            if (!v.pass) return false;
        return true;
    }

    [[nodiscard]] nlohmann::json to_json(bool include_values = false) const {
        nlohmann::json doc;
        doc["experiment"] = experiment_;
        doc["tool_version"] = tool_version;
        doc["seed"] = seed_;
        doc["params"] = params_.is_null() ? nlohmann::json::object() : params_;
        doc["theory"] = theory_.is_null() ? nlohmann::json::object() : theory_;
        auto& sums = doc["summaries"] = nlohmann::json::object();
        for (const auto& [name, s] : summaries_) sums[name] = summary_json(s, include_values);
        auto& verds = doc["verdicts"] = nlohmann::json::object();
        for (const auto& [name, v] : verdicts_)
            verds[name] = {{"pass", v.pass}, {"margin", v.margin}, {"summary", v.summary}, {"theory", v.theory}};
        return doc;
    }

    [[nodiscard]] std::string dump(bool include_values = false) const {
        return to_json(include_values).dump(2) + "\n";
    }

    static nlohmann::json summary_json(const McSummary& s, bool include_values) {
        nlohmann::json out{{"trials", s.trials}, {"mean", s.mean}, {"stddev", s.stddev},
                           {"min", s.min},       {"max", s.max}};
        auto& tail = out["empirical_tail"] = nlohmann::json::object();
        for (const auto& [threshold, fraction] : s.empirical_tail) tail[format_key(threshold)] = fraction;
        if (include_values) out["values"] = s.values;
        return out;
    }

private:
    static std::string format_key(double threshold) {
        std::ostringstream os;
        os.precision(17);
        os << threshold;
        return os.str();
    }

    std::string experiment_;
    std::uint64_t seed_;
    nlohmann::json params_ = nlohmann::json::object();
    nlohmann::json theory_ = nlohmann::json::object();
    std::map<std::string, McSummary> summaries_;
    std::map<std::string, Verdict> verdicts_;
};

/// CSV sample dump: header `trial,statistic`, one row per trial.
inline std::string samples_csv(const McSummary& s) {
    std::ostringstream os;
    os.precision(17);
    os << "trial,statistic\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) os << i << ',' << s.values[i] << '\n';
    return os.str();
}

}  // namespace harness
}  // namespace twinlab

#endif  // TWINLAB_HARNESS_REPORT_HPP
