#ifndef TWINLAB_ALTERNATING_RATIONAL_HPP
#define TWINLAB_ALTERNATING_RATIONAL_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twinlab/errors.hpp"

namespace twinlab::alternating {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw invalid_parameter("ExactRational: zero denominator");
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    [[nodiscard]] double to_double() const { return value_.convert_to<double>(); }

    /// "num/den" (or just "num" when den = 1).
    [[nodiscard]] std::string to_fraction_string() const {
        const auto den = denominator();
        return den == 1 ? numerator().str() : numerator().str() + "/" + den.str();
    }

    /// Decimal expansion rounded half-up at `places` digits, computed exactly.
    [[nodiscard]] std::string to_decimal(unsigned places = 12) const {
        BigInt scale = 1;
        for (unsigned i = 0; i < places; ++i) scale *= 10;
        BigInt num = numerator();
        const BigInt den = denominator();
        const bool negative = num < 0;
        if (negative) num = -num;
        BigInt scaled = (num * scale * 2 + den) / (den * 2);
        const BigInt whole = scaled / scale;
        std::string frac = BigInt(scaled % scale).str();
        if (frac.size() < places) frac.insert(0, places - frac.size(), '0');
        std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
        if (places > 0) out += "." + frac;
        return out;
    }

    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
    ExactRational& operator/=(const ExactRational& o) {
        if (o.value_ == 0) throw invalid_parameter("ExactRational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.value_ >= b.value_; }

private:
    boost::multiprecision::cpp_rational value_{0};
};

/// Memoized n! for n up to the largest index requested so far.
class FactorialTable {
public:
    const BigInt& operator()(unsigned n) {
        while (table_.size() <= n) table_.push_back(table_.back() * static_cast<unsigned>(table_.size()));
        return table_[n];
    }

private:
    std::vector<BigInt> table_{BigInt(1)};
};

/// C(n, r) by the multiplicative formula; 0 when r > n.
inline BigInt binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt out = 1;
    for (unsigned i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

}  // namespace twinlab::alternating

#endif  // TWINLAB_ALTERNATING_RATIONAL_HPP
