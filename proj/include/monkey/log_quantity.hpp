#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace monkey {

// Nonnegative quantity stored as its base-10 logarithm, so magnitudes like
// 10^232784 stay representable. Exact zero is a separate flag.
class LogQuantity {
public:
    LogQuantity() : log10_(0.0), zero_(true) {}

    static LogQuantity from_value(double v) {
        if (v < 0.0) throw std::invalid_argument("LogQuantity: negative value");
        if (v == 0.0) return LogQuantity();
        return from_log10(std::log10(v));
    }
    static LogQuantity from_log10(double lg) {
        LogQuantity q;
        q.log10_ = lg;
        q.zero_ = false;
        return q;
    }

    bool is_zero() const { return zero_; }
    // log10 of a zero quantity is undefined; callers check is_zero first.
    double log10() const { return log10_; }
    // Overflows to inf past ~1e308; fine for display-scale consumers.
    double value() const { return zero_ ? 0.0 : std::pow(10.0, log10_); }

    friend LogQuantity operator*(LogQuantity a, LogQuantity b) {
        if (a.zero_ || b.zero_) return LogQuantity();
        return from_log10(a.log10_ + b.log10_);
    }
    friend LogQuantity operator/(LogQuantity a, LogQuantity b) {
        if (b.zero_) throw std::domain_error("LogQuantity: division by zero");
        if (a.zero_) return LogQuantity();
        return from_log10(a.log10_ - b.log10_);
    }
    // log-sum-exp in base 10: max + log10(1 + 10^(min-max))
    friend LogQuantity operator+(LogQuantity a, LogQuantity b) {
        if (a.zero_) return b;
        if (b.zero_) return a;
        double hi = a.log10_, lo = b.log10_;
        if (hi < lo) std::swap(hi, lo);
        return from_log10(hi + std::log1p(std::pow(10.0, lo - hi)) / std::log(10.0));
    }

    friend bool operator==(const LogQuantity& a, const LogQuantity& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.log10_ == b.log10_);
    }

private:
    double log10_;
    bool zero_;
};

inline LogQuantity lq_from(double v) { return LogQuantity::from_value(v); }
inline LogQuantity lq_mul(LogQuantity a, LogQuantity b) { return a * b; }
inline LogQuantity lq_div(LogQuantity a, LogQuantity b) { return a / b; }
inline LogQuantity lq_add(LogQuantity a, LogQuantity b) { return a + b; }

inline LogQuantity lq_pow(LogQuantity a, double k) {
    if (a.is_zero()) {
        if (k == 0.0) return LogQuantity::from_log10(0.0);
        if (k < 0.0) throw std::domain_error("LogQuantity: 0 to negative power");
        return LogQuantity();
    }
    return LogQuantity::from_log10(a.log10() * k);
}

// "2.2x10^13" with the given significant digits; plain decimal when the
// exponent is in [-3, 6]; bare "10^42,277" (comma-grouped exponent, mantissa
// suppressed) above exponent 1000. Zero prints "0".
std::string lq_format(LogQuantity a, int significant_digits = 2);

// Comma-groups the integer part of a decimal string: "42277" -> "42,277".
std::string group_thousands(const std::string& digits);

} // namespace monkey
