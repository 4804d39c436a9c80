#include "monkey/log_quantity.hpp"

#include <cmath>
#include <cstdio>

namespace monkey {

std::string group_thousands(const std::string& digits) {
    std::string out;
    std::size_t dot = digits.find('.');
    std::size_t intlen = (dot == std::string::npos) ? digits.size() : dot;
    std::size_t start = (!digits.empty() && digits[0] == '-') ? 1 : 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > start && i < intlen && (intlen - i) % 3 == 0) out.push_back(',');
        out.push_back(digits[i]);
    }
    return out;
}

namespace {

// Trailing zeros after a decimal point add nothing.
std::string trim_fraction(std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

} // namespace

std::string lq_format(LogQuantity a, int significant_digits) {
    if (a.is_zero()) return "0";
    if (significant_digits < 1) significant_digits = 1;
    if (significant_digits > 17) significant_digits = 17;

    double lg = a.log10();
    double e = std::floor(lg);

    // Past exponent 1000 the mantissa carries no information worth printing.
    if (e > 1000.0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.0f", e);
        return "10^" + group_thousands(buf);
    }

    double frac = lg - e; // mantissa = 10^frac in [1, 10)
    char mbuf[64];
    std::snprintf(mbuf, sizeof(mbuf), "%.*f", significant_digits - 1,
                  std::pow(10.0, frac));
    std::string mantissa = mbuf;
    if (mantissa.rfind("10", 0) == 0 && (mantissa.size() == 2 || mantissa[2] == '.')) {
        // rounding carried 9.99... over; renormalize
        e += 1.0;
        std::snprintf(mbuf, sizeof(mbuf), "%.*f", significant_digits - 1, 1.0);
        mantissa = mbuf;
    }

    if (e >= -3.0 && e <= 6.0) {
        // plain positional form; fractional digits only while they carry
        // significance, integer digits always in full
        int decimals = significant_digits - 1 - static_cast<int>(e);
        if (decimals < 0) decimals = 0;
        char vbuf[128];
        std::snprintf(vbuf, sizeof(vbuf), "%.*f", decimals,
                      std::pow(10.0, lg));
        return trim_fraction(vbuf);
    }

    char ebuf[64];
    std::snprintf(ebuf, sizeof(ebuf), "%.0f", e);
    std::string m = trim_fraction(mantissa);
    if (m == "1") return "10^" + group_thousands(ebuf);
    return m + "×" + "10^" + ebuf;
}

} // namespace monkey
