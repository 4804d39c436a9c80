#include "monkey/waiting.hpp"

#include <cmath>
#include <cstdio>

#include "monkey/pattern_matcher.hpp"

namespace monkey {

const char* wait_mode_name(WaitMode m) {
    switch (m) {
        case WaitMode::rounded_rule: return "rounded";
        case WaitMode::full_precision: return "precise";
        case WaitMode::exact_border: return "exact";
    }
    return "?";
}

LogQuantity keystrokes_random(std::size_t length, int m) {
    if (m < 2) throw std::invalid_argument("alphabet size must be >= 2");
    return LogQuantity::from_log10(static_cast<double>(length) *
                                   std::log10(static_cast<double>(m)));
}

LogQuantity keystrokes_educated(std::size_t length, double h) {
    if (!(h > 0)) throw std::invalid_argument("entropy rate must be > 0");
    return LogQuantity::from_log10(static_cast<double>(length) * h *
                                   std::log10(2.0));
}

LogQuantity keystrokes_to_time(LogQuantity keystrokes,
                               const TypingSpeed& speed) {
    speed.validate();
    return keystrokes / lq_from(speed.chars_per_year());
}

LogQuantity rounded_rule_years(std::size_t length, const MonkeyModel& model) {
    double c;
    if (model.is_uniform() && model.uniform().m == 27) {
        c = 1.43;
    } else if (model.is_educated() && model.educated().h == 0.863) {
        c = 0.26;
    } else {
        throw std::invalid_argument(
            "rounded rule is calibrated to m=27 / h=0.863 only");
    }
    return LogQuantity::from_log10(std::log10(7.3) +
                                   c * static_cast<double>(length) - 9.0);
}

namespace {

bool rounded_rule_applies(const MonkeyModel& model) {
    return (model.is_uniform() && model.uniform().m == 27) ||
           (model.is_educated() && model.educated().h == 0.863);
}

LogQuantity model_keystrokes(std::size_t length, const MonkeyModel& model) {
    if (model.is_uniform()) return keystrokes_random(length, model.uniform().m);
    if (model.is_educated())
        return keystrokes_educated(length, model.educated().h);
    // general i.i.d.: geometric in the pattern probability needs the pattern
    // itself; estimate() handles that case via exact_expected_wait
    throw std::invalid_argument("general i.i.d. model needs exact mode");
}

} // namespace

BigNat exact_expected_wait_uniform(const NormalizedText& pattern, int m) {
    if (pattern.length() == 0)
        throw std::invalid_argument("pattern must be nonempty");
    // digit cap: l*log10(m) digits for the top term
    if (static_cast<double>(pattern.length()) *
            std::log10(static_cast<double>(m)) >
        1e4)
        throw std::domain_error("m^l exceeds the exact-integer digit cap");
    BigNat sum(0);
    for (int j : borders(pattern)) sum += BigNat::pow(static_cast<std::uint64_t>(m),
                                                      static_cast<unsigned>(j));
    return sum;
}

LogQuantity exact_expected_wait(const NormalizedText& pattern,
                                const MonkeyModel& model) {
    if (pattern.length() == 0)
        throw std::invalid_argument("pattern must be nonempty");
    if (model.is_educated())
        throw std::invalid_argument("exact waits need an i.i.d. model");

    if (model.is_uniform()) {
        int m = model.uniform().m;
        for (char c : pattern.content())
            if (pattern.alphabet().index_of(c) >= m)
                throw std::invalid_argument("pattern symbol outside the model");
        if (static_cast<double>(pattern.length()) *
                std::log10(static_cast<double>(m)) <=
            1e4) {
            return LogQuantity::from_log10(
                exact_expected_wait_uniform(pattern, m).log10());
        }
        LogQuantity sum;
        for (int j : borders(pattern))
            sum = sum + keystrokes_random(static_cast<std::size_t>(j), m);
        return sum;
    }

    const auto& probs = model.iid_general().probs;
    // prefix_log[j] = log10 P(first j characters)
    std::vector<double> prefix_log(pattern.length() + 1, 0.0);
    for (std::size_t i = 0; i < pattern.length(); ++i) {
        int idx = pattern.alphabet().index_of(pattern.content()[i]);
        if (idx < 0 || idx >= static_cast<int>(probs.size()))
            throw std::invalid_argument("pattern symbol outside the model");
        prefix_log[i + 1] =
            prefix_log[i] + std::log10(probs[static_cast<std::size_t>(idx)]);
    }
    LogQuantity sum;
    for (int j : borders(pattern))
        sum = sum + LogQuantity::from_log10(
                        -prefix_log[static_cast<std::size_t>(j)]);
    return sum;
}

WaitingEstimate estimate(const NormalizedText& text, const MonkeyModel& model,
                         const TypingSpeed& speed, WaitMode mode) {
    speed.validate();
    WaitingEstimate out;
    out.mode = mode;

    switch (mode) {
        case WaitMode::rounded_rule:
            // keystrokes keep the exact formula; the display rule is a
            // years-level rounding and only the years figure uses it
            out.keystrokes = model_keystrokes(text.length(), model);
            if (rounded_rule_applies(model)) {
                out.years = rounded_rule_years(text.length(), model);
            } else {
                // rule constants exist only for m=27 / h=0.863
                out.mode = WaitMode::full_precision;
                out.years = keystrokes_to_time(out.keystrokes, speed);
            }
            break;
        case WaitMode::full_precision:
            out.keystrokes = model_keystrokes(text.length(), model);
            out.years = keystrokes_to_time(out.keystrokes, speed);
            break;
        case WaitMode::exact_border:
            if (model.is_educated()) {
                // no i.i.d. hitting-time law exists for this model
                out.mode = WaitMode::full_precision;
                out.keystrokes = model_keystrokes(text.length(), model);
                out.years = keystrokes_to_time(out.keystrokes, speed);
            } else {
                out.keystrokes = exact_expected_wait(text, model);
                out.years = keystrokes_to_time(out.keystrokes, speed);
            }
            break;
    }
    out.display = format_duration(out.years, speed);
    return out;
}

namespace {

std::string round_one_decimal(double v) {
    char buf[64];
    if (v < 1.0) {
        std::snprintf(buf, sizeof(buf), "%.2g", v);
    } else {
        std::snprintf(buf, sizeof(buf), "%.1f", v);
    }
    return buf;
}

} // namespace

std::string format_duration(LogQuantity years, const TypingSpeed& speed) {
    if (years.is_zero()) return "0 seconds";

    const double spy = speed.seconds_per_year();
    const double day_seconds = 86400.0;
    double y = years.value(); // display scale only; inf past ~1e308 is fine

    std::string body;
    if (years.log10() >= 6.0) {
        body = lq_format(years, 2) + " years";
    } else if (y >= 1000.0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.0f", y);
        body = group_thousands(buf) + " years";
    } else if (y >= 1.0) {
        body = round_one_decimal(y) + " years";
    } else {
        double seconds = y * spy;
        struct Unit {
            double size;
            const char* name;
        };
        const Unit units[] = {{day_seconds, "days"},
                              {3600.0, "hours"},
                              {60.0, "minutes"},
                              {1.0, "seconds"}};
        body = round_one_decimal(seconds) + " seconds";
        for (const auto& u : units) {
            if (seconds >= u.size) {
                body = round_one_decimal(seconds / u.size) + ' ' + u.name;
                break;
            }
        }
    }

    if (!years.is_zero() && years.log10() > 106.0)
        return body + " (exceeds black-hole evaporation era)";
    if (!years.is_zero() && years.log10() > std::log10(1.4e10))
        return body + " (exceeds age of universe)";
    return body;
}

} // namespace monkey
