#pragma once

#include <string>

#include "monkey/bignat.hpp"
#include "monkey/log_quantity.hpp"
#include "monkey/monkey_model.hpp"
#include "monkey/textnorm.hpp"
#include "monkey/typing_speed.hpp"

namespace monkey {

enum class WaitMode { rounded_rule, full_precision, exact_border };

const char* wait_mode_name(WaitMode m);

struct WaitingEstimate {
    LogQuantity keystrokes;
    LogQuantity years;
    WaitMode mode;
    std::string display; // years rendered through format_duration
};

// m^l keystrokes: the uniform monkey's expected wait, ignoring self-overlap.
LogQuantity keystrokes_random(std::size_t length, int m);

// 2^(lh) keystrokes: expected wait for the educated monkey over typical texts.
LogQuantity keystrokes_educated(std::size_t length, double h);

LogQuantity keystrokes_to_time(LogQuantity keystrokes, const TypingSpeed& speed);

// The display rule 7.3 x 10^(cl - 9) years with c literally 0.26 (educated,
// h=0.863) or 1.43 (uniform, m=27). Valid only for those two models; this is
// a years-level rounding of the full-precision estimate, reproduced verbatim.
LogQuantity rounded_rule_years(std::size_t length, const MonkeyModel& model);

WaitingEstimate estimate(const NormalizedText& text, const MonkeyModel& model,
                         const TypingSpeed& speed, WaitMode mode);

// Exact expected first-occurrence time under an i.i.d. model: the sum over
// border lengths j of the pattern (prefix == suffix, j = l included) of
// 1/P(first j characters). Equals m^l exactly iff the pattern has no proper
// border. Educated models are rejected.
LogQuantity exact_expected_wait(const NormalizedText& pattern,
                                const MonkeyModel& model);

// Same sum as an exact integer, uniform models only. Defined while m^l stays
// under the 10^4-digit cap; exact_expected_wait routes through this when it
// applies, so borderless patterns give integer-exact m^l.
BigNat exact_expected_wait_uniform(const NormalizedText& pattern, int m);

// Largest unit with leading value >= 1, one decimal (two significant digits
// below 1 in the smallest unit); years in [1000, 1e6) comma-grouped, above
// that scientific. Appends "(exceeds age of universe)" past 1.4e10 years and
// "(exceeds black-hole evaporation era)" past 1e106 years.
std::string format_duration(LogQuantity years,
                            const TypingSpeed& speed = TypingSpeed{});

} // namespace monkey
