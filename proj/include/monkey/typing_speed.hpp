#pragma once

#include <stdexcept>

namespace monkey {

// Keystroke-to-calendar conversion. Defaults (52 wpm, 5 chars/word, 24 h/day,
// 365 d/year) give 13/3 chars/second and 136,656,000 chars/year.
struct TypingSpeed {
    double words_per_minute = 52.0;
    double chars_per_word = 5.0;
    double hours_per_day = 24.0;
    double days_per_year = 365.0;

    void validate() const {
        if (words_per_minute <= 0 || chars_per_word <= 0 || hours_per_day <= 0 ||
            days_per_year <= 0)
            throw std::invalid_argument("typing speed fields must be positive");
        if (hours_per_day > 24.0)
            throw std::invalid_argument("hours_per_day above 24");
    }

    double chars_per_second() const {
        return words_per_minute * chars_per_word / 60.0;
    }
    double chars_per_year() const {
        return chars_per_second() * 3600.0 * hours_per_day * days_per_year;
    }
    // Calendar seconds, independent of the typing duty cycle.
    double seconds_per_year() const { return 86400.0 * days_per_year; }
};

} // namespace monkey
