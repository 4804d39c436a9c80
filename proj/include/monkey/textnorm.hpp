#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "monkey/alphabet.hpp"

namespace monkey {

// Invalid UTF-8 in an input; offset is the byte position of the offending
// sequence start.
class Utf8Error : public std::runtime_error {
public:
    Utf8Error(std::size_t offset, const std::string& what)
        : std::runtime_error("invalid UTF-8 at byte " + std::to_string(offset) +
                             ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Text already reduced to its alphabet: no leading/trailing space, no two
// consecutive spaces, every character a symbol.
class NormalizedText {
public:
    NormalizedText(std::string content, const Alphabet& alphabet);

    const std::string& content() const { return content_; }
    const Alphabet& alphabet() const { return *alphabet_; }
    std::size_t length() const { return content_.size(); }

private:
    std::string content_;
    const Alphabet* alphabet_;
};

// Lower-cases letters, treats all whitespace as space, deletes every other
// character not in the alphabet, collapses space runs, trims. Rejects invalid
// UTF-8 with the byte offset. Deleted characters leave nothing behind
// ("I'll" -> "ill", "one--two" -> "onetwo"); accented letters are dropped,
// not transliterated.
NormalizedText normalize(const std::string& raw, const Alphabet& alphabet);

inline std::size_t text_length(const NormalizedText& t) { return t.length(); }

} // namespace monkey
