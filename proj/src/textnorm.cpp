#include "monkey/textnorm.hpp"

#include <cstdint>

namespace monkey {

namespace {

// Decodes one UTF-8 scalar at `i`, advancing it. Throws Utf8Error on overlong
// forms, surrogates, values past U+10FFFF, bad continuations, truncation.
std::uint32_t decode_utf8(const std::string& s, std::size_t& i) {
    const std::size_t start = i;
    const auto byte = [&](std::size_t k) {
        return static_cast<std::uint8_t>(s[k]);
    };
    std::uint8_t b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }

    int len;
    std::uint32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1Fu;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0Fu;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07u;
    } else {
        throw Utf8Error(start, "stray continuation or invalid lead byte");
    }
    if (i + static_cast<std::size_t>(len) > s.size())
        throw Utf8Error(start, "truncated sequence");
    for (int k = 1; k < len; ++k) {
        std::uint8_t b = byte(i + static_cast<std::size_t>(k));
        if ((b & 0xC0) != 0x80)
            throw Utf8Error(start, "bad continuation byte");
        cp = (cp << 6) | (b & 0x3Fu);
    }
    static constexpr std::uint32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len]) throw Utf8Error(start, "overlong encoding");
    if (cp >= 0xD800 && cp <= 0xDFFF)
        throw Utf8Error(start, "surrogate code point");
    if (cp > 0x10FFFF) throw Utf8Error(start, "code point past U+10FFFF");
    i += static_cast<std::size_t>(len);
    return cp;
}

bool is_ascii_space(std::uint32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\v' || cp == '\f' ||
           cp == '\r';
}

} // namespace

NormalizedText::NormalizedText(std::string content, const Alphabet& alphabet)
    : content_(std::move(content)), alphabet_(&alphabet) {
    for (std::size_t i = 0; i < content_.size(); ++i) {
        if (!alphabet_->contains(content_[i]))
            throw std::invalid_argument("character not in alphabet");
        if (content_[i] == ' ' && (i == 0 || i + 1 == content_.size() ||
                                   content_[i + 1] == ' '))
            throw std::invalid_argument("spaces must be single and interior");
    }
}

NormalizedText normalize(const std::string& raw, const Alphabet& alphabet) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < raw.size()) {
        std::uint32_t cp = decode_utf8(raw, i);
        if (cp >= 'A' && cp <= 'Z') cp += 'a' - 'A';
        if (is_ascii_space(cp)) cp = ' ';
        if (cp > 0x7F || !alphabet.contains(static_cast<char>(cp)))
            continue; // deleted, leaves nothing behind
        if (cp == ' ') {
            pending_space = !out.empty(); // also trims leading
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(cp));
    }
    return NormalizedText(std::move(out), alphabet);
}

} // namespace monkey
