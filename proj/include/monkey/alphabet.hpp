#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace monkey {

// Finite symbol set with a canonical order. Symbols are plain bytes; the
// canonical instance is a-z plus space (m = 27).
class Alphabet {
public:
    explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
        if (symbols_.size() < 2)
            throw std::invalid_argument("alphabet needs at least 2 symbols");
        index_.fill(-1);
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(symbols_[i]);
            if (index_[c] >= 0)
                throw std::invalid_argument("alphabet symbols must be distinct");
            index_[c] = static_cast<int>(i);
        }
    }

    static const Alphabet& canonical() {
        static const Alphabet a("abcdefghijklmnopqrstuvwxyz ");
        return a;
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbols() const { return symbols_; }
    char symbol(int i) const { return symbols_.at(static_cast<std::size_t>(i)); }

    // -1 when the byte is not a symbol.
    int index_of(char c) const { return index_[static_cast<unsigned char>(c)]; }
    bool contains(char c) const { return index_of(c) >= 0; }

private:
    std::string symbols_;
    std::array<int, 256> index_{};
};

} // namespace monkey
