#include "monkey/bignat.hpp"

#include <cmath>
#include <cstdio>

namespace monkey {

BigNat::BigNat(std::uint64_t v) {
    do {
        limbs_.push_back(static_cast<std::uint32_t>(v % BASE));
        v /= BASE;
    } while (v != 0);
}

void BigNat::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(limbs_[i]) + carry +
                          (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s % BASE);
        carry = static_cast<std::uint32_t>(s / BASE);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigNat& BigNat::operator*=(std::uint64_t rhs) {
    if (rhs == 0) {
        limbs_.assign(1, 0);
        return *this;
    }
    // single-limb factors multiply in place; anything larger goes through
    // the full product so per-limb arithmetic stays inside 64 bits
    if (rhs < BASE) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t p = static_cast<std::uint64_t>(limb) * rhs + carry;
            limb = static_cast<std::uint32_t>(p % BASE);
            carry = p / BASE;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % BASE));
            carry /= BASE;
        }
        trim();
        return *this;
    }
    *this = *this * BigNat(rhs);
    return *this;
}

BigNat BigNat::operator*(const BigNat& rhs) const {
    std::vector<std::uint64_t> acc(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] == 0) continue;
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = acc[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) *
                                    rhs.limbs_[j] +
                                carry;
            acc[i + j] = cur % BASE;
            carry = cur / BASE;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = acc[k] + carry;
            acc[k] = cur % BASE;
            carry = cur / BASE;
            ++k;
        }
    }
    BigNat out;
    out.limbs_.assign(acc.begin(), acc.end());
    out.trim();
    return out;
}

BigNat BigNat::pow(std::uint64_t base, unsigned exp) {
    BigNat result(1);
    BigNat b(base);
    while (exp) {
        if (exp & 1u) result = result * b;
        b = b * b;
        exp >>= 1;
    }
    return result;
}

std::size_t BigNat::digit_count() const {
    if (is_zero()) return 1;
    std::size_t d = (limbs_.size() - 1) * 9;
    std::uint32_t top = limbs_.back();
    while (top) {
        ++d;
        top /= 10;
    }
    return d;
}

std::string BigNat::to_string() const {
    char buf[16];
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof(buf), "%09u", limbs_[i]);
        out += buf;
    }
    return out;
}

double BigNat::log10() const {
    if (is_zero()) return -HUGE_VAL;
    std::string s = to_string();
    std::size_t lead = s.size() < 18 ? s.size() : 18;
    double head = std::stod(s.substr(0, lead));
    return std::log10(head) + static_cast<double>(s.size() - lead);
}

} // namespace monkey
