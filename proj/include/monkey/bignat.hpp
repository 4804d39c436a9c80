#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monkey {

// Arbitrary-precision unsigned integer, base-1e9 limbs, little-endian.
// Covers the exact-arithmetic path for keystroke counts: anything up to the
// 10^4-digit cap the callers enforce. Not a general bignum; only what the
// oracle path needs.
class BigNat {
public:
    BigNat() : limbs_{0} {}
    explicit BigNat(std::uint64_t v);

    static BigNat pow(std::uint64_t base, unsigned exp);

    BigNat& operator+=(const BigNat& rhs);
    BigNat& operator*=(std::uint64_t rhs);
    BigNat operator*(const BigNat& rhs) const;

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator*(BigNat a, std::uint64_t b) { return a *= b; }

    bool operator==(const BigNat& rhs) const { return limbs_ == rhs.limbs_; }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    std::size_t digit_count() const;
    std::string to_string() const;

    // log10 from the digit count and the leading 18 digits; exact to ~1e-17
    // relative, far tighter than any consumer's tolerance.
    double log10() const;

private:
    static constexpr std::uint32_t BASE = 1000000000u;
    void trim();
    std::vector<std::uint32_t> limbs_;
};

} // namespace monkey
