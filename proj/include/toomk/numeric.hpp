#pragma once

// Exact unbounded arithmetic: naturals, signed integers, rationals, and
// base-b digit vectors with the schoolbook multiplier used as base case
// and differential oracle. No floating point anywhere in this module.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toomk {

using uint128 = unsigned __int128;

// Unbounded non-negative integer. Little-endian 64-bit limbs, no trailing
// zero limb; the empty limb vector is zero.
class Natural {
public:
    Natural() = default;
    Natural(uint64_t value) {  // NOLINT: implicit for small-constant ergonomics
        if (value != 0) limbs_.push_back(value);
    }

    static Natural from_decimal(std::string_view text);
    static Natural pow(const Natural& base, std::size_t exponent);
    static Natural gcd(Natural a, Natural b);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool fits_uint64() const noexcept { return limbs_.size() <= 1; }
    uint64_t to_uint64() const;  // requires fits_uint64()
    std::size_t bit_length() const noexcept;
    const std::vector<uint64_t>& limbs() const noexcept { return limbs_; }

    std::string to_decimal() const;

    bool operator==(const Natural&) const = default;
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

    Natural& operator+=(const Natural& other);
    Natural& operator-=(const Natural& other);  // throws on underflow
    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(const Natural& a, const Natural& b);

    // In-place this = this * mul + add; the workhorse of digit recomposition.
    Natural& mul_add_u64(uint64_t mul, uint64_t add);

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Natural, Natural> divmod(const Natural& divisor) const;
    std::pair<Natural, uint64_t> divmod_u64(uint64_t divisor) const;
    // In-place quotient, returns the remainder. No allocation.
    uint64_t div_u64_in_place(uint64_t divisor);

private:
    std::vector<uint64_t> limbs_;

    void trim();
    bool bit(std::size_t index) const noexcept;
    void set_bit(std::size_t index);
    void shift_left_bits(std::size_t count);
    void shift_right_bits(std::size_t count);
    std::size_t trailing_zero_bits() const noexcept;  // requires nonzero

    friend class Rational;
};

// Sign-magnitude integer; zero always carries the positive sign.
class SignedInt {
public:
    SignedInt() = default;
    SignedInt(int64_t value);  // NOLINT: implicit for small-constant ergonomics
    SignedInt(Natural magnitude, bool negative = false)
        : magnitude_(std::move(magnitude)),
          negative_(negative && !magnitude_.is_zero()) {}

    // Decimal or 0x/0X-prefixed hexadecimal, optional leading sign.
    static SignedInt from_string(std::string_view text);

    bool is_zero() const noexcept { return magnitude_.is_zero(); }
    bool is_negative() const noexcept { return negative_; }
    const Natural& magnitude() const noexcept { return magnitude_; }

    SignedInt operator-() const { return SignedInt(magnitude_, !negative_); }

    bool operator==(const SignedInt&) const = default;
    friend std::strong_ordering operator<=>(const SignedInt& a, const SignedInt& b);

    friend SignedInt operator+(const SignedInt& a, const SignedInt& b);
    friend SignedInt operator-(const SignedInt& a, const SignedInt& b);
    friend SignedInt operator*(const SignedInt& a, const SignedInt& b);

    std::string to_string() const;  // decimal

private:
    Natural magnitude_;
    bool negative_ = false;
};

// Exact rational, eagerly normalized: denominator > 0 and coprime with the
// numerator's magnitude; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(SignedInt numerator)  // NOLINT: implicit integer -> rational
        : num_(std::move(numerator)) {}
    Rational(SignedInt numerator, Natural denominator);  // throws on zero denominator
    Rational(int64_t numerator) : num_(numerator) {}     // NOLINT

    const SignedInt& num() const noexcept { return num_; }
    const Natural& den() const noexcept { return den_; }
    bool is_integral() const noexcept { return den_.fits_uint64() && den_.to_uint64() == 1; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    bool operator==(const Rational&) const = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0
    Rational operator-() const { return Rational(-num_, den_); }

    std::string to_string() const;  // "n" when integral, else "n/d"
    // Rounded-to-nearest fixed-point rendering, computed with integer
    // division only (this library never touches floating point).
    std::string to_decimal_string(std::size_t places) const;

private:
    SignedInt num_;
    Natural den_ = Natural(1);
};

// Little-endian base-b digit sequence; each digit < base, no trailing zero
// digit, empty means 0.
struct DigitVector {
    uint64_t base = 10;
    std::vector<uint64_t> digits;

    bool operator==(const DigitVector&) const = default;
};

// Number of base-b digits of |n|; digit_count(b, 0) = 0. Rejects base < 2.
std::size_t digit_count(uint64_t base, const Natural& n);
std::size_t digit_count(uint64_t base, const SignedInt& n);

DigitVector to_digits(uint64_t base, const Natural& n);  // rejects base < 2
Natural from_digits(const DigitVector& dv);              // rejects digit >= base

// Quadratic digit-by-digit product, independent of the Toom-Cook path.
// Bases must match.
DigitVector schoolbook_mul(const DigitVector& a, const DigitVector& c);

}  // namespace toomk
