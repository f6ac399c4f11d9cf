#include "toomk/numeric.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace toomk {

namespace {

void require_base(uint64_t base) {
    if (base < 2) {
        throw std::invalid_argument("base must be > 1 (got " + std::to_string(base) + ")");
    }
}

// Largest power of base fitting a 64-bit word, with its exponent. Lets the
// base conversions move one word per bignum division instead of one digit.
std::pair<uint64_t, std::size_t> chunk_parameters(uint64_t base) {
    uint64_t chunk = base;
    std::size_t digits = 1;
    while ((uint128)chunk * base <= (uint128)UINT64_MAX) {
        chunk *= base;
        ++digits;
    }
    return {chunk, digits};
}

}  // namespace

// ---- Natural ----

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t Natural::to_uint64() const {
    if (limbs_.size() > 1) {
        throw std::overflow_error("Natural::to_uint64: value exceeds 64 bits");
    }
    return limbs_.empty() ? 0 : limbs_[0];
}

std::size_t Natural::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool Natural::bit(std::size_t index) const noexcept {
    const std::size_t limb = index / 64;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (index % 64)) & 1u;
}

void Natural::set_bit(std::size_t index) {
    const std::size_t limb = index / 64;
    if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
    limbs_[limb] |= uint64_t{1} << (index % 64);
}

std::size_t Natural::trailing_zero_bits() const noexcept {
    std::size_t limb = 0;
    while (limbs_[limb] == 0) ++limb;
    return limb * 64 + static_cast<std::size_t>(std::countr_zero(limbs_[limb]));
}

void Natural::shift_left_bits(std::size_t count) {
    if (is_zero() || count == 0) return;
    const std::size_t limb_shift = count / 64;
    const std::size_t bit_shift = count % 64;
    const std::size_t old_size = limbs_.size();
    limbs_.resize(old_size + limb_shift + 1, 0);
    for (std::size_t i = old_size; i-- > 0;) {
        const uint64_t value = limbs_[i];
        if (bit_shift != 0) limbs_[i + limb_shift + 1] |= value >> (64 - bit_shift);
        limbs_[i + limb_shift] = value << bit_shift;
    }
    std::fill(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift), 0);
    trim();
}

void Natural::shift_right_bits(std::size_t count) {
    const std::size_t limb_shift = count / 64;
    const std::size_t bit_shift = count % 64;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        return;
    }
    const std::size_t new_size = limbs_.size() - limb_shift;
    for (std::size_t i = 0; i < new_size; ++i) {
        uint64_t value = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size()) {
            value |= limbs_[i + limb_shift + 1] << (64 - bit_shift);
        }
        limbs_[i] = value;
    }
    limbs_.resize(new_size);
    trim();
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Natural& Natural::operator+=(const Natural& other) {
    const std::size_t other_size = other.limbs_.size();
    if (limbs_.size() < other_size) limbs_.resize(other_size, 0);
    uint64_t carry = 0;
    std::size_t i = 0;
    for (; i < other_size; ++i) {
        const uint128 t = (uint128)limbs_[i] + other.limbs_[i] + carry;
        limbs_[i] = (uint64_t)t;
        carry = (uint64_t)(t >> 64);
    }
    for (; carry != 0 && i < limbs_.size(); ++i) {
        const uint128 t = (uint128)limbs_[i] + carry;
        limbs_[i] = (uint64_t)t;
        carry = (uint64_t)(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

Natural& Natural::operator-=(const Natural& other) {
    if (*this < other) throw std::invalid_argument("Natural subtraction underflow");
    uint64_t borrow = 0;
    for (std::size_t i = 0; i < other.limbs_.size() || borrow != 0; ++i) {
        const uint64_t sub = i < other.limbs_.size() ? other.limbs_[i] : 0;
        const uint128 t = (uint128)limbs_[i] - sub - borrow;
        limbs_[i] = (uint64_t)t;
        borrow = (t >> 64) != 0 ? 1 : 0;
    }
    trim();
    return *this;
}

Natural operator*(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return Natural{};
    const auto& u = a.limbs_;
    const auto& v = b.limbs_;
    std::vector<uint64_t> w(u.size() + v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        uint64_t carry = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const uint128 t = (uint128)u[i] * v[j] + w[i + j] + carry;
            w[i + j] = (uint64_t)t;
            carry = (uint64_t)(t >> 64);
        }
        w[j + u.size()] = carry;
    }
    Natural result;
    result.limbs_ = std::move(w);
    result.trim();
    return result;
}

Natural& Natural::mul_add_u64(uint64_t mul, uint64_t add) {
    uint64_t carry = add;
    for (auto& limb : limbs_) {
        const uint128 t = (uint128)limb * mul + carry;
        limb = (uint64_t)t;
        carry = (uint64_t)(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    trim();
    return *this;
}

std::pair<Natural, uint64_t> Natural::divmod_u64(uint64_t divisor) const {
    Natural quotient = *this;
    const uint64_t rem = quotient.div_u64_in_place(divisor);
    return {std::move(quotient), rem};
}

uint64_t Natural::div_u64_in_place(uint64_t divisor) {
    if (divisor == 0) throw std::invalid_argument("division by zero");
    uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const uint128 cur = ((uint128)rem << 64) | limbs_[i];
        limbs_[i] = (uint64_t)(cur / divisor);
        rem = (uint64_t)(cur % divisor);
    }
    trim();
    return rem;
}

std::pair<Natural, Natural> Natural::divmod(const Natural& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero");
    if (*this < divisor) return {Natural{}, *this};
    if (divisor.fits_uint64()) {
        auto [quotient, rem] = divmod_u64(divisor.to_uint64());
        return {std::move(quotient), Natural(rem)};
    }
    // Bit-serial long division. Not on the multiplier's hot path, which
    // splits by digit slicing instead.
    Natural quotient;
    Natural remainder;
    for (std::size_t index = bit_length(); index-- > 0;) {
        remainder.shift_left_bits(1);
        if (bit(index)) remainder.set_bit(0);
        if (remainder >= divisor) {
            remainder -= divisor;
            quotient.set_bit(index);
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

Natural Natural::pow(const Natural& base, std::size_t exponent) {
    Natural result(1);
    Natural square = base;
    while (exponent != 0) {
        if (exponent & 1u) result = result * square;
        exponent >>= 1;
        if (exponent != 0) square = square * square;
    }
    return result;
}

Natural Natural::gcd(Natural a, Natural b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::size_t a_zeros = a.trailing_zero_bits();
    const std::size_t b_zeros = b.trailing_zero_bits();
    const std::size_t common = std::min(a_zeros, b_zeros);
    a.shift_right_bits(a_zeros);
    b.shift_right_bits(b_zeros);
    // Binary gcd on the odd parts; once either side fits a word a single
    // remainder finishes the job.
    while (true) {
        if (a.fits_uint64() || b.fits_uint64()) {
            if (!a.fits_uint64()) std::swap(a, b);
            const uint64_t small = a.to_uint64();
            const uint64_t rem = b.divmod_u64(small).second;
            Natural g(std::gcd(small, rem));
            g.shift_left_bits(common);
            return g;
        }
        if (a > b) std::swap(a, b);
        b -= a;
        if (b.is_zero()) break;
        b.shift_right_bits(b.trailing_zero_bits());
    }
    a.shift_left_bits(common);
    return a;
}

Natural Natural::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty numeric literal");
    DigitVector dv{10, {}};
    dv.digits.reserve(text.size());
    for (std::size_t i = text.size(); i-- > 0;) {
        const char ch = text[i];
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("invalid decimal digit '" + std::string(1, ch) + "'");
        }
        dv.digits.push_back(static_cast<uint64_t>(ch - '0'));
    }
    while (!dv.digits.empty() && dv.digits.back() == 0) dv.digits.pop_back();
    return from_digits(dv);
}

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    const DigitVector dv = to_digits(10, *this);
    std::string out(dv.digits.size(), '0');
    for (std::size_t i = 0; i < dv.digits.size(); ++i) {
        out[dv.digits.size() - 1 - i] += static_cast<char>(dv.digits[i]);
    }
    return out;
}

// ---- SignedInt ----

SignedInt::SignedInt(int64_t value) {
    if (value < 0) {
        negative_ = true;
        magnitude_ = Natural(static_cast<uint64_t>(-(value + 1)) + 1u);
    } else {
        magnitude_ = Natural(static_cast<uint64_t>(value));
    }
}

SignedInt SignedInt::from_string(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) {
        throw std::invalid_argument("empty numeric literal '" + std::string(text) + "'");
    }
    Natural magnitude;
    if (rest.size() > 2 && rest[0] == '0' && (rest[1] == 'x' || rest[1] == 'X')) {
        rest.remove_prefix(2);
        DigitVector dv{16, {}};
        dv.digits.reserve(rest.size());
        for (std::size_t i = rest.size(); i-- > 0;) {
            const char ch = rest[i];
            uint64_t value;
            if (ch >= '0' && ch <= '9') value = static_cast<uint64_t>(ch - '0');
            else if (ch >= 'a' && ch <= 'f') value = static_cast<uint64_t>(ch - 'a') + 10;
            else if (ch >= 'A' && ch <= 'F') value = static_cast<uint64_t>(ch - 'A') + 10;
            else throw std::invalid_argument("invalid hex digit '" + std::string(1, ch) + "'");
            dv.digits.push_back(value);
        }
        while (!dv.digits.empty() && dv.digits.back() == 0) dv.digits.pop_back();
        magnitude = from_digits(dv);
    } else {
        magnitude = Natural::from_decimal(rest);
    }
    return SignedInt(std::move(magnitude), negative);
}

std::strong_ordering operator<=>(const SignedInt& a, const SignedInt& b) {
    if (a.negative_ != b.negative_) {
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.negative_ ? b.magnitude_ <=> a.magnitude_ : a.magnitude_ <=> b.magnitude_;
}

SignedInt operator+(const SignedInt& a, const SignedInt& b) {
    if (a.negative_ == b.negative_) return SignedInt(a.magnitude_ + b.magnitude_, a.negative_);
    if (a.magnitude_ >= b.magnitude_) return SignedInt(a.magnitude_ - b.magnitude_, a.negative_);
    return SignedInt(b.magnitude_ - a.magnitude_, b.negative_);
}

SignedInt operator-(const SignedInt& a, const SignedInt& b) { return a + (-b); }

SignedInt operator*(const SignedInt& a, const SignedInt& b) {
    return SignedInt(a.magnitude_ * b.magnitude_, a.negative_ != b.negative_);
}

std::string SignedInt::to_string() const {
    return negative_ ? "-" + magnitude_.to_decimal() : magnitude_.to_decimal();
}

// ---- Rational ----

Rational::Rational(SignedInt numerator, Natural denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = Natural(1);
        return;
    }
    if (den_.fits_uint64() && den_.to_uint64() == 1) return;
    const Natural g = Natural::gcd(num_.magnitude(), den_);
    if (g.fits_uint64() && g.to_uint64() == 1) return;
    num_ = SignedInt(num_.magnitude().divmod(g).first, num_.is_negative());
    den_ = den_.divmod(g).first;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * SignedInt(b.den_) <=> b.num_ * SignedInt(a.den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    SignedInt num = a.num_ * SignedInt(b.den_) + b.num_ * SignedInt(a.den_);
    return Rational(std::move(num), a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational division by zero");
    SignedInt num(a.num_.magnitude() * b.den_, a.num_.is_negative() != b.num_.is_negative());
    return Rational(std::move(num), a.den_ * b.num_.magnitude());
}

std::string Rational::to_string() const {
    if (is_integral()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_decimal();
}

std::string Rational::to_decimal_string(std::size_t places) const {
    const Natural scale = Natural::pow(Natural(10), places);
    auto [quotient, rem] = (num_.magnitude() * scale).divmod(den_);
    if (rem + rem >= den_) quotient += Natural(1);
    std::string digits = quotient.to_decimal();
    if (digits.size() < places + 1) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (num_.is_negative() && !quotient.is_zero()) out = "-";
    out += digits.substr(0, digits.size() - places);
    if (places != 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

// ---- digit vectors ----

std::size_t digit_count(uint64_t base, const Natural& n) {
    require_base(base);
    if (n.is_zero()) return 0;
    if (n.fits_uint64()) {
        uint64_t value = n.to_uint64();
        std::size_t count = 0;
        while (value != 0) {
            ++count;
            value /= base;
        }
        return count;
    }
    const auto [chunk, chunk_digits] = chunk_parameters(base);
    Natural current = n;
    std::size_t count = 0;
    while (true) {
        uint64_t rem = current.div_u64_in_place(chunk);
        if (current.is_zero()) {
            while (rem != 0) {
                ++count;
                rem /= base;
            }
            return count;
        }
        count += chunk_digits;
    }
}

std::size_t digit_count(uint64_t base, const SignedInt& n) {
    return digit_count(base, n.magnitude());
}

DigitVector to_digits(uint64_t base, const Natural& n) {
    require_base(base);
    DigitVector out{base, {}};
    if (n.is_zero()) return out;
    if (n.fits_uint64()) {
        uint64_t value = n.to_uint64();
        while (value != 0) {
            out.digits.push_back(value % base);
            value /= base;
        }
        return out;
    }
    const auto [chunk, chunk_digits] = chunk_parameters(base);
    Natural current = n;
    while (true) {
        uint64_t rem = current.div_u64_in_place(chunk);
        if (current.is_zero()) {
            while (rem != 0) {
                out.digits.push_back(rem % base);
                rem /= base;
            }
            return out;
        }
        for (std::size_t i = 0; i < chunk_digits; ++i) {
            out.digits.push_back(rem % base);
            rem /= base;
        }
    }
}

Natural from_digits(const DigitVector& dv) {
    require_base(dv.base);
    for (std::size_t i = 0; i < dv.digits.size(); ++i) {
        if (dv.digits[i] >= dv.base) {
            throw std::invalid_argument("digit out of range for base " + std::to_string(dv.base) +
                                        " at index " + std::to_string(i));
        }
    }
    const auto [chunk, chunk_digits] = chunk_parameters(dv.base);
    std::size_t index = dv.digits.size();
    const auto take = [&](std::size_t count) {
        uint64_t value = 0;
        for (std::size_t i = 0; i < count; ++i) value = value * dv.base + dv.digits[--index];
        return value;
    };
    if (dv.digits.size() <= chunk_digits) return Natural(take(dv.digits.size()));
    Natural acc;
    const std::size_t head = dv.digits.size() % chunk_digits;
    if (head != 0) acc = Natural(take(head));
    while (index > 0) acc.mul_add_u64(chunk, take(chunk_digits));
    return acc;
}

DigitVector schoolbook_mul(const DigitVector& a, const DigitVector& c) {
    if (a.base != c.base) {
        throw std::invalid_argument("schoolbook_mul: base mismatch (" + std::to_string(a.base) +
                                    " vs " + std::to_string(c.base) + ")");
    }
    require_base(a.base);
    DigitVector out{a.base, {}};
    if (a.digits.empty() || c.digits.empty()) return out;
    out.digits.assign(a.digits.size() + c.digits.size(), 0);
    if (a.base <= UINT32_MAX) {
        // digit*digit + digit + carry < base^2 fits a 64-bit word
        const uint64_t base = a.base;
        for (std::size_t j = 0; j < c.digits.size(); ++j) {
            uint64_t carry = 0;
            for (std::size_t i = 0; i < a.digits.size(); ++i) {
                const uint64_t t = a.digits[i] * c.digits[j] + out.digits[i + j] + carry;
                out.digits[i + j] = t % base;
                carry = t / base;
            }
            out.digits[j + a.digits.size()] = carry;
        }
    } else {
        const uint128 base = a.base;
        for (std::size_t j = 0; j < c.digits.size(); ++j) {
            uint64_t carry = 0;
            for (std::size_t i = 0; i < a.digits.size(); ++i) {
                const uint128 t = (uint128)a.digits[i] * c.digits[j] + out.digits[i + j] + carry;
                out.digits[i + j] = (uint64_t)(t % base);
                carry = (uint64_t)(t / base);
            }
            out.digits[j + a.digits.size()] = carry;
        }
    }
    while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
    return out;
}

}  // namespace toomk
