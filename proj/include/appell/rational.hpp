#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace appell {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1. Equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& numerator, const BigInt& denominator);
    explicit Rational(const mpq_class& value);

    /// Parses "p/q", "-p/q" or "p". Surrounding whitespace is ignored.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Bit length of |numerator|.
    std::size_t numerator_bits() const;

    /// "p/q" in lowest terms; integers without "/q".
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    Rational operator-() const;

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
/// Throws DivisionByZero when b is zero.
Rational rat_div(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Bit length of |value| (0 for zero).
std::size_t bit_length(const BigInt& value);

}  // namespace appell

template <>
struct std::hash<appell::Rational> {
    std::size_t operator()(const appell::Rational& q) const {
        return std::hash<std::string>{}(q.to_string());
    }
};
