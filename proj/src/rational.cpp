#include "appell/rational.hpp"

#include <cctype>
#include <ostream>

#include "appell/error.hpp"

namespace appell {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DivisionByZero();
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    if (value_.get_den() == 0) throw DivisionByZero();
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s, true)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(parse_integer(s));
    }
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num), parse_integer(den));
}

std::size_t Rational::numerator_bits() const { return bit_length(value_.get_num()); }

std::string Rational::to_string() const {
    std::string out = value_.get_num().get_str();
    if (value_.get_den() != 1) {
        out += '/';
        out += value_.get_den().get_str();
    }
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
Rational rat_sub(const Rational& a, const Rational& b) { return a - b; }
Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
Rational rat_div(const Rational& a, const Rational& b) { return a / b; }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

std::size_t bit_length(const BigInt& value) {
    if (value == 0) return 0;
    return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace appell
