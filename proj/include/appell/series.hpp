#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Formal power series c_0 + c_1 t + ... + c_K t^K known through order K.
/// Coefficients are ordinary (not exponential). Terms above K are unknown,
/// so every binary operation truncates to the smaller operand order.
class TruncatedSeries {
public:
    /// The constant series 1 through order 0.
    TruncatedSeries() : coeffs_{Rational(1)} {}
    /// Throws std::invalid_argument on an empty coefficient list.
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    TruncatedSeries(std::initializer_list<Rational> coeffs)
        : TruncatedSeries(std::vector<Rational>(coeffs)) {}

    static TruncatedSeries constant(const Rational& value, std::size_t order);
    static TruncatedSeries one(std::size_t order) { return constant(Rational(1), order); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t m) const { return coeffs_.at(m); }

    /// Drops coefficients above `order`; asking for more precision than is
    /// known throws InsufficientPrecision.
    TruncatedSeries truncated(std::size_t order) const;

    /// Ordered list of "p/q" strings.
    std::vector<std::string> serialize() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s);

/// Cauchy product through min(a.order(), b.order()).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/// a^r by binary exponentiation; a^0 is the constant 1 at a's order.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long r);

/// Multiplicative inverse; throws NotInvertible when a_0 = 0.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// Hasse-Teichmueller derivative H^(n): c_m t^m -> c_m C(m, n) t^(m-n).
/// The result is known through order K - n; n > K throws InsufficientPrecision
/// because no coefficient of the result would be known.
TruncatedSeries ht_derivative(const TruncatedSeries& a, std::size_t n);

/// Constant term of H^(n)(a), i.e. a.coeffs[n]. Throws InsufficientPrecision
/// when n exceeds the truncation order.
Rational ht_eval_at_zero(const TruncatedSeries& a, std::size_t n);

}  // namespace appell
