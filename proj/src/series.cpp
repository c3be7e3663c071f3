#include "appell/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "appell/combinatorics.hpp"
#include "appell/error.hpp"

namespace appell {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw InsufficientPrecision("cannot extend series known through order " + std::to_string(this->order()) +
                                    " to order " + std::to_string(order));
    }
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

std::vector<std::string> TruncatedSeries::serialize() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 0; m <= order; ++m) c[m] = a[m] + b[m];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 0; m <= order; ++m) c[m] = a[m] - b[m];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc;
        for (std::size_t j = 0; j <= n; ++j) {
            if (a[j].is_zero() || b[n - j].is_zero()) continue;
            acc += a[j] * b[n - j];
        }
        c[n] = std::move(acc);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long r) {
    TruncatedSeries result = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (r > 0) {
        if (r & 1UL) result = series_mul(result, base);
        r >>= 1;
        if (r > 0) base = series_mul(base, base);
    }
    return result;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
    if (a[0].is_zero()) throw NotInvertible();
    const std::size_t order = a.order();
    const Rational inv0 = Rational(1) / a[0];
    std::vector<Rational> b(order + 1);
    b[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t j = 1; j <= n; ++j) {
            if (a[j].is_zero()) continue;
            acc += a[j] * b[n - j];
        }
        b[n] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries ht_derivative(const TruncatedSeries& a, std::size_t n) {
    const std::size_t order = a.order();
    if (n > order) {
        throw InsufficientPrecision("H^(" + std::to_string(n) + ") of a series known through order " +
                                    std::to_string(order) + " has no known coefficients");
    }
    std::vector<Rational> c(order - n + 1);
    for (std::size_t m = n; m <= order; ++m) {
        c[m - n] = a[m] * Rational(binomial(m, static_cast<long>(n)));
    }
    return TruncatedSeries(std::move(c));
}

Rational ht_eval_at_zero(const TruncatedSeries& a, std::size_t n) {
    if (n > a.order()) {
        throw InsufficientPrecision("H^(" + std::to_string(n) + ") at 0 needs order " + std::to_string(n) +
                                    ", series known through " + std::to_string(a.order()));
    }
    return a[n];
}

}  // namespace appell
