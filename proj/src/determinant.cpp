#include "appell/determinant.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace appell {

bool RationalMatrix::is_lower_hessenberg() const {
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = i + 2; j < size_; ++j) {
            if (!(*this)(i, j).is_zero()) return false;
        }
    }
    return true;
}

RationalMatrix RationalMatrix::leading_block(std::size_t k) const {
    if (k > size_) throw std::out_of_range("leading_block larger than matrix");
    RationalMatrix out(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    }
    return out;
}

RationalMatrix appell_hessenberg_matrix(std::span<const Rational> D, std::size_t n) {
    if (n >= D.size() && n > 0) throw std::out_of_range("D table too short for the requested matrix size");
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = D[i - j + 1];
        if (i + 1 < n) m(i, i + 1) = Rational(1);
    }
    return m;
}

std::vector<Rational> hessenberg_leading_minors(const RationalMatrix& m, DeterminantStats* stats) {
    if (!m.is_lower_hessenberg()) throw std::invalid_argument("matrix is not lower Hessenberg");
    const std::size_t n = m.size();
    std::vector<Rational> det(n + 1);
    det[0] = Rational(1);
    std::size_t max_bits = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        Rational super(1);  // H[j][j+1] ... H[k-2][k-1]
        bool negative = false;
        for (std::size_t j = k; j-- > 0;) {
            if (j + 1 < k) {
                super *= m(j, j + 1);
                negative = !negative;
            }
            if (super.is_zero()) break;
            const Rational& entry = m(k - 1, j);
            if (entry.is_zero() || det[j].is_zero()) continue;
            Rational term = entry * super * det[j];
            if (negative) acc -= term;
            else acc += term;
            max_bits = std::max(max_bits, acc.numerator_bits());
        }
        det[k] = std::move(acc);
    }
    if (stats) stats->max_numerator_bits = max_bits;
    return det;
}

Rational bareiss_determinant(const RationalMatrix& m, DeterminantStats* stats) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);

    BigInt lift = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt den = m(i, j).denominator();
            mpz_lcm(lift.get_mpz_t(), lift.get_mpz_t(), den.get_mpz_t());
        }
    }

    std::vector<BigInt> a(n * n);
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
    std::size_t max_bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = m(i, j);
            at(i, j) = q.numerator() * (lift / q.denominator());
            max_bits = std::max(max_bits, bit_length(at(i, j)));
        }
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && at(pivot, k) == 0) ++pivot;
            if (pivot == n) {
                if (stats) stats->max_numerator_bits = max_bits;
                return Rational(0);
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                max_bits = std::max(max_bits, bit_length(v));
                at(i, j) = std::move(v);
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    if (stats) stats->max_numerator_bits = max_bits;

    BigInt lift_power;
    mpz_pow_ui(lift_power.get_mpz_t(), lift.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(sign * at(n - 1, n - 1), lift_power);
}

}  // namespace appell
