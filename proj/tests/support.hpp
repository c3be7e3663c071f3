// Test-only oracles and random generators. Nothing here calls the engine's
// algorithms; the oracles are brute-force restatements of the definitions.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/determinant.hpp"
#include "appell/engine.hpp"
#include "appell/rational.hpp"
#include "appell/series.hpp"

namespace appell::testing {

/// p/q with 1 <= |p| <= 9 (or 0 when allow_zero), 1 <= q <= 9.
inline Rational random_rational(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    long p = num(rng);
    while (!allow_zero && p == 0) p = num(rng);
    return Rational(p, den(rng));
}

inline CoefficientSequence random_sequence(std::mt19937_64& rng, std::size_t n_max) {
    std::vector<Rational> d(n_max + 1);
    d[0] = Rational(1);
    for (std::size_t n = 1; n <= n_max; ++n) d[n] = random_rational(rng);
    return CoefficientSequence(std::move(d));
}

inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool invertible = false) {
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 0; m <= order; ++m) c[m] = random_rational(rng, !(invertible && m == 0));
    return TruncatedSeries(std::move(c));
}

/// Calls fn for every k-tuple of nonnegative (or positive) integers summing to n,
/// by plain recursion.
inline void each_tuple(std::size_t n, std::size_t k, std::size_t min_part,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> parts(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
        if (slot + 1 == k) {
            if (left >= min_part) {
                parts[slot] = left;
                fn(parts);
            }
            return;
        }
        for (std::size_t v = min_part; v <= left; ++v) {
            parts[slot] = v;
            rec(slot + 1, left - v);
        }
    };
    if (k > 0) rec(0, n);
}

/// D_r(e) = sum over i_1+...+i_r = e of d_{i_1}...d_{i_r} / (i_1!...i_r!).
inline Rational literal_D(const CoefficientSequence& seq, unsigned r, std::size_t e) {
    Rational total;
    each_tuple(e, r, 0, [&](const std::vector<std::size_t>& idx) {
        Rational prod(1);
        for (std::size_t i : idx) prod *= seq[i] / Rational(factorial(i));
        total += prod;
    });
    return total;
}

/// Leibniz expansion over all permutations.
inline Rational leibniz_determinant(const RationalMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Rational total;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational prod(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Classical Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0.
inline std::vector<Rational> bernoulli_oracle(std::size_t n_max) {
    std::vector<Rational> b(n_max + 1);
    b[0] = Rational(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc;
        for (std::size_t k = 0; k < n; ++k) acc += Rational(binomial(n + 1, static_cast<long>(k))) * b[k];
        b[n] = -acc / Rational(static_cast<long>(n) + 1);
    }
    return b;
}

/// Classical Cauchy numbers: n! [t^n] of 1 / (log(1+t)/t), with log(1+t)/t
/// written out from its coefficients (-1)^n / (n+1).
inline std::vector<Rational> cauchy_oracle(std::size_t n_max) {
    std::vector<Rational> c(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) c[n] = Rational(n % 2 == 0 ? 1 : -1, static_cast<long>(n) + 1);
    const TruncatedSeries inv = series_inverse(TruncatedSeries(std::move(c)));
    std::vector<Rational> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out[n] = inv[n] * Rational(factorial(n));
    return out;
}

/// Right side of the Hasse-Teichmueller product rule: sum over weak
/// compositions i_1+...+i_k = n of H^(i_1)(f_1)...H^(i_k)(f_k).
inline TruncatedSeries product_rule_rhs(const std::vector<TruncatedSeries>& fs, std::size_t n) {
    std::optional<TruncatedSeries> total;
    each_tuple(n, fs.size(), 0, [&](const std::vector<std::size_t>& idx) {
        TruncatedSeries prod = ht_derivative(fs[0], idx[0]);
        for (std::size_t j = 1; j < fs.size(); ++j) prod = prod * ht_derivative(fs[j], idx[j]);
        total = total ? *total + prod : prod;
    });
    return *total;
}

/// Quotient rule over strict compositions:
/// sum_k (-1)^k f^-(k+1) sum_{i_1+...+i_k=n, i>=1} H^(i_1)(f)...H^(i_k)(f).
inline TruncatedSeries quotient_rule_strict(const TruncatedSeries& f, std::size_t n) {
    const TruncatedSeries inv = series_inverse(f);
    std::optional<TruncatedSeries> total;
    for (std::size_t k = 1; k <= n; ++k) {
        std::optional<TruncatedSeries> inner;
        each_tuple(n, k, 1, [&](const std::vector<std::size_t>& idx) {
            TruncatedSeries prod = ht_derivative(f, idx[0]);
            for (std::size_t j = 1; j < k; ++j) prod = prod * ht_derivative(f, idx[j]);
            inner = inner ? *inner + prod : prod;
        });
        TruncatedSeries term = *inner * series_pow(inv, k + 1) * Rational(k % 2 == 0 ? 1 : -1);
        total = total ? *total + term : term;
    }
    return *total;
}

/// Quotient rule over weak compositions with weight C(n+1, k+1).
inline TruncatedSeries quotient_rule_weak(const TruncatedSeries& f, std::size_t n) {
    const TruncatedSeries inv = series_inverse(f);
    std::optional<TruncatedSeries> total;
    for (std::size_t k = 1; k <= n; ++k) {
        std::optional<TruncatedSeries> inner;
        each_tuple(n, k, 0, [&](const std::vector<std::size_t>& idx) {
            TruncatedSeries prod = ht_derivative(f, idx[0]);
            for (std::size_t j = 1; j < k; ++j) prod = prod * ht_derivative(f, idx[j]);
            inner = inner ? *inner + prod : prod;
        });
        const Rational weight = Rational(binomial(n + 1, static_cast<long>(k + 1))) * Rational(k % 2 == 0 ? 1 : -1);
        TruncatedSeries term = *inner * series_pow(inv, k + 1) * weight;
        total = total ? *total + term : term;
    }
    return *total;
}

}  // namespace appell::testing
