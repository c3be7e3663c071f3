#include "appell/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

#include "appell/error.hpp"

namespace appell {

BigInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational rising_factorial(const Rational& x, unsigned long n) {
    Rational out(1);
    Rational term = x;
    for (unsigned long i = 0; i < n; ++i) {
        out *= term;
        term += Rational(1);
    }
    return out;
}

Compositions::Compositions(std::size_t n, std::size_t k, CompositionKind kind, std::size_t cap)
    : n_(n), min_part_(kind == CompositionKind::strict ? 1 : 0) {
    if (k == 0) throw std::invalid_argument("compositions: k must be positive");
    if (n > cap) throw CombinatorialBlowUp(n, cap);
    if (min_part_ * k > n) {
        exhausted_ = true;
        return;
    }
    // Lexicographically smallest tuple: minimal parts, remainder in the last slot.
    parts_.assign(k, min_part_);
    parts_.back() = n - min_part_ * (k - 1);
}

bool Compositions::next() {
    if (exhausted_) return false;
    if (!started_) {
        started_ = true;
        return true;
    }
    const std::size_t k = parts_.size();
    // Rightmost non-final slot that can take one unit from the suffix.
    std::size_t suffix = parts_.back();
    for (std::size_t i = k - 1; i-- > 0;) {
        const std::size_t slots_after = k - 1 - i;
        if (suffix >= 1 + slots_after * min_part_) {
            ++parts_[i];
            const std::size_t remaining = suffix - 1;
            for (std::size_t j = i + 1; j + 1 < k; ++j) parts_[j] = min_part_;
            parts_.back() = remaining - (slots_after - 1) * min_part_;
            return true;
        }
        suffix += parts_[i];
    }
    exhausted_ = true;
    parts_.clear();
    return false;
}

std::vector<std::vector<std::size_t>> all_compositions(std::size_t n, std::size_t k, CompositionKind kind,
                                                       std::size_t cap) {
    std::vector<std::vector<std::size_t>> out;
    Compositions gen(n, k, kind, cap);
    while (gen.next()) out.emplace_back(gen.current().begin(), gen.current().end());
    return out;
}

}  // namespace appell
