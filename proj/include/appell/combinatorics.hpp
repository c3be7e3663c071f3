#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

inline constexpr std::size_t kDefaultEnumerationCap = 22;

/// C(n, k), with C(n, k) = 0 for k < 0 or k > n.
BigInt binomial(unsigned long n, long k);

BigInt factorial(unsigned long n);

/// x (x+1) ... (x+n-1); equals 1 for n = 0.
Rational rising_factorial(const Rational& x, unsigned long n);

enum class CompositionKind { strict, weak };

/// Enumerates the compositions of n into exactly k parts in lexicographic
/// order. Strict compositions have parts >= 1, weak compositions parts >= 0.
///
///     Compositions gen(4, 2, CompositionKind::strict);
///     while (gen.next()) use(gen.current());
///
/// Throws CombinatorialBlowUp when n exceeds `cap`.
class Compositions {
public:
    Compositions(std::size_t n, std::size_t k, CompositionKind kind,
                 std::size_t cap = kDefaultEnumerationCap);

    /// Advances to the next tuple; false once the stream is exhausted.
    bool next();
    std::span<const std::size_t> current() const noexcept { return parts_; }

private:
    std::size_t n_;
    std::size_t min_part_;
    std::vector<std::size_t> parts_;
    bool started_ = false;
    bool exhausted_ = false;
};

/// Materializes the whole stream; convenient for small cases and tests.
std::vector<std::vector<std::size_t>> all_compositions(std::size_t n, std::size_t k, CompositionKind kind,
                                                       std::size_t cap = kDefaultEnumerationCap);

}  // namespace appell
