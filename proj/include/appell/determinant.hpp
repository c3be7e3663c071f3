#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Dense row-major square matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t size) : size_(size), data_(size * size) {}

    std::size_t size() const noexcept { return size_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

    /// True when every entry above the first superdiagonal is zero.
    bool is_lower_hessenberg() const;

    /// Top-left k x k block.
    RationalMatrix leading_block(std::size_t k) const;

private:
    std::size_t size_ = 0;
    std::vector<Rational> data_;
};

/// The n x n matrix with M[i][i+1] = 1, M[i][j] = D[i-j+1] for j <= i and
/// zeros above the superdiagonal. D is indexed by e, so D[1..n] are used.
RationalMatrix appell_hessenberg_matrix(std::span<const Rational> D, std::size_t n);

enum class DeterminantKernel { hessenberg, bareiss };

struct DeterminantStats {
    std::size_t max_numerator_bits = 0;
};

/// Leading principal minors det_0 = 1, det_1, ..., det_n of a lower-Hessenberg
/// matrix, by expansion along the last row:
///   det_k = sum_j (-1)^(k-1-j) H[k-1][j] * H[j][j+1]...H[k-2][k-1] * det_j.
/// Throws std::invalid_argument when the matrix is not lower Hessenberg.
std::vector<Rational> hessenberg_leading_minors(const RationalMatrix& m, DeterminantStats* stats = nullptr);

/// Determinant via fraction-free (Bareiss) elimination with row pivoting on
/// the integer matrix L*M, where L is the lcm of the entry denominators.
Rational bareiss_determinant(const RationalMatrix& m, DeterminantStats* stats = nullptr);

}  // namespace appell
