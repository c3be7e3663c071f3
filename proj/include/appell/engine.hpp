#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/determinant.hpp"
#include "appell/rational.hpp"
#include "appell/series.hpp"

namespace appell {

/// Exponential coefficients d_0..d_nmax of f(t) = sum d_n t^n / n!, with d_0 = 1.
class CoefficientSequence {
public:
    /// Throws NormalizationError unless d[0] == 1.
    explicit CoefficientSequence(std::vector<Rational> d);

    std::size_t n_max() const noexcept { return d_.size() - 1; }
    std::span<const Rational> values() const noexcept { return d_; }
    const Rational& operator[](std::size_t n) const { return d_.at(n); }

    /// First n_max + 1 entries; throws InsufficientPrecision if unavailable.
    CoefficientSequence prefix(std::size_t n_max) const;

    /// f(t) with ordinary coefficients d_m / m!, known through n_max.
    TruncatedSeries ordinary_series() const;

private:
    std::vector<Rational> d_;
};

/// D[e] = D_r(e), the ordinary coefficient of t^e in f(t)^r.
struct PowerCoefficientTable {
    unsigned r = 1;
    std::vector<Rational> D;

    std::size_t n_max() const noexcept { return D.size() - 1; }
};

enum class Algorithm { recurrence, composition, determinant, inversion };

std::string_view to_string(Algorithm a);

/// a[n] = a_n^(r), the exponential coefficients of 1 / f(t)^r.
struct RelatedNumberTable {
    unsigned r = 1;
    std::vector<Rational> a;
    Algorithm algorithm = Algorithm::recurrence;

    std::size_t n_max() const noexcept { return a.size() - 1; }
};

/// A_n^(r)(z) = sum_j coeffs_in_z[j] z^j.
struct AppellPolynomial {
    std::size_t n = 0;
    unsigned r = 1;
    std::vector<Rational> coeffs_in_z;
};

PowerCoefficientTable compute_D(const CoefficientSequence& seq, unsigned r);

/// O(n^2) recurrence a_n = -n! sum_{m<n} D_r(n-m) a_m / m!, a_0 = 1.
RelatedNumberTable related_numbers_recurrence(const CoefficientSequence& seq, unsigned r, std::size_t n_max);

/// Sum over strict compositions of n of (-1)^k D_r(e_1)...D_r(e_k), times n!.
/// Exponential in n; throws CombinatorialBlowUp when n_max > cap.
RelatedNumberTable related_numbers_composition(const CoefficientSequence& seq, unsigned r, std::size_t n_max,
                                               std::size_t cap = kDefaultEnumerationCap);

/// a_n = (-1)^n n! det M_n with M_n the lower-Hessenberg matrix of D_r values.
RelatedNumberTable related_numbers_determinant(const CoefficientSequence& seq, unsigned r, std::size_t n_max,
                                               DeterminantKernel kernel);

/// n! [t^n] of series_inverse(f^r).
RelatedNumberTable related_numbers_inversion(const CoefficientSequence& seq, unsigned r, std::size_t n_max);

/// Same as the three above, starting from a precomputed D table.
RelatedNumberTable related_numbers_recurrence(const PowerCoefficientTable& D, std::size_t n_max);
RelatedNumberTable related_numbers_composition(const PowerCoefficientTable& D, std::size_t n_max,
                                               std::size_t cap = kDefaultEnumerationCap);
RelatedNumberTable related_numbers_determinant(const PowerCoefficientTable& D, std::size_t n_max,
                                               DeterminantKernel kernel);

struct NamedValues {
    std::string name;
    std::vector<Rational> values;
};

struct CrossVerifyReport {
    bool agree = true;
    /// Smallest n at which some route differs from the first one.
    std::optional<std::size_t> first_mismatch;
    std::string mismatching_route;
    std::vector<std::string> routes;
    /// Highest n the composition route was run to (it stops at the cap).
    std::size_t composition_checked_to = 0;

    std::string summary() const;
};

/// Compares every route against the first over their common index range.
CrossVerifyReport compare_routes(const std::vector<NamedValues>& routes);

/// Runs recurrence, both determinant kernels, composition (up to the cap) and
/// direct inversion of f^r, and reports the first disagreement.
CrossVerifyReport cross_verify(const CoefficientSequence& seq, unsigned r, std::size_t n_max,
                               std::size_t cap = kDefaultEnumerationCap);

/// Left side of sum_{m=0}^{n} D_r(n-m) a_m / m! for every n; all entries but
/// the 0th must vanish.
std::vector<Rational> proposition_residuals(const PowerCoefficientTable& D, const RelatedNumberTable& table);

/// A_n^(r)(z) = sum_m C(n, m) a_m z^(n-m). Throws std::out_of_range if n > n_max.
AppellPolynomial appell_polynomial(const RelatedNumberTable& table, std::size_t n);

Rational polynomial_eval(const AppellPolynomial& p, const Rational& z);
Rational polynomial_eval(std::span<const Rational> coeffs, const Rational& z);

/// Formal d/dz of an ascending coefficient vector.
std::vector<Rational> polynomial_derivative(std::span<const Rational> coeffs);

/// (sum_{j=1}^m j^n, (B_{n+1}(m+1) - B_{n+1}) / (n+1)).
std::pair<Rational, Rational> power_sum_check(unsigned n, unsigned m);

/// (sum_{j=1}^m (-1)^(j+1) j^n, -((-1)^m E_n(m+1) + E_n(0)) / 2).
std::pair<Rational, Rational> alt_power_sum_check(unsigned n, unsigned m);

}  // namespace appell
