#include "appell/engine.hpp"

#include <sstream>
#include <stdexcept>

#include "appell/error.hpp"
#include "appell/families.hpp"

namespace appell {

CoefficientSequence::CoefficientSequence(std::vector<Rational> d) : d_(std::move(d)) {
    if (d_.empty() || d_[0] != Rational(1)) throw NormalizationError();
}

CoefficientSequence CoefficientSequence::prefix(std::size_t n_max) const {
    if (n_max > this->n_max()) {
        throw InsufficientPrecision("coefficient sequence known through n = " + std::to_string(this->n_max()) +
                                    ", requested " + std::to_string(n_max));
    }
    return CoefficientSequence(std::vector<Rational>(d_.begin(), d_.begin() + static_cast<long>(n_max) + 1));
}

TruncatedSeries CoefficientSequence::ordinary_series() const {
    std::vector<Rational> c(d_.size());
    BigInt fact = 1;
    for (std::size_t m = 0; m < d_.size(); ++m) {
        if (m > 0) fact *= static_cast<unsigned long>(m);
        c[m] = d_[m] / Rational(fact);
    }
    return TruncatedSeries(std::move(c));
}

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::recurrence: return "recurrence";
        case Algorithm::composition: return "composition";
        case Algorithm::determinant: return "determinant";
        case Algorithm::inversion: return "inversion";
    }
    return "unknown";
}

PowerCoefficientTable compute_D(const CoefficientSequence& seq, unsigned r) {
    if (r == 0) throw std::invalid_argument("order r must be positive");
    const TruncatedSeries h = series_pow(seq.ordinary_series(), r);
    return PowerCoefficientTable{r, std::vector<Rational>(h.coeffs().begin(), h.coeffs().end())};
}

namespace {

void require_range(const PowerCoefficientTable& D, std::size_t n_max) {
    if (D.D.empty() || n_max > D.n_max()) {
        throw InsufficientPrecision("D table known through e = " + std::to_string(D.D.empty() ? 0 : D.n_max()) +
                                    ", requested n = " + std::to_string(n_max));
    }
}

PowerCoefficientTable table_for(const CoefficientSequence& seq, unsigned r, std::size_t n_max) {
    return compute_D(seq.prefix(n_max), r);
}

}  // namespace

RelatedNumberTable related_numbers_recurrence(const PowerCoefficientTable& D, std::size_t n_max) {
    require_range(D, n_max);
    // b_m = a_m / m!
    std::vector<Rational> b(n_max + 1);
    std::vector<Rational> a(n_max + 1);
    b[0] = Rational(1);
    a[0] = Rational(1);
    BigInt fact = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc;
        for (std::size_t m = 0; m < n; ++m) {
            if (D.D[n - m].is_zero() || b[m].is_zero()) continue;
            acc += D.D[n - m] * b[m];
        }
        b[n] = -acc;
        fact *= static_cast<unsigned long>(n);
        a[n] = b[n] * Rational(fact);
    }
    return RelatedNumberTable{D.r, std::move(a), Algorithm::recurrence};
}

RelatedNumberTable related_numbers_composition(const PowerCoefficientTable& D, std::size_t n_max, std::size_t cap) {
    if (n_max > cap) throw CombinatorialBlowUp(n_max, cap);
    require_range(D, n_max);
    std::vector<Rational> a(n_max + 1);
    a[0] = Rational(1);
    BigInt fact = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        fact *= static_cast<unsigned long>(n);
        Rational total;
        for (std::size_t k = 1; k <= n; ++k) {
            Rational by_k;
            Compositions gen(n, k, CompositionKind::strict, cap);
            while (gen.next()) {
                Rational prod(1);
                for (std::size_t e : gen.current()) {
                    prod *= D.D[e];
                    if (prod.is_zero()) break;
                }
                by_k += prod;
            }
            if (k % 2 == 1) total -= by_k;
            else total += by_k;
        }
        a[n] = total * Rational(fact);
    }
    return RelatedNumberTable{D.r, std::move(a), Algorithm::composition};
}

RelatedNumberTable related_numbers_determinant(const PowerCoefficientTable& D, std::size_t n_max,
                                               DeterminantKernel kernel) {
    require_range(D, n_max);
    std::vector<Rational> a(n_max + 1);
    a[0] = Rational(1);
    if (kernel == DeterminantKernel::hessenberg) {
        // Leading minors of M_nmax are exactly M_1, ..., M_nmax.
        const std::vector<Rational> minors = hessenberg_leading_minors(appell_hessenberg_matrix(D.D, n_max));
        BigInt fact = 1;
        for (std::size_t n = 1; n <= n_max; ++n) {
            fact *= static_cast<unsigned long>(n);
            a[n] = minors[n] * Rational(n % 2 == 0 ? fact : BigInt(-fact));
        }
    } else {
        BigInt fact = 1;
        for (std::size_t n = 1; n <= n_max; ++n) {
            fact *= static_cast<unsigned long>(n);
            const Rational det = bareiss_determinant(appell_hessenberg_matrix(D.D, n));
            a[n] = det * Rational(n % 2 == 0 ? fact : BigInt(-fact));
        }
    }
    return RelatedNumberTable{D.r, std::move(a), Algorithm::determinant};
}

RelatedNumberTable related_numbers_recurrence(const CoefficientSequence& seq, unsigned r, std::size_t n_max) {
    return related_numbers_recurrence(table_for(seq, r, n_max), n_max);
}

RelatedNumberTable related_numbers_composition(const CoefficientSequence& seq, unsigned r, std::size_t n_max,
                                               std::size_t cap) {
    if (n_max > cap) throw CombinatorialBlowUp(n_max, cap);
    return related_numbers_composition(table_for(seq, r, n_max), n_max, cap);
}

RelatedNumberTable related_numbers_determinant(const CoefficientSequence& seq, unsigned r, std::size_t n_max,
                                               DeterminantKernel kernel) {
    return related_numbers_determinant(table_for(seq, r, n_max), n_max, kernel);
}

RelatedNumberTable related_numbers_inversion(const CoefficientSequence& seq, unsigned r, std::size_t n_max) {
    if (r == 0) throw std::invalid_argument("order r must be positive");
    const TruncatedSeries inv = series_inverse(series_pow(seq.prefix(n_max).ordinary_series(), r));
    std::vector<Rational> a(n_max + 1);
    BigInt fact = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        a[n] = inv[n] * Rational(fact);
    }
    return RelatedNumberTable{r, std::move(a), Algorithm::inversion};
}

std::string CrossVerifyReport::summary() const {
    std::ostringstream os;
    os << "routes:";
    for (const auto& r : routes) os << ' ' << r;
    if (agree) {
        os << "; all agree";
    } else {
        os << "; first mismatch at n = " << *first_mismatch << " (" << mismatching_route << ")";
    }
    return os.str();
}

CrossVerifyReport compare_routes(const std::vector<NamedValues>& routes) {
    CrossVerifyReport report;
    for (const auto& r : routes) report.routes.push_back(r.name);
    if (routes.size() < 2) return report;
    const auto& reference = routes.front().values;
    for (std::size_t i = 1; i < routes.size(); ++i) {
        const auto& other = routes[i].values;
        const std::size_t common = std::min(reference.size(), other.size());
        for (std::size_t n = 0; n < common; ++n) {
            if (reference[n] != other[n]) {
                if (!report.first_mismatch || n < *report.first_mismatch) {
                    report.agree = false;
                    report.first_mismatch = n;
                    report.mismatching_route = routes[i].name;
                }
                break;
            }
        }
    }
    return report;
}

CrossVerifyReport cross_verify(const CoefficientSequence& seq, unsigned r, std::size_t n_max, std::size_t cap) {
    const PowerCoefficientTable D = table_for(seq, r, n_max);
    const std::size_t comp_to = std::min(n_max, cap);
    std::vector<NamedValues> routes{
        {"recurrence", related_numbers_recurrence(D, n_max).a},
        {"determinant:hessenberg", related_numbers_determinant(D, n_max, DeterminantKernel::hessenberg).a},
        {"determinant:bareiss", related_numbers_determinant(D, n_max, DeterminantKernel::bareiss).a},
        {"composition", related_numbers_composition(D, comp_to, cap).a},
        {"inversion", related_numbers_inversion(seq, r, n_max).a},
    };
    CrossVerifyReport report = compare_routes(routes);
    report.composition_checked_to = comp_to;
    return report;
}

std::vector<Rational> proposition_residuals(const PowerCoefficientTable& D, const RelatedNumberTable& table) {
    require_range(D, table.n_max());
    std::vector<Rational> out(table.a.size());
    std::vector<Rational> b(table.a.size());
    BigInt fact = 1;
    for (std::size_t m = 0; m < b.size(); ++m) {
        if (m > 0) fact *= static_cast<unsigned long>(m);
        b[m] = table.a[m] / Rational(fact);
    }
    for (std::size_t n = 0; n < out.size(); ++n) {
        Rational acc;
        for (std::size_t m = 0; m <= n; ++m) acc += D.D[n - m] * b[m];
        out[n] = std::move(acc);
    }
    return out;
}

AppellPolynomial appell_polynomial(const RelatedNumberTable& table, std::size_t n) {
    if (n > table.n_max()) {
        throw std::out_of_range("degree " + std::to_string(n) + " exceeds table range " +
                                std::to_string(table.n_max()));
    }
    AppellPolynomial p{n, table.r, std::vector<Rational>(n + 1)};
    for (std::size_t j = 0; j <= n; ++j) {
        p.coeffs_in_z[j] = Rational(binomial(n, static_cast<long>(j))) * table.a[n - j];
    }
    return p;
}

Rational polynomial_eval(std::span<const Rational> coeffs, const Rational& z) {
    Rational acc;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
    return acc;
}

Rational polynomial_eval(const AppellPolynomial& p, const Rational& z) { return polynomial_eval(p.coeffs_in_z, z); }

std::vector<Rational> polynomial_derivative(std::span<const Rational> coeffs) {
    if (coeffs.size() <= 1) return {Rational(0)};
    std::vector<Rational> out(coeffs.size() - 1);
    for (std::size_t j = 1; j < coeffs.size(); ++j) out[j - 1] = coeffs[j] * Rational(static_cast<long>(j));
    return out;
}

namespace {

Rational int_power(long base, unsigned n) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), n);
    return Rational(out);
}

}  // namespace

std::pair<Rational, Rational> power_sum_check(unsigned n, unsigned m) {
    Rational direct;
    for (unsigned j = 1; j <= m; ++j) direct += int_power(j, n);

    const auto seq = family_coefficients(Bernoulli{}, n + 1);
    const auto table = related_numbers_recurrence(seq, 1, n + 1);
    const auto poly = appell_polynomial(table, n + 1);
    const Rational via_poly =
        (polynomial_eval(poly, Rational(static_cast<long>(m) + 1)) - table.a[n + 1]) / Rational(static_cast<long>(n) + 1);
    return {direct, via_poly};
}

std::pair<Rational, Rational> alt_power_sum_check(unsigned n, unsigned m) {
    Rational direct;
    for (unsigned j = 1; j <= m; ++j) {
        if (j % 2 == 1) direct += int_power(j, n);
        else direct -= int_power(j, n);
    }

    const auto seq = family_coefficients(Euler{}, n);
    const auto table = related_numbers_recurrence(seq, 1, n);
    const auto poly = appell_polynomial(table, n);
    Rational at_m1 = polynomial_eval(poly, Rational(static_cast<long>(m) + 1));
    if (m % 2 == 1) at_m1 = -at_m1;
    const Rational via_poly = -(at_m1 + polynomial_eval(poly, Rational(0))) / Rational(2);
    return {direct, via_poly};
}

}  // namespace appell
