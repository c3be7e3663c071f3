#include "appell/families.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

#include "appell/combinatorics.hpp"
#include "appell/error.hpp"

namespace appell {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw std::invalid_argument("hypergeometric parameters M and N must be positive");
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const Bernoulli&) -> std::string { return "bernoulli"; },
                          [](const Euler&) -> std::string { return "euler"; },
                          [](const HyperBernoulli& f) {
                              return "hyper-bernoulli(" + std::to_string(f.m) + "," + std::to_string(f.n) + ")";
                          },
                          [](const HyperCauchy& f) {
                              return "hyper-cauchy(" + std::to_string(f.m) + "," + std::to_string(f.n) + ")";
                          },
                          [](const Custom&) -> std::string { return "custom"; },
                      },
                      spec);
}

CoefficientSequence family_coefficients(const FamilySpec& spec, std::size_t n_max) {
    std::vector<Rational> d(n_max + 1);
    std::visit(overloaded{
                   [&](const Bernoulli&) {
                       for (std::size_t n = 0; n <= n_max; ++n) d[n] = Rational(1, static_cast<long>(n) + 1);
                   },
                   [&](const Euler&) {
                       d[0] = Rational(1);
                       for (std::size_t n = 1; n <= n_max; ++n) d[n] = Rational(1, 2);
                   },
                   [&](const HyperBernoulli& f) {
                       require_positive(f.m, f.n);
                       // Ratio of consecutive terms: (M+n)/(M+N+n).
                       Rational term(1);
                       for (std::size_t n = 0; n <= n_max; ++n) {
                           d[n] = term;
                           term *= Rational(static_cast<long>(f.m + n), static_cast<long>(f.m + f.n + n));
                       }
                   },
                   [&](const HyperCauchy& f) {
                       require_positive(f.m, f.n);
                       const Rational m(static_cast<long>(f.m));
                       const Rational nn(static_cast<long>(f.n));
                       for (std::size_t n = 0; n <= n_max; ++n) {
                           Rational v = rising_factorial(m, n) * rising_factorial(nn, n) /
                                        rising_factorial(nn + Rational(1), n);
                           d[n] = n % 2 == 0 ? v : -v;
                       }
                   },
                   [&](const Custom& f) {
                       if (f.d.empty() || f.d[0] != Rational(1)) throw NormalizationError();
                       if (f.d.size() < n_max + 1) {
                           throw InsufficientPrecision("custom family has " + std::to_string(f.d.size()) +
                                                       " values, need " + std::to_string(n_max + 1));
                       }
                       std::copy(f.d.begin(), f.d.begin() + static_cast<long>(n_max) + 1, d.begin());
                   },
               },
               spec);
    return CoefficientSequence(std::move(d));
}

FamilyIdentityReport family_identity_checks(const FamilySpec& spec, std::size_t n_max) {
    const auto* hb = std::get_if<HyperBernoulli>(&spec);
    if (hb == nullptr || hb->m != 1) {
        throw std::invalid_argument("family_identity_checks applies to hyper-bernoulli(1, N) only");
    }
    const CoefficientSequence seq = family_coefficients(spec, n_max);
    FamilyIdentityReport report;
    report.checked_to = n_max;
    const BigInt n_fact = factorial(hb->n);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational expected(factorial(n) * n_fact, factorial(hb->n + n));
        if (seq[n] != expected) {
            report.ok = false;
            report.first_failure = n;
            break;
        }
    }
    return report;
}

std::vector<Rational> parse_custom_family(std::istream& in) {
    std::vector<Rational> d;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            d.push_back(Rational::parse(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (d.empty() || d[0] != Rational(1)) throw NormalizationError();
    return d;
}

std::vector<Rational> load_custom_family(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open custom family file: " + path.string());
    return parse_custom_family(in);
}

}  // namespace appell
