#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "appell/engine.hpp"
#include "appell/rational.hpp"

namespace appell {

/// f(t) = (e^t - 1)/t, d_n = 1/(n+1).
struct Bernoulli {};
/// f(t) = (e^t + 1)/2, d_0 = 1 and d_n = 1/2 otherwise.
struct Euler {};
/// f(t) = 1F1(M; M+N; t), d_n = (M)^(n) / (M+N)^(n).
struct HyperBernoulli {
    unsigned m = 1;
    unsigned n = 1;
};
/// f(t) = 2F1(M, N; N+1; -t), d_n = (-1)^n (M)^(n) (N)^(n) / (N+1)^(n).
struct HyperCauchy {
    unsigned m = 1;
    unsigned n = 1;
};
/// User-supplied d_0, d_1, ...; d_0 must be 1.
struct Custom {
    std::vector<Rational> d;
};

using FamilySpec = std::variant<Bernoulli, Euler, HyperBernoulli, HyperCauchy, Custom>;

/// "bernoulli", "euler", "hyper-bernoulli(M,N)", "hyper-cauchy(M,N)", "custom".
std::string family_name(const FamilySpec& spec);

/// Throws std::invalid_argument for M or N of zero, NormalizationError for a
/// custom list whose first entry is not 1, InsufficientPrecision for a custom
/// list shorter than n_max + 1.
CoefficientSequence family_coefficients(const FamilySpec& spec, std::size_t n_max);

struct FamilyIdentityReport {
    bool ok = true;
    std::optional<std::size_t> first_failure;
    std::size_t checked_to = 0;
};

/// For hyper_bernoulli(1, N): d_n == n! N! / (N+n)! for n <= n_max.
FamilyIdentityReport family_identity_checks(const FamilySpec& spec, std::size_t n_max);

/// One "p/q" per line; blank lines and '#' comments skipped; first value must be 1.
std::vector<Rational> parse_custom_family(std::istream& in);
std::vector<Rational> load_custom_family(const std::filesystem::path& path);

}  // namespace appell
