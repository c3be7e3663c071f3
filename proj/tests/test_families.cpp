#include <doctest.h>

#include <sstream>

#include "appell/error.hpp"
#include "appell/families.hpp"
#include "support.hpp"

using namespace appell;

TEST_CASE("catalog coefficients") {
    const auto b = family_coefficients(Bernoulli{}, 5);
    CHECK(b[1] == Rational(1, 2));
    CHECK(b[5] == Rational(1, 6));

    const auto e = family_coefficients(Euler{}, 3);
    CHECK(e.values()[0] == Rational(1));
    CHECK(e[3] == Rational(1, 2));

    const auto hb = family_coefficients(HyperBernoulli{2, 3}, 4);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(hb[n] == rising_factorial(Rational(2), n) / rising_factorial(Rational(5), n));
    }

    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned nn = 1; nn <= 3; ++nn) {
            const auto hc = family_coefficients(HyperCauchy{m, nn}, 4);
            CHECK(hc[1] == -Rational(static_cast<long>(m * nn), static_cast<long>(nn + 1)));
        }
    }
}

TEST_CASE("every family is normalized") {
    const std::vector<FamilySpec> specs{Bernoulli{}, Euler{}, HyperBernoulli{3, 2}, HyperCauchy{2, 3},
                                        Custom{{1, 5, Rational(-1, 3)}}};
    for (const auto& spec : specs) CHECK(family_coefficients(spec, 2)[0] == Rational(1));
}

TEST_CASE("hyper-bernoulli(1,1) is Bernoulli") {
    const auto a = family_coefficients(HyperBernoulli{1, 1}, 20);
    const auto b = family_coefficients(Bernoulli{}, 20);
    CHECK(std::vector<Rational>(a.values().begin(), a.values().end()) ==
          std::vector<Rational>(b.values().begin(), b.values().end()));
}

TEST_CASE("hyper-cauchy(N,N) telescopes") {
    for (unsigned nn = 1; nn <= 5; ++nn) {
        const Rational N(static_cast<long>(nn));
        for (std::size_t n = 0; n <= 10; ++n) {
            CHECK(rising_factorial(N, n) / rising_factorial(N + Rational(1), n) ==
                  N / (N + Rational(static_cast<long>(n))));
        }
    }
}

TEST_CASE("hyper-cauchy(1,1) reproduces the log-series Cauchy numbers") {
    const auto table = related_numbers_recurrence(family_coefficients(HyperCauchy{1, 1}, 20), 1, 20);
    CHECK(table.a == testing::cauchy_oracle(20));
}

TEST_CASE("family identity for M = 1") {
    for (unsigned nn = 1; nn <= 6; ++nn) {
        const auto report = family_identity_checks(HyperBernoulli{1, nn}, 15);
        CHECK(report.ok);
        CHECK(report.checked_to == 15);
    }
    CHECK(family_coefficients(HyperBernoulli{1, 2}, 2)[2] == Rational(1, 6));
    CHECK(family_coefficients(HyperBernoulli{1, 3}, 0)[0] == Rational(1));
    CHECK_THROWS_AS(family_identity_checks(HyperBernoulli{2, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_identity_checks(Bernoulli{}, 3), std::invalid_argument);
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(family_coefficients(HyperBernoulli{0, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(family_coefficients(HyperCauchy{1, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(family_coefficients(Custom{{2, 1}}, 1), NormalizationError);
    CHECK_THROWS_AS(family_coefficients(Custom{{1, 1}}, 4), InsufficientPrecision);
}

TEST_CASE("custom family file") {
    std::istringstream good("# my family\n1\n\n1/2\n  -3/4\r\n# trailing\n5\n");
    CHECK(parse_custom_family(good) == std::vector<Rational>{1, Rational(1, 2), Rational(-3, 4), 5});

    std::istringstream bad("2\n1/2\n");
    CHECK_THROWS_WITH_AS(parse_custom_family(bad), "normalization violated: d_0 must be 1", NormalizationError);

    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(parse_custom_family(empty), NormalizationError);

    std::istringstream garbage("1\nhalf\n");
    CHECK_THROWS_AS(parse_custom_family(garbage), ParseError);

    CHECK_THROWS_AS(load_custom_family("/nonexistent/path.txt"), Error);
}

TEST_CASE("family names") {
    CHECK(family_name(Bernoulli{}) == "bernoulli");
    CHECK(family_name(HyperCauchy{2, 3}) == "hyper-cauchy(2,3)");
}
