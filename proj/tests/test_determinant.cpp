#include <doctest.h>

#include <random>

#include "appell/determinant.hpp"
#include "support.hpp"

using namespace appell;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, bool hessenberg) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!hessenberg || j <= i + 1) m(i, j) = testing::random_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("appell Hessenberg layout") {
    const std::vector<Rational> D{1, Rational(1, 2), Rational(1, 6), Rational(1, 24)};
    const RationalMatrix m = appell_hessenberg_matrix(D, 3);
    CHECK(m(0, 0) == Rational(1, 2));
    CHECK(m(0, 1) == Rational(1));
    CHECK(m(0, 2) == Rational(0));
    CHECK(m(1, 0) == Rational(1, 6));
    CHECK(m(2, 0) == Rational(1, 24));
    CHECK(m(2, 1) == Rational(1, 6));
    CHECK(m(2, 2) == Rational(1, 2));
    CHECK(m.is_lower_hessenberg());
    CHECK_THROWS_AS(appell_hessenberg_matrix(D, 4), std::out_of_range);
}

TEST_CASE("2x2 by hand") {
    RationalMatrix m(2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1);
    m(1, 0) = Rational(1, 6);
    m(1, 1) = Rational(1, 2);
    CHECK(hessenberg_leading_minors(m).back() == Rational(1, 12));
    CHECK(bareiss_determinant(m) == Rational(1, 12));
}

TEST_CASE("kernels agree with the Leibniz expansion") {
    std::mt19937_64 rng(41);
    for (std::size_t n = 0; n <= 6; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            const RationalMatrix h = random_matrix(rng, n, true);
            const Rational expected = testing::leibniz_determinant(h);
            const auto minors = hessenberg_leading_minors(h);
            REQUIRE(minors.size() == n + 1);
            CHECK(minors[n] == expected);
            for (std::size_t k = 0; k <= n; ++k) CHECK(minors[k] == testing::leibniz_determinant(h.leading_block(k)));
            CHECK(bareiss_determinant(h) == expected);

            const RationalMatrix full = random_matrix(rng, n, false);
            CHECK(bareiss_determinant(full) == testing::leibniz_determinant(full));
        }
    }
}

TEST_CASE("zero pivots and singular matrices") {
    RationalMatrix m(3);
    m(0, 1) = Rational(1);
    m(1, 0) = Rational(2);
    m(1, 2) = Rational(1);
    m(2, 0) = Rational(3);
    m(2, 1) = Rational(1, 2);
    m(2, 2) = Rational(5);
    CHECK(bareiss_determinant(m) == testing::leibniz_determinant(m));
    CHECK(hessenberg_leading_minors(m).back() == testing::leibniz_determinant(m));

    RationalMatrix singular(3);
    for (std::size_t j = 0; j < 3; ++j) {
        singular(0, j) = Rational(static_cast<long>(j) + 1);
        singular(1, j) = Rational(2 * (static_cast<long>(j) + 1));
        singular(2, j) = Rational(1, 3);
    }
    CHECK(bareiss_determinant(singular) == Rational(0));
}

TEST_CASE("non-Hessenberg input is rejected") {
    RationalMatrix m(3);
    m(0, 2) = Rational(1);
    CHECK_FALSE(m.is_lower_hessenberg());
    CHECK_THROWS_AS(hessenberg_leading_minors(m), std::invalid_argument);
}

TEST_CASE("stats report intermediate size") {
    std::vector<Rational> D{1};
    for (long e = 1; e <= 12; ++e) D.emplace_back(1, e + 1);
    DeterminantStats hs;
    DeterminantStats bs;
    const auto m = appell_hessenberg_matrix(D, 12);
    const Rational a = hessenberg_leading_minors(m, &hs).back();
    const Rational b = bareiss_determinant(m, &bs);
    CHECK(a == b);
    CHECK(hs.max_numerator_bits > 0);
    CHECK(bs.max_numerator_bits > 0);
}
