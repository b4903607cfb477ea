#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/rational.hpp"

using namespace hitchin;

TEST_CASE("field arithmetic in Q(i)") {
    GaussianRational a = gri(1, 2, 3, 4);   // 1/2 + 3/4 i
    GaussianRational b = gri(-2, 3, 1, 6);  // -2/3 + 1/6 i

    CHECK(a + b == gri(-1, 6, 11, 12));
    CHECK(a - b == gri(7, 6, 7, 12));
    CHECK(a * b == gri(-11, 24, -5, 12));
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == GaussianRational(a.norm()));
    CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("i squares to -1") {
    GaussianRational i = gri(0, 1, 1, 1);
    CHECK(i * i == gr(-1));
    CHECK(pow(i, 4u) == gr(1));
}

TEST_CASE("pow") {
    CHECK(pow(gr(-3, 2), 3u) == gr(-27, 8));
    CHECK(pow(gri(1, 1, 1, 1), 2u) == gri(0, 1, 2, 1));
    CHECK(pow(Rational(2, 3), 4u) == Rational(16, 81));
    CHECK(pow(gr(7), 0u) == gr(1));
}

TEST_CASE("ceil and integrality") {
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(rational_ceil(Rational(-7, 2)) == -3);
    CHECK(rational_ceil(Rational(6, 2)) == 3);
    CHECK(rational_ceil(Rational(0)) == 0);
    CHECK(is_integer(Rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(1, 3)));
}

TEST_CASE("exactness survives operations that lose precision in floats") {
    // (1/3 + 1/3 + 1/3) - 1 is exactly zero.
    GaussianRational third = gr(1, 3);
    CHECK((third + third + third - gr(1)).is_zero());
    // Repeated squaring keeps exact denominators.
    GaussianRational x = gr(1, 10);
    for (int k = 0; k < 5; ++k) x *= x;
    CHECK(x == GaussianRational(Rational(1) / pow(Rational(10), 32u)));
}

TEST_CASE("to_complex") {
    CHECK(gri(1, 2, -1, 4).to_complex() == std::complex<double>(0.5, -0.25));
}
