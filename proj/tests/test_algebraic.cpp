#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewweight/algebraic.hpp"

#include <stdexcept>

using namespace fewweight;

TEST_CASE("rational arithmetic: normalization and exactness") {
    Rational a = Rational::frac(2, 4);
    CHECK(a == Rational::frac(1, 2));
    CHECK(a.str() == "1/2");
    CHECK((a + a).as_ll() == 1);
    CHECK((Rational(3) * Rational::frac(1, 3)).as_ll() == 1);
    CHECK((Rational::frac(-6, 4)).str() == "-3/2");
    CHECK(Rational::frac(5, -10) == Rational::frac(-1, 2));
    CHECK((Rational(7) - Rational(7)).is_zero());
    CHECK((Rational::frac(1, 3) / Rational::frac(2, 3)) == Rational::frac(1, 2));
    CHECK_THROWS_AS(Rational::frac(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::frac(1, 2).as_ll(), std::domain_error);
    // overflow is detected, not wrapped
    const long long big = 100000000000000000LL; // 1e17
    Rational huge = Rational(big) * Rational(big); // 1e34 fits in __int128
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("algebraic scalars: ring structure in Q(i, sqrt(p))") {
    const uint32_t p = 3;
    AlgebraicScalar s = AlgebraicScalar::sqrtp(p);
    AlgebraicScalar i = AlgebraicScalar::i_unit(p);
    CHECK((s * s).as_integer() == 3);
    CHECK((i * i).as_integer() == -1);
    CHECK((i * s * i * s).as_integer() == -3);
    CHECK(i.pow(4).as_integer() == 1);
    CHECK(i.pow(3) == -i);

    AlgebraicScalar z = AlgebraicScalar::integer(p, 2) + s * Rational::frac(1, 2);
    CHECK(z.str() == "2+1/2*sqrt(3)");
    CHECK(!z.is_rational());
    CHECK_THROWS_AS(z.as_integer(), std::domain_error);

    // conjugation fixes sqrt(p) and flips i
    AlgebraicScalar w = AlgebraicScalar(p, 1, 2, 3, 4);
    CHECK(w.conj() == AlgebraicScalar(p, 1, 2, -3, -4));
    // w * conj(w) is real (though it may keep a sqrt(p) part)
    CHECK((w * w.conj()).im0().is_zero());
    CHECK((w * w.conj()).im1().is_zero());
    CHECK((w * w.conj()) == AlgebraicScalar(p, 70, 28));

    // |a + b*sqrt(p) + i(c + d*sqrt(p))|^2 via to_complex
    const auto c = w.to_complex();
    const auto n = (w * w.conj()).to_complex();
    CHECK(std::abs(c * std::conj(c) - n) < 1e-9);

    CHECK_THROWS_AS(AlgebraicScalar::sqrtp(3) * AlgebraicScalar::sqrtp(5),
                    std::invalid_argument);
}

TEST_CASE("Gauss sum closed form: frozen small cases") {
    // odd m keeps a sqrt(p); even m is a rational integer
    CHECK(gauss_sum_exact(3, 1) == AlgebraicScalar(3, 0, 0, 0, 1));  // i*sqrt(3)
    CHECK(gauss_sum_exact(3, 2).as_integer() == 3);
    CHECK(gauss_sum_exact(3, 3) == AlgebraicScalar(3, 0, 0, 0, -3)); // -3i*sqrt(3)
    CHECK(gauss_sum_exact(3, 4).as_integer() == -9);
    CHECK(gauss_sum_exact(3, 5) == AlgebraicScalar(3, 0, 0, 0, 9));  // 9i*sqrt(3)
    CHECK(gauss_sum_exact(3, 6).as_integer() == 27);
    CHECK(gauss_sum_exact(5, 1) == AlgebraicScalar(5, 0, 1));        // sqrt(5)
    CHECK(gauss_sum_exact(5, 2).as_integer() == -5);
    CHECK(gauss_sum_exact(7, 1) == AlgebraicScalar(7, 0, 0, 0, 1));  // i*sqrt(7)
    CHECK(gauss_sum_exact(11, 1) == AlgebraicScalar(11, 0, 0, 0, 1)); // i*sqrt(11)
    CHECK_THROWS_AS(gauss_sum_exact(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_exact(3, 0), std::invalid_argument);
}

TEST_CASE("Gauss sum modulus: G * conj(G) = p^m exactly") {
    for (uint32_t p : {3u, 5u, 7u, 11u}) {
        for (uint32_t m = 1; m <= 6; ++m) {
            const AlgebraicScalar G = gauss_sum_exact(p, m);
            long long q = 1;
            for (uint32_t j = 0; j < m; ++j) q *= p;
            CHECK((G * G.conj()).as_integer() == q);
        }
    }
    // G over F_q times Gbar over F_p, squared, is a rational integer
    const AlgebraicScalar GGbar = gauss_sum_exact(3, 3) * gauss_sum_exact(3, 1);
    CHECK(GGbar.as_integer() == 9);
    CHECK((gauss_sum_exact(3, 5) * gauss_sum_exact(3, 1)).as_integer() == -27);
    CHECK((gauss_sum_exact(7, 3) * gauss_sum_exact(7, 1)).as_integer() == 49);
}
