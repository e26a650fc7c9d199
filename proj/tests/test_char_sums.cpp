#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewweight/char_sums.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

using namespace fewweight;

namespace {

FieldCtx make(uint32_t p, uint32_t m) { return build_field(p, m); }

} // namespace

TEST_CASE("quadratic Gauss sum: numerical enumeration matches the closed form") {
    // frozen anchor values first
    {
        const FieldCtx F = make(3, 1);
        const auto g = gauss_sum_bruteforce(F);
        CHECK(g.real() == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(g.imag() == doctest::Approx(1.7320508075688772).epsilon(1e-9));
    }
    {
        const FieldCtx F = make(3, 2);
        const auto g = gauss_sum_bruteforce(F);
        CHECK(g.real() == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(g.imag() == doctest::Approx(0.0).epsilon(1e-9));
    }
    const std::vector<std::pair<uint32_t, uint32_t>> grid = {
        {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {5, 1}, {5, 2},
        {5, 3}, {5, 4}, {7, 1}, {7, 2}, {7, 3}, {11, 1}, {11, 2}};
    for (auto [p, m] : grid) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        CHECK(complex_matches(gauss_sum_bruteforce(F), gauss_sum_exact(p, m).to_complex()));
    }
}

TEST_CASE("quadratic substitution: sum_x chi(a2 x^2 + a1 x + a0)") {
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 3}, {5, 2}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<uint64_t> pick(0, F.q - 1);
        for (int trial = 0; trial < 25; ++trial) {
            FieldElem a2 = F.elem(pick(rng));
            if (a2 == F.zero()) a2 = F.one();
            const FieldElem a1 = F.elem(pick(rng));
            const FieldElem a0 = F.elem(pick(rng));
            const QuadSum s = quad_sum(F, a2, a1, a0);
            CAPTURE(a2.idx);
            CAPTURE(a1.idx);
            CAPTURE(a0.idx);
            CHECK(complex_matches(s.direct, s.closed));
        }
        CHECK_THROWS_AS(quad_sum(F, F.zero(), F.one(), F.one()), std::invalid_argument);
    }
}

TEST_CASE("n_c = #{x : Tr(x^2) = c}: closed form vs enumeration") {
    CHECK(n_c_closed(make(3, 4), 0) == 21); // |D| = 20
    CHECK(n_c_closed(make(3, 3), 0) == 9);  // |D| = 8
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{
             {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        uint64_t total = 0;
        for (uint32_t c = 0; c < p; ++c) {
            CAPTURE(c);
            const uint64_t brute = n_c_bruteforce(F, c);
            CHECK(n_c_closed(F, c) == int64_t(brute));
            total += brute;
        }
        CHECK(total == F.q);
    }
}

TEST_CASE("K_xi: closed form vs enumerated double character sum") {
    // even m, Tr(xi^2) = 0: K = G (p-1)^2 = -36 at (p,m) = (3,4)
    {
        const FieldCtx F = make(3, 4);
        for (uint64_t v = 1; v < F.q; ++v) {
            const FieldElem xi = F.elem(v);
            if (F.trace(F.mul(xi, xi)) == 0) {
                CHECK(K_xi_closed(F, xi) == AlgebraicScalar::integer(3, -36));
                break;
            }
        }
    }
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 3}, {3, 4}, {5, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        for (uint64_t v = 1; v < F.q; ++v) {
            const FieldElem xi = F.elem(v);
            CAPTURE(v);
            CHECK(complex_matches(K_xi_oracle(F, xi), K_xi_closed(F, xi).to_complex()));
        }
        CHECK_THROWS_AS(K_xi_closed(F, F.zero()), std::invalid_argument);
    }
}

TEST_CASE("N_xi = #{d : Tr(d^2) = 0, Tr(xi d) = 0}: closed form vs enumeration") {
    {
        const FieldCtx F = make(3, 4);
        for (uint64_t v = 1; v < F.q; ++v) {
            const FieldElem xi = F.elem(v);
            const int64_t expect = F.trace(F.mul(xi, xi)) == 0 ? 3 : 9;
            CHECK(N_xi_closed(F, xi) == expect);
        }
    }
    {
        const FieldCtx F = make(3, 3);
        for (uint64_t v = 1; v < F.q; ++v) {
            const FieldElem xi = F.elem(v);
            if (F.trace(F.mul(xi, xi)) == 0) CHECK(N_xi_closed(F, xi) == 3);
        }
    }
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{
             {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        for (uint64_t v = 1; v < F.q; ++v) {
            const FieldElem xi = F.elem(v);
            CAPTURE(v);
            CHECK(N_xi_closed(F, xi) == int64_t(N_xi_bruteforce(F, xi)));
        }
    }
}

TEST_CASE("N(c1,c2) factors as n_c1 * n_c2") {
    CHECK(N2_closed(make(3, 4), 0, 0) == 441);
    CHECK(N2_closed(make(3, 3), 1, 0) == 54);
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{
             {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        std::vector<uint64_t> n(p);
        for (uint32_t c = 0; c < p; ++c) n[c] = n_c_bruteforce(F, c);
        uint64_t total = 0;
        for (uint32_t c1 = 0; c1 < p; ++c1)
            for (uint32_t c2 = 0; c2 < p; ++c2) {
                CAPTURE(c1);
                CAPTURE(c2);
                CHECK(N2_closed(F, c1, c2) == int64_t(n[c1] * n[c2]));
                total += n[c1] * n[c2];
            }
        CHECK(total == uint64_t(F.q) * F.q);
    }
}

TEST_CASE("L_j counts of eta_bar(c3^2 - c1 c2) over (F_p^*)^3") {
    CHECK(L_closed(3, 1) == 0);
    CHECK(L_closed(3, -1) == 4);
    for (uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        CAPTURE(p);
        CHECK(L_closed(p, 1) == L_bruteforce(p, 1));
        CHECK(L_closed(p, -1) == L_bruteforce(p, -1));
        // remaining triples have c3^2 = c1 c2: (p-1)^2 of them
        const uint64_t k = p - 1;
        CHECK(L_closed(p, 1) + L_closed(p, -1) + k * k == k * k * k);
    }
    CHECK_THROWS_AS(L_closed(5, 0), std::invalid_argument);
}

TEST_CASE("Psi_2: closed form vs definitional rearrangement") {
    {
        const FieldCtx F = make(3, 3);
        CHECK(Psi2_closed(F, 0, 0) == 108);
        CHECK(Psi2_closed(F, 1, 0) == -54);
        CHECK(Psi2_closed(F, 0, 2) == -54);
        CHECK(Psi2_closed(F, 2, 1) == 27);
    }
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 3}, {3, 4}, {5, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        for (uint32_t c1 = 0; c1 < p; ++c1)
            for (uint32_t c3 = 0; c3 < p; ++c3) {
                CAPTURE(c1);
                CAPTURE(c3);
                CHECK(complex_matches(Psi2_oracle(F, c1, c3),
                                      std::complex<double>(double(Psi2_closed(F, c1, c3)))));
            }
    }
}

TEST_CASE("delta, rho, sigma: base-field quadruple sums vs closed forms") {
    CHECK(delta_closed(3, 1, 1, 1) == 4);   // c3^2 = c1 c2
    CHECK(delta_closed(3, 1, 2, 1) == -5);  // eta_bar = -1
    CHECK(delta_closed(5, 1, 3, 2) == 31);  // eta_bar = +1
    CHECK(sigma_closed(3, 1, 1, 1) == AlgebraicScalar(3, 0, 0, 0, -2)); // -2 i sqrt(3)
    for (uint32_t p : {3u, 5u, 7u}) {
        CAPTURE(p);
        for (uint32_t c1 = 1; c1 < p; ++c1)
            for (uint32_t c2 = 1; c2 < p; ++c2)
                for (uint32_t c3 = 1; c3 < p; ++c3) {
                    CAPTURE(c1);
                    CAPTURE(c2);
                    CAPTURE(c3);
                    CHECK(complex_matches(
                        delta_oracle(p, c1, c2, c3),
                        std::complex<double>(double(delta_closed(p, c1, c2, c3)))));
                    CHECK(complex_matches(rho_oracle(p, c1, c2, c3),
                                          rho_closed(p, c1, c2, c3).to_complex()));
                    CHECK(complex_matches(sigma_oracle(p, c1, c2, c3),
                                          sigma_closed(p, c1, c2, c3).to_complex()));
                }
    }
    CHECK_THROWS_AS(delta_oracle(3, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(rho_closed(3, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sigma_closed(3, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("Psi_4: closed form vs collapsed oracle on every (c1,c2,c3)") {
    // frozen anchors
    CHECK(Psi4_closed(make(3, 3), 0, 0, 1) == AlgebraicScalar::integer(3, 54));
    CHECK(Psi4_closed(make(3, 4), 1, 1, 1) == AlgebraicScalar::integer(3, -891));
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{
             {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        const Psi4Oracle oracle(F);
        for (uint32_t c1 = 0; c1 < p; ++c1)
            for (uint32_t c2 = 0; c2 < p; ++c2)
                for (uint32_t c3 = 0; c3 < p; ++c3) {
                    CAPTURE(c1);
                    CAPTURE(c2);
                    CAPTURE(c3);
                    CHECK(complex_matches(oracle.eval(c1, c2, c3),
                                          Psi4_closed(F, c1, c2, c3).to_complex()));
                }
    }
}

TEST_CASE("Psi_4: fully naive five-fold sum agrees on a tiny field") {
    const FieldCtx F = make(3, 3);
    const Psi4Oracle oracle(F);
    for (uint32_t c1 = 0; c1 < 3; ++c1)
        for (uint32_t c2 = 0; c2 < 3; ++c2)
            for (uint32_t c3 = 0; c3 < 3; ++c3) {
                CAPTURE(c1);
                CAPTURE(c2);
                CAPTURE(c3);
                const auto naive = Psi4_oracle_naive(F, c1, c2, c3);
                CHECK(complex_matches(naive, Psi4_closed(F, c1, c2, c3).to_complex()));
                CHECK(complex_matches(naive, oracle.eval(c1, c2, c3)));
            }
    CHECK_THROWS_AS(Psi4_oracle_naive(make(3, 8), 0, 0, 0), std::invalid_argument);
}

TEST_CASE("admissible pairs: a, b nonzero with a not an F_p^* multiple of b") {
    const FieldCtx F = make(3, 3);
    uint64_t adm = 0;
    for (uint64_t va = 0; va < F.q; ++va)
        for (uint64_t vb = 0; vb < F.q; ++vb)
            if (pair_admissible(F, F.elem(va), F.elem(vb))) ++adm;
    // (q-1) choices of b, (q-1) - (p-1) choices of a
    CHECK(adm == uint64_t(F.q - 1) * (F.q - 3));
    CHECK_FALSE(pair_admissible(F, F.zero(), F.one()));
    CHECK_FALSE(pair_admissible(F, F.one(), F.one()));
    CHECK_FALSE(pair_admissible(F, F.embed(2), F.one()));
    CHECK(pair_admissible(F, F.g, F.one()));
}

TEST_CASE("Omega_4: closed form vs enumerated triple character sum") {
    { // frozen: even m, alpha beta = gamma^2 with alpha, beta != 0 gives G(p-1) = -18
        const FieldCtx F = make(3, 4);
        bool found = false;
        for (uint64_t va = 1; va < F.q && !found; ++va)
            for (uint64_t vb = 1; vb < F.q && !found; ++vb) {
                const FieldElem a = F.elem(va), b = F.elem(vb);
                if (!pair_admissible(F, a, b)) continue;
                const uint32_t al = F.trace(F.mul(a, a));
                const uint32_t be = F.trace(F.mul(b, b));
                const uint32_t ga = F.trace(F.mul(a, b));
                if (al != 0 && be != 0 && (al * be) % 3 == (ga * ga) % 3) {
                    CHECK(Omega4_closed(F, a, b) == AlgebraicScalar::integer(3, -18));
                    found = true;
                }
            }
        CHECK(found);
    }
    { // exhaustive over all admissible pairs of a tiny field
        const FieldCtx F = make(3, 3);
        for (uint64_t va = 1; va < F.q; ++va)
            for (uint64_t vb = 1; vb < F.q; ++vb) {
                const FieldElem a = F.elem(va), b = F.elem(vb);
                if (!pair_admissible(F, a, b)) continue;
                CAPTURE(va);
                CAPTURE(vb);
                CHECK(complex_matches(Omega4_oracle(F, a, b),
                                      Omega4_closed(F, a, b).to_complex()));
            }
    }
    // sampled pairs on larger fields, both parities
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 4}, {3, 5}, {5, 3}}) {
        CAPTURE(p);
        CAPTURE(m);
        const FieldCtx F = make(p, m);
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<uint64_t> pick(1, F.q - 1);
        int done = 0;
        while (done < 60) {
            const FieldElem a = F.elem(pick(rng)), b = F.elem(pick(rng));
            if (!pair_admissible(F, a, b)) continue;
            CAPTURE(a.idx);
            CAPTURE(b.idx);
            CHECK(complex_matches(Omega4_oracle(F, a, b), Omega4_closed(F, a, b).to_complex()));
            ++done;
        }
        CHECK_THROWS_AS(Omega4_closed(F, F.zero(), F.one()), std::invalid_argument);
    }
}
