// Character sums over F_{p^m}: exact closed forms next to independent
// numerical oracles.  Every closed form here has a matching *_oracle or
// *_bruteforce companion computed straight from the defining sum.
#pragma once

#include "fewweight/algebraic.hpp"
#include "fewweight/field.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace fewweight {

// e^(2*pi*i*k/p); k may be any integer residue
std::complex<double> zeta_pow(uint32_t p, int64_t k);

// |oracle - closed| <= 1e-6 * (1 + |closed|)
bool complex_matches(std::complex<double> oracle, std::complex<double> closed);
std::string complex_str(std::complex<double> z);

// Legendre symbol (a/p) in {-1,0,+1}
int legendre_symbol(uint32_t a, uint32_t p);

// sum_{v in F_q} zeta^Tr(v^2), numerically (the quadratic Gauss sum)
std::complex<double> gauss_sum_bruteforce(const FieldCtx& F);

// sum_x chi(a2 x^2 + a1 x + a0) = chi(a0 - a1^2 (4 a2)^(-1)) eta(a2) G, a2 != 0
struct QuadSum {
    std::complex<double> closed;
    std::complex<double> direct;
    uint32_t shift_trace; // Tr(a0 - a1^2 (4 a2)^(-1))
    int eta_a2;
};
QuadSum quad_sum(const FieldCtx& F, FieldElem a2, FieldElem a1, FieldElem a0);

// n_c = #{x in F_q : Tr(x^2) = c}
int64_t n_c_closed(const FieldCtx& F, uint32_t c);
uint64_t n_c_bruteforce(const FieldCtx& F, uint32_t c);

// K_xi = sum_{x,z in F_p^*} sum_{d in F_q} zeta^(x Tr(d^2) + z Tr(xi d))
AlgebraicScalar K_xi_closed(const FieldCtx& F, FieldElem xi);
std::complex<double> K_xi_oracle(const FieldCtx& F, FieldElem xi);

// N_xi = #{d in F_q : Tr(d^2) = 0 and Tr(xi d) = 0}, xi != 0
int64_t N_xi_closed(const FieldCtx& F, FieldElem xi);
uint64_t N_xi_bruteforce(const FieldCtx& F, FieldElem xi);

// N(c1,c2) = #{(a,b) : Tr(a^2) = c1, Tr(b^2) = c2} (= n_c1 * n_c2)
int64_t N2_closed(const FieldCtx& F, uint32_t c1, uint32_t c2);

// L_j = #{(c1,c2,c3) in (F_p^*)^3 : eta_bar(c3^2 - c1 c2) = j}, j = +-1
uint64_t L_closed(uint32_t p, int j);
uint64_t L_bruteforce(uint32_t p, int j);

// Psi_2 = sum_{a,b} sum_{x,z in F_p^*} zeta^(x Tr(a^2) - x c1 + z Tr(ab) - z c3)
int64_t Psi2_closed(const FieldCtx& F, uint32_t c1, uint32_t c3);
std::complex<double> Psi2_oracle(const FieldCtx& F, uint32_t c1, uint32_t c3);

// Base-field quadruple sums (Lemmas about delta, rho, sigma); all arguments
// in F_p^*, values in Q(i, sqrt(p)) with Gbar = Gauss sum over F_p.
int64_t delta_closed(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3);
std::complex<double> delta_oracle(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3);
AlgebraicScalar rho_closed(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3);
std::complex<double> rho_oracle(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3);
AlgebraicScalar sigma_closed(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3);
std::complex<double> sigma_oracle(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3);

// Psi_4 = sum_{a,b} prod of three shifted character sums (x,y,z in F_p^*)
AlgebraicScalar Psi4_closed(const FieldCtx& F, uint32_t c1, uint32_t c2, uint32_t c3);

// Oracle with the inner b-sum collapsed by the quadratic substitution (uses
// the numerical Gauss sum, brute-force n_t counts and one application of the
// quadratic completion; no case formulas).
class Psi4Oracle {
public:
    explicit Psi4Oracle(const FieldCtx& F);
    std::complex<double> eval(uint32_t c1, uint32_t c2, uint32_t c3) const;

private:
    uint32_t p_;
    std::vector<std::complex<double>> T_; // (x,y,z) all in [1,p), flattened
};

// Fully naive five-fold sum; only feasible for tiny fields (q^2 p^3 work)
std::complex<double> Psi4_oracle_naive(const FieldCtx& F, uint32_t c1, uint32_t c2,
                                       uint32_t c3);

// a, b in F_q^*, a != w b for every w in F_p^* (the nondegenerate pairs)
bool pair_admissible(const FieldCtx& F, FieldElem a, FieldElem b);

// Omega_4 = sum_{x,y,z in F_p^*} sum_d zeta^(x Tr(d^2) + y Tr(ad) + z Tr(bd))
// The closed form depends on (a,b) only through alpha = Tr(a^2),
// beta = Tr(b^2), gamma = Tr(ab); the _traces variant takes those directly.
AlgebraicScalar Omega4_closed(const FieldCtx& F, FieldElem a, FieldElem b);
AlgebraicScalar Omega4_closed_traces(const FieldCtx& F, uint32_t alpha, uint32_t beta,
                                     uint32_t gamma);
std::complex<double> Omega4_oracle(const FieldCtx& F, FieldElem a, FieldElem b);

// One verified case of one lemma: closed form against its oracle.
struct LemmaReport {
    int lemma = 0;
    std::string case_label;
    std::string closed_str;
    std::string oracle_str;
    uint64_t checked = 0; // instances compared
    bool vacuous = false; // no instance exists at these parameters
    bool match = false;   // vacuous cases count as matching
    std::string note;
};

} // namespace fewweight
