// Exact arithmetic in F_{p^m} (p an odd prime) via log/antilog tables,
// plus trace, quadratic character and cyclotomic numbers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fewweight {

// A field element is a packed base-p coordinate vector with respect to the
// polynomial basis {1, x, ..., x^(m-1)}: idx = sum_j coeff_j * p^j.
// idx == 0 is the additive identity, idx == 1 the multiplicative identity,
// and idx < p are exactly the elements of the prime subfield.
struct FieldElem {
    uint32_t idx = 0;
    friend bool operator==(FieldElem a, FieldElem b) { return a.idx == b.idx; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.idx != b.idx; }
    friend bool operator<(FieldElem a, FieldElem b) { return a.idx < b.idx; }
};

struct FieldParams {
    uint32_t p = 0;
    uint32_t m = 0;
    // m+1 coefficients, low degree first, monic (last entry 1).
    std::vector<uint32_t> modulus;
};

// Immutable context for F_q, q = p^m.  All per-element operations are table
// lookups (O(1)) or digit loops (O(m)); construction is O(q * m).
class FieldCtx {
public:
    static constexpr uint64_t kMaxQ = 1ull << 22;   // table memory budget
    static constexpr uint32_t kNoLog = 0xffffffffu; // log of zero (sentinel)

    FieldParams params;
    uint64_t q = 0;  // p^m
    FieldElem g;     // the residue of x: primitive by construction

    std::vector<uint32_t> antilog_tab; // exponent k -> idx of g^k, size q-1
    std::vector<uint32_t> log_tab;     // idx -> exponent, log_tab[0] = kNoLog
    std::vector<uint32_t> trace_tab;   // idx -> Tr(v), value in [0, p)
    std::vector<int8_t> eta_tab;       // idx -> quadratic character in {-1,0,+1}

    uint32_t p() const { return params.p; }
    uint32_t m() const { return params.m; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    FieldElem elem(uint64_t idx) const;                 // bounds-checked
    FieldElem embed(uint32_t c) const { return {c % params.p}; }

    FieldElem add(FieldElem u, FieldElem v) const;
    FieldElem sub(FieldElem u, FieldElem v) const { return add(u, neg(v)); }
    FieldElem neg(FieldElem u) const;
    FieldElem mul(FieldElem u, FieldElem v) const {
        if (u.idx == 0 || v.idx == 0) return {0};
        uint64_t e = uint64_t(log_tab[u.idx]) + log_tab[v.idx];
        if (e >= q - 1) e -= q - 1;
        return {antilog_tab[e]};
    }
    FieldElem inv(FieldElem u) const;
    FieldElem pow(FieldElem u, uint64_t e) const;       // pow(0,0) == one
    FieldElem gpow(uint64_t k) const { return {antilog_tab[k % (q - 1)]}; }
    FieldElem frobenius(FieldElem u) const;             // v -> v^p
    uint32_t log_of(FieldElem u) const;                 // throws on zero

    uint32_t trace(FieldElem v) const { return trace_tab[v.idx]; }
    // Definitional power-sum trace, used as an oracle for trace_tab.
    uint32_t trace_powersum(FieldElem v) const;
    int eta(FieldElem v) const { return eta_tab[v.idx]; }

    // Legendre symbol of c mod p (quadratic character of the prime field).
    int eta_base(uint32_t c) const;

    std::string modulus_str() const; // e.g. "x^2+x+2"
};

// Build F_{p^m} with the lexicographically smallest monic primitive modulus
// (coefficients compared low degree first).  Throws std::invalid_argument on
// bad parameters and std::length_error when p^m exceeds FieldCtx::kMaxQ.
FieldCtx build_field(uint32_t p, uint32_t m);

// Same, with an explicit monic modulus (m+1 coefficients, low degree first).
// The residue of x must be primitive; otherwise this throws.
FieldCtx build_field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

// nth (0-based) monic primitive polynomial of degree m over F_p in
// lexicographic order.  nth = 0 is what build_field(p, m) uses.
std::vector<uint32_t> find_primitive_modulus(uint32_t p, uint32_t m, uint32_t nth = 0);

bool is_prime_u64(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n); // distinct primes, ascending

// Cyclotomic number (i,j)^(N,q) = #{v in C_i : v + 1 in C_j}, where C_i is
// the coset g^i <g^N>.  Direct enumeration over C_i; requires N | q-1.
uint64_t cyclotomic_number(const FieldCtx& F, uint32_t N, uint32_t i, uint32_t j);

// Closed form for N = 2, which depends only on q and (i,j).
uint64_t cyclotomic_number2_closed(uint64_t q, uint32_t i, uint32_t j);

} // namespace fewweight
