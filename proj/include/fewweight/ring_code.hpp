// The linear code C_D over F_q + u F_q (u^2 = 0): ring arithmetic, the ring
// trace, the Gray map, defining-set construction, weight distributions by
// exhaustive enumeration and by the closed-form tables, and the supporting
// pair-counting identities (N(c1,c2,c3), Omega, aleph, the pair-class census).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fewweight/algebraic.hpp"
#include "fewweight/char_sums.hpp"
#include "fewweight/field.hpp"

namespace fewweight {

// An element a + u*b of R = F_q + u F_q.
struct RingElem {
    FieldElem a;
    FieldElem b;
    bool operator==(const RingElem& o) const { return a == o.a && b == o.b; }
};

// Value of the ring trace tr(a + ub) = Tr(a) + u Tr(b): a pair of F_p digits.
using RingSymbol = std::pair<uint32_t, uint32_t>;

// Ring arithmetic.  Multiplication uses the u^2 = 0 convention:
// (a + ub)(c + ud) = ac + u(ad + bc).  Only the F_q-module action on R is
// needed by the construction itself, so the convention is isolated here.
RingElem ring_add(const FieldCtx& F, RingElem x, RingElem y);
RingElem ring_mul(const FieldCtx& F, RingElem x, RingElem y);

// tr(x) for x = a + ub: (Tr(a), Tr(b)) as an element of F_p + u F_p.
RingSymbol tr_ring(const FieldCtx& F, RingElem x);

// The code specification: defining set D = {d in F_q^* : Tr(d^2) = 0},
// sorted ascending by element index.  n = |D| = n_0 - 1.
struct CodeSpec {
    uint32_t p = 0;
    uint32_t m = 0;
    FieldCtx F;
    std::vector<uint32_t> D;  // element indices, ascending
    uint64_t n() const { return D.size(); }
};

CodeSpec build_code(uint32_t p, uint32_t m);
CodeSpec build_code(FieldCtx F);

// The codeword (tr(x d_1), ..., tr(x d_n)) for x = a + ub; coordinate i is
// (Tr(a d_i), Tr(b d_i)).
std::vector<RingSymbol> codeword(const CodeSpec& spec, RingElem x);

// Gray map phi(a_1 + u b_1, ..., a_n + u b_n) = (a_1,...,a_n, b_1,...,b_n).
std::vector<uint32_t> gray_map(const std::vector<RingSymbol>& v);

// Hamming weight over the ring: number of nonzero symbols.
uint64_t hamming_weight(const std::vector<RingSymbol>& cw);

// Symplectic weight of (a | b) in F_p^{2n}: #{k : (a_k, b_k) != (0,0)}.
// Throws std::invalid_argument on odd length.
uint64_t swt(const std::vector<uint32_t>& w);

// aleph(a,b) = #{d in F_q : Tr(d^2) = 0, Tr(ad) = 0, Tr(bd) = 0}.
// aleph_closed dispatches to Omega / N_xi / n_0 per the four-way case split;
// aleph() computes both ways and throws std::logic_error on disagreement.
uint64_t aleph_bruteforce(const FieldCtx& F, FieldElem a, FieldElem b);
int64_t aleph_closed(const FieldCtx& F, FieldElem a, FieldElem b);
uint64_t aleph(const FieldCtx& F, FieldElem a, FieldElem b);

// Omega (Lemma 17): aleph(a,b) for admissible pairs (a, b in F_q^*, a != wb
// for every w in F_p^*), in closed form.  Requires m >= 3; throws
// std::invalid_argument on precondition violation.  The closed form depends
// on (a,b) only through alpha = Tr(a^2), beta = Tr(b^2), gamma = Tr(ab); the
// _traces variant takes those directly.
AlgebraicScalar Omega_closed(const FieldCtx& F, FieldElem a, FieldElem b);
AlgebraicScalar Omega_closed_traces(const FieldCtx& F, uint32_t alpha, uint32_t beta,
                                    uint32_t gamma);
uint64_t Omega_bruteforce(const FieldCtx& F, FieldElem a, FieldElem b);

// N(c1,c2,c3) = #{(a,b) in F_q^2 : Tr(a^2)=c1, Tr(b^2)=c2, Tr(ab)=c3}
// (Lemma 15 / Tables 1 and 2).  The brute-force variant returns all p^3
// counts at once, indexed by (c1*p + c2)*p + c3.
AlgebraicScalar N3_closed(const FieldCtx& F, uint32_t c1, uint32_t c2, uint32_t c3);
std::vector<uint64_t> N3_bruteforce_all(const FieldCtx& F);

// Census of all q^2 pairs (a,b) over the seven condition classes of the
// Theorem 1 (even m) / Theorem 2 (odd m) proof tables.  N[1]..N[7]; N[0]
// unused.  Sum of N[1..7] = q^2.
struct PairClassCensus {
    std::array<uint64_t, 8> N{};
    bool operator==(const PairClassCensus& o) const { return N == o.N; }
};

PairClassCensus census_enumerated(const FieldCtx& F);
PairClassCensus census_closed(const FieldCtx& F);
// Computes both and throws std::logic_error on disagreement.
PairClassCensus pair_class_census(const FieldCtx& F);

// One row of a weight distribution: a weight, its multiplicity, and a label
// (the originating formula row, or "enumerated").
struct WDRow {
    uint64_t weight = 0;
    uint64_t count = 0;
    std::string label;
};

struct WeightDistribution {
    uint32_t p = 0;
    uint32_t m = 0;
    uint64_t n = 0;  // code length
    std::vector<WDRow> raw;
    std::map<uint64_t, uint64_t> aggregated;  // weight -> count, zero counts dropped
    uint64_t total() const;                   // sum of aggregated counts
};

// Exhaustive enumeration of all q^2 codewords.  Weights come from the O(1)
// per-pair fast path (precomputed trace tables); for q <= 3^5 every weight is
// also recomputed per-coordinate and cross-checked (std::logic_error on any
// internal disagreement).
WeightDistribution wdist_bruteforce(const CodeSpec& spec);

// Closed-form tables: even m >= 4 routes to the even-m table, odd m >= 3 to
// the odd-m table; other (p,m) throw std::invalid_argument.  Multiplicities
// are checked to be nonnegative integers summing to p^{2m}.
WeightDistribution wdist_theorem(uint32_t p, uint32_t m);
WeightDistribution wdist_theorem(const CodeSpec& spec);

// Smallest weight w > 0 with positive aggregated count; throws
// std::logic_error if none exists.
uint64_t min_distance(const WeightDistribution& wd);

// JSON export document (also used by the CLI): {p, m, modulus, n,
// defining_set, codewords, distribution, min_distance}.  Integers that exceed
// 2^53 are rendered as decimal strings.
std::string export_json_string(const CodeSpec& spec, const WeightDistribution& wd,
                               uint64_t min_dist);

// Lemma verification driver: closed form vs independent oracle for lemma in
// {1, 3..17}; one LemmaReport per case, vacuous cases reported explicitly.
// Throws std::invalid_argument for other lemma numbers.
std::vector<LemmaReport> verify_lemma(const FieldCtx& F, int lemma, uint64_t seed);
std::vector<LemmaReport> verify_all_lemmas(const FieldCtx& F, uint64_t seed);

}  // namespace fewweight
