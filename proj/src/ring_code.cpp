#include "fewweight/ring_code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fewweight {
namespace {

Rational p_pow(uint32_t p, int e) {
    Rational r(1);
    const Rational base(p);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
    if (e < 0) r = Rational(1) / r;
    return r;
}

// eta_bar of -c for a base-field digit c
int leg_neg(const FieldCtx& F, uint32_t c) {
    return F.eta_base((F.p() - c % F.p()) % F.p());
}

// Tr(v^2) as a base-field digit
uint32_t tr_sq(const FieldCtx& F, FieldElem v) { return F.trace(F.mul(v, v)); }

// Condition-class index (1..4) of an admissible pair from (alpha, beta, gamma),
// matching the weight rows of the even-m table.
int adm_class_even(const FieldCtx& F, uint32_t al, uint32_t be, uint32_t ga) {
    const uint32_t p = F.p();
    if (al == 0 && be == 0 && ga == 0) return 1;
    if (al != 0 && be != 0) {
        const uint32_t d = (ga * ga % p + p - al * be % p) % p;
        if (d == 0) return 3;
        return F.eta_base(d) == 1 ? 2 : 4;
    }
    return ga != 0 ? 2 : 3;
}

// Same for odd m (rows of the odd-m table).
int adm_class_odd(const FieldCtx& F, uint32_t al, uint32_t be, uint32_t ga) {
    const uint32_t p = F.p();
    if (al != 0 && be != 0) {
        const uint32_t d = (ga * ga % p + p - al * be % p) % p;
        if (d != 0) return 3;
        return leg_neg(F, be) == 1 ? 1 : 2;
    }
    if (al != 0 && be == 0 && ga == 0) return leg_neg(F, al) == 1 ? 1 : 2;
    if (al == 0 && be != 0 && ga == 0) return leg_neg(F, be) == 1 ? 1 : 2;
    return 3;
}

// Class (4..7) of a degenerate pair: b = 0, a = 0, or a = w b.  The class
// depends only on c = Tr(xi^2) for xi the surviving element.
int degenerate_class(const FieldCtx& F, uint32_t c) {
    if (F.m() % 2 == 0) return c == 0 ? 5 : 6;
    if (c == 0) return 6;
    return leg_neg(F, c) == 1 ? 4 : 5;
}

void require_m3(const FieldCtx& F, const char* what) {
    if (F.m() < 3)
        throw std::invalid_argument(std::string(what) + " requires m >= 3");
}

uint64_t as_count(const AlgebraicScalar& v, const char* what) {
    if (!v.is_integer() || v.re0().is_negative())
        throw std::logic_error(std::string(what) + " is not a nonnegative integer: " + v.str());
    return uint64_t(v.as_integer());
}

nlohmann::json json_int(uint64_t v) {
    if (v > (uint64_t(1) << 53)) return std::to_string(v);
    return v;
}

}  // namespace

RingElem ring_add(const FieldCtx& F, RingElem x, RingElem y) {
    return {F.add(x.a, y.a), F.add(x.b, y.b)};
}

RingElem ring_mul(const FieldCtx& F, RingElem x, RingElem y) {
    // u^2 = 0: (a + ub)(c + ud) = ac + u(ad + bc)
    return {F.mul(x.a, y.a), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}

RingSymbol tr_ring(const FieldCtx& F, RingElem x) {
    return {F.trace(x.a), F.trace(x.b)};
}

CodeSpec build_code(FieldCtx F) {
    CodeSpec spec;
    spec.p = F.p();
    spec.m = F.m();
    for (uint64_t idx = 1; idx < F.q; ++idx) {
        if (tr_sq(F, {uint32_t(idx)}) == 0) spec.D.push_back(uint32_t(idx));
    }
    if (spec.D.empty() && spec.m >= 2)
        throw std::logic_error("empty defining set at m >= 2");
    const int64_t n0 = n_c_closed(F, 0);
    if (int64_t(spec.D.size()) + 1 != n0)
        throw std::logic_error("defining-set size disagrees with n_0 - 1");
    spec.F = std::move(F);
    return spec;
}

CodeSpec build_code(uint32_t p, uint32_t m) { return build_code(build_field(p, m)); }

std::vector<RingSymbol> codeword(const CodeSpec& spec, RingElem x) {
    std::vector<RingSymbol> cw;
    cw.reserve(spec.D.size());
    for (uint32_t d : spec.D) cw.push_back(tr_ring(spec.F, ring_mul(spec.F, x, {{d}, {0}})));
    return cw;
}

std::vector<uint32_t> gray_map(const std::vector<RingSymbol>& v) {
    std::vector<uint32_t> w;
    w.reserve(2 * v.size());
    for (const auto& s : v) w.push_back(s.first);
    for (const auto& s : v) w.push_back(s.second);
    return w;
}

uint64_t hamming_weight(const std::vector<RingSymbol>& cw) {
    uint64_t w = 0;
    for (const auto& s : cw)
        if (s.first != 0 || s.second != 0) ++w;
    return w;
}

uint64_t swt(const std::vector<uint32_t>& w) {
    if (w.size() % 2 != 0) throw std::invalid_argument("swt needs an (a|b) vector of even length");
    const size_t n = w.size() / 2;
    uint64_t s = 0;
    for (size_t k = 0; k < n; ++k)
        if (w[k] != 0 || w[n + k] != 0) ++s;
    return s;
}

uint64_t aleph_bruteforce(const FieldCtx& F, FieldElem a, FieldElem b) {
    uint64_t cnt = 0;
    for (uint64_t idx = 0; idx < F.q; ++idx) {
        const FieldElem d{uint32_t(idx)};
        if (tr_sq(F, d) == 0 && F.trace(F.mul(a, d)) == 0 && F.trace(F.mul(b, d)) == 0) ++cnt;
    }
    return cnt;
}

int64_t aleph_closed(const FieldCtx& F, FieldElem a, FieldElem b) {
    if (a.idx == 0 && b.idx == 0) return n_c_closed(F, 0);
    if (b.idx == 0) return N_xi_closed(F, a);
    if (a.idx == 0) return N_xi_closed(F, b);
    if (!pair_admissible(F, a, b)) return N_xi_closed(F, b);  // a = w b
    return Omega_closed(F, a, b).as_integer();
}

uint64_t aleph(const FieldCtx& F, FieldElem a, FieldElem b) {
    const uint64_t brute = aleph_bruteforce(F, a, b);
    const int64_t closed = aleph_closed(F, a, b);
    if (closed < 0 || uint64_t(closed) != brute) {
        std::ostringstream os;
        os << "aleph mismatch at a=" << a.idx << " b=" << b.idx << ": closed " << closed
           << ", brute " << brute;
        throw std::logic_error(os.str());
    }
    return brute;
}

AlgebraicScalar Omega_closed(const FieldCtx& F, FieldElem a, FieldElem b) {
    if (!pair_admissible(F, a, b))
        throw std::invalid_argument("Omega requires a,b nonzero with a != w b");
    return Omega_closed_traces(F, tr_sq(F, a), tr_sq(F, b), F.trace(F.mul(a, b)));
}

AlgebraicScalar Omega_closed_traces(const FieldCtx& F, uint32_t alpha, uint32_t beta,
                                    uint32_t gamma) {
    require_m3(F, "Omega");
    const uint32_t p = F.p();
    const uint32_t al = alpha % p, be = beta % p, ga = gamma % p;
    const AlgebraicScalar base(p, p_pow(p, int(F.m()) - 3));
    const Rational pm1(int64_t(p) - 1);
    if (F.m() % 2 == 0) {
        const AlgebraicScalar G = gauss_sum_exact(p, F.m());
        if (al == 0 && be == 0 && ga == 0) return base + G * (p_pow(p, -1) * pm1);
        if (al != 0 && be != 0) {
            const uint32_t d = (ga * ga % p + p - al * be % p) % p;
            if (d == 0) return base;
            return base + G * (p_pow(p, -2) * pm1 * Rational(F.eta_base(d)));
        }
        if (ga != 0) return base + G * (p_pow(p, -2) * pm1);
        return base;
    }
    const AlgebraicScalar GG = gauss_sum_exact(p, F.m()) * gauss_sum_exact(p, 1);
    if (al != 0 && be != 0) {
        const uint32_t d = (ga * ga % p + p - al * be % p) % p;
        if (d != 0) return base;
        return base + GG * (p_pow(p, -2) * pm1 * Rational(leg_neg(F, be)));
    }
    if (al != 0 && be == 0 && ga == 0)
        return base + GG * (p_pow(p, -2) * pm1 * Rational(leg_neg(F, al)));
    if (al == 0 && be != 0 && ga == 0)
        return base + GG * (p_pow(p, -2) * pm1 * Rational(leg_neg(F, be)));
    return base;
}

uint64_t Omega_bruteforce(const FieldCtx& F, FieldElem a, FieldElem b) {
    if (!pair_admissible(F, a, b))
        throw std::invalid_argument("Omega requires a,b nonzero with a != w b");
    return aleph_bruteforce(F, a, b);
}

AlgebraicScalar N3_closed(const FieldCtx& F, uint32_t c1, uint32_t c2, uint32_t c3) {
    const uint32_t p = F.p();
    const uint32_t m = F.m();
    c1 %= p, c2 %= p, c3 %= p;
    const Rational pm1(int64_t(p) - 1);
    const AlgebraicScalar lead(p, p_pow(p, 2 * int(m) - 3));
    const Rational pm3 = p_pow(p, int(m) - 3);
    if (m % 2 == 0) {
        const AlgebraicScalar G = gauss_sum_exact(p, m);
        const AlgebraicScalar G2 = G * G;
        const AlgebraicScalar qmG = AlgebraicScalar(p, p_pow(p, int(m))) - G;
        const bool z1 = c1 == 0, z2 = c2 == 0, z3 = c3 == 0;
        if (z1 && z2 && z3)
            return lead + AlgebraicScalar(p, pm3 * pm1 * Rational(2 * int64_t(p) - 1)) +
                   G * (pm3 * Rational(int64_t(p) * p - 1)) + G2 * (p_pow(p, -3) * pm1 * pm1 * pm1);
        if (z1 && z2)
            return lead + G * (pm3 * pm1) -
                   AlgebraicScalar(p, pm3 * Rational(2 * int64_t(p) - 1)) +
                   G2 * (p_pow(p, -3) * pm1);
        if (!z1 && !z2 && z3)
            return lead - AlgebraicScalar(p, pm3 * pm1) - G * pm3 + G2 * (p_pow(p, -3) * pm1) +
                   qmG * G * (p_pow(p, -2) * Rational(leg_neg(F, c1 * c2 % p)));
        if (z3)  // exactly one of c1, c2 zero
            return lead + AlgebraicScalar(p, pm3 * pm1 * pm1) - G * pm3 -
                   G2 * (p_pow(p, -3) * pm1 * pm1);
        if (z1 != z2)  // exactly one of c1, c2 zero, c3 != 0
            return lead + (G - AlgebraicScalar::integer(p, 1)) * (pm3 * pm1) -
                   G2 * p_pow(p, -3);
        const uint32_t d = (c3 * c3 % p + p - c1 * c2 % p) % p;
        if (d == 0)
            return lead - (G - AlgebraicScalar::integer(p, 1)) * pm3 - G2 * p_pow(p, -3);
        if (F.eta_base(d) == 1)
            return lead - (G * 2 - AlgebraicScalar::integer(p, 1)) * pm3 +
                   qmG * G * (p_pow(p, -3) * Rational(int64_t(p) + 1));
        return lead - (G * 2 - AlgebraicScalar::integer(p, 1)) * pm3 -
               qmG * G * (p_pow(p, -3) * pm1);
    }
    const AlgebraicScalar GG = gauss_sum_exact(p, m) * gauss_sum_exact(p, 1);
    const AlgebraicScalar GG2 = GG * GG;
    const bool z1 = c1 == 0, z2 = c2 == 0, z3 = c3 == 0;
    if (z1 && z2 && z3)
        return lead + AlgebraicScalar(p, pm3 * pm1 * Rational(2 * int64_t(p) - 1)) -
               GG2 * (p_pow(p, -4) * pm1 * pm1);
    if (z1 && z2)
        return lead - AlgebraicScalar(p, pm3 * Rational(2 * int64_t(p) - 1)) +
               GG2 * (p_pow(p, -4) * pm1);
    if (z1 && z3)  // c2 != 0
        return lead + AlgebraicScalar(p, pm3 * pm1 * pm1) + GG2 * (p_pow(p, -4) * pm1) +
               GG * (p_pow(p, int(m) - 2) * Rational(leg_neg(F, c2)));
    if (z2 && z3)  // c1 != 0
        return lead + AlgebraicScalar(p, pm3 * pm1 * pm1) + GG2 * (p_pow(p, -4) * pm1) +
               GG * (p_pow(p, int(m) - 2) * Rational(leg_neg(F, c1)));
    if (z1 || z2 || z3)  // exactly two of c1, c2, c3 nonzero
        return lead - AlgebraicScalar(p, pm3 * pm1) - GG2 * p_pow(p, -4);
    const uint32_t d = (c3 * c3 % p + p - c1 * c2 % p) % p;
    if (d == 0)
        return lead + AlgebraicScalar(p, pm3) +
               GG2 * (p_pow(p, -4) * Rational(int64_t(p) * p - p - 1)) +
               GG * (pm3 * Rational(leg_neg(F, c1) * (int64_t(p) - 1) + leg_neg(F, c2)));
    return lead + AlgebraicScalar(p, pm3) - GG2 * (p_pow(p, -4) * Rational(int64_t(p) + 1));
}

std::vector<uint64_t> N3_bruteforce_all(const FieldCtx& F) {
    const uint32_t p = F.p();
    std::vector<uint64_t> cnt(size_t(p) * p * p, 0);
    std::vector<uint32_t> tr2(F.q);
    for (uint64_t idx = 0; idx < F.q; ++idx) tr2[idx] = tr_sq(F, {uint32_t(idx)});
    for (uint64_t ai = 0; ai < F.q; ++ai) {
        const FieldElem a{uint32_t(ai)};
        const uint32_t c1 = tr2[ai];
        for (uint64_t bi = 0; bi < F.q; ++bi) {
            const uint32_t c3 = F.trace(F.mul(a, {uint32_t(bi)}));
            ++cnt[(size_t(c1) * p + tr2[bi]) * p + c3];
        }
    }
    return cnt;
}

PairClassCensus census_enumerated(const FieldCtx& F) {
    require_m3(F, "pair_class_census");
    PairClassCensus cc;
    std::vector<uint32_t> tr2(F.q);
    for (uint64_t idx = 0; idx < F.q; ++idx) tr2[idx] = tr_sq(F, {uint32_t(idx)});
    const bool even = F.m() % 2 == 0;
    for (uint64_t ai = 0; ai < F.q; ++ai) {
        const FieldElem a{uint32_t(ai)};
        for (uint64_t bi = 0; bi < F.q; ++bi) {
            const FieldElem b{uint32_t(bi)};
            int cls;
            if (ai == 0 && bi == 0) {
                cls = 7;
            } else if (ai != 0 && bi != 0 && pair_admissible(F, a, b)) {
                const uint32_t ga = F.trace(F.mul(a, b));
                cls = even ? adm_class_even(F, tr2[ai], tr2[bi], ga)
                           : adm_class_odd(F, tr2[ai], tr2[bi], ga);
            } else {
                cls = degenerate_class(F, tr2[bi != 0 ? bi : ai]);
            }
            ++cc.N[cls];
        }
    }
    return cc;
}

PairClassCensus census_closed(const FieldCtx& F) {
    require_m3(F, "pair_class_census");
    const uint32_t p = F.p();
    const bool even = F.m() % 2 == 0;
    PairClassCensus cc;
    std::array<int64_t, 8> acc{};
    for (uint32_t c1 = 0; c1 < p; ++c1)
        for (uint32_t c2 = 0; c2 < p; ++c2)
            for (uint32_t c3 = 0; c3 < p; ++c3) {
                const int64_t N =
                    int64_t(as_count(N3_closed(F, c1, c2, c3), "N(c1,c2,c3)"));
                const int cls = even ? adm_class_even(F, c1, c2, c3)
                                     : adm_class_odd(F, c1, c2, c3);
                acc[cls] += N;
            }
    const int64_t n0 = n_c_closed(F, 0);
    const int64_t q = int64_t(F.q);
    if (even) {
        acc[1] -= (p + 1) * n0 - p;
        acc[3] -= (p + 1) * (q - n0);
        acc[5] = (p + 1) * (n0 - 1);
        acc[6] = (p + 1) * (q - n0);
    } else {
        int64_t s_plus = 0, s_minus = 0;
        for (uint32_t c = 1; c < p; ++c)
            (leg_neg(F, c) == 1 ? s_plus : s_minus) += n_c_closed(F, c);
        acc[1] -= (p + 1) * s_plus;
        acc[2] -= (p + 1) * s_minus;
        acc[3] -= (p + 1) * n0 - p;
        acc[4] = (p + 1) * s_plus;
        acc[5] = (p + 1) * s_minus;
        acc[6] = (p + 1) * (n0 - 1);
    }
    acc[7] = 1;
    int64_t total = 0;
    for (int i = 1; i <= 7; ++i) {
        if (acc[i] < 0) throw std::logic_error("negative class count in closed census");
        cc.N[i] = uint64_t(acc[i]);
        total += acc[i];
    }
    if (total != q * q) throw std::logic_error("closed census does not sum to q^2");
    return cc;
}

PairClassCensus pair_class_census(const FieldCtx& F) {
    const PairClassCensus byenum = census_enumerated(F);
    const PairClassCensus closed = census_closed(F);
    if (!(byenum == closed)) {
        std::ostringstream os;
        os << "pair-class census mismatch:";
        for (int i = 1; i <= 7; ++i)
            if (byenum.N[i] != closed.N[i])
                os << " N" << i << " enumerated " << byenum.N[i] << " vs closed " << closed.N[i];
        throw std::logic_error(os.str());
    }
    return byenum;
}

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (const auto& [w, c] : aggregated) t += c;
    return t;
}

WeightDistribution wdist_bruteforce(const CodeSpec& spec) {
    const FieldCtx& F = spec.F;
    const uint64_t q = F.q, Q = q - 1;
    const uint64_t n = spec.n();
    WeightDistribution wd;
    wd.p = spec.p;
    wd.m = spec.m;
    wd.n = n;

    std::vector<uint32_t> dlog(n);
    for (uint64_t k = 0; k < n; ++k) dlog[k] = F.log_tab[spec.D[k]];
    std::vector<uint8_t> tr0(Q);
    for (uint64_t l = 0; l < Q; ++l) tr0[l] = F.trace_tab[F.antilog_tab[l]] == 0;

    const bool slow_oracle = q <= 243;  // 3^5: also recompute per coordinate
    std::vector<uint32_t> La;
    La.reserve(n);
    for (uint64_t ai = 0; ai < q; ++ai) {
        La.clear();
        if (ai == 0) {
            La = dlog;
        } else {
            const uint64_t la = F.log_tab[ai];
            for (uint64_t k = 0; k < n; ++k) {
                uint64_t s = la + dlog[k];
                if (s >= Q) s -= Q;
                if (tr0[s]) La.push_back(dlog[k]);
            }
        }
        for (uint64_t bi = 0; bi < q; ++bi) {
            uint64_t cnt = 0;
            if (bi == 0) {
                cnt = La.size();
            } else {
                const uint64_t lb = F.log_tab[bi];
                for (uint32_t l : La) {
                    uint64_t s = lb + l;
                    if (s >= Q) s -= Q;
                    cnt += tr0[s];
                }
            }
            const uint64_t w = n - cnt;
            if (slow_oracle) {
                const RingElem x{{uint32_t(ai)}, {uint32_t(bi)}};
                const uint64_t w2 = hamming_weight(codeword(spec, x));
                if (w2 != w) {
                    std::ostringstream os;
                    os << "enumeration cross-check failed at a=" << ai << " b=" << bi
                       << ": fast " << w << ", per-coordinate " << w2;
                    throw std::logic_error(os.str());
                }
            }
            ++wd.aggregated[w];
        }
    }
    for (const auto& [w, c] : wd.aggregated) wd.raw.push_back({w, c, "enumerated"});
    if (wd.total() != q * q) throw std::logic_error("enumerated counts do not sum to q^2");
    return wd;
}

namespace {

void push_row(WeightDistribution& wd, uint32_t p, const Rational& w, const Rational& a,
              const std::string& label) {
    AlgebraicScalar ws(p, w), as(p, a);
    if (!ws.is_integer() || ws.re0().is_negative())
        throw std::logic_error("table row weight is not a nonnegative integer: " + label);
    wd.raw.push_back({uint64_t(as_count(ws, "row weight")),
                      as_count(as, ("multiplicity of row " + label).c_str()), label});
}

}  // namespace

WeightDistribution wdist_theorem(uint32_t p, uint32_t m) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("p must be an odd prime");
    const bool even = m % 2 == 0;
    if ((even && m < 4) || (!even && m < 3))
        throw std::invalid_argument("closed-form tables require even m >= 4 or odd m >= 3");

    WeightDistribution wd;
    wd.p = p;
    wd.m = m;
    const Rational P(p);
    const Rational pm1(int64_t(p) - 1), pp1(int64_t(p) + 1);
    const Rational p2m1 = P * P - Rational(1);
    const Rational half = Rational::frac(1, 2);
    wd.raw.push_back({0, 1, "zero codeword"});

    if (even) {
        const Rational g(gauss_sum_exact(p, m).as_integer());
        const Rational n0 = p_pow(p, int(m) - 1) + p_pow(p, -1) * pm1 * g;
        wd.n = uint64_t((n0 - Rational(1)).as_ll());
        const Rational w1 = p_pow(p, int(m) - 3) * p2m1;
        const Rational c26 = P * P * P - P * P + P * Rational(3) - Rational(1);
        push_row(wd, p, w1,
                 p_pow(p, 2 * int(m) - 3) - p_pow(p, int(m) - 3) * c26 +
                     p_pow(p, -1) * p2m1 * (p_pow(p, int(m) - 2) - Rational(1)) * g +
                     p_pow(p, -3) * pm1 * pm1 * pm1 * g * g + P,
                 "p^(m-3)(p^2-1)");
        push_row(wd, p, w1 + p_pow(p, -2) * pm1 * pm1 * g,
                 half * pm1 *
                     (p_pow(p, 2 * int(m) - 2) * pp1 + p_pow(p, int(m) - 2) * p2m1 * g -
                      p_pow(p, int(m) - 2) * Rational(2) * (P * Rational(2) - Rational(1)) -
                      p_pow(p, -2) * pm1 * (P - Rational(2)) * g * g),
                 "p^(m-3)(p^2-1)+p^(-2)(p-1)^2 G");
        push_row(wd, p, w1 + p_pow(p, -1) * pm1 * g,
                 pm1 * (p_pow(p, 2 * int(m) - 3) * pp1 - p_pow(p, int(m) - 3) * c26 -
                        p_pow(p, -3) * (P * P * Rational(2) - P * Rational(3) + Rational(1)) * g * g -
                        p_pow(p, -1) * pp1 * (p_pow(p, int(m) - 2) - Rational(1)) * g),
                 "p^(m-3)(p^2-1)+p^(-1)(p-1)G");
        push_row(wd, p, p2m1 * (p_pow(p, int(m) - 3) + p_pow(p, -2) * g),
                 half * pm1 * pm1 *
                     (p_pow(p, 2 * int(m) - 2) - p_pow(p, int(m) - 2) * pp1 * g + p_pow(p, -1) * g * g),
                 "(p^2-1)(p^(m-3)+p^(-2)G)");
        push_row(wd, p, p_pow(p, int(m) - 2) * pm1,
                 pp1 * (p_pow(p, int(m) - 1) + p_pow(p, -1) * pm1 * g - Rational(1)),
                 "p^(m-2)(p-1)");
        push_row(wd, p, pm1 * (p_pow(p, int(m) - 2) + p_pow(p, -1) * g),
                 p2m1 * (p_pow(p, int(m) - 1) - p_pow(p, -1) * g),
                 "(p-1)(p^(m-2)+p^(-1)G)");
    } else {
        const Rational g((gauss_sum_exact(p, m) * gauss_sum_exact(p, 1)).as_integer());
        wd.n = uint64_t((p_pow(p, int(m) - 1) - Rational(1)).as_ll());
        const Rational w3 = p_pow(p, int(m) - 3) * p2m1;
        const Rational dw = p_pow(p, -2) * pm1 * g;
        const Rational core = p_pow(p, 2 * int(m) - 3) * pp1 +
                              p_pow(p, int(m) - 3) * (P * Rational(2) - Rational(1)) * pm1 +
                              p_pow(p, -4) * pm1 * (P * P - P + Rational(1)) * g * g;
        const Rational tailp = half * p2m1 * (p_pow(p, int(m) - 1) + p_pow(p, -1) * g);
        const Rational tailm = half * p2m1 * (p_pow(p, int(m) - 1) - p_pow(p, -1) * g);
        push_row(wd, p, w3 - dw,
                 half * pm1 * (core + p_pow(p, int(m) - 2) * pp1 * g) - tailp,
                 "p^(m-3)(p^2-1)-p^(-2)(p-1)G*Gbar");
        push_row(wd, p, w3 + dw,
                 half * pm1 * (core - p_pow(p, int(m) - 2) * pp1 * g) - tailm,
                 "p^(m-3)(p^2-1)+p^(-2)(p-1)G*Gbar");
        push_row(wd, p, w3,
                 pm1 * pm1 *
                         (p_pow(p, 2 * int(m) - 3) * pp1 -
                          p_pow(p, int(m) - 3) * (P * Rational(2) - Rational(1)) -
                          p_pow(p, -4) * (P * P - P + Rational(1)) * g * g) +
                     p_pow(p, 2 * int(m) - 2) - pp1 * p_pow(p, int(m) - 1) + P,
                 "p^(m-3)(p^2-1)");
        push_row(wd, p, p_pow(p, int(m) - 2) * pm1 - dw, tailp,
                 "p^(m-2)(p-1)-p^(-2)(p-1)G*Gbar");
        push_row(wd, p, p_pow(p, int(m) - 2) * pm1 + dw, tailm,
                 "p^(m-2)(p-1)+p^(-2)(p-1)G*Gbar");
        push_row(wd, p, p_pow(p, int(m) - 2) * pm1,
                 pp1 * (p_pow(p, int(m) - 1) - Rational(1)), "p^(m-2)(p-1)");
    }

    for (const auto& row : wd.raw)
        if (row.count != 0) wd.aggregated[row.weight] += row.count;
    uint64_t expect = 1;
    for (uint32_t j = 0; j < 2 * m; ++j) expect *= p;
    if (wd.total() != expect)
        throw std::logic_error("table multiplicities do not sum to p^(2m)");
    return wd;
}

WeightDistribution wdist_theorem(const CodeSpec& spec) {
    WeightDistribution wd = wdist_theorem(spec.p, spec.m);
    if (wd.n != spec.n())
        throw std::logic_error("table length disagrees with the defining set");
    return wd;
}

uint64_t min_distance(const WeightDistribution& wd) {
    for (const auto& [w, c] : wd.aggregated)
        if (w > 0 && c > 0) return w;
    throw std::logic_error("no nonzero weight with positive count");
}

std::string export_json_string(const CodeSpec& spec, const WeightDistribution& wd,
                               uint64_t min_dist) {
    nlohmann::json j;
    j["p"] = spec.p;
    j["m"] = spec.m;
    j["modulus"] = spec.F.params.modulus;
    j["n"] = json_int(spec.n());
    j["defining_set"] = spec.D;
    uint64_t codewords = 1;
    for (uint32_t k = 0; k < 2 * spec.m; ++k) codewords *= spec.p;
    j["codewords"] = json_int(codewords);
    nlohmann::json dist = nlohmann::json::array();
    for (const auto& [w, c] : wd.aggregated)
        dist.push_back({{"weight", json_int(w)}, {"count", json_int(c)}});
    j["distribution"] = dist;
    j["min_distance"] = json_int(min_dist);
    return j.dump(2) + "\n";
}

}  // namespace fewweight
