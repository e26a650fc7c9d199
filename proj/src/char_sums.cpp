#include "fewweight/char_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fewweight {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Rational p_pow(uint32_t p, int e) {
    Rational r(1);
    const int a = e < 0 ? -e : e;
    for (int j = 0; j < a; ++j) r = r * Rational((long long)p);
    return e >= 0 ? r : Rational(1) / r;
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
    uint64_t r = 1, b = a % p;
    for (uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return uint32_t(r);
}

// eta_bar(-c) for c in F_p
int leg_neg(uint32_t c, uint32_t p) { return legendre_symbol((p - c % p) % p, p); }

uint32_t mulmod_p(uint32_t a, uint32_t b, uint32_t p) {
    return uint32_t(uint64_t(a) * b % p);
}

// (u - v) mod p for u, v already reduced
uint32_t submod_p(uint32_t u, uint32_t v, uint32_t p) { return (u + p - v) % p; }

// sum_{x in F_p^*} zeta^(x t) for every t, computed numerically
std::vector<std::complex<double>> nonzero_char_sums(uint32_t p) {
    std::vector<std::complex<double>> S(p, 0.0);
    for (uint32_t t = 0; t < p; ++t)
        for (uint32_t x = 1; x < p; ++x) S[t] += zeta_pow(p, int64_t(x) * t);
    return S;
}

// #{a in F_q : Tr(a^2) = t} for every t, by enumeration
std::vector<uint64_t> sq_trace_counts(const FieldCtx& F) {
    std::vector<uint64_t> cnt(F.p(), 0);
    cnt[0] = 1; // a = 0
    const uint64_t Q = F.q - 1;
    for (uint64_t k = 0; k < Q; ++k) cnt[F.trace_tab[F.antilog_tab[(2 * k) % Q]]]++;
    return cnt;
}

AlgebraicScalar as_int(uint32_t p, const Rational& r) { return {p, r}; }

} // namespace

std::complex<double> zeta_pow(uint32_t p, int64_t k) {
    int64_t r = k % int64_t(p);
    if (r < 0) r += p;
    return std::polar(1.0, kTwoPi * double(r) / double(p));
}

bool complex_matches(std::complex<double> oracle, std::complex<double> closed) {
    return std::abs(oracle - closed) <= 1e-6 * (1.0 + std::abs(closed));
}

std::string complex_str(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", z.real(), z.imag());
    return buf;
}

int legendre_symbol(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) return 0;
    uint64_t r = 1, b = a;
    for (uint32_t e = (p - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r == 1 ? 1 : -1;
}

std::complex<double> gauss_sum_bruteforce(const FieldCtx& F) {
    std::complex<double> acc = 1.0; // x = 0 term
    const uint64_t Q = F.q - 1;
    for (uint64_t k = 0; k < Q; ++k)
        acc += zeta_pow(F.p(), F.trace_tab[F.antilog_tab[(2 * k) % Q]]);
    return acc;
}

QuadSum quad_sum(const FieldCtx& F, FieldElem a2, FieldElem a1, FieldElem a0) {
    if (a2 == F.zero()) throw std::invalid_argument("quad_sum needs a2 != 0");
    QuadSum out;
    out.direct = 0.0;
    for (uint64_t v = 0; v < F.q; ++v) {
        const FieldElem x = F.elem(v);
        const FieldElem w = F.add(F.mul(a2, F.mul(x, x)), F.add(F.mul(a1, x), a0));
        out.direct += zeta_pow(F.p(), F.trace(w));
    }
    const FieldElem inv4a2 = F.inv(F.mul(F.embed(4), a2));
    const FieldElem shift = F.sub(a0, F.mul(F.mul(a1, a1), inv4a2));
    out.shift_trace = F.trace(shift);
    out.eta_a2 = F.eta(a2);
    out.closed = zeta_pow(F.p(), out.shift_trace) * double(out.eta_a2) *
                 gauss_sum_exact(F.p(), F.m()).to_complex();
    return out;
}

int64_t n_c_closed(const FieldCtx& F, uint32_t c) {
    const uint32_t p = F.p(), m = F.m();
    c %= p;
    const AlgebraicScalar G = gauss_sum_exact(p, m);
    AlgebraicScalar r;
    if (m % 2 == 0) {
        if (c == 0)
            r = as_int(p, p_pow(p, int(m) - 1)) + G * (p_pow(p, -1) * Rational(p - 1));
        else
            r = as_int(p, p_pow(p, int(m) - 1)) - G * p_pow(p, -1);
    } else {
        if (c == 0)
            r = as_int(p, p_pow(p, int(m) - 1));
        else
            r = as_int(p, p_pow(p, int(m) - 1)) +
                G * gauss_sum_exact(p, 1) * (p_pow(p, -1) * Rational(leg_neg(c, p)));
    }
    return r.as_integer();
}

uint64_t n_c_bruteforce(const FieldCtx& F, uint32_t c) {
    c %= F.p();
    uint64_t cnt = (c == 0) ? 1 : 0; // x = 0
    const uint64_t Q = F.q - 1;
    for (uint64_t k = 0; k < Q; ++k)
        if (F.trace_tab[F.antilog_tab[(2 * k) % Q]] == c) ++cnt;
    return cnt;
}

AlgebraicScalar K_xi_closed(const FieldCtx& F, FieldElem xi) {
    if (xi == F.zero()) throw std::invalid_argument("K_xi needs xi != 0");
    const uint32_t p = F.p(), m = F.m();
    const uint32_t t = F.trace(F.mul(xi, xi));
    const AlgebraicScalar G = gauss_sum_exact(p, m);
    if (m % 2 == 0) {
        if (t == 0) return G * Rational((long long)(p - 1) * (p - 1));
        return -(G * Rational(p - 1));
    }
    if (t == 0) return AlgebraicScalar::integer(p, 0);
    return G * gauss_sum_exact(p, 1) * Rational((long long)leg_neg(t, p) * (p - 1));
}

std::complex<double> K_xi_oracle(const FieldCtx& F, FieldElem xi) {
    const auto S = nonzero_char_sums(F.p());
    std::complex<double> acc = S[0] * S[0]; // d = 0
    const uint64_t Q = F.q - 1;
    const uint32_t lx = F.log_of(xi);
    for (uint64_t k = 0; k < Q; ++k) {
        const uint32_t t1 = F.trace_tab[F.antilog_tab[(2 * k) % Q]];
        const uint32_t t2 = F.trace_tab[F.antilog_tab[(lx + k) % Q]];
        acc += S[t1] * S[t2];
    }
    return acc;
}

int64_t N_xi_closed(const FieldCtx& F, FieldElem xi) {
    if (xi == F.zero()) throw std::invalid_argument("N_xi needs xi != 0");
    const uint32_t p = F.p(), m = F.m();
    const uint32_t t = F.trace(F.mul(xi, xi));
    AlgebraicScalar r = as_int(p, p_pow(p, int(m) - 2));
    if (m % 2 == 0) {
        if (t == 0) r = r + gauss_sum_exact(p, m) * (p_pow(p, -1) * Rational(p - 1));
    } else {
        if (t != 0)
            r = r + gauss_sum_exact(p, m) * gauss_sum_exact(p, 1) *
                        (p_pow(p, -2) * Rational((long long)leg_neg(t, p) * (p - 1)));
    }
    return r.as_integer();
}

uint64_t N_xi_bruteforce(const FieldCtx& F, FieldElem xi) {
    uint64_t cnt = 1; // d = 0
    const uint64_t Q = F.q - 1;
    const uint32_t lx = F.log_of(xi);
    for (uint64_t k = 0; k < Q; ++k)
        if (F.trace_tab[F.antilog_tab[(2 * k) % Q]] == 0 &&
            F.trace_tab[F.antilog_tab[(lx + k) % Q]] == 0)
            ++cnt;
    return cnt;
}

int64_t N2_closed(const FieldCtx& F, uint32_t c1, uint32_t c2) {
    const uint32_t p = F.p(), m = F.m();
    c1 %= p;
    c2 %= p;
    const AlgebraicScalar G = gauss_sum_exact(p, m);
    AlgebraicScalar r;
    if (m % 2 == 0) {
        if (c1 == 0 && c2 == 0) {
            const AlgebraicScalar n0 =
                as_int(p, p_pow(p, int(m) - 1)) + G * (p_pow(p, -1) * Rational(p - 1));
            r = n0 * n0;
        } else if (c1 != 0 && c2 != 0) {
            const AlgebraicScalar nc = as_int(p, p_pow(p, int(m) - 1)) - G * p_pow(p, -1);
            r = nc * nc;
        } else {
            r = as_int(p, p_pow(p, 2 * int(m) - 2)) +
                G * (p_pow(p, int(m) - 2) * Rational(p - 2)) -
                G * G * (p_pow(p, -2) * Rational(p - 1));
        }
    } else {
        const AlgebraicScalar GG = G * gauss_sum_exact(p, 1);
        r = as_int(p, p_pow(p, 2 * int(m) - 2));
        if (c1 != 0) r = r + GG * (p_pow(p, int(m) - 2) * Rational(leg_neg(c1, p)));
        if (c2 != 0) r = r + GG * (p_pow(p, int(m) - 2) * Rational(leg_neg(c2, p)));
        if (c1 != 0 && c2 != 0)
            r = r + GG * GG *
                        (p_pow(p, -2) * Rational(legendre_symbol(mulmod_p(c1, c2, p), p)));
    }
    return r.as_integer();
}

uint64_t L_closed(uint32_t p, int j) {
    const uint64_t k = p - 1;
    if (j == 1) return k * k * (p - 3) / 2;
    if (j == -1) return k * k * k / 2;
    throw std::invalid_argument("j must be +1 or -1");
}

uint64_t L_bruteforce(uint32_t p, int j) {
    uint64_t cnt = 0;
    for (uint32_t c1 = 1; c1 < p; ++c1)
        for (uint32_t c2 = 1; c2 < p; ++c2)
            for (uint32_t c3 = 1; c3 < p; ++c3)
                if (legendre_symbol(submod_p(mulmod_p(c3, c3, p), mulmod_p(c1, c2, p), p), p) == j) ++cnt;
    return cnt;
}

int64_t Psi2_closed(const FieldCtx& F, uint32_t c1, uint32_t c3) {
    const uint32_t p = F.p();
    c1 %= p;
    c3 %= p;
    const int64_t q = int64_t(F.q);
    if (c1 == 0 && c3 == 0) return q * (p - 1) * (p - 1);
    if (c1 == 0 || c3 == 0) return -q * (p - 1);
    return q;
}

std::complex<double> Psi2_oracle(const FieldCtx& F, uint32_t c1, uint32_t c3) {
    const uint32_t p = F.p();
    c1 %= p;
    c3 %= p;
    // trace counts and nonzero-square-trace counts
    std::vector<uint64_t> cnt_tr(p, 0);
    for (uint64_t v = 0; v < F.q; ++v) cnt_tr[F.trace_tab[v]]++;
    std::vector<uint64_t> cnt_sq_nz(p, 0);
    const uint64_t Q = F.q - 1;
    for (uint64_t k = 0; k < Q; ++k) cnt_sq_nz[F.trace_tab[F.antilog_tab[(2 * k) % Q]]]++;

    std::complex<double> acc = 0.0;
    for (uint32_t x = 1; x < p; ++x) {
        std::complex<double> A = 0.0; // sum over a != 0 of zeta^(x Tr(a^2))
        for (uint32_t t = 0; t < p; ++t)
            A += double(cnt_sq_nz[t]) * zeta_pow(p, int64_t(x) * t);
        for (uint32_t z = 1; z < p; ++z) {
            std::complex<double> B = 0.0; // sum over w of zeta^(z Tr(w))
            for (uint32_t t = 0; t < p; ++t)
                B += double(cnt_tr[t]) * zeta_pow(p, int64_t(z) * t);
            // a = 0 contributes q (the full b-sum); a != 0 contributes B via b -> ab
            const std::complex<double> inner = double(F.q) + B * A;
            acc += zeta_pow(p, -int64_t(x) * c1 - int64_t(z) * c3) * inner;
        }
    }
    return acc;
}

int64_t delta_closed(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3) {
    const uint32_t d = submod_p(mulmod_p(c3, c3, p), mulmod_p(c1, c2, p), p);
    if (d == 0) return int64_t(p) + 1;
    if (legendre_symbol(d, p) == 1) return int64_t(p) * p + p + 1;
    return -int64_t(p) * p + p + 1;
}

namespace {

// shared quadruple loop for delta/rho/sigma; weight(c, y) multiplies each term
template <typename W>
std::complex<double> quad4_oracle(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3, W weight) {
    if (c1 % p == 0 || c2 % p == 0 || c3 % p == 0)
        throw std::invalid_argument("arguments must be in F_p^*");
    std::vector<uint32_t> inv(p);
    for (uint32_t a = 1; a < p; ++a) inv[a] = mod_inv(a, p);
    std::complex<double> acc = 0.0;
    for (uint32_t c = 1; c < p; ++c)
        for (uint32_t x = 1; x < p; ++x)
            for (uint32_t y = 1; y < p; ++y) {
                const uint32_t i4y = inv[4 * y % p];
                for (uint32_t z = 1; z < p; ++z) {
                    // chi_bar(v) = zeta^(-v)
                    int64_t e = -int64_t(x) * ((c + p - c1 % p) % p); // x(c - c1)
                    e += int64_t(y) * (c2 % p);                      // -(-y c2)
                    e += int64_t(z) * z % p * c % p * i4y;           // z^2 c / (4y)
                    e += int64_t(z) * (c3 % p);                      // z c3
                    acc += weight(c, y) * zeta_pow(p, e);
                }
            }
    return acc;
}

} // namespace

std::complex<double> delta_oracle(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3) {
    return quad4_oracle(p, c1, c2, c3, [](uint32_t, uint32_t) { return 1.0; });
}

AlgebraicScalar rho_closed(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3) {
    if (c1 % p == 0 || c2 % p == 0 || c3 % p == 0)
        throw std::invalid_argument("arguments must be in F_p^*");
    // Gbar here is the Gauss sum of the conjugate character pair over F_p
    const AlgebraicScalar Gbar = gauss_sum_exact(p, 1).conj();
    const uint32_t d = submod_p(mulmod_p(c3, c3, p), mulmod_p(c1, c2, p), p);
    const long long e1 = leg_neg(c1, p), e2 = leg_neg(c2, p);
    if (d == 0) return Gbar * Rational(-(e1 + e2) + e1 * (long long)(p - 1) * (p - 1));
    return Gbar * Rational(-(long long)(p + 1) * e2 - (long long)p * e1);
}

std::complex<double> rho_oracle(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3) {
    return quad4_oracle(p, c1, c2, c3, [p](uint32_t, uint32_t y) {
        return double(legendre_symbol(y, p));
    });
}

AlgebraicScalar sigma_closed(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3) {
    if (c1 % p == 0 || c2 % p == 0 || c3 % p == 0)
        throw std::invalid_argument("arguments must be in F_p^*");
    // same conjugate-character Gauss sum as in rho
    const AlgebraicScalar Gbar = gauss_sum_exact(p, 1).conj();
    const uint32_t d = submod_p(mulmod_p(c3, c3, p), mulmod_p(c1, c2, p), p);
    if (d == 0) return Gbar * Rational((long long)p * p - 2 * p - 1);
    return Gbar * Rational(-(long long)(p + 1) -
                           (long long)p * legendre_symbol(mulmod_p(c1, c2, p), p));
}

std::complex<double> sigma_oracle(uint32_t p, uint32_t c1, uint32_t c2, uint32_t c3) {
    return quad4_oracle(p, c1, c2, c3, [p](uint32_t c, uint32_t y) {
        return double(legendre_symbol((p - mulmod_p(c, y, p)) % p, p));
    });
}

AlgebraicScalar Psi4_closed(const FieldCtx& F, uint32_t c1, uint32_t c2, uint32_t c3) {
    const uint32_t p = F.p(), m = F.m();
    c1 %= p;
    c2 %= p;
    c3 %= p;
    const AlgebraicScalar G = gauss_sum_exact(p, m);
    const Rational Pm = p_pow(p, int(m));
    const bool z1 = c1 != 0, z2 = c2 != 0, z3 = c3 != 0;
    if (m % 2 == 0) {
        const AlgebraicScalar base = (as_int(p, Pm) + G * Rational(p - 2)) * G;
        const int nz = int(z1) + int(z2) + int(z3);
        if (nz == 0) return base * Rational((long long)(p - 1) * (p - 1));
        if (nz == 1) return -(base * Rational(p - 1));
        if (z1 && z2 && !z3) {
            const int s = legendre_symbol((p - mulmod_p(c1, c2, p)) % p, p);
            return base + (as_int(p, p_pow(p, int(m) + 1)) - G * Rational(p)) * G * Rational(s);
        }
        if (z1 && z2 && z3) {
            const uint32_t d = submod_p(mulmod_p(c3, c3, p), mulmod_p(c1, c2, p), p);
            if (d == 0) return G * (as_int(p, Pm) - G * Rational(2));
            const AlgebraicScalar core = G * (as_int(p, Pm) - G) ;
            if (legendre_symbol(d, p) == 1) return core * Rational(p + 1) - G * G;
            return -(core * Rational(p - 1)) - G * G;
        }
        return base; // c3 != 0 and exactly one of c1, c2 is zero
    }
    const AlgebraicScalar GG = G * gauss_sum_exact(p, 1);
    const AlgebraicScalar GG2 = GG * GG;
    const Rational pinv = p_pow(p, -1);
    if (!z1 && !z2 && !z3) return -(GG2 * (pinv * Rational((long long)(p - 1) * (p - 1))));
    if (!z1 && !z2 && z3) return GG2 * (pinv * Rational(p - 1));
    if (!z1 && z2 && !z3)
        return (as_int(p, Pm * Rational(leg_neg(c2, p))) + GG * pinv) * GG * Rational(p - 1);
    if (!z1 && z2 && z3)
        return -((as_int(p, Pm * Rational(leg_neg(c2, p))) + GG * pinv) * GG);
    if (z1 && !z2 && !z3)
        return (as_int(p, Pm * Rational(leg_neg(c1, p))) + GG * pinv) * GG * Rational(p - 1);
    if (z1 && !z2 && z3)
        return -((as_int(p, Pm * Rational(leg_neg(c1, p))) + GG * pinv) * GG);
    const long long e1 = leg_neg(c1, p), e2 = leg_neg(c2, p);
    const long long s12 = legendre_symbol(mulmod_p(c1, c2, p), p);
    if (z1 && z2 && !z3)
        return -(GG * (Pm * Rational(e1 + e2))) - GG2 * (Rational(s12) + pinv);
    const uint32_t d = submod_p(mulmod_p(c3, c3, p), mulmod_p(c1, c2, p), p);
    if (d == 0)
        return GG * (Pm * Rational(e1 * (p - 2))) + GG2 * (Rational(p - 2) - pinv);
    return -(GG * (Pm * Rational(e1 + e2))) - GG2 * (Rational(s12) + Rational(1) + pinv);
}

Psi4Oracle::Psi4Oracle(const FieldCtx& F) : p_(F.p()) {
    const uint32_t p = p_;
    const auto cnt_sq = sq_trace_counts(F);
    const std::complex<double> Gnum = gauss_sum_bruteforce(F);
    std::vector<uint32_t> inv(p);
    for (uint32_t a = 1; a < p; ++a) inv[a] = mod_inv(a, p);
    T_.assign(size_t(p - 1) * (p - 1) * (p - 1), 0.0);
    for (uint32_t x = 1; x < p; ++x)
        for (uint32_t y = 1; y < p; ++y)
            for (uint32_t z = 1; z < p; ++z) {
                // sum_b chi(y b^2 + z a b) = chi(-z^2 a^2 / (4y)) eta(y) G, so
                // the (a,b)-sum collapses to sum_a zeta^(Tr(u a^2)),
                // u = x - z^2/(4y) in F_p.
                const uint32_t u =
                    (x + p - uint32_t(uint64_t(z) * z % p * inv[4 * y % p] % p)) % p;
                std::complex<double> S = 0.0;
                for (uint32_t t = 0; t < p; ++t)
                    S += double(cnt_sq[t]) * zeta_pow(p, int64_t(u) * t);
                const double ey = double(F.eta(F.embed(y)));
                T_[(size_t(x - 1) * (p - 1) + (y - 1)) * (p - 1) + (z - 1)] = ey * Gnum * S;
            }
}

std::complex<double> Psi4Oracle::eval(uint32_t c1, uint32_t c2, uint32_t c3) const {
    const uint32_t p = p_;
    std::complex<double> acc = 0.0;
    for (uint32_t x = 1; x < p; ++x)
        for (uint32_t y = 1; y < p; ++y)
            for (uint32_t z = 1; z < p; ++z)
                acc += zeta_pow(p, -int64_t(x) * c1 - int64_t(y) * c2 - int64_t(z) * c3) *
                       T_[(size_t(x - 1) * (p - 1) + (y - 1)) * (p - 1) + (z - 1)];
    return acc;
}

std::complex<double> Psi4_oracle_naive(const FieldCtx& F, uint32_t c1, uint32_t c2,
                                       uint32_t c3) {
    if (F.q > 2048) throw std::invalid_argument("naive Psi_4 oracle is limited to tiny fields");
    const uint32_t p = F.p();
    const auto S = nonzero_char_sums(p);
    std::complex<double> acc = 0.0;
    for (uint64_t va = 0; va < F.q; ++va)
        for (uint64_t vb = 0; vb < F.q; ++vb) {
            const FieldElem a = F.elem(va), b = F.elem(vb);
            const uint32_t ta = F.trace(F.mul(a, a));
            const uint32_t tb = F.trace(F.mul(b, b));
            const uint32_t tab = F.trace(F.mul(a, b));
            acc += S[(ta + p - c1 % p) % p] * S[(tb + p - c2 % p) % p] *
                   S[(tab + p - c3 % p) % p];
        }
    return acc;
}

bool pair_admissible(const FieldCtx& F, FieldElem a, FieldElem b) {
    if (a == F.zero() || b == F.zero()) return false;
    return F.mul(a, F.inv(b)).idx >= F.p();
}

AlgebraicScalar Omega4_closed(const FieldCtx& F, FieldElem a, FieldElem b) {
    if (!pair_admissible(F, a, b))
        throw std::invalid_argument("Omega_4 needs a, b nonzero with a != w b");
    return Omega4_closed_traces(F, F.trace(F.mul(a, a)), F.trace(F.mul(b, b)),
                                F.trace(F.mul(a, b)));
}

AlgebraicScalar Omega4_closed_traces(const FieldCtx& F, uint32_t alpha, uint32_t beta,
                                     uint32_t gamma) {
    const uint32_t p = F.p(), m = F.m();
    const uint32_t al = alpha % p, be = beta % p, ga = gamma % p;
    const AlgebraicScalar G = gauss_sum_exact(p, m);
    if (m % 2 == 0) {
        if (al == 0 && be == 0 && ga == 0) return G * Rational((long long)(p - 1) * (p - 1) * (p - 1));
        if (al != 0 && be != 0) {
            const uint32_t d = submod_p(mulmod_p(al, be, p), mulmod_p(ga, ga, p), p); // alpha*beta - gamma^2
            if (d % p == 0) return G * Rational(p - 1);
            const int s = legendre_symbol((p - d % p) % p, p); // eta_bar(gamma^2 - alpha beta)
            return G * Rational((long long)s * p * (p - 1)) + G * Rational(p - 1);
        }
        const int nz = int(al != 0) + int(be != 0) + int(ga != 0);
        if (nz == 1) return -(G * Rational((long long)(p - 1) * (p - 1)));
        return G * Rational(p - 1); // exactly one of alpha, beta zero, gamma != 0
    }
    const AlgebraicScalar GG = G * gauss_sum_exact(p, 1);
    const long long k = p - 1;
    if (al == 0 && be == 0) return AlgebraicScalar::integer(p, 0);
    if (al == 0 && be != 0 && ga == 0) return GG * Rational(leg_neg(be, p) * k * k);
    if (al == 0 && be != 0 && ga != 0) return -(GG * Rational(leg_neg(be, p) * k));
    if (al != 0 && be == 0 && ga == 0) return GG * Rational(leg_neg(al, p) * k * k);
    if (al != 0 && be == 0 && ga != 0) return -(GG * Rational(leg_neg(al, p) * k));
    const uint32_t d = submod_p(mulmod_p(al, be, p), mulmod_p(ga, ga, p), p);
    if (d % p == 0)
        return GG * Rational((leg_neg(be, p) * k - leg_neg(al, p)) * k);
    return -(GG * Rational((leg_neg(be, p) + leg_neg(al, p)) * k));
}

std::complex<double> Omega4_oracle(const FieldCtx& F, FieldElem a, FieldElem b) {
    const auto S = nonzero_char_sums(F.p());
    std::complex<double> acc = S[0] * S[0] * S[0]; // d = 0
    const uint64_t Q = F.q - 1;
    const uint32_t la = F.log_of(a), lb = F.log_of(b);
    for (uint64_t k = 0; k < Q; ++k) {
        const uint32_t t1 = F.trace_tab[F.antilog_tab[(2 * k) % Q]];
        const uint32_t t2 = F.trace_tab[F.antilog_tab[(la + k) % Q]];
        const uint32_t t3 = F.trace_tab[F.antilog_tab[(lb + k) % Q]];
        acc += S[t1] * S[t2] * S[t3];
    }
    return acc;
}

} // namespace fewweight
