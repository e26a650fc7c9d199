#include "fewweight/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewweight {

namespace {

// Dense polynomials over F_p, low degree first, no trailing zeros
// (the zero polynomial is the empty vector).
using Poly = std::vector<uint32_t>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool poly_is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

// a mod f, f monic of degree >= 1.
Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
    const size_t df = f.size() - 1;
    a = trim(std::move(a));
    while (a.size() > df) {
        const uint32_t lead = a.back();
        const size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (size_t j = 0; j <= df; ++j) {
                uint64_t t = uint64_t(lead) * f[j] % p;
                uint32_t& c = a[shift + j];
                c = uint32_t((c + p - t) % p);
            }
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = uint32_t((prod[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    Poly acc = {1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_sub(Poly a, const Poly& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t j = 0; j < b.size(); ++j) a[j] = (a[j] + p - b[j]) % p;
    return trim(std::move(a));
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
    // Fermat; p is a small prime.
    uint64_t r = 1, b = a % p;
    for (uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return uint32_t(r);
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // reduce a mod b (b need not be monic)
        const uint32_t lead_inv = inv_mod_p(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            const uint32_t c = uint32_t(uint64_t(a.back()) * lead_inv % p);
            const size_t shift = a.size() - b.size();
            if (c != 0)
                for (size_t j = 0; j < b.size(); ++j) {
                    uint64_t t = uint64_t(c) * b[j] % p;
                    a[shift + j] = uint32_t((a[shift + j] + p - t) % p);
                }
            a = trim(std::move(a));
        }
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        const uint32_t s = inv_mod_p(a.back(), p);
        for (auto& c : a) c = uint32_t(uint64_t(c) * s % p);
    }
    return a;
}

// Ben-Or: f (monic, degree m, f(0) != 0) is irreducible iff
// gcd(x^(p^k) - x, f) = 1 for all 1 <= k <= m/2.
bool is_irreducible(const Poly& f, uint32_t p, uint32_t m) {
    if (m == 1) return true;
    const Poly x = {0, 1};
    Poly u = x;
    for (uint32_t k = 1; k <= m / 2; ++k) {
        u = poly_powmod(u, p, f, p); // u = x^(p^k) mod f
        if (!poly_is_one(poly_gcd(poly_sub(u, x, p), f, p))) return false;
    }
    return true;
}

bool residue_x_is_primitive(const Poly& f, uint32_t p, uint64_t q,
                            const std::vector<uint64_t>& radical) {
    const Poly x = {0, 1};
    if (!poly_is_one(poly_powmod(x, q - 1, f, p))) return false;
    for (uint64_t r : radical)
        if (poly_is_one(poly_powmod(x, (q - 1) / r, f, p))) return false;
    return true;
}

uint64_t checked_pow(uint32_t p, uint32_t m) {
    uint64_t q = 1;
    for (uint32_t j = 0; j < m; ++j) {
        if (q > FieldCtx::kMaxQ / p) throw std::length_error("p^m exceeds the 2^22 table budget");
        q *= p;
    }
    return q;
}

void validate_pm(uint32_t p, uint32_t m) {
    if (m == 0) throw std::invalid_argument("m must be >= 1");
    if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("p must be an odd prime");
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<uint32_t> find_primitive_modulus(uint32_t p, uint32_t m, uint32_t nth) {
    validate_pm(p, m);
    const uint64_t q = checked_pow(p, m);
    const auto radical = prime_factors(q - 1);

    // Lexicographic scan: c_0 varies slowest, c_{m-1} fastest.
    uint64_t msd = 1; // p^(m-1)
    for (uint32_t j = 1; j < m; ++j) msd *= p;
    for (uint64_t k = 0; k < q; ++k) {
        Poly f(m + 1, 0);
        f[m] = 1;
        uint64_t rem = k;
        for (uint32_t j = 0; j < m; ++j) {
            uint64_t place = msd;
            for (uint32_t t = 0; t < j; ++t) place /= p;
            f[j] = uint32_t(rem / place);
            rem %= place;
        }
        if (f[0] == 0) continue; // x | f
        if (!is_irreducible(f, p, m)) continue;
        if (!residue_x_is_primitive(f, p, q, radical)) continue;
        if (nth == 0) return f;
        --nth;
    }
    throw std::runtime_error("no primitive modulus found (nth too large?)");
}

FieldElem FieldCtx::elem(uint64_t idx) const {
    if (idx >= q) throw std::out_of_range("element index out of range");
    return {uint32_t(idx)};
}

FieldElem FieldCtx::add(FieldElem u, FieldElem v) const {
    const uint32_t p_ = params.p;
    uint32_t a = u.idx, b = v.idx, out = 0, place = 1;
    while (a != 0 || b != 0) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return {out};
}

FieldElem FieldCtx::neg(FieldElem u) const {
    const uint32_t p_ = params.p;
    uint32_t a = u.idx, out = 0, place = 1;
    while (a != 0) {
        const uint32_t d = a % p_;
        if (d != 0) out += (p_ - d) * place;
        place *= p_;
        a /= p_;
    }
    return {out};
}

FieldElem FieldCtx::inv(FieldElem u) const {
    if (u.idx == 0) throw std::domain_error("inverse of zero");
    const uint64_t e = (q - 1 - log_tab[u.idx]) % (q - 1);
    return {antilog_tab[e]};
}

FieldElem FieldCtx::pow(FieldElem u, uint64_t e) const {
    if (u.idx == 0) return e == 0 ? one() : zero();
    const uint64_t k = (__uint128_t(log_tab[u.idx]) * (e % (q - 1))) % (q - 1);
    return {antilog_tab[k]};
}

FieldElem FieldCtx::frobenius(FieldElem u) const {
    if (u.idx == 0) return u;
    const uint64_t k = uint64_t(log_tab[u.idx]) * params.p % (q - 1);
    return {antilog_tab[k]};
}

uint32_t FieldCtx::log_of(FieldElem u) const {
    if (u.idx == 0) throw std::domain_error("log of zero");
    return log_tab[u.idx];
}

uint32_t FieldCtx::trace_powersum(FieldElem v) const {
    FieldElem acc = v, s = v;
    for (uint32_t t = 1; t < params.m; ++t) {
        s = frobenius(s);
        acc = add(acc, s);
    }
    if (acc.idx >= params.p) throw std::logic_error("trace is not in the prime field");
    return acc.idx;
}

int FieldCtx::eta_base(uint32_t c) const {
    c %= params.p;
    if (c == 0) return 0;
    // c^((p-1)/2) mod p
    uint64_t r = 1, b = c;
    for (uint32_t e = (params.p - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % params.p;
        b = b * b % params.p;
    }
    return r == 1 ? 1 : -1;
}

std::string FieldCtx::modulus_str() const {
    std::string s;
    for (uint32_t j = params.m + 1; j-- > 0;) {
        const uint32_t c = params.modulus[j];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (j == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c);
        s += (j == 1) ? "x" : "x^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

FieldCtx build_field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    validate_pm(p, m);
    const uint64_t q = checked_pow(p, m);
    if (modulus.size() != size_t(m) + 1) throw std::invalid_argument("modulus must have m+1 coefficients");
    if (modulus[m] != 1) throw std::invalid_argument("modulus must be monic");
    for (uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (modulus[0] == 0) throw std::invalid_argument("modulus must not be divisible by x");

    FieldCtx F;
    F.params = {p, m, modulus};
    F.q = q;

    // Antilog table by repeated multiplication by x.  A repeat before q-1
    // steps means the residue of x is not primitive (or f is reducible).
    F.antilog_tab.resize(q - 1);
    F.log_tab.assign(q, FieldCtx::kNoLog);
    std::vector<uint32_t> cur(m, 0);
    cur[0] = 1;
    for (uint64_t k = 0; k < q - 1; ++k) {
        uint32_t idx = 0, place = 1;
        for (uint32_t j = 0; j < m; ++j) {
            idx += cur[j] * place;
            place *= p;
        }
        if (idx == 0) throw std::logic_error("zero power of x");
        if (F.log_tab[idx] != FieldCtx::kNoLog)
            throw std::invalid_argument("modulus is not primitive (powers of x repeat early)");
        F.antilog_tab[k] = idx;
        F.log_tab[idx] = uint32_t(k);
        // cur *= x, reduced by f: shift up, then subtract carry * f.
        const uint32_t carry = cur[m - 1];
        for (uint32_t j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (carry != 0)
            for (uint32_t j = 0; j < m; ++j) {
                const uint64_t t = uint64_t(carry) * modulus[j] % p;
                cur[j] = uint32_t((cur[j] + p - t) % p);
            }
    }
    {
        uint32_t idx = 0, place = 1;
        for (uint32_t j = 0; j < m; ++j) {
            idx += cur[j] * place;
            place *= p;
        }
        if (idx != 1) throw std::logic_error("x^(q-1) != 1");
    }
    F.g = {F.antilog_tab[1]}; // residue of x (for m = 1 this is -c0 mod p)

    // Trace of the basis monomials, extended by F_p-linearity.
    std::vector<uint32_t> tr_basis(m);
    for (uint32_t j = 0; j < m; ++j) {
        FieldElem el = (j == 0) ? F.one() : FieldElem{F.antilog_tab[j]};
        tr_basis[j] = F.trace_powersum(el);
    }
    F.trace_tab.resize(q);
    for (uint64_t v = 0; v < q; ++v) {
        uint64_t a = v, t = 0;
        for (uint32_t j = 0; j < m; ++j) {
            t += a % p * tr_basis[j];
            a /= p;
        }
        F.trace_tab[v] = uint32_t(t % p);
    }

    F.eta_tab.assign(q, 0);
    for (uint64_t k = 0; k < q - 1; ++k) F.eta_tab[F.antilog_tab[k]] = (k & 1) ? -1 : 1;

    return F;
}

FieldCtx build_field(uint32_t p, uint32_t m) {
    return build_field(p, m, find_primitive_modulus(p, m, 0));
}

uint64_t cyclotomic_number(const FieldCtx& F, uint32_t N, uint32_t i, uint32_t j) {
    if (N == 0 || (F.q - 1) % N != 0) throw std::invalid_argument("N must divide q-1");
    if (i >= N || j >= N) throw std::invalid_argument("cyclotomic indices must lie in [0, N)");
    const uint64_t h = (F.q - 1) / N;
    uint64_t cnt = 0;
    for (uint64_t s = 0; s < h; ++s) {
        const FieldElem x = F.gpow(uint64_t(N) * s + i);
        const FieldElem y = F.add(x, F.one());
        if (y.idx != 0 && F.log_of(y) % N == j) ++cnt;
    }
    return cnt;
}

uint64_t cyclotomic_number2_closed(uint64_t q, uint32_t i, uint32_t j) {
    if (q % 2 == 0) throw std::invalid_argument("q must be odd");
    if (i > 1 || j > 1) throw std::invalid_argument("indices must be 0 or 1 for N=2");
    const uint64_t h = (q - 1) / 2;
    if (h % 2 == 0) return (i == 0 && j == 0) ? (h - 2) / 2 : h / 2;
    return (i == 0 && j == 1) ? (h + 1) / 2 : (h - 1) / 2;
}

} // namespace fewweight
