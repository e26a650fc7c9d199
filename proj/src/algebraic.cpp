#include "fewweight/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fewweight {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

__int128 mul_checked(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

double to_double_128(__int128 v) {
    const bool neg = v < 0;
    const unsigned __int128 u = neg ? -(unsigned __int128)(v) : (unsigned __int128)(v);
    const double d = double(uint64_t(u >> 64)) * 1.8446744073709552e19 + double(uint64_t(u));
    return neg ? -d : d;
}

std::string str128(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u != 0) {
        s += char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace

Rational Rational::make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(n, d, 0);
}

Rational Rational::frac(long long num, long long den) { return make(num, den); }

Rational Rational::operator-() const { return Rational(-num_, den_, 0); }

Rational Rational::operator+(const Rational& o) const {
    return make(mul_checked(num_, o.den_) + mul_checked(o.num_, den_), mul_checked(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return make(mul_checked(num_, o.num_), mul_checked(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    return make(mul_checked(num_, o.den_), mul_checked(den_, o.num_));
}

long long Rational::as_ll() const {
    if (den_ != 1) throw std::domain_error("rational is not an integer: " + str());
    if (num_ > __int128(INT64_MAX) || num_ < __int128(INT64_MIN))
        throw std::overflow_error("integer out of int64 range");
    return (long long)(num_);
}

double Rational::to_double() const { return to_double_128(num_) / to_double_128(den_); }

std::string Rational::str() const {
    std::string s = str128(num_);
    if (den_ != 1) s += "/" + str128(den_);
    return s;
}

void AlgebraicScalar::check_same_prime(const AlgebraicScalar& o) const {
    // Scalars created by the default constructor (p_ == 0) act as plain
    // rationals and combine with anything.
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
        throw std::invalid_argument("mixing scalars over different primes");
}

AlgebraicScalar AlgebraicScalar::operator-() const { return {p_, -re0_, -re1_, -im0_, -im1_}; }

AlgebraicScalar AlgebraicScalar::operator+(const AlgebraicScalar& o) const {
    check_same_prime(o);
    return {p_ ? p_ : o.p_, re0_ + o.re0_, re1_ + o.re1_, im0_ + o.im0_, im1_ + o.im1_};
}

AlgebraicScalar AlgebraicScalar::operator-(const AlgebraicScalar& o) const { return *this + (-o); }

AlgebraicScalar AlgebraicScalar::operator*(const AlgebraicScalar& o) const {
    check_same_prime(o);
    const uint32_t p = p_ ? p_ : o.p_;
    const Rational rp = Rational((long long)p);
    // (A + iB)(C + iD) with A..D in Q(sqrt(p));
    // (a0 + a1 s)(c0 + c1 s) = (a0 c0 + p a1 c1) + (a0 c1 + a1 c0) s.
    auto mul_real = [&](const Rational& a0, const Rational& a1, const Rational& c0,
                        const Rational& c1) {
        return std::pair<Rational, Rational>{a0 * c0 + rp * (a1 * c1), a0 * c1 + a1 * c0};
    };
    auto [ac0, ac1] = mul_real(re0_, re1_, o.re0_, o.re1_); // A*C
    auto [bd0, bd1] = mul_real(im0_, im1_, o.im0_, o.im1_); // B*D
    auto [ad0, ad1] = mul_real(re0_, re1_, o.im0_, o.im1_); // A*D
    auto [bc0, bc1] = mul_real(im0_, im1_, o.re0_, o.re1_); // B*C
    return {p, ac0 - bd0, ac1 - bd1, ad0 + bc0, ad1 + bc1};
}

AlgebraicScalar AlgebraicScalar::operator*(const Rational& r) const {
    return {p_, re0_ * r, re1_ * r, im0_ * r, im1_ * r};
}

bool AlgebraicScalar::operator==(const AlgebraicScalar& o) const {
    check_same_prime(o);
    return re0_ == o.re0_ && re1_ == o.re1_ && im0_ == o.im0_ && im1_ == o.im1_;
}

AlgebraicScalar AlgebraicScalar::conj() const { return {p_, re0_, re1_, -im0_, -im1_}; }

AlgebraicScalar AlgebraicScalar::pow(uint32_t e) const {
    AlgebraicScalar acc = integer(p_, 1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool AlgebraicScalar::is_zero() const {
    return re0_.is_zero() && re1_.is_zero() && im0_.is_zero() && im1_.is_zero();
}

long long AlgebraicScalar::as_integer() const {
    if (!is_integer()) throw std::domain_error("scalar is not a rational integer: " + str());
    return re0_.as_ll();
}

std::complex<double> AlgebraicScalar::to_complex() const {
    const double s = p_ ? std::sqrt(double(p_)) : 0.0;
    return {re0_.to_double() + re1_.to_double() * s, im0_.to_double() + im1_.to_double() * s};
}

std::string AlgebraicScalar::str() const {
    if (is_zero()) return "0";
    const std::string root = "sqrt(" + std::to_string(p_) + ")";
    std::string s;
    auto append = [&](const Rational& c, const std::string& sym) {
        if (c.is_zero()) return;
        std::string t = c.str();
        if (!sym.empty()) {
            if (t == "1") t = sym;
            else if (t == "-1") t = "-" + sym;
            else t += "*" + sym;
        }
        if (!s.empty() && t[0] != '-') s += "+";
        s += t;
    };
    append(re0_, "");
    append(re1_, root);
    append(im0_, "i");
    append(im1_, "i*" + root);
    return s;
}

AlgebraicScalar gauss_sum_exact(uint32_t p, uint32_t m) {
    if (p < 3 || p % 2 == 0 || m == 0) throw std::invalid_argument("need an odd prime p and m >= 1");
    // i-power exponent: (p-1)^2 m / 4 mod 4, computed without overflow
    const uint64_t t = uint64_t((p - 1) / 2 % 4) * ((p - 1) / 2 % 4) % 4;
    const uint32_t e = uint32_t(t * (m % 4) % 4);
    AlgebraicScalar unit = AlgebraicScalar::i_unit(p).pow(e);
    if (m % 2 == 0) unit = -unit; // (-1)^(m-1)

    // sqrt(p^m) = p^(m/2) * (sqrt(p) if m odd)
    Rational mag(1);
    for (uint32_t j = 0; j < m / 2; ++j) mag = mag * Rational((long long)p);
    AlgebraicScalar root = (m % 2 == 1) ? AlgebraicScalar::sqrtp(p)
                                        : AlgebraicScalar::integer(p, 1);
    return unit * root * mag;
}

} // namespace fewweight
