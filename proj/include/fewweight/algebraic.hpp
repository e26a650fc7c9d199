// Exact scalars in Q(i, sqrt(p)): the ring where Gauss sums and the
// character-sum closed forms live.  Everything is overflow-checked.
#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace fewweight {

// Rational number over __int128 with checked multiplication.  The values in
// this project stay tiny compared to the ~1.7e38 ceiling; any overflow
// throws std::overflow_error rather than wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : num_(v), den_(1) {}
    static Rational frac(long long num, long long den);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    long long as_ll() const; // throws unless integral and within int64
    double to_double() const;
    std::string str() const;

private:
    __int128 num_ = 0;
    __int128 den_ = 1; // > 0, coprime to num_
    Rational(__int128 n, __int128 d, int /*raw*/) : num_(n), den_(d) {}
    static Rational make(__int128 n, __int128 d);
};

// Element of Q(i, sqrt(p)): re0 + re1*sqrt(p) + i*(im0 + im1*sqrt(p)).
// The prime p is carried along and mixing different p throws.
class AlgebraicScalar {
public:
    AlgebraicScalar() = default;
    AlgebraicScalar(uint32_t p, Rational re0, Rational re1 = 0, Rational im0 = 0,
                    Rational im1 = 0)
        : p_(p), re0_(re0), re1_(re1), im0_(im0), im1_(im1) {}
    static AlgebraicScalar integer(uint32_t p, long long v) { return {p, Rational(v)}; }
    static AlgebraicScalar sqrtp(uint32_t p) { return {p, 0, 1}; }
    static AlgebraicScalar i_unit(uint32_t p) { return {p, 0, 0, 1}; }

    uint32_t prime() const { return p_; }
    const Rational& re0() const { return re0_; }
    const Rational& re1() const { return re1_; }
    const Rational& im0() const { return im0_; }
    const Rational& im1() const { return im1_; }

    AlgebraicScalar operator-() const;
    AlgebraicScalar operator+(const AlgebraicScalar& o) const;
    AlgebraicScalar operator-(const AlgebraicScalar& o) const;
    AlgebraicScalar operator*(const AlgebraicScalar& o) const;
    AlgebraicScalar operator*(const Rational& r) const;
    bool operator==(const AlgebraicScalar& o) const;
    bool operator!=(const AlgebraicScalar& o) const { return !(*this == o); }

    AlgebraicScalar conj() const; // complex conjugate (sqrt(p) fixed)
    AlgebraicScalar pow(uint32_t e) const;

    bool is_zero() const;
    bool is_rational() const { return re1_.is_zero() && im0_.is_zero() && im1_.is_zero(); }
    bool is_integer() const { return is_rational() && re0_.is_integer(); }
    long long as_integer() const; // throws unless a rational integer
    std::complex<double> to_complex() const;
    std::string str() const;

private:
    uint32_t p_ = 0;
    Rational re0_, re1_, im0_, im1_;
    void check_same_prime(const AlgebraicScalar& o) const;
};

// Quadratic Gauss sum over F_{p^m} for the canonical additive character:
//   G = (-1)^(m-1) * i^((p-1)^2 m / 4) * sqrt(p^m).
// For m = 1 this is the base-field Gauss sum (written Gbar in the reports).
AlgebraicScalar gauss_sum_exact(uint32_t p, uint32_t m);

} // namespace fewweight
