#pragma once

// Minimal RAII handle around an MPFR float. Operations take the rounding
// mode explicitly where directed rounding matters; the arithmetic operators
// round to nearest at the precision of the left operand.

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace pkenum {

// Bits needed to carry `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

class Real {
public:
    explicit Real(mpfr_prec_t prec = 256);
    Real(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    Real(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    Real(long v, mpfr_prec_t prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    mpq_class to_rational() const;

    // Scientific notation with `digits` significant digits (deterministic).
    std::string to_string(int digits) const;
    // Fixed notation with `decimals` digits after the point.
    std::string to_fixed(int decimals) const;

    int sign() const { return mpfr_sgn(value_); }

    Real& operator+=(const Real& r);
    Real& operator-=(const Real& r);
    Real& operator*=(const Real& r);
    Real& operator/=(const Real& r);

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    Real operator-() const;

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);

}  // namespace pkenum
