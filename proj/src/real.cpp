#include "pkenum/real.hpp"

#include <cmath>
#include <vector>

namespace pkenum {

mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, q.get_mpq_t(), rnd);
}

Real::Real(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    mpfr_init2(value_, prec);
    mpfr_set_z(value_, z.get_mpz_t(), rnd);
}

Real::Real(long v, mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

mpq_class Real::to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
}

std::string Real::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return buf.data();
}

std::string Real::to_fixed(int decimals) const {
    const int len = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, value_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
    return buf.data();
}

Real& Real::operator+=(const Real& r) {
    mpfr_add(value_, value_, r.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& r) {
    mpfr_sub(value_, value_, r.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& r) {
    mpfr_mul(value_, value_, r.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& r) {
    mpfr_div(value_, value_, r.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) {
    Real r(x);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace pkenum
