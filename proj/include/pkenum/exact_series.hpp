#pragma once

// Truncated power series with exact rational coefficients.
//
// A Series of order N stores the coefficients of z^0..z^N. Binary operations
// return a series whose order is the minimum of the operand orders; nothing
// beyond that order is ever claimed to be known.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pkenum {

class Series {
public:
    Series() = default;

    // Zero series of the given order.
    explicit Series(std::size_t order);

    // Polynomial given by its low coefficients, padded with zeros (or
    // truncated) to `order`.
    Series(std::size_t order, std::vector<mpq_class> coeffs);
    Series(std::size_t order, std::initializer_list<long> coeffs);

    static Series constant(std::size_t order, const mpq_class& c);
    static Series variable(std::size_t order);  // z

    std::size_t order() const { return coeffs_.size() - 1; }

    const mpq_class& operator[](std::size_t i) const { return coeffs_.at(i); }
    mpq_class& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    // Copy restricted to order m <= order().
    Series truncated(std::size_t m) const;

    bool is_zero() const;

    Series operator-() const;
    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series& operator/=(const Series& rhs);
    Series& operator*=(const mpq_class& c);

    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
    friend Series operator*(const Series& lhs, const Series& rhs);
    friend Series operator/(const Series& lhs, const Series& rhs);
    friend Series operator*(Series s, const mpq_class& c) { return s *= c; }
    friend Series operator*(const mpq_class& c, Series s) { return s *= c; }

    // Equality of coefficients up to the common order.
    friend bool operator==(const Series& a, const Series& b);

    std::string to_string() const;

private:
    std::vector<mpq_class> coeffs_{mpq_class(0)};
};

// 1 / s. Throws DomainError when s(0) == 0.
Series reciprocal(const Series& s);

// Square root with constant term 1 of a series with constant term 1.
// Throws DomainError otherwise.
Series sqrt1(const Series& s);

// outer(inner(z)). Throws DomainError when inner(0) != 0. The result has
// the order of `inner` (capped by what `outer` determines: with
// inner = O(z^v), a term outer_m z^{mv} is needed up to m = order/v).
Series compose(const Series& outer, const Series& inner);

// s(c * z^p) for p >= 1. The result has order p * (s.order() + 1) - 1, the
// largest order whose coefficients are fully determined.
Series substitute_monomial(const Series& s, const mpq_class& c, std::size_t p);

// The algebraic series of the lambda >= 4 functional equation, all built
// exactly.
//
// x-series (order N): a = 1 - 2x - x^2 + x^4, B = 1 + 2x^2 - x^3,
// u = sqrt(1 + 4x - 4x^2 - 6x^3 + 4x^4 + x^6) with u(0) = 1,
// f1 = (B + u) / 2a, f2 = (B - u) / 2a (the roots of a w^2 - B w - x),
// F1 = (1 - x) f1 / u, F2 = -(1 - x) f2 / u.
//
// z-series (order N): theta_j(z) = z f_j(-z^2) / (1 - z f_j(-z^2)) and the
// prefactors prefactor_j(z) = F_j(-z^2) / (1 - z f_j(-z^2)).
//
// F1 and F2 are the coefficients of phi_n = F1 f1^n + F2 f2^n for the
// short-arc series phi_n(x) = sum_b lambda(n + 2b, b) x^b; they come from
// phi_0 = (1 - x)/a and phi_1 = (1 - x) B / a^2.
struct AlgebraicPack {
    std::size_t order = 0;
    Series a, B, radicand, u, f1, f2, F1, F2;
    Series theta1, theta2, prefactor1, prefactor2;
};

AlgebraicPack build_algebraic_pack(std::size_t order);

// The coefficient pair obtained from the initial conditions phi_0 = phi_1 = 1,
// i.e. F1 = (f2 - 1)/(f2 - f1), F2 = (f1 - 1)/(f1 - f2). These do not
// reproduce the short-arc series; kept so reports can show the mismatch.
struct CoefficientPair {
    Series F1, F2;
};
CoefficientPair unit_initial_coefficients(const AlgebraicPack& pack);

}  // namespace pkenum
