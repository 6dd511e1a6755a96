#include "pkenum/exact_series.hpp"

#include <algorithm>
#include <sstream>

#include "pkenum/errors.hpp"

namespace pkenum {

Series::Series(std::size_t order) : coeffs_(order + 1, mpq_class(0)) {}

Series::Series(std::size_t order, std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, mpq_class(0));
}

Series::Series(std::size_t order, std::initializer_list<long> coeffs) : Series(order) {
    std::size_t i = 0;
    for (long c : coeffs) {
        if (i > order) break;
        coeffs_[i++] = c;
    }
}

Series Series::constant(std::size_t order, const mpq_class& c) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

Series Series::truncated(std::size_t m) const {
    if (m > order()) throw InvalidParameter("Series::truncated: cannot raise the order");
    return Series(m, std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Series& Series::operator*=(const Series& rhs) { return *this = *this * rhs; }

Series& Series::operator/=(const Series& rhs) { return *this = *this / rhs; }

Series& Series::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
    const std::size_t n = std::min(lhs.order(), rhs.order());
    Series out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

Series operator/(const Series& lhs, const Series& rhs) {
    if (rhs.coeffs_[0] == 0) throw DomainError("series division by a series with zero constant term");
    const std::size_t n = std::min(lhs.order(), rhs.order());
    Series q(n);
    for (std::size_t i = 0; i <= n; ++i) {
        mpq_class acc = lhs.coeffs_[i];
        for (std::size_t j = 1; j <= i; ++j) {
            if (rhs.coeffs_[j] != 0) acc -= rhs.coeffs_[j] * q.coeffs_[i - j];
        }
        q.coeffs_[i] = acc / rhs.coeffs_[0];
    }
    return q;
}

bool operator==(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n + 1, b.coeffs_.begin());
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(z^" << coeffs_.size() << ")";
    return os.str();
}

Series reciprocal(const Series& s) { return Series::constant(s.order(), 1) / s; }

Series sqrt1(const Series& s) {
    if (s[0] != 1) throw DomainError("sqrt1 needs constant term 1, got " + s[0].get_str());
    const std::size_t n = s.order();
    Series r(n);
    r[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        mpq_class acc = s[m];
        for (std::size_t i = 1; i < m; ++i) acc -= r[i] * r[m - i];
        r[m] = acc / 2;
    }
    return r;
}

Series compose(const Series& outer, const Series& inner) {
    if (inner[0] != 0) throw DomainError("compose: inner series must have zero constant term");
    std::size_t valuation = 1;
    while (valuation <= inner.order() && inner[valuation] == 0) ++valuation;
    std::size_t order = inner.order();
    if (valuation <= inner.order()) order = std::min(order, (outer.order() + 1) * valuation - 1);

    const Series in = inner.truncated(order);
    // Horner from the highest term that can reach z^order.
    const std::size_t top = std::min(outer.order(), order / valuation);
    Series acc = Series::constant(order, outer[top]);
    for (std::size_t m = top; m-- > 0;) {
        acc = acc * in;
        acc[0] += outer[m];
    }
    return acc;
}

Series substitute_monomial(const Series& s, const mpq_class& c, std::size_t p) {
    if (p == 0) throw InvalidParameter("substitute_monomial: power must be >= 1");
    Series out(p * (s.order() + 1) - 1);
    mpq_class scale = 1;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out[i * p] = s[i] * scale;
        scale *= c;
    }
    return out;
}

AlgebraicPack build_algebraic_pack(std::size_t order) {
    if (order < 1) throw InvalidParameter("build_algebraic_pack: order must be >= 1");
    AlgebraicPack p;
    p.order = order;
    p.a = Series(order, {1, -2, -1, 0, 1});
    p.B = Series(order, {1, 0, 2, -1});
    p.radicand = Series(order, {1, 4, -4, -6, 4, 0, 1});
    p.u = sqrt1(p.radicand);

    const Series inv_2a = reciprocal(p.a * mpq_class(2));
    p.f1 = (p.B + p.u) * inv_2a;
    p.f2 = (p.B - p.u) * inv_2a;

    const Series one_minus_x(order, {1, -1});
    const Series inv_u = reciprocal(p.u);
    p.F1 = one_minus_x * p.f1 * inv_u;
    p.F2 = -(one_minus_x * p.f2 * inv_u);

    const Series z = Series::variable(order);
    const Series one = Series::constant(order, 1);
    auto at_minus_z2 = [&](const Series& s) { return substitute_monomial(s, -1, 2).truncated(order); };

    const Series t1 = z * at_minus_z2(p.f1);
    const Series t2 = z * at_minus_z2(p.f2);
    const Series inv1 = reciprocal(one - t1);
    const Series inv2 = reciprocal(one - t2);
    p.theta1 = t1 * inv1;
    p.theta2 = t2 * inv2;
    p.prefactor1 = at_minus_z2(p.F1) * inv1;
    p.prefactor2 = at_minus_z2(p.F2) * inv2;
    return p;
}

CoefficientPair unit_initial_coefficients(const AlgebraicPack& pack) {
    const Series one = Series::constant(pack.order, 1);
    CoefficientPair c;
    c.F1 = (pack.f2 - one) / (pack.f2 - pack.f1);
    c.F2 = (pack.f1 - one) / (pack.f1 - pack.f2);
    return c;
}

}  // namespace pkenum
