#include "pkenum/asymptotics.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "pkenum/errors.hpp"
#include "pkenum/structures.hpp"

namespace pkenum {

mpq_class rho(int k) {
    if (k < 2) throw InvalidParameter("k must be >= 2");
    return mpq_class(1, 2 * (k - 1));
}

mpq_class subexp_exponent(int k) {
    if (k < 2) throw InvalidParameter("k must be >= 2");
    mpq_class e(mpz_class((k - 1) * (k - 1)) * 2 + (k - 1), 2);
    e.canonicalize();
    return e;
}

namespace {

// Polynomial helpers over exact rationals and MPFR reals; coefficients are
// listed from the constant term up.
using Poly = std::vector<long>;

mpq_class horner(const Poly& c, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = std::rbegin(c); it != std::rend(c); ++it) acc = acc * x + *it;
    return acc;
}

Real horner(const Poly& c, const Real& x) {
    Real acc(x.precision());
    for (auto it = std::rbegin(c); it != std::rend(c); ++it) acc = acc * x + Real(*it, x.precision());
    return acc;
}

// a, B and the radicand of u, as polynomials in x.
const Poly kA = {1, -2, -1, 0, 1};
const Poly kB = {1, 0, 2, -1};
const Poly kRadicand = {1, 4, -4, -6, 4, 0, 1};
const Poly kDA = {-2, -2, 0, 4};
const Poly kDB = {0, 4, -3};

int sign_of(const mpq_class& q) { return sgn(q); }

// Exact sign of sqrt(radicand) * scale - bound, scale >= 0.
int compare_root(const mpq_class& radicand, const mpq_class& scale, const mpq_class& bound) {
    if (bound < 0) return 1;
    return sign_of(scale * scale * radicand - bound * bound);
}

class SingularMap {
public:
    virtual ~SingularMap() = default;
    virtual mpq_class cap() const = 0;
    // Throws DomainError where the map is undefined.
    virtual void check_domain(const mpq_class& z) const = 0;
    // Exact sign of map(z) - target.
    virtual int sign_minus(const mpq_class& z, const mpq_class& target) const = 0;
    virtual Real value(const Real& z) const = 0;
    virtual Real derivative(const Real& z) const = 0;
};

class SecondaryMap final : public SingularMap {
public:
    mpq_class cap() const override { return 1; }
    void check_domain(const mpq_class&) const override {}
    int sign_minus(const mpq_class& z, const mpq_class& target) const override {
        // z^2 - z + 1 > 0 everywhere
        return sign_of(z - target * horner({1, -1, 1}, z));
    }
    Real value(const Real& z) const override { return z / horner({1, -1, 1}, z); }
    Real derivative(const Real& z) const override {
        const Real d = horner({1, -1, 1}, z);
        return horner({1, 0, -1}, z) / (d * d);
    }
};

class ArcLength3Map final : public SingularMap {
public:
    mpq_class cap() const override { return 1; }
    void check_domain(const mpq_class& z) const override {
        if (horner(kDen, z) <= 0) throw DomainError("lambda_min = 3 map: denominator vanishes");
    }
    int sign_minus(const mpq_class& z, const mpq_class& target) const override {
        return sign_of(horner(kNum, z) - target * horner(kDen, z));
    }
    Real value(const Real& z) const override { return horner(kNum, z) / horner(kDen, z); }
    Real derivative(const Real& z) const override {
        const Real n = horner(kNum, z), d = horner(kDen, z);
        const Real dn = horner({1, 0, -3}, z), dd = horner({-1, 2, 3, -4}, z);
        return (dn * d - n * dd) / (d * d);
    }

private:
    inline static const Poly kNum = {0, 1, 0, -1};
    inline static const Poly kDen = {1, -1, 1, 1, -1};
};

// theta_1(z) = t / (1 - t), t = z f1(-z^2), f1 = (B + u) / 2a.
class Theta1Map final : public SingularMap {
public:
    mpq_class cap() const override { return mpq_class(1, 2); }

    void check_domain(const mpq_class& z) const override {
        const mpq_class x = -z * z;
        if (horner(kRadicand, x) <= 0) {
            throw DomainError("radicand of u(-z^2) is not positive at z = " + z.get_str());
        }
        if (horner(kA, x) <= 0) throw DomainError("a(-z^2) vanishes inside the bracket");
        // t < 1  <=>  z u < 2a - zB
        if (compare_root(horner(kRadicand, x), z, 2 * horner(kA, x) - z * horner(kB, x)) >= 0) {
            throw DomainError("theta_1 has a pole inside the bracket");
        }
    }

    int sign_minus(const mpq_class& z, const mpq_class& target) const override {
        if (z == 0) return sign_of(-target);
        // theta > target  <=>  t > c = target / (1 + target)  <=>  z u > 2ac - zB
        const mpq_class x = -z * z;
        const mpq_class c = target / (1 + target);
        return compare_root(horner(kRadicand, x), z, 2 * horner(kA, x) * c - z * horner(kB, x));
    }

    Real value(const Real& z) const override { return theta(1, z); }

    Real derivative(const Real& z) const override {
        const mpfr_prec_t p = z.precision();
        const Real x = -(z * z);
        const Real u = sqrt(horner(kRadicand, x));
        const Real f = (horner(kB, x) + u) / (Real(2, p) * horner(kA, x));
        // a f^2 - B f - x = 0  =>  f' = (1 + B' f - a' f^2) / u
        const Real df = (Real(1, p) + horner(kDB, x) * f - horner(kDA, x) * f * f) / u;
        const Real t = z * f;
        const Real dt = f - Real(2, p) * z * z * df;
        const Real one_minus_t = Real(1, p) - t;
        return dt / (one_minus_t * one_minus_t);
    }
};

std::unique_ptr<SingularMap> make_map(int lambda_min) {
    switch (lambda_min) {
        case 2: return std::make_unique<SecondaryMap>();
        case 3: return std::make_unique<ArcLength3Map>();
        case 4: return std::make_unique<Theta1Map>();
        default: break;
    }
    throw UnsupportedParameter("growth rates are available for lambda_min in {2, 3, 4}, got " +
                               std::to_string(lambda_min));
}

Real rational_real(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) { return Real(q, prec, rnd); }

}  // namespace

Real theta(int j, const Real& z) {
    if (j != 1 && j != 2) throw InvalidParameter("theta: branch must be 1 or 2");
    const mpfr_prec_t p = z.precision();
    const Real x = -(z * z);
    const Real radicand = horner(kRadicand, x);
    if (radicand.sign() < 0) throw DomainError("theta: negative radicand");
    const Real u = sqrt(radicand);
    const Real num = j == 1 ? horner(kB, x) + u : horner(kB, x) - u;
    const Real t = z * num / (Real(2, p) * horner(kA, x));
    return t / (Real(1, p) - t);
}

Real singular_map(int lambda_min, const Real& z) { return make_map(lambda_min)->value(z); }

SingularityReport solve_gamma(int k, int lambda_min, const SolveOptions& options) {
    if (k < 2) throw InvalidParameter("k must be >= 2, got " + std::to_string(k));
    if (options.tolerance <= 0) throw InvalidParameter("tolerance must be positive");
    if (options.precision_digits < 20) throw InvalidParameter("precision_digits must be >= 20");
    if (lambda_min == 3 && k <= 2) {
        throw UnsupportedParameter("the lambda_min = 3 singularity equation needs k > 2");
    }
    if (lambda_min == 4 && k <= 3) {
        throw UnsupportedParameter("the lambda_min = 4 singularity equation needs k > 3");
    }
    const auto map = make_map(lambda_min);
    const mpfr_prec_t prec = bits_for_digits(options.precision_digits);

    SingularityReport report;
    report.k = k;
    report.lambda_min = lambda_min;
    report.rho = rho(k);
    report.exponent = subexp_exponent(k);
    report.precision_digits = options.precision_digits;
    report.extrapolated = lambda_min == 4 && k > 9;

    // Scan for the first grid point where map >= rho, requiring strict
    // increase and a valid domain on the way.
    const mpq_class step = map->cap() / options.grid_points;
    mpq_class lo = 0, hi = 0;
    Real previous = rational_real(0, 64);
    bool found = false;
    for (int i = 1; i < options.grid_points; ++i) {
        const mpq_class z = step * i;
        map->check_domain(z);
        const Real value = map->value(rational_real(z, 128));
        if (!(value > previous)) {
            throw SolverError("map is not increasing before reaching rho_k (k = " + std::to_string(k) +
                              ", lambda_min = " + std::to_string(lambda_min) + ")");
        }
        previous = value;
        if (map->sign_minus(z, report.rho) >= 0) {
            lo = step * (i - 1);
            hi = z;
            found = true;
            break;
        }
    }
    if (!found) throw SolverError("bracket failure: map does not reach rho_k below the cap");

    // Exact bisection down to ~1e-6.
    const mpq_class coarse(1, 1000000);
    while (hi - lo > coarse) {
        const mpq_class mid = (lo + hi) / 2;
        const int s = map->sign_minus(mid, report.rho);
        if (s == 0) {
            lo = hi = mid;
            break;
        }
        (s < 0 ? lo : hi) = mid;
    }

    // Newton polishing at working precision, kept inside [lo, hi].
    const Real target = rational_real(report.rho, prec);
    const Real lo_r = rational_real(lo, prec), hi_r = rational_real(hi, prec);
    Real z = rational_real((lo + hi) / 2, prec);
    Real tiny(prec);
    mpfr_set_ui_2exp(tiny.get(), 1, -(prec - 16), MPFR_RNDN);
    for (int it = 0; it < 200; ++it) {
        const Real delta = (map->value(z) - target) / map->derivative(z);
        Real next = z - delta;
        if (next < lo_r || next > hi_r) next = (lo_r + hi_r) / Real(2, prec);
        z = next;
        report.newton_steps = it + 1;
        if (abs(delta) < tiny * (z + Real(1, prec))) break;
    }

    // Verified exact bracket around the polished root.
    mpq_class eps(1);
    {
        mpz_class ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(options.precision_digits - 4));
        eps = mpq_class(1) / ten_pow;
    }
    const mpq_class center = z.to_rational();
    bool verified = false;
    for (int widen = 0; widen < 40 && !verified; ++widen, eps *= 10) {
        const mpq_class a = center - eps, b = center + eps;
        if (map->sign_minus(a, report.rho) < 0 && map->sign_minus(b, report.rho) > 0) {
            report.gamma_lower = a;
            report.gamma_upper = b;
            verified = true;
        }
    }
    if (!verified) throw SolverError("could not verify a sign change around the polished root");

    report.gamma = z;
    report.growth_rate = Real(1, prec) / z;
    report.residual = abs(map->value(z) - target);
    if (!(report.residual < Real(mpq_class(options.tolerance), prec))) {
        throw SolverError("residual " + report.residual.to_string(6) + " above tolerance");
    }

    if (lambda_min == 4) {
        const Real neg_target = -target;
        int sign_plus = 0, sign_minus = 0;
        for (int i = 1; i <= 512; ++i) {
            const Real zi = z * Real(mpq_class(i, 512), prec);
            const Real t2 = theta(2, zi);
            const int sp = (t2 - target).sign(), sm = (t2 - neg_target).sign();
            if (i > 1 && (sp != sign_plus || sm != sign_minus)) report.theta2_reaches_rho = true;
            if (sp == 0 || sm == 0) report.theta2_reaches_rho = true;
            sign_plus = sp;
            sign_minus = sm;
            if (!(theta(1, zi) > t2)) report.theta1_dominates = false;
        }
    }
    return report;
}

double RatioPoint::value() const {
    return ((lower + upper) / Real(2, lower.precision())).to_double();
}

double RatioPoint::relative_width() const { return ((upper - lower) / lower).to_double(); }

const RatioPoint& RatioDiagnostic::at(int n) const {
    if (points.empty() || n < points.front().n || n > points.back().n) {
        throw InvalidParameter("ratio diagnostic has no point at n = " + std::to_string(n));
    }
    return points[static_cast<std::size_t>(n - points.front().n)];
}

double RatioDiagnostic::relative_change(int n, int lag) const {
    const double now = at(n).value();
    return std::fabs(now - at(n - lag).value()) / now;
}

namespace {

// T * n^(p/q) * g^n with every operation rounded in direction rnd; all
// operands are positive, so this gives a one-sided bound.
Real directed_ratio(const mpz_class& count, int n, const mpq_class& exponent, const mpq_class& g,
                    mpfr_prec_t prec, mpfr_rnd_t rnd) {
    mpz_class n_pow;
    mpz_pow_ui(n_pow.get_mpz_t(), mpz_class(n).get_mpz_t(), exponent.get_num().get_ui());
    Real scale(n_pow, prec, rnd);
    mpfr_rootn_ui(scale.get(), scale.get(), exponent.get_den().get_ui(), rnd);
    Real g_pow(g, prec, rnd);
    mpfr_pow_ui(g_pow.get(), g_pow.get(), static_cast<unsigned long>(n), rnd);
    Real r(count, prec, rnd);
    mpfr_mul(r.get(), r.get(), scale.get(), rnd);
    mpfr_mul(r.get(), r.get(), g_pow.get(), rnd);
    return r;
}

}  // namespace

RatioDiagnostic ratio_diagnostic(int k, const std::vector<mpz_class>& counts, int n_lo, int n_hi,
                                 const SingularityReport& singularity, const RatioOptions& options) {
    if (n_lo < 1 || n_hi < n_lo) throw InvalidParameter("ratio_diagnostic: need 1 <= n_lo <= n_hi");
    if (static_cast<int>(counts.size()) <= n_hi) {
        throw InvalidParameter("ratio_diagnostic: counts do not reach n = " + std::to_string(n_hi));
    }
    const mpfr_prec_t prec = bits_for_digits(options.precision_digits);
    RatioDiagnostic diag;
    diag.k = k;
    diag.exponent = subexp_exponent(k);
    for (int n = n_lo; n <= n_hi; ++n) {
        if (counts[n] <= 0) throw InvalidParameter("ratio_diagnostic: counts must be positive");
        RatioPoint p{n, directed_ratio(counts[n], n, diag.exponent, singularity.gamma_lower, prec, MPFR_RNDD),
                     directed_ratio(counts[n], n, diag.exponent, singularity.gamma_upper, prec, MPFR_RNDU)};
        if (p.relative_width() > options.max_relative_width) {
            throw PrecisionError("r(" + std::to_string(n) + ") enclosure too wide (relative width " +
                                 std::to_string(p.relative_width()) + "); raise --precision-digits");
        }
        diag.points.push_back(std::move(p));
    }
    return diag;
}

RatioDiagnostic ratio_diagnostic(int k, int n_lo, int n_hi, const RatioOptions& options) {
    SolveOptions solve;
    solve.precision_digits = options.precision_digits;
    const SingularityReport singularity = solve_gamma(k, 4, solve);
    const CountTable counts = t4_inclusion_exclusion(k, n_hi);
    return ratio_diagnostic(k, counts.values, n_lo, n_hi, singularity, options);
}

Real asymptotic_estimate(const SingularityReport& singularity, int n, const Real& c_k) {
    if (n < 1) throw InvalidParameter("asymptotic_estimate: n must be >= 1");
    const mpfr_prec_t prec = singularity.gamma.precision();
    Real n_r(static_cast<long>(n), prec);
    Real e(singularity.exponent, prec);
    Real n_pow(prec);
    mpfr_pow(n_pow.get(), n_r.get(), e.get(), MPFR_RNDN);
    Real g_pow(prec);
    mpfr_pow_ui(g_pow.get(), singularity.growth_rate.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    return c_k * g_pow / n_pow;
}

}  // namespace pkenum
