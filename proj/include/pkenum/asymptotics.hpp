#pragma once

// Dominant singularities and growth rates of the structure generating
// functions.
//
// For lambda_min = 2, 3, 4 the dominant singularity gamma_k is the least
// positive root of map(z) = rho_k with rho_k = 1/(2(k-1)) and
//   lambda_min = 2:  map(z) = z / (z^2 - z + 1)
//   lambda_min = 3:  map(z) = (z - z^3) / (1 - z + z^2 + z^3 - z^4)
//   lambda_min = 4:  map(z) = theta_1(z) = z f1(-z^2) / (1 - z f1(-z^2)).
// Coefficients then grow like c_k n^{-e} gamma_k^{-n} with
// e = (k-1)^2 + (k-1)/2.

#include <vector>

#include <gmpxx.h>

#include "pkenum/real.hpp"

namespace pkenum {

mpq_class rho(int k);

// (k-1)^2 + (k-1)/2
mpq_class subexp_exponent(int k);

struct SolveOptions {
    double tolerance = 1e-12;  // bound on |map(gamma) - rho_k|
    int precision_digits = 60;
    int grid_points = 4096;  // bracket scan resolution
};

struct SingularityReport {
    int k = 0;
    int lambda_min = 0;
    mpq_class rho;
    mpq_class exponent;
    Real gamma;
    mpq_class gamma_lower;  // exact bracket, map - rho changes sign across it
    mpq_class gamma_upper;
    Real growth_rate;  // 1 / gamma
    Real residual;     // |map(gamma) - rho|
    int newton_steps = 0;
    int precision_digits = 0;
    bool extrapolated = false;  // lambda_min = 4 with k > 9
    // lambda_min = 4 only: theta_2 reaches +rho or -rho on (0, gamma], and
    // theta_1 > theta_2 on the same grid.
    bool theta2_reaches_rho = false;
    bool theta1_dominates = true;
};

// Throws UnsupportedParameter outside {2, 3, 4} x scope (lambda_min = 3
// needs k > 2, lambda_min = 4 needs k > 3), SolverError when no increasing
// bracket reaches rho_k or the residual misses the tolerance, DomainError
// when the radicand of u(-z^2) turns negative inside the bracket.
SingularityReport solve_gamma(int k, int lambda_min, const SolveOptions& options = {});

// theta_j(z), j = 1, 2, at the precision of z. DomainError when the radicand
// is negative.
Real theta(int j, const Real& z);

// The map whose root defines gamma, for the given lambda_min.
Real singular_map(int lambda_min, const Real& z);

struct RatioPoint {
    int n = 0;
    Real lower;  // enclosure of r(n) = T(n) n^e gamma^n
    Real upper;

    double value() const;
    double relative_width() const;
};

struct RatioDiagnostic {
    int k = 0;
    mpq_class exponent;
    std::vector<RatioPoint> points;  // consecutive n

    const RatioPoint& at(int n) const;
    // |r(n) - r(n - lag)| / r(n)
    double relative_change(int n, int lag) const;
};

struct RatioOptions {
    int precision_digits = 60;
    double max_relative_width = 1e-12;
};

// r(n) for n in [n_lo, n_hi] from exact lambda_min = 4 counts (computed here
// by inclusion-exclusion). The enclosure is computed with directed rounding
// from the verified gamma bracket; a relative width above
// options.max_relative_width raises PrecisionError.
RatioDiagnostic ratio_diagnostic(int k, int n_lo, int n_hi, const RatioOptions& options = {});

// Same, with caller-supplied counts (counts[n] = T(n)) and singularity.
RatioDiagnostic ratio_diagnostic(int k, const std::vector<mpz_class>& counts, int n_lo, int n_hi,
                                 const SingularityReport& singularity, const RatioOptions& options = {});

// c_k n^{-e} gamma^{-n}. An approximation of T(n), not a count.
Real asymptotic_estimate(const SingularityReport& singularity, int n, const Real& c_k);

}  // namespace pkenum
