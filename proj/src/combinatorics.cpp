#include "pkenum/combinatorics.hpp"

#include "pkenum/errors.hpp"

namespace pkenum {

BinomialTable::BinomialTable(int max_n) {
    if (max_n < 0) throw InvalidParameter("BinomialTable: max_n must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = rows_[n];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        row[n] = 1;
        for (int r = 1; r < n; ++r) row[r] = rows_[n - 1][r - 1] + rows_[n - 1][r];
    }
}

const mpz_class& BinomialTable::operator()(int n, int r) const {
    if (n < 0 || n > max_n()) throw InvalidParameter("BinomialTable: row out of range");
    if (r < 0 || r > n) return zero_;
    return rows_[n][r];
}

mpz_class double_factorial_odd(int n) {
    mpz_class result = 1;
    for (int i = 1; i < n; ++i) result *= 2 * i + 1;
    return result;
}

mpz_class catalan(int n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return c / (n + 1);
}

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace pkenum
