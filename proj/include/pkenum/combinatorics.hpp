#pragma once

#include <vector>

#include <gmpxx.h>

namespace pkenum {

// Pascal triangle rows 0..max_n, exact.
class BinomialTable {
public:
    explicit BinomialTable(int max_n);

    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

    // C(n, r); zero when r < 0 or r > n.
    const mpz_class& operator()(int n, int r) const;

private:
    std::vector<std::vector<mpz_class>> rows_;
    mpz_class zero_{0};
};

// (2n-1)!! = 1*3*...*(2n-1), with (-1)!! = 1 for n = 0.
mpz_class double_factorial_odd(int n);

mpz_class catalan(int n);

mpz_class factorial(int n);

}  // namespace pkenum
