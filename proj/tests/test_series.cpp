#include "doctest.h"
#include "pkenum/errors.hpp"
#include "pkenum/exact_series.hpp"

#include <random>

using namespace pkenum;

namespace {

Series geometric(std::size_t order) {
    std::vector<mpq_class> c(order + 1, mpq_class(1));
    return Series(order, c);
}

}  // namespace

TEST_CASE("division and reciprocal") {
    const std::size_t N = 20;
    const Series one = Series::constant(N, 1);
    const Series omz(N, {1, -1});
    CHECK(reciprocal(omz) * omz == one);
    CHECK(one / omz == geometric(N));
    CHECK_THROWS_AS(reciprocal(Series(N, {0, 1})), DomainError);
}

TEST_CASE("sqrt1") {
    const std::size_t N = 12;
    CHECK(sqrt1(Series(N, {1, 2, 1})) == Series(N, {1, 1}));
    CHECK(sqrt1(Series::constant(N, 1)) == Series::constant(N, 1));
    CHECK_THROWS_AS(sqrt1(Series(N, {2, 1})), DomainError);
}

TEST_CASE("sqrt1 squares back on random series") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t N = 1 + trial % 25;
        std::vector<mpq_class> c(N + 1);
        c[0] = 1;
        for (std::size_t i = 1; i <= N; ++i) {
            c[i] = mpq_class(num(rng), den(rng));
            c[i].canonicalize();
        }
        const Series s(N, c);
        const Series r = sqrt1(s);
        CHECK(r * r == s);
        CHECK(r[0] == 1);
    }
}

TEST_CASE("compose") {
    const std::size_t N = 16;
    const Series z2(N, {0, 0, 1});
    Series even(N);
    for (std::size_t i = 0; i <= N; i += 2) even[i] = 1;
    CHECK(compose(geometric(N), z2) == even);

    const Series outer(N, {7, 3, -2, 5});
    const Series zero(N);
    CHECK(compose(outer, zero) == Series::constant(N, 7));
    CHECK_THROWS_AS(compose(outer, Series(N, {1, 1})), DomainError);
}

TEST_CASE("substitute monomial matches compose") {
    const std::size_t N = 10;
    const Series s(N, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    Series inner(3 * (N + 1) - 1);
    inner[3] = -2;
    const Series a = substitute_monomial(s, -2, 3);
    CHECK(a.order() == 3 * (N + 1) - 1);
    CHECK(a == compose(s.truncated(N), inner));
}

TEST_CASE("algebraic pack identities") {
    const std::size_t N = 50;
    const AlgebraicPack p = build_algebraic_pack(N);
    const Series x = Series::variable(N);
    for (const Series* f : {&p.f1, &p.f2}) {
        CHECK((p.a * *f * *f - p.B * *f - x).is_zero());
    }
    CHECK(p.f1 + p.f2 == p.B / p.a);
    CHECK(p.f1 * p.f2 == -(x / p.a));
    CHECK(p.u * p.u == p.radicand);
    CHECK(p.f1[0] == 1);
    CHECK(p.f2[0] == 0);
    CHECK(p.theta1[0] == 0);
    CHECK(p.theta1[1] == 1);

    // f1 + f2 = (1 + 2x^2 - x^3) / (1 - 2x - x^2 + x^4)
    CHECK(p.f1 + p.f2 == Series(N, {1, 0, 2, -1}) / Series(N, {1, -2, -1, 0, 1}));
}
