#include "doctest.h"
#include "pkenum/errors.hpp"
#include "pkenum/structures.hpp"

using namespace pkenum;

namespace {

const std::vector<long> kReference = {1, 1, 1, 1, 1, 2, 5, 15, 51, 179, 647, 2397, 9081, 35181, 139307, 563218};

}  // namespace

TEST_CASE("secondary structures") {
    const auto w = t2_waterman(20);
    CHECK(w.values[2] == 1);
    CHECK(t_lambda2(2, 4).values[4] == 4);
    CHECK(t2_waterman_lambda(4, 5).values[5] == 2);
    CHECK(t_lambda2(2, 20).values == w.values);
}

TEST_CASE("lambda 2") {
    for (int k = 2; k <= 6; ++k) CHECK(t_lambda2(k, 3).values[3] == 2);
    CHECK(t_lambda2(3, 12).values == count_by_oracle(3, 2, 12).values);
}

TEST_CASE("lambda 3") {
    const auto ie = t_lambda3(3, 30);
    CHECK(ie.values[4] == 2);
    CHECK(ie.values[5] == 5);
    const auto se = t_lambda3(3, 30, CountMethod::functional_equation);
    CHECK(se.values[0] == 1);
    CHECK(ie.values == se.values);
    CHECK(ie.values == t_lambda3(3, 30, CountMethod::inclusion_exclusion).values);
    CHECK(t_lambda3(4, 12).values == count_by_oracle(4, 3, 12).values);
    CHECK_THROWS_AS(t_lambda3(2, 10), UnsupportedParameter);
    CHECK_THROWS_AS(t_lambda3(2, 10, CountMethod::functional_equation), UnsupportedParameter);
}

TEST_CASE("lambda 4 reference counts") {
    const auto ie = t4_inclusion_exclusion(4, 15);
    const auto fe = t4_functional_equation(4, 15);
    for (int n = 0; n <= 15; ++n) {
        CHECK(ie.values[n] == kReference[n]);
        CHECK(fe.values[n] == kReference[n]);
    }
    for (int k = 4; k <= 7; ++k) {
        const auto t = t4_inclusion_exclusion(k, 4);
        for (int n = 0; n <= 4; ++n) CHECK(t.values[n] == 1);
    }
    CHECK(t4_inclusion_exclusion(5, 12).values == count_by_oracle(5, 4, 12).values);
    CHECK_THROWS_AS(t4_inclusion_exclusion(3, 10), UnsupportedParameter);
    CHECK_THROWS_AS(t4_functional_equation(3, 10), UnsupportedParameter);
}

TEST_CASE("lambda 4 routes agree to n = 40") {
    for (int k = 4; k <= 6; ++k) {
        CHECK(t4_inclusion_exclusion(k, 40).values == t4_functional_equation(k, 40).values);
    }
}

TEST_CASE("oracle fallback outside the formula scope") {
    CHECK(count_by_oracle(3, 4, 7).values[7] == 14);
    CHECK(count_structures(3, 4, 8, CountMethod::oracle).values == count_by_oracle(3, 4, 8).values);
    try {
        count_structures(3, 4, 8, CountMethod::inclusion_exclusion);
        FAIL("expected UnsupportedParameter");
    } catch (const UnsupportedParameter& e) {
        CHECK(std::string(e.what()).find("oracle") != std::string::npos);
    }
}

TEST_CASE("monotone in k and lambda") {
    for (int k = 4; k <= 6; ++k) {
        const auto lo = t4_inclusion_exclusion(k, 30).values;
        const auto hi = t4_inclusion_exclusion(k + 1, 30).values;
        const auto l3 = t_lambda3(k, 30).values;
        const auto l2 = t_lambda2(k, 30).values;
        for (int n = 0; n <= 30; ++n) {
            CHECK(lo[n] <= hi[n]);
            CHECK(lo[n] <= l3[n]);
            CHECK(l3[n] <= l2[n]);
        }
    }
}

TEST_CASE("default methods") {
    CHECK(default_method(4, 4) == CountMethod::inclusion_exclusion);
    CHECK(default_method(3, 4) == CountMethod::oracle);
    CHECK(default_method(5, 1) == CountMethod::partial_matchings);
    CHECK(default_method(2, 3) == CountMethod::waterman);
}
