#include <catch2/catch_amalgamated.hpp>

#include "conway/algebraic.hpp"
#include "conway/sequences.hpp"

using namespace conway;

TEST_CASE("knacci initial values and small unrollings") {
    const long fib[] = {0, 1, 1, 2, 3, 5, 8, 13};
    for (long n = 0; n < 8; ++n) CHECK(knacci(2, n) == fib[n]);
    const long trib[] = {0, 0, 1, 1, 2, 4, 7, 13};
    for (long n = 0; n < 8; ++n) CHECK(knacci(3, n) == trib[n]);
    const long tetra[] = {0, 0, 0, 1, 1, 2, 4, 8, 15, 29};
    for (long n = 0; n < 10; ++n) CHECK(knacci(4, n) == tetra[n]);
}

TEST_CASE("knacci rejects invalid parameters") {
    CHECK_THROWS_AS(knacci(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(knacci(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(cumulative_a(2, -1), std::invalid_argument);
}

TEST_CASE("knacci satisfies its recurrence on the full grid") {
    for (int k = 2; k <= 6; ++k) {
        for (long n = 0; n <= 60; ++n) {
            Int sum(0);
            for (int j = 0; j < k; ++j) sum += knacci(k, n + j);
            CHECK(knacci(k, n + k) == sum);
        }
    }
}

namespace {
// Independent oracle: iterate a_{n+k} = a_n + ... + a_{n+k-1} + 1 directly
// from (1, 2, 4, ..., 2^{k-1}).
Int plus_one_recurrence(int k, long i) {
    std::vector<Int> a;
    Int p(1);
    for (int j = 0; j < k; ++j) {
        a.push_back(p);
        p *= 2;
    }
    while (static_cast<long>(a.size()) <= i) {
        Int next(1);
        for (int j = 1; j <= k; ++j) next += a[a.size() - static_cast<size_t>(j)];
        a.push_back(next);
    }
    return a[static_cast<size_t>(i)];
}
}  // namespace

TEST_CASE("cumulative_a matches the plus-one recurrence") {
    const long k2[] = {1, 2, 4, 7, 12, 20};
    for (long i = 0; i < 6; ++i) CHECK(cumulative_a(2, i) == k2[i]);
    const long k3[] = {1, 2, 4, 8, 15};
    for (long i = 0; i < 5; ++i) CHECK(cumulative_a(3, i) == k3[i]);
    CHECK(cumulative_a(2, 0) == 1);

    for (int k = 2; k <= 6; ++k) {
        for (long i = 0; i <= 60; ++i) CHECK(cumulative_a(k, i) == plus_one_recurrence(k, i));
    }
}

TEST_CASE("S partial sums") {
    CHECK(S(2, 1, 3) == 3);  // F(3)+F(2) = F(4)
    CHECK(S(3, 0, 2) == 1);
    CHECK(S(3, 1, 2) == 2);
    CHECK(S(3, 2, 2) == 2);
    CHECK(S(2, 0, 2) == 1);
    CHECK_THROWS_AS(S(2, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(S(3, 2, 0), std::out_of_range);  // index n+k-2-i < 0
}

TEST_CASE("S_{k-1}(n) telescopes to F_k(n+k-1)") {
    for (int k = 2; k <= 6; ++k) {
        for (long n = 1; n <= 40; ++n) CHECK(S(k, k - 1, n) == knacci(k, n + k - 1));
    }
}

TEST_CASE("S identity spot checks") {
    // k=2, n=2, i=1: S_1(2) F(1) + S_0(2) F(2) = 2*1 + 1*1 = 3 = F(4)
    CHECK(verify_S_identity(2, 2, 1));
    CHECK(verify_S_identity(3, 2, 0));
    for (int k = 2; k <= 4; ++k) {
        for (long n = 1; n <= 12; ++n) {
            for (long i = 0; i <= 12; ++i) CHECK(verify_S_identity(k, n, i));
        }
    }
}

TEST_CASE("lucas numbers") {
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(2) == 3);
    CHECK(lucas(4) == 7);
    CHECK(lucas(6) == 18);
    CHECK(lucas(32) == 4870847);
}

TEST_CASE("even-indexed lucas numbers sit one above the phi power") {
    for (long j = 1; j <= 16; ++j) {
        FieldElement p = FieldElement::phi(2).pow(2 * j);
        FloorInt f = floor_field(p);
        CHECK_FALSE(f.exact);
        CHECK(lucas(2 * j) - f.value == 1);
    }
}

TEST_CASE("asymptotic_c brackets the growth constant") {
    Interval c2 = asymptotic_c(2, 60);
    CHECK(c2.strictly_positive());
    // contains 1/sqrt(5): lo^2 * 5 < 1 < hi^2 * 5
    CHECK(c2.lo * c2.lo * 5 < 1);
    CHECK(c2.hi * c2.hi * 5 > 1);

    Interval c3 = asymptotic_c(3, 80);
    CHECK(c3.strictly_positive());
    CHECK(c3.width() < Rat(1, 1000000));

    for (int k = 2; k <= 6; ++k) CHECK(asymptotic_c(k, 48).strictly_positive());
}
