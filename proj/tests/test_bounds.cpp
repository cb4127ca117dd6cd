#include <catch2/catch_amalgamated.hpp>

#include "conway/bounds.hpp"
#include "conway/sequences.hpp"

using namespace conway;

TEST_CASE("upper_bound_row reproduces the classic and 1-D strict cases") {
    UpperBound classic = upper_bound_row(GameParams{1, 2, 2});
    CHECK(classic.row == 4);
    CHECK(classic.strict);  // raw bound 5 hit the energy threshold exactly

    CHECK(upper_bound_row(GameParams{3, 2, 1}).row == 4);

    UpperBound lone = upper_bound_row(GameParams{1, 2, 1});
    CHECK(lone.row == 1);
    CHECK(lone.strict);
}

TEST_CASE("lower bound formula") {
    CHECK(lower_bound_row_formula(GameParams{1, 2, 2}) == 4);  // 3d-2
    CHECK(lower_bound_row_formula(GameParams{3, 2, 2}) == 6);
    CHECK(lower_bound_row_formula(GameParams{2, 2, 1}) == 2);
}

TEST_CASE("1-D maximum row") {
    CHECK(max_row_1d(2, 2) == 3);
    CHECK(max_row_1d(3, 2) == 4);
    CHECK(max_row_1d(1, 2) == 1);
    CHECK(max_row_1d(1, 5) == 1);
}

TEST_CASE("row-1 cap") {
    CHECK(row1_cap(1, 2) == 1);
    CHECK(row1_cap(5, 2) == 8);  // floor(5 phi) = floor(8.09)
    for (int k = 2; k <= 6; ++k) CHECK(row1_cap(1, k) >= 1);

    // Exact floor characterization: r(phi-1) <= m < (r+1)(phi-1).
    for (int k = 2; k <= 4; ++k) {
        for (long m = 1; m <= 40; ++m) {
            Int r = row1_cap(m, k);
            FieldElement phim1 = FieldElement::phi(k) - FieldElement::one(k);
            FieldElement mm = FieldElement::from_rat(k, Rat(m));
            CHECK(sign(mm - phim1 * Rat(r)) == 1);
            CHECK(sign(mm - phim1 * Rat(r + 1)) == -1);
        }
    }
}

TEST_CASE("projection chain") {
    CHECK(projected_m(GameParams{1, 2, 2}) == std::vector<Int>{1, 3});
    CHECK(projected_m(GameParams{3, 2, 2}) == std::vector<Int>{3, 11});
    CHECK(projected_m(GameParams{4, 2, 1}) == std::vector<Int>{4});
}

TEST_CASE("achieved row and the Lucas failure at m=3") {
    CHECK(achieved_row(GameParams{1, 2, 2}) == 4);
    CHECK(achieved_row(GameParams{3, 2, 2}) == 6);
    CHECK(upper_bound_row(GameParams{3, 2, 2}).row == 7);
    CHECK(achieved_row(GameParams{4, 2, 2}) == 7);
    CHECK(upper_bound_row(GameParams{4, 2, 2}).row == 7);
}

TEST_CASE("k=2 bound formulas collapse to the 3d form") {
    for (long m = 1; m <= 60; ++m) {
        long base = floor_log_phi(FieldElement::from_rat(2, Rat(m))).exponent;
        for (int d = 1; d <= 4; ++d) {
            GameParams params{static_cast<int>(m), 2, d};
            CHECK(lower_bound_row_formula(params) == base + 3 * d - 2);
            UpperBound ub = upper_bound_row(params);
            long raw = ub.strict ? ub.row + 1 : ub.row;
            CHECK(raw == base + 3 * d - 1);
        }
    }
}

TEST_CASE("bounds sandwich on a sample grid") {
    for (int k = 2; k <= 4; ++k) {
        for (int d = 1; d <= 3; ++d) {
            for (long m = 2; m <= 40; ++m) {
                GameParams params{static_cast<int>(m), k, d};
                long lo = lower_bound_row_formula(params);
                long up = upper_bound_row(params).row;
                long ach = achieved_row(params);
                CHECK(lo <= ach);
                CHECK(ach <= up);
                CHECK(up - lo <= 1);
            }
        }
    }
}

TEST_CASE("C(d) respects the closed-form cap as epsilons approach 2") {
    for (int k : {2, 3}) {
        for (int d = 0; d <= 3; ++d) {
            std::vector<Rat> eps(static_cast<size_t>(d) + 1, Rat(199, 100));
            FieldElement c = C_bound(d, k, eps);
            FieldElement phi = FieldElement::phi(k);
            FieldElement one = FieldElement::one(k);
            FieldElement ratio = (phi + one) * (phi - one).inverse();
            FieldElement cap = (phi + one) * (ratio.pow(d + 1) - one) * (ratio - one).inverse();
            CHECK(sign(cap - c) == 1);
        }
    }
    CHECK_THROWS_AS(C_bound(1, 2, {Rat(1), Rat(2)}), std::invalid_argument);
}

TEST_CASE("error term E(m) stays below one and vanishes for large m") {
    std::vector<Rat> eps_max;
    for (int d = 2; d <= 6; ++d) {
        for (int k = 2; k <= 6; ++k) {
            std::vector<Rat> eps(static_cast<size_t>(d - 2) + 1, Rat(199, 100));
            Interval e = error_term_E(Int(2), d, k, eps);
            CHECK(e.hi < 1);
            CHECK(e.lo >= 0);
        }
    }
    Interval tiny = error_term_E(Int(1000000), 3, 2, {Rat(199, 100), Rat(199, 100)});
    CHECK(tiny.lo >= 0);
    CHECK(tiny.hi < Rat(1, 100));
}

TEST_CASE("single-square caps") {
    SingleSquareCaps d1 = single_square_caps(GameParams{2, 2, 1});
    CHECK(d1.lower == 8);
    CHECK(d1.upper == 8);

    SingleSquareCaps d2 = single_square_caps(GameParams{1, 2, 2});
    CHECK(d2.lower == 11);
    CHECK(d2.upper == 17);

    for (int d = 1; d <= 3; ++d) {
        for (long m = 1; m <= 30; ++m) {
            SingleSquareCaps caps = single_square_caps(GameParams{static_cast<int>(m), 2, d});
            CHECK(caps.lower <= caps.upper);
        }
    }
}

TEST_CASE("scan_gap flags the even Lucas numbers") {
    auto gaps = scan_gap(2, 2, 2, 50);
    auto has = [&](long m) {
        for (const auto& g : gaps) {
            if (g.m == m) return true;
        }
        return false;
    };
    CHECK(has(3));   // L(2)
    CHECK(has(7));   // L(4)
    CHECK(has(18));  // L(6)
    CHECK(has(47));  // L(8)
    CHECK_FALSE(has(4));
}
