#include <catch2/catch_amalgamated.hpp>

#include "conway/bounds.hpp"
#include "conway/strategies.hpp"
#include "conway/verify.hpp"

using namespace conway;

TEST_CASE("k-nacci jumping from the stacked column") {
    // k=2, n=2: rows (0,-1) hold (2,1); two jumps reach row 2.
    MoveTrace t2 = knacci_jump_plan(2, 2);
    CHECK(t2.moves.size() == 2);
    BoardState fin = replay_from(knacci_jump_initial(2, 2), t2);
    CHECK(fin.max_row_occupied() == 2);

    // k=3, n=2: rows (0,-1,-2) hold (2,2,1).
    BoardState init3 = knacci_jump_initial(3, 2);
    CHECK(init3.count_at(Position{0}) == 2);
    CHECK(init3.count_at(Position{-1}) == 2);
    CHECK(init3.count_at(Position{-2}) == 1);
    BoardState fin3 = replay_from(init3, knacci_jump_plan(3, 2));
    CHECK(fin3.max_row_occupied() == 2);

    // k=2, n=10: F(11)=89 on row 0, F(10)=55 on row -1.
    BoardState init10 = knacci_jump_initial(2, 10);
    CHECK(init10.count_at(Position{0}) == 89);
    CHECK(init10.count_at(Position{-1}) == 55);
    BoardState fin10 = replay_from(init10, knacci_jump_plan(2, 10));
    CHECK(fin10.max_row_occupied() == 10);

    CHECK_THROWS_AS(knacci_jump_plan(2, 0), std::invalid_argument);
}

TEST_CASE("column fill requirement tables") {
    auto res = column_fill_plan(3, 2, 4);
    REQUIRE(res.feasible);
    // F(i+5) - (F(i+3)-1)*3: 2, 2, 1, 0, -2, ...
    REQUIRE(res.plan.requirements.size() >= 5);
    CHECK(res.plan.requirements[0] == 2);
    CHECK(res.plan.requirements[1] == 2);
    CHECK(res.plan.requirements[2] == 1);
    CHECK(res.plan.requirements[3] == 0);
    CHECK(res.plan.requirements[4] == -2);
    CHECK(res.plan.cutoff == 3);

    // Requirement recurrence closure: r_{i+k} = sum of k previous - m.
    for (size_t i = 0; i + 2 < res.plan.requirements.size(); ++i)
        CHECK(res.plan.requirements[i + 2] ==
              res.plan.requirements[i] + res.plan.requirements[i + 1] - 3);

    BoardState fin = replay(res.plan.schedule);
    CHECK(fin.max_row_occupied() == 4);

    auto res2 = column_fill_plan(2, 2, 3);
    REQUIRE(res2.feasible);
    CHECK(replay(res2.plan.schedule).max_row_occupied() == 3);

    CHECK_FALSE(column_fill_plan(2, 2, 4).feasible);
    CHECK_THROWS_AS(column_fill_plan(1, 2, 1), std::invalid_argument);
}

TEST_CASE("column fill matches max_row_1d feasibility on a sample grid") {
    for (int k = 2; k <= 4; ++k) {
        for (long m = 2; m <= 30; ++m) {
            long best = max_row_1d(m, k);
            CHECK(column_fill_plan(m, k, best).feasible);
            CHECK_FALSE(column_fill_plan(m, k, best + 1).feasible);
        }
    }
}

TEST_CASE("column fill plans touch only a finite strip") {
    auto res = column_fill_plan(5, 3, max_row_1d(5, 3));
    REQUIRE(res.feasible);
    long deepest = 0;
    for (const auto& mv : res.plan.schedule.moves) deepest = std::min(deepest, mv.from[0]);
    CHECK(deepest >= -(res.plan.cutoff + 3));
}

TEST_CASE("row-1 amassing adds exactly the cap") {
    ConstructionPlan one = row1_amass_plan(1, 2);
    CHECK(one.schedule.moves.size() == 1);
    CHECK(replay(one.schedule).added_at(Position{1}) == 1);

    ConstructionPlan two = row1_amass_plan(2, 2);
    CHECK(replay(two.schedule).added_at(Position{1}) == 3);

    ConstructionPlan five = row1_amass_plan(5, 2);
    CHECK(replay(five.schedule).added_at(Position{1}) == 8);

    for (int k = 2; k <= 4; ++k) {
        for (long m = 1; m <= 25; ++m) {
            ConstructionPlan plan = row1_amass_plan(m, k);
            BoardState fin = replay(plan.schedule);
            CHECK(fin.added_at(Position{1}) == row1_cap(m, k));
            // No row below ends negative (guaranteed by construction, spot-check anyway).
            for (long r = 0; r >= -(plan.cutoff + k); --r) CHECK(fin.count_at(Position{r}) >= 0);
        }
    }
}

TEST_CASE("projection plan flattens and replays in two dimensions") {
    for (int m : {1, 2, 3}) {
        ProjectionPlan plan = projection_plan(GameParams{m, 2, 2});
        CHECK(plan.target_row == achieved_row(GameParams{m, 2, 2}));
        MoveTrace flat = flatten_projection(plan);
        VerifyReport rep = verify_trace(flat);
        CHECK(rep.ok);
        CHECK(rep.max_row_reached >= plan.target_row);
    }
    CHECK_THROWS_AS(projection_plan(GameParams{2, 2, 1}), std::invalid_argument);
}

TEST_CASE("verify_trace catches tampered traces and certifies energy") {
    auto res = column_fill_plan(3, 2, 4);
    REQUIRE(res.feasible);
    VerifyReport good = verify_trace(res.plan.schedule, true);
    CHECK(good.ok);
    CHECK(good.energy_neutral_moves == res.plan.schedule.moves.size());

    MoveTrace tampered = res.plan.schedule;
    tampered.moves.erase(tampered.moves.begin());
    VerifyReport bad = verify_trace(tampered);
    CHECK_FALSE(bad.ok);
}
