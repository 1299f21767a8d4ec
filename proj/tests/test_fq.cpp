#include <doctest.h>

#include "dtq/engine.hpp"
#include "dtq/fq.hpp"
#include "helpers.hpp"

using namespace dtq;

TEST_CASE("finite field tables") {
    for (int q : {4, 9, 25}) {
        GF F(q);
        int p = q == 4 ? 2 : (q == 9 ? 3 : 5);
        SUBCASE(("axioms for q = " + std::to_string(q)).c_str()) {
            for (int a = 0; a < q; ++a) {
                auto ua = static_cast<std::uint8_t>(a);
                CHECK(F.add(ua, 0) == ua);
                CHECK(F.mul(ua, 1) == ua);
                CHECK(F.add(ua, F.neg(ua)) == 0);
                if (a != 0) CHECK(F.mul(ua, F.inv(ua)) == 1);
                for (int b = 0; b < q; ++b) {
                    auto ub = static_cast<std::uint8_t>(b);
                    CHECK(F.add(ua, ub) == F.add(ub, ua));
                    CHECK(F.mul(ua, ub) == F.mul(ub, ua));
                    for (int c = 0; c < q; ++c) {
                        auto uc = static_cast<std::uint8_t>(c);
                        CHECK(F.mul(ua, F.add(ub, uc)) == F.add(F.mul(ua, ub), F.mul(ua, uc)));
                    }
                }
            }
        }
        SUBCASE("prime subfield characteristic") {
            std::uint8_t s = 0;
            for (int i = 0; i < p; ++i) s = F.add(s, 1);
            CHECK(s == 0);
        }
        SUBCASE("multiplicative group order") {
            // x generates a subgroup whose order divides q - 1
            std::uint8_t x = static_cast<std::uint8_t>(p);  // the adjoined root
            std::uint8_t acc = 1;
            for (int i = 0; i < q - 1; ++i) acc = F.mul(acc, x);
            CHECK(acc == 1);
        }
    }
    CHECK_THROWS(GF(8));
}

TEST_CASE("group order over F_q") {
    CHECK(group_order_fq({1}, 4) == 3);
    CHECK(group_order_fq({2}, 4) == Int(15) * 12);
    CHECK(group_order_fq({1, 1}, 9) == 64);
    CHECK(group_order_fq({0, 0}, 4) == 1);
}

TEST_CASE("semistable point counts") {
    SUBCASE("trivial stability counts the whole space") {
        CHECK(enumerate_ss_count(test::jordan(), Stability::trivial(1), {1}, 4) == 4);
        CHECK(enumerate_ss_count(test::jordan(), Stability::trivial(1), {2}, 4) == 256);
        CHECK(enumerate_ss_count(test::a2(), Stability::trivial(2), {1, 1}, 9) == 9);
    }
    SUBCASE("a2 (1,1): nonzero maps in chamber A, nothing in chamber B") {
        CHECK(enumerate_ss_count(test::a2(), test::chamber_a(), {1, 1}, 4) == 3);
        CHECK(enumerate_ss_count(test::a2(), test::chamber_b(), {1, 1}, 4) == 0);
    }
    SUBCASE("stacky count") {
        CHECK(stacky_count(test::jordan(), Stability::trivial(1), {2}, 4) == Rational(64, 45));
        CHECK(stacky_count(test::a2(), test::chamber_a(), {1, 1}, 4) == Rational(1, 3));
    }
}

TEST_CASE("oracle against the HN recursion") {
    SUBCASE("jordan box 2") {
        auto rep = oracle_check(test::jordan(), Stability::trivial(1), {2}, {4, 9});
        CHECK(rep.all_match());
        CHECK(rep.rows.size() == 6);  // d in {0,1,2} x q in {4,9}
    }
    SUBCASE("a2 both chambers") {
        CHECK(oracle_check(test::a2(), test::chamber_a(), {1, 1}, {4}).all_match());
        CHECK(oracle_check(test::a2(), test::chamber_b(), {1, 1}, {4}).all_match());
    }
    SUBCASE("k2 generic chamber box (1,1)") {
        CHECK(oracle_check(test::k2(), test::chamber_a(), {1, 1}, {4, 9}).all_match());
    }
    SUBCASE("reported values are internally consistent") {
        auto rep = oracle_check(test::jordan(), Stability::trivial(1), {2}, {4});
        for (const auto& r : rep.rows) {
            CHECK(r.ratio == Rational(r.ss_points) / Rational(r.group_order));
            CHECK(r.match == (r.ratio == r.predicted));
        }
    }
}

TEST_CASE("budget guard") {
    // 25^(4*4) representations is far beyond any reasonable budget
    CHECK_THROWS_AS(enumerate_ss_count(test::k2(), test::chamber_a(), {4, 4}, 25), BudgetError);
}
