#include <doctest.h>

#include <algorithm>

#include "tpoly/pretzel.hpp"

using namespace tpoly;

namespace {

Point2 P(std::int64_t x, std::int64_t y) { return {Half(x), Half(y)}; }

std::vector<PretzelParams> grid6() {
    std::vector<PretzelParams> out;
    for (int q1 = 1; q1 <= 6; ++q1)
        for (int r1 = 1; r1 <= 6; ++r1)
            for (int q2 = 1; q2 <= 6; ++q2)
                for (int r2 = 1; r2 <= 6; ++r2) out.push_back({q1, r1, q2, r2});
    return out;
}

int norm_K_formula(const PretzelParams& p) {
    return std::max(2 * p.r1 + 2 * p.r2 + p.qB() - p.qS() - 1, 2 * p.rB() - 2 * p.rS() + p.q1 + p.q2 - 3);
}

std::vector<Point2> sorted(std::vector<Point2> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("hull_generators examples") {
    CHECK(sorted(hull_generators({2, 2, 2, 2})) ==
          sorted({P(-1, 7), P(1, -7), P(1, 1), P(-1, -1), P(3, 1), P(-3, -1), P(3, -5), P(-3, 5)}));
    CHECK(sorted(hull_generators({2, 2, 2, 3})) ==
          sorted({P(-1, 9), P(1, -9), P(1, 3), P(-1, -3), P(3, 3), P(-3, -3), P(3, -7), P(-3, 7)}));
    CHECK(sorted(hull_generators({1, 1, 1, 1})) ==
          sorted({P(-1, 3), P(1, -3), P(1, -1), P(-1, 1), P(1, -3), P(-1, 3)}));
    CHECK(omission_applies({1, 1, 1, 1}));
    CHECK_FALSE(omission_applies({1, 1, 2, 1}));
}

TEST_CASE("dual_thurston_polytope examples") {
    CHECK(dual_thurston_polytope({2, 2, 2, 2}) ==
          convex_hull({P(-1, 7), P(3, 1), P(3, -5), P(1, -7), P(-3, -1), P(-3, 5)}));
    CHECK(dual_thurston_polytope({1, 1, 1, 1}) == convex_hull({P(-1, 3), P(1, -3), P(1, -1), P(-1, 1)}));
    CHECK(dual_thurston_polytope({4, 1, 5, 3}) == convex_hull(hull_generators({4, 1, 5, 3})));
}

TEST_CASE("surface_complexities examples") {
    const auto a = surface_complexities({2, 2, 1, 3});
    CHECK(a.chi_FU == -2);
    CHECK(a.chi_FK == -10);
    CHECK(a.seifert_norm_K == 9);
    const auto b = surface_complexities({2, 2, 2, 2});
    CHECK(b.chi_FU == -3);
    CHECK(b.chi_FK == -7);
    CHECK(b.seifert_norm_K == 7);
    const auto c = surface_complexities({1, 1, 1, 1});
    CHECK(c.chi_FU == -1);
    CHECK(c.chi_FK == -3);
    CHECK(c.seifert_norm_K == 3);
}

TEST_CASE("knot_component examples") {
    const auto k = knot_component({3, 2, 1, 3});
    CHECK(k.label() == "T(-2,5) # T(2,7)");
    CHECK(k.lo == -5);
    CHECK(k.hi == 5);
    CHECK(k.seifert_complexity() == 9);
    const auto k1 = knot_component({1, 1, 1, 1});
    CHECK(k1.label() == "T(-2,3) # T(2,3)");
    CHECK(k1.lo == -2);
    CHECK(k1.hi == 2);
}

TEST_CASE("hfl_hull_oracle geometry") {
    for (const PretzelParams p : {PretzelParams{2, 2, 2, 2}, PretzelParams{2, 2, 1, 3}, PretzelParams{4, 1, 5, 3}}) {
        const auto h = hfl_hull_oracle(p);
        CHECK(h.max_x() - h.min_x() == Half(p.q1 + p.q2));
        // right vertical edge
        std::vector<Point2> right;
        for (auto v : h.vertices())
            if (v.x == h.max_x()) right.push_back(v);
        REQUIRE(right.size() == 2);
        CHECK((right[0].y - right[1].y).abs() == Half(2 * p.rB()));
    }
}

TEST_CASE("support_constraints examples") {
    const PretzelParams p{2, 2, 1, 3};
    const auto oracle = hfl_hull_oracle(p);
    const auto cons = support_constraints(p);
    REQUIRE_FALSE(cons.empty());
    bool saw_top_point = false;
    for (const auto& c : cons) {
        CHECK(c.holds(oracle));
        if (c.temporary == P(0, 11) && c.kind == SupportAssertion::Kind::OnBoundary) saw_top_point = true;
    }
    CHECK(saw_top_point);

    const PretzelParams q{1, 1, 1, 1};
    bool saw_third = false;
    for (const auto& c : support_constraints(q)) {
        CHECK(c.holds(hfl_hull_oracle(q)));
        if (c.temporary == P(1, 5)) saw_third = true;
    }
    CHECK(saw_third);
}

TEST_CASE("parse_pretzel_params") {
    CHECK(parse_pretzel_params("2,2,1,3") == PretzelParams{2, 2, 1, 3});
    CHECK_THROWS(parse_pretzel_params("2,2,1"));
    CHECK_THROWS(parse_pretzel_params("2,x,1,3"));
    CHECK_THROWS(parse_pretzel_params("0,1,1,1"));
}

TEST_CASE("property: closed form over [1..6]^4") {
    const auto cube = square(1);
    for (const auto& p : grid6()) {
        const auto ball = dual_thurston_polytope(p);
        REQUIRE(is_centrally_symmetric(ball));
        CHECK(ball == dual_thurston_polytope({p.q2, p.r2, p.q1, p.r1}));
        CHECK(thurston_norm(ball, 1, 0) == Half(p.q1 + p.q2 - 1));
        CHECK(thurston_norm(ball, 0, 1) == Half(norm_K_formula(p)));
        CHECK(thurston_norm(ball, 0, 1) >= Half(surface_complexities(p).seifert_norm_K));
        CHECK(omission_applies(p) == (p.q1 + p.q2 <= 2));
        CHECK(minkowski_diff(hfl_hull_oracle(p).scaled(2), cube) == ball);
        if (p.q1 == p.q2 && p.r1 == p.r2) {
            CHECK(sorted(hull_generators(p)) == sorted(hull_generators_symmetric(p.q1, p.r1)));
        }
    }
}
