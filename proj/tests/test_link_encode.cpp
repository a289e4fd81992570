#include <doctest.h>

#include "tpoly/alexander.hpp"
#include "tpoly/error.hpp"
#include "tpoly/grid_floer.hpp"
#include "tpoly/link_encode.hpp"

using namespace tpoly;

namespace {

std::array<int, 4> rotate(std::array<int, 4> a, int k) {
    std::rotate(a.begin(), a.begin() + k, a.end());
    return a;
}

// Signed tuples in the supported family that reduce to `p` (up to mirror).
std::vector<std::array<int, 4>> presentations(const PretzelParams& p) {
    const auto base = to_signed(p).coefficients;
    std::vector<std::array<int, 4>> out;
    for (int flip = 0; flip < 2; ++flip) {
        auto t = base;
        if (flip) t = {t[1], t[0], t[3], t[2]};
        for (int k = 0; k < 4; ++k) out.push_back(rotate(t, k));
    }
    return out;
}

GridDiagram reduced(const PDCode& pd) { return pd_to_grid(pd); }

// Deletes the columns of the other component and the rows of its markings.
GridDiagram sublink(const GridDiagram& g, Label keep) {
    std::vector<int> row_map(g.n, -1);
    std::vector<bool> row_kept(g.n, false);
    for (int c = 0; c < g.n; ++c)
        if (g.labels[c] == keep) row_kept[g.O[c]] = row_kept[g.X[c]] = true;
    int rows = 0;
    for (int r = 0; r < g.n; ++r)
        if (row_kept[r]) row_map[r] = rows++;
    GridDiagram out;
    for (int c = 0; c < g.n; ++c)
        if (g.labels[c] == keep) {
            out.O.push_back(row_map[g.O[c]]);
            out.X.push_back(row_map[g.X[c]]);
            out.labels.push_back(Label::K);
        }
    out.n = static_cast<int>(out.O.size());
    out.validate();
    return out;
}

}  // namespace

TEST_CASE("canonicalize examples") {
    const auto a = canonicalize({{-3, 2, -2, 3}});
    CHECK(a.params == PretzelParams{1, 1, 1, 1});
    CHECK_FALSE(a.mirrored);
    const auto b = canonicalize({{3, -2, 2, -3}});
    CHECK(b.params == PretzelParams{1, 1, 1, 1});
    CHECK(b.mirrored);
    CHECK_THROWS_WITH(canonicalize({{2, 3, 2, 3}}), doctest::Contains("unsupported pretzel pattern"));
    CHECK_THROWS(canonicalize({{-3, 0, -2, 3}}));
}

TEST_CASE("property: canonicalize is idempotent and invariant under rearrangement") {
    for (int q1 = 1; q1 <= 4; ++q1)
        for (int r1 = 1; r1 <= 4; ++r1)
            for (int q2 = 1; q2 <= 4; ++q2)
                for (int r2 = 1; r2 <= 4; ++r2) {
                    const PretzelParams p{q1, r1, q2, r2};
                    const auto c = canonicalize(to_signed(p));
                    const auto again = canonicalize(to_signed(c.params));
                    CHECK(again.params == c.params);
                    CHECK_FALSE(again.mirrored);
                    for (const auto& t : presentations(p)) {
                        const auto ct = canonicalize({t});
                        CHECK(ct.params == c.params);
                        std::array<int, 4> neg{-t[0], -t[1], -t[2], -t[3]};
                        const auto cn = canonicalize({neg});
                        CHECK(cn.params == c.params);
                        CHECK(cn.mirrored != ct.mirrored);
                    }
                }
}

TEST_CASE("pretzel_pd crossing counts and components") {
    const auto pd = pretzel_pd({1, 1, 1, 1});
    CHECK(pd.crossings.size() == 10);
    CHECK(pd.components.size() == 2);
    CHECK(pretzel_pd({2, 2, 2, 2}).crossings.size() == 18);
    for (int q1 = 1; q1 <= 5; ++q1)
        for (int r1 = 1; r1 <= 5; ++r1)
            for (int q2 = 1; q2 <= 5; ++q2)
                for (int r2 = 1; r2 <= 5; ++r2) {
                    const auto d = pretzel_pd({q1, r1, q2, r2});
                    CHECK(d.crossings.size() == std::size_t(2 * r1 + 1 + 2 * q1 + 2 * q2 + 2 * r2 + 1));
                    CHECK(d.components.size() == 2);
                    CHECK_NOTHROW(d.validate());
                }
}

TEST_CASE("U component is unknotted and K is the torus-knot sum") {
    for (const PretzelParams p : {PretzelParams{1, 1, 1, 1}}) {
        const auto g = pd_to_grid(pretzel_pd(p));
        const auto u = sublink(g, Label::U);
        const auto k = sublink(g, Label::K);
        // Grid Euler characteristic of a knot is Delta * (1 - t)^(n - 1).
        const auto chi_u = graded_euler(homology_ranks(u));
        const auto chi_k = graded_euler(homology_ranks(k));
        CHECK(equal_up_to_unit(chi_u, one_minus_t_power(1, u.n - 1)));
        const auto sum = alexander_poly(wirtinger(torus_connected_sum_pd(p.r1, p.r2)));
        CHECK(equal_up_to_unit(chi_k, sum * one_minus_t_power(1, k.n - 1)));
        // T(-2,2a+1) # T(2,2b+1) has Alexander polynomial of degree 2a + 2b.
        const auto box = sum.exponent_box();
        CHECK(box.second.second - box.first.second == 2 * p.r1 + 2 * p.r2);
    }
}

TEST_CASE("wirtinger presentations") {
    const auto u = wirtinger(unknot_pd());
    CHECK(u.num_generators == 1);
    CHECK(u.relators.empty());
    const auto h = wirtinger(hopf_pd());
    CHECK(h.num_generators == 2);
    CHECK(h.relators.size() == 2);
    const auto p = wirtinger(pretzel_pd({1, 1, 1, 1}));
    CHECK(p.relators.size() == 10);
    CHECK(abelianization_rank(p) == 2);
}

TEST_CASE("PD json round trip and validation") {
    const auto pd = pretzel_pd({1, 2, 1, 1});
    const auto back = pd_from_json(to_json(pd));
    CHECK(to_json(back) == to_json(pd));
    auto j = to_json(trefoil_pd());
    j["crossings"][0][0] = 99;
    CHECK_THROWS_AS(pd_from_json(j), Error);
    auto bad = to_json(trefoil_pd());
    bad["crossings"][0][4] = "?";
    CHECK_THROWS_AS(pd_from_json(bad), Error);
}

TEST_CASE("grid file round trip and errors") {
    const std::string text = "n=2\nO=1,2\nX=2,1\nlabels=U,U\n";
    CHECK(serialize_grid(parse_grid(text)) == text);
    CHECK_THROWS_WITH(parse_grid("n=2\nO=1,2\nX=1,2\nlabels=U,U\n"), doctest::Contains("collide"));
    CHECK_THROWS_WITH(parse_grid("n=2\nO=1,2\nX=2,1\n"), doctest::Contains("labels"));
    CHECK_THROWS(parse_grid("n=3\nO=1,2,2\nX=2,3,1\nlabels=K,K,K\n"));
    CHECK_THROWS(parse_grid("garbage"));
    for (const auto& pd : {trefoil_pd(), hopf_pd(), figure_eight_pd(), pretzel_pd({1, 1, 1, 1})}) {
        const auto g = reduced(pd);
        const auto s = serialize_grid(g);
        CHECK(parse_grid(s) == g);
        CHECK(serialize_grid(parse_grid(s)) == s);
    }
}

TEST_CASE("pd_to_grid fixtures") {
    const auto u = pd_to_grid(unknot_pd());
    CHECK(u.n == 2);
    CHECK(u.O == std::vector<int>{0, 1});
    CHECK(u.X == std::vector<int>{1, 0});
    CHECK(pd_to_grid(trefoil_pd()).n <= 5);
    const auto p = pd_to_grid(pretzel_pd({1, 1, 1, 1}));
    CHECK(p.n <= 14);
    CHECK(p.num_components() == 2);
    CHECK(grid_linking_number(p) == pretzel_pd({1, 1, 1, 1}).linking_number());
}

TEST_CASE("nugatory crossings are rejected") {
    // A one-crossing unknot: a single kink.
    const nlohmann::json j = {{"components", {{"K", {1, 2}}}}, {"crossings", {{1, 1, 2, 2, "+"}}}};
    const PDCode pd = pd_from_json(j);
    CHECK_THROWS_WITH(pd_to_grid(pd), doctest::Contains("nugatory"));
}

TEST_CASE("property: grid constructor invariants") {
    std::vector<PDCode> fixtures{unknot_pd(), unlink2_pd(), hopf_pd(), trefoil_pd(), figure_eight_pd(),
                                 torus_connected_sum_pd(1, 1)};
    for (int q1 = 1; q1 <= 2; ++q1)
        for (int r1 = 1; r1 <= 2; ++r1) fixtures.push_back(pretzel_pd({q1, r1, 1, 1}));
    for (const auto& pd : fixtures) {
        for (const auto& g : {pd_to_grid_unreduced(pd), pd_to_grid(pd)}) {
            CHECK_NOTHROW(g.validate());
            for (int c = 0; c < g.n; ++c) CHECK(g.O[c] != g.X[c]);
            CHECK(g.num_components() == static_cast<int>(pd.components.size()));
            CHECK(grid_linking_number(g) == pd.linking_number());
            for (const auto& comp : pd.components) CHECK(g.has_label(comp.label));
        }
    }
}

TEST_CASE("reduce_grid keeps the link type") {
    const auto g = pd_to_grid_unreduced(figure_eight_pd());
    const auto r = reduce_grid(g, 200, 11);
    CHECK(r.n <= g.n);
    CHECK(r.num_components() == 1);
    CHECK(destabilize_greedy(g).n <= g.n);
    CHECK(equal_up_to_unit(graded_euler(homology_ranks(r)),
                           alexander_poly(wirtinger(figure_eight_pd())) * one_minus_t_power(1, r.n - 1)));
}
