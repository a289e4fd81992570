#include <doctest.h>

#include "tpoly/alexander.hpp"
#include "tpoly/compare.hpp"
#include "tpoly/plot.hpp"

using namespace tpoly;

TEST_CASE("plots are deterministic and draw every layer") {
    const auto ball = dual_thurston_polytope({2, 2, 1, 3});
    const auto newton = newton_polytope(alexander_poly(wirtinger(pretzel_pd({2, 2, 1, 3}))));
    const std::vector<PlotLayer> layers{{"ball", ball, "#1f77b4"}, {"newton", newton, "#d62728"}};
    const auto a = render_polytopes(layers);
    CHECK(a == render_polytopes(layers));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("data-name=\"ball\"") != std::string::npos);
    CHECK(a.find("data-name=\"newton\"") != std::string::npos);
    CHECK(a.find("class=\"lattice\"") != std::string::npos);
    CHECK(render_polytopes({{"point", point_polytope({Half(0), Half(0)}), "black"}}).find("<svg") == 0);
}

TEST_CASE("compare report without grid") {
    for (const PretzelParams p : {PretzelParams{1, 1, 1, 1}, PretzelParams{2, 2, 1, 3}, PretzelParams{1, 2, 2, 1}}) {
        const auto r = compare_pipelines(p);
        CHECK_MESSAGE(r.passed(), to_text(r));
        const auto j = to_json(r);
        CHECK(j["passed"] == r.passed());
        CHECK(j["checks"].size() == r.checks.size());
    }
    const auto r = compare_pipelines({1, 1, 1, 1});
    bool skipped_mcmullen = false;
    for (const auto& c : r.checks)
        if (c.name == "mcmullen") skipped_mcmullen = c.status == Check::Status::Skip;
    CHECK(skipped_mcmullen);
}
