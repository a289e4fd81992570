#include "tpoly/compare.hpp"

#include <algorithm>
#include <sstream>

#include "tpoly/alexander.hpp"
#include "tpoly/error.hpp"
#include "tpoly/surface_movie.hpp"

namespace tpoly {

namespace {

std::string show(const Polytope2& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

Check verdict(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok ? Check::Status::Pass : Check::Status::Fail, std::move(detail)};
}

}  // namespace

const char* status_name(Check::Status s) {
    switch (s) {
        case Check::Status::Pass: return "PASS";
        case Check::Status::Fail: return "FAIL";
        case Check::Status::Skip: return "SKIP";
        case Check::Status::Info: return "INFO";
    }
    return "?";
}

bool CompareReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Check::Status::Fail; });
}

CompareReport compare_pipelines(const PretzelParams& p, const CompareOptions& options) {
    p.validate();
    CompareReport report{p, {}};
    auto& out = report.checks;

    const Polytope2 ball = dual_thurston_polytope(p);
    out.push_back(verdict("closed_form.symmetric", is_centrally_symmetric(ball), show(ball)));

    const auto cx = surface_complexities(p);
    const auto fu = schedule_FU(p), fk = schedule_FK(p);
    const Half norm_u = thurston_norm(ball, 1, 0), norm_k = thurston_norm(ball, 0, 1);
    out.push_back(verdict("norm.U_vs_F_U", norm_u == Half(-cx.chi_FU) && norm_u == Half(-fu.chi),
                          "norm " + norm_u.str() + ", movie chi " + std::to_string(fu.chi)));
    out.push_back(verdict("norm.K_vs_F_K", norm_k == Half(-cx.chi_FK) && norm_k == Half(-fk.chi),
                          "norm " + norm_k.str() + ", movie chi " + std::to_string(fk.chi)));

    const auto kc = knot_component(p);
    out.push_back(verdict("knot_component.seifert",
                          kc.seifert_complexity() == 2 * p.r1 + 2 * p.r2 - 1 && Half(kc.seifert_complexity()) <= norm_k,
                          kc.label() + ": complexity " + std::to_string(kc.seifert_complexity())));

    const Polytope2 oracle = hfl_hull_oracle(p);
    {
        const auto cons = support_constraints(p);
        const bool ok = std::all_of(cons.begin(), cons.end(), [&](const SupportAssertion& a) { return a.holds(oracle); });
        out.push_back(verdict("support_constraints.oracle_hull", ok, std::to_string(cons.size()) + " assertions"));
    }

    const PDCode pd = pretzel_pd(p);
    const auto w = wirtinger(pd);
    out.push_back(verdict("fox.abelianization_rank", abelianization_rank(w) == 2,
                          std::to_string(w.relators.size()) + " relations"));
    const LaurentPoly delta = alexander_poly(w);
    const bool symmetric_params = p.q1 == p.q2 && p.r1 == p.r2;
    if (symmetric_params) {
        out.push_back(verdict("fox.delta_vanishes", delta.is_zero(), "Delta = " + delta.str()));
    } else {
        out.push_back({"fox.delta", Check::Status::Info, "Delta = " + delta.str()});
    }
    {
        bool same = true;
        for (int g = 0; g < w.num_generators; ++g)
            if (w.component_of[g] == Label::U) same = same && alexander_poly(w, g) == delta;
        out.push_back(verdict("fox.column_invariance", same, "all U columns"));
    }
    if (delta.is_zero()) {
        out.push_back({"mcmullen", Check::Status::Skip, "Delta = 0"});
    } else {
        const Polytope2 newton = newton_polytope(delta);
        out.push_back(verdict("mcmullen", mcmullen_check(newton, ball), "Newton " + show(newton)));
    }

    if (!options.with_grid) return report;
    GridDiagram grid;
    try {
        grid = pd_to_grid(pd);
    } catch (const Error& e) {
        out.push_back({"grid.construct", Check::Status::Fail, e.what()});
        return report;
    }
    out.push_back({"grid.size", Check::Status::Info, "n = " + std::to_string(grid.n)});
    out.push_back(verdict("grid.components", grid.num_components() == 2 && grid.has_label(Label::U) && grid.has_label(Label::K),
                          std::to_string(grid.num_components()) + " components"));
    out.push_back(verdict("grid.linking_number", grid_linking_number(grid) == pd.linking_number(),
                          std::to_string(grid_linking_number(grid))));
    RankTable table;
    try {
        table = homology_ranks(grid, options.engine);
    } catch (const Error& e) {
        const std::string what = e.what();
        const bool budget = what.find("budget exceeded") != std::string::npos;
        out.push_back({"grid.homology", budget ? Check::Status::Skip : Check::Status::Fail, what});
        return report;
    }
    {
        LaurentPoly expected = delta;
        for (int c = 0; c < 2; ++c) expected = expected * one_minus_t_power(c, table.markings[c]);
        const LaurentPoly chi = graded_euler(table);
        out.push_back(verdict("grid.euler_vs_fox", chi.normalized() == expected.normalized(),
                              "chi " + (chi.is_zero() ? std::string("0") : std::string("nonzero"))));
    }
    {
        std::map<Point2, std::int64_t> total;
        for (const auto& b : table.blocks)
            for (const auto& [m, r] : b.ranks) total[b.alexander] += r;
        bool sym = true;
        for (const auto& [a, r] : total) {
            auto it = total.find(Point2{-a.x, -a.y});
            sym = sym && it != total.end() && it->second == r;
        }
        out.push_back(verdict("grid.symmetry", sym, std::to_string(total.size()) + " nonzero levels"));
    }
    try {
        const Polytope2 hat = hat_support_hull(table);
        out.push_back(verdict("grid.hat_vs_oracle", hat == oracle, show(hat)));
        const Polytope2 thurston = thurston_polytope(hat, table.markings);
        out.push_back(verdict("grid.thurston_vs_closed_form", thurston == ball, show(thurston)));
    } catch (const Error& e) {
        out.push_back({"grid.thurston_vs_closed_form", Check::Status::Fail, e.what()});
    }
    return report;
}

nlohmann::json to_json(const CompareReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    return {{"pretzel", {r.params.q1, r.params.r1, r.params.q2, r.params.r2}}, {"checks", checks}, {"passed", r.passed()}};
}

std::string to_text(const CompareReport& r) {
    std::ostringstream os;
    os << "compare P(" << r.params.str() << ")\n";
    for (const auto& c : r.checks) os << status_name(c.status) << "  " << c.name << "  " << c.detail << '\n';
    os << (r.passed() ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

}  // namespace tpoly
