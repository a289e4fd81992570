#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpoly/alexander.hpp"
#include "tpoly/compare.hpp"
#include "tpoly/error.hpp"
#include "tpoly/grid_floer.hpp"
#include "tpoly/plot.hpp"
#include "tpoly/pretzel.hpp"
#include "tpoly/surface_movie.hpp"

using namespace tpoly;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct LinkArgs {
    std::string pretzel;
    std::string tuple;
    std::string fixture;
    std::string pd_file;
    std::string grid_file;
};

void add_link_options(CLI::App* cmd, LinkArgs& a, bool allow_grid) {
    cmd->add_option("--pretzel", a.pretzel, "pretzel parameters q1,r1,q2,r2");
    cmd->add_option("--tuple", a.tuple, "signed pretzel tuple a,b,c,d (canonicalised; use --tuple=...)");
    cmd->add_option("--fixture", a.fixture,
                    "unknot | unlink2 | hopf | trefoil | figure-eight | torus-sum:A,B");
    cmd->add_option("--pd", a.pd_file, "PD code JSON file");
    if (allow_grid) cmd->add_option("--grid", a.grid_file, "grid file");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_validation("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<int> parse_ints(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail_validation(what + ": expected integers, got \"" + text + "\"");
        }
    }
    if (out.size() != count) fail_validation(what + ": expected " + std::to_string(count) + " integers");
    return out;
}

std::optional<PretzelParams> pretzel_of(const LinkArgs& a, bool* mirrored = nullptr) {
    if (!a.pretzel.empty()) return parse_pretzel_params(a.pretzel);
    if (!a.tuple.empty()) {
        const auto v = parse_ints(a.tuple, 4, "--tuple");
        const auto c = canonicalize(SignedPretzel{{v[0], v[1], v[2], v[3]}});
        if (mirrored) *mirrored = c.mirrored;
        return c.params;
    }
    return std::nullopt;
}

PDCode fixture_pd(const std::string& name) {
    if (name == "unknot") return unknot_pd();
    if (name == "unlink2") return unlink2_pd();
    if (name == "hopf") return hopf_pd();
    if (name == "trefoil") return trefoil_pd();
    if (name == "figure-eight") return figure_eight_pd();
    if (name.rfind("torus-sum:", 0) == 0) {
        const auto v = parse_ints(name.substr(10), 2, "--fixture torus-sum");
        if (v[0] < 1 || v[1] < 1) fail_validation("torus-sum parameters must be positive");
        return torus_connected_sum_pd(v[0], v[1]);
    }
    fail_validation("unknown fixture \"" + name + "\"");
}

int sources(const LinkArgs& a) {
    return !a.pretzel.empty() + !a.tuple.empty() + !a.fixture.empty() + !a.pd_file.empty() + !a.grid_file.empty();
}

void require_one_source(const LinkArgs& a) {
    if (sources(a) != 1) fail_validation("give exactly one of --pretzel, --tuple, --fixture, --pd, --grid");
}

PDCode pd_of(const LinkArgs& a) {
    if (auto p = pretzel_of(a)) return pretzel_pd(*p);
    if (!a.fixture.empty()) return fixture_pd(a.fixture);
    if (!a.pd_file.empty()) {
        json j;
        try {
            j = json::parse(read_file(a.pd_file));
        } catch (const json::exception& e) {
            fail_validation(std::string("PD file: ") + e.what());
        }
        return pd_from_json(j);
    }
    fail_validation("this command needs a link given by --pretzel, --tuple, --fixture or --pd");
}

json grid_to_json(const GridDiagram& g) {
    json labels = json::array();
    for (auto l : g.labels) labels.push_back(std::string(1, label_char(l)));
    json o = json::array(), x = json::array();
    for (int c = 0; c < g.n; ++c) {
        o.push_back(g.O[c] + 1);
        x.push_back(g.X[c] + 1);
    }
    return {{"n", g.n}, {"O", o}, {"X", x}, {"labels", labels}};
}

json half_json(Half h) { return json::array({h.numerator(), h.denominator()}); }

std::string polytope_text(const Polytope2& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json with_version(json j, const std::string& kind) {
    json out = {{"schema", kind}, {"version", kSchemaVersion}};
    out.update(j);
    return out;
}

// ---------------------------------------------------------------------------

int run_closed_form(const LinkArgs& a, const std::string& format) {
    bool mirrored = false;
    const auto p = pretzel_of(a, &mirrored);
    if (!p || sources(a) != 1) fail_validation("closed-form needs --pretzel or --tuple");
    p->validate();
    const Polytope2 ball = dual_thurston_polytope(*p);
    const auto cx = surface_complexities(*p);
    const auto kc = knot_component(*p);
    const Polytope2 oracle = hfl_hull_oracle(*p);
    if (format == "svg") {
        std::cout << render_polytopes({{"dual Thurston ball", ball, "#1f77b4"}});
        return 0;
    }
    if (format == "text") {
        std::cout << "P(" << p->str() << ")" << (mirrored ? " (mirror reduced)" : "") << '\n'
                  << "dual Thurston polytope: " << ball << '\n'
                  << "chi(F_U) = " << cx.chi_FU << "\nchi(F_K) = " << cx.chi_FK << '\n'
                  << "knot component " << kc.label() << ", support [" << kc.lo << ", " << kc.hi
                  << "], Seifert complexity " << kc.seifert_complexity() << '\n'
                  << "HFL hull: " << oracle << '\n';
        return 0;
    }
    json pts = json::array();
    for (const auto& q : hull_generators(*p)) pts.push_back(point_to_json(q));
    json cons = json::array();
    for (const auto& c : support_constraints(*p))
        cons.push_back({{"description", c.description},
                        {"temporary", point_to_json(c.temporary)},
                        {"centered", point_to_json(c.centered)},
                        {"holds", c.holds(oracle)}});
    emit(with_version({{"pretzel", {p->q1, p->r1, p->q2, p->r2}},
                       {"mirrored", mirrored},
                       {"points", pts},
                       {"omission", omission_applies(*p)},
                       {"polytope", to_json(ball)},
                       {"chi_FU", cx.chi_FU},
                       {"chi_FK", cx.chi_FK},
                       {"seifert_norm_K", cx.seifert_norm_K},
                       {"knot_component",
                        {{"label", kc.label()}, {"interval", {kc.lo, kc.hi}}, {"seifert_complexity", kc.seifert_complexity()}}},
                       {"hfl_hull", to_json(oracle)},
                       {"support_constraints", cons}},
                      "closed-form"));
    return 0;
}

GridDiagram grid_of(const LinkArgs& a) {
    if (!a.grid_file.empty()) return parse_grid(read_file(a.grid_file));
    return pd_to_grid(pd_of(a));
}

int run_grid(const LinkArgs& a, const std::string& format, const EngineOptions& engine, bool grid_only) {
    require_one_source(a);
    const GridDiagram g = grid_of(a);
    if (grid_only) {
        std::cout << serialize_grid(g);
        return 0;
    }
    const RankTable t = homology_ranks(g, engine);
    const Polytope2 tilde = tilde_support_hull(t);
    std::optional<Polytope2> hat, thurston;
    std::string hat_error, thurston_error;
    try {
        hat = hat_support_hull(t);
        thurston = thurston_polytope(*hat, t.markings);
    } catch (const Error& e) {
        (hat ? thurston_error : hat_error) = e.what();
    }
    if (format == "svg") {
        std::vector<PlotLayer> layers{{"tilde support", tilde, "#999999"}};
        if (hat) layers.push_back({"hat support", *hat, "#ff7f0e"});
        if (thurston) layers.push_back({"dual Thurston ball", *thurston, "#1f77b4"});
        std::cout << render_polytopes(layers);
        return 0;
    }
    const LaurentPoly chi = graded_euler(t);
    if (format == "text") {
        std::cout << serialize_grid(g) << "blocks: " << t.blocks.size() << '\n';
        for (const auto& b : t.blocks) {
            if (b.ranks.empty()) continue;
            std::cout << "  (" << b.alexander.x.str() << ", " << b.alexander.y.str() << "):";
            for (const auto& [m, r] : b.ranks) std::cout << " M" << m << "=" << r;
            std::cout << '\n';
        }
        std::cout << "tilde hull: " << tilde << '\n';
        std::cout << "hat hull: " << (hat ? polytope_text(*hat) : hat_error) << '\n';
        if (hat) std::cout << "Thurston polytope: " << (thurston ? polytope_text(*thurston) : thurston_error) << '\n';
        std::cout << "graded Euler characteristic: " << chi.str() << '\n';
        return 0;
    }
    json j = {{"grid", grid_to_json(g)}, {"rank_table", to_json(t)}, {"tilde_hull", to_json(tilde)},
              {"graded_euler", to_json(chi)}};
    if (hat) j["hat_hull"] = to_json(*hat);
    else j["hat_error"] = hat_error;
    if (thurston) j["thurston_polytope"] = to_json(*thurston);
    else if (hat) j["thurston_error"] = thurston_error;
    emit(with_version(j, "grid"));
    return 0;
}

int run_alexander(const LinkArgs& a, const std::string& format) {
    require_one_source(a);
    if (!a.grid_file.empty()) fail_validation("alexander needs a PD code, not a grid");
    const PDCode pd = pd_of(a);
    const auto w = wirtinger(pd);
    const LaurentPoly delta = alexander_poly(w);
    std::optional<Polytope2> newton;
    if (!delta.is_zero()) newton = newton_polytope(delta);
    std::optional<bool> mcmullen;
    const auto p = pretzel_of(a);
    if (p && newton) mcmullen = mcmullen_check(*newton, dual_thurston_polytope(*p));
    if (format == "svg") {
        if (!newton) fail_computation("zero polynomial has no Newton polytope");
        std::vector<PlotLayer> layers;
        if (p) layers.push_back({"dual Thurston ball", dual_thurston_polytope(*p), "#1f77b4"});
        layers.push_back({"Newton polytope", *newton, "#d62728"});
        std::cout << render_polytopes(layers);
        return 0;
    }
    if (format == "text") {
        std::cout << "Delta = " << delta.str() << '\n';
        if (newton) std::cout << "Newton polytope: " << *newton << '\n';
        if (mcmullen) std::cout << "McMullen containment: " << (*mcmullen ? "yes" : "no") << '\n';
        return 0;
    }
    json j = {{"delta", to_json(delta)}, {"zero", delta.is_zero()}, {"generators", w.num_generators},
              {"newton", newton ? to_json(*newton) : json(nullptr)},
              {"mcmullen", mcmullen ? json(*mcmullen) : json(nullptr)}};
    emit(with_version(j, "alexander"));
    return 0;
}

int run_norm(const LinkArgs& a, const std::string& cls, const std::string& source, const std::string& format,
             const EngineOptions& engine) {
    require_one_source(a);
    const auto v = parse_ints(cls, 2, "--class");
    Polytope2 ball;
    if (source == "closed-form") {
        const auto p = pretzel_of(a);
        if (!p) fail_validation("--source closed-form needs --pretzel or --tuple");
        ball = dual_thurston_polytope(*p);
    } else if (source == "grid") {
        const RankTable t = homology_ranks(grid_of(a), engine);
        ball = thurston_polytope(hat_support_hull(t), t.markings);
    } else {
        fail_validation("--source must be closed-form or grid");
    }
    const Half norm = thurston_norm(ball, v[0], v[1]);
    if (format == "json") {
        emit(with_version({{"class", {v[0], v[1]}}, {"source", source}, {"norm", half_json(norm)}}, "norm"));
    } else {
        std::cout << norm.str() << '\n';
    }
    return 0;
}

int run_surface(const LinkArgs& a, const std::string& format, const std::string& which) {
    const auto p = pretzel_of(a);
    if (!p || sources(a) != 1) fail_validation("surface needs --pretzel or --tuple");
    p->validate();
    const MoveSchedule fu = schedule_FU(*p), fk = schedule_FK(*p);
    if (format == "svg") {
        if (which != "F_U" && which != "F_K") fail_validation("--surface must be F_U or F_K");
        std::cout << render_schedule(which == "F_U" ? fu : fk);
        return 0;
    }
    if (format == "text") {
        for (const auto& s : {fu, fk})
            std::cout << s.surface << ": braid power " << s.braid_power << ", S1 " << s.s1 << ", S2 " << s.s2 << ", S3 "
                      << s.s3 << ", deaths " << s.deaths << ", punctures " << s.punctures << ", chi " << s.chi << '\n';
        return 0;
    }
    emit(with_version({{"pretzel", {p->q1, p->r1, p->q2, p->r2}}, {"F_U", to_json(fu)}, {"F_K", to_json(fk)}},
                      "surface"));
    return 0;
}

int run_compare(const LinkArgs& a, const std::string& format, const CompareOptions& options) {
    const auto p = pretzel_of(a);
    if (!p || sources(a) != 1) fail_validation("compare needs --pretzel or --tuple");
    const CompareReport r = compare_pipelines(*p, options);
    if (format == "json") emit(with_version(to_json(r), "compare"));
    else std::cout << to_text(r);
    return r.passed() ? 0 : 1;
}

int run_plot(const LinkArgs& a, const std::string& source, const EngineOptions& engine) {
    require_one_source(a);
    std::vector<PlotLayer> layers;
    const auto p = pretzel_of(a);
    if (source == "closed-form" || source == "all") {
        if (!p) fail_validation("plotting the closed form needs --pretzel or --tuple");
        layers.push_back({"dual Thurston ball", dual_thurston_polytope(*p), "#1f77b4"});
    }
    if (source == "newton" || source == "all") {
        if (!a.grid_file.empty()) fail_validation("the Newton polytope needs a PD code");
        const LaurentPoly delta = alexander_poly(wirtinger(pd_of(a)));
        if (!delta.is_zero()) layers.push_back({"Newton polytope", newton_polytope(delta), "#d62728"});
        else if (source == "newton") fail_computation("zero polynomial has no Newton polytope");
    }
    if (source == "grid") {
        const RankTable t = homology_ranks(grid_of(a), engine);
        layers.push_back({"grid dual Thurston ball", thurston_polytope(hat_support_hull(t), t.markings), "#2ca02c"});
    }
    if (layers.empty()) fail_validation("--source must be closed-form, newton, grid or all");
    std::cout << render_polytopes(layers);
    return 0;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (format == f) return;
    fail_validation("unsupported --format " + format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thurston polytopes of pretzel links: closed forms, Fox calculus and grid homology"};
    app.require_subcommand(1);
    std::string format = "json";
    LinkArgs link;
    EngineOptions engine;
    double time_budget = 0;

    auto* closed = app.add_subcommand("closed-form", "closed-form dual Thurston polytope and surface complexities");
    add_link_options(closed, link, false);
    closed->add_option("--format", format, "json | text | svg");

    auto* grid = app.add_subcommand("grid", "grid homology ranks, support hulls and Thurston polytope");
    add_link_options(grid, link, true);
    grid->add_option("--format", format, "json | text | svg");
    grid->add_option("--max-block", engine.max_block, "largest admissible Alexander block (states)");
    grid->add_option("--time-budget", time_budget, "seconds; checked between blocks");
    bool grid_only = false;
    grid->add_flag("--emit-grid", grid_only, "print the grid diagram and stop");

    auto* alex = app.add_subcommand("alexander", "Fox-calculus Alexander polynomial and Newton polytope");
    add_link_options(alex, link, false);
    alex->add_option("--format", format, "json | text | svg");

    std::string cls, source = "closed-form";
    auto* norm = app.add_subcommand("norm", "Thurston norm of a class");
    add_link_options(norm, link, true);
    norm->add_option("--class", cls, "a,b in the meridian basis (U, K)")->required();
    norm->add_option("--source", source, "closed-form | grid");
    norm->add_option("--format", format, "text | json");
    norm->add_option("--max-block", engine.max_block, "largest admissible Alexander block (states)");

    std::string which = "F_K";
    auto* surface = app.add_subcommand("surface", "Morse movie schedules for F_U and F_K");
    add_link_options(surface, link, false);
    surface->add_option("--format", format, "json | text | svg");
    surface->add_option("--surface", which, "F_U | F_K (svg output)");

    CompareOptions compare_opts;
    auto* compare = app.add_subcommand("compare", "cross-pipeline equality report");
    add_link_options(compare, link, false);
    compare->add_option("--format", format, "text | json");
    compare->add_flag("--with-grid", compare_opts.with_grid, "also run the grid homology pipeline");
    compare->add_option("--max-block", engine.max_block, "largest admissible Alexander block (states)");
    compare->add_option("--time-budget", time_budget, "seconds; checked between blocks");

    std::string plot_source = "all";
    auto* plot = app.add_subcommand("plot", "SVG of polytopes with the integer lattice");
    add_link_options(plot, link, true);
    plot->add_option("--source", plot_source, "closed-form | newton | grid | all");
    plot->add_option("--max-block", engine.max_block, "largest admissible Alexander block (states)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        engine.time_budget_seconds = time_budget;
        if (*closed) {
            check_format(format, {"json", "text", "svg"});
            return run_closed_form(link, format);
        }
        if (*grid) {
            check_format(format, {"json", "text", "svg"});
            return run_grid(link, format, engine, grid_only);
        }
        if (*alex) {
            check_format(format, {"json", "text", "svg"});
            return run_alexander(link, format);
        }
        if (*norm) {
            if (format == "json" && norm->count("--format") == 0) format = "text";
            check_format(format, {"json", "text"});
            return run_norm(link, cls, source, format, engine);
        }
        if (*surface) {
            check_format(format, {"json", "text", "svg"});
            return run_surface(link, format, which);
        }
        if (*compare) {
            if (compare->count("--format") == 0) format = "text";
            check_format(format, {"json", "text"});
            compare_opts.engine = engine;
            return run_compare(link, format, compare_opts);
        }
        if (*plot) return run_plot(link, plot_source, engine);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Validation ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
