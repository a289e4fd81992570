#include <doctest.h>

#include "random_grid.hpp"
#include "tpoly/domains.hpp"
#include "tpoly/grid_floer.hpp"

using namespace tpoly;
using tpoly::testing::random_grid;
using tpoly::testing::random_state;

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

bool square_in(const Domain& d, int c, int r) { return d.at(mod(c, d.n()), mod(r, d.n())) != 0; }

// Rectangle with no state point of x in its interior and no marking inside.
bool empty_and_marking_free(const Domain& rect, const GridState& x, const GridDiagram& g, int i, int j) {
    const int n = g.n;
    for (int c = 0; c < n; ++c) {
        if (rect.at(c, g.O[c]) != 0 || rect.at(c, g.X[c]) != 0) return false;
        if (c == i || c == j) continue;
        if (square_in(rect, c, x[c]) && square_in(rect, c - 1, x[c] - 1)) return false;
    }
    return true;
}

GridState swapped(GridState x, int i, int j) {
    std::swap(x[i], x[j]);
    return x;
}

std::array<int, 2> operator+(std::array<int, 2> a, std::array<int, 2> b) { return {a[0] + b[0], a[1] + b[1]}; }

}  // namespace

TEST_CASE("domain_between elementary cases") {
    std::mt19937_64 rng(5);
    const auto g = random_grid(rng, 5, false);
    const GridState x{0, 1, 2, 3, 4};
    CHECK(domain_between(x, x) == zero_domain(x));
    const GridState y = swapped(x, 1, 2);
    const auto d = domain_between(x, y);
    CHECK(d == rectangle(x, 1, 2));
    for (int v : d.multiplicities()) CHECK((v == 0 || v == 1));
    (void)g;
}

TEST_CASE("domain_between closes up on n = 4") {
    const auto states = [] {
        std::vector<GridState> out;
        GridState x{0, 1, 2, 3};
        do out.push_back(x);
        while (std::next_permutation(x.begin(), x.end()));
        return out;
    }();
    for (const auto& x : states)
        for (const auto& y : states) {
            const auto loop = domain_between(x, y) + domain_between(y, x);
            CHECK(loop.from() == x);
            CHECK(loop.to() == x);
            CHECK(loop.has_valid_boundary());
            CHECK(domain_between(x, y).has_valid_boundary());
        }
}

TEST_CASE("filtration_vector basics") {
    // Unknot grid: O = (1 2), X = (2 1), one component labelled K.
    GridDiagram g{2, {0, 1}, {1, 0}, {Label::K, Label::K}};
    const GridState x{0, 1};
    CHECK(filtration_vector(zero_domain(x), g) == std::array<int, 2>{0, 0});
    // The square (0, 1) holds the X of column 0 and nothing else.
    Domain d(x, x);
    d.add(0, 1, 1);
    CHECK(filtration_vector(d, g) == std::array<int, 2>{0, 1});
    CHECK(filtration_vector(zero_domain(x).plus_torus(1), g) == std::array<int, 2>{0, 0});
}

TEST_CASE("maslov_index fixtures") {
    GridDiagram g{2, {0, 1}, {1, 0}, {Label::K, Label::K}};
    CHECK(maslov_index(zero_domain({0, 1}), g) == 0);
    std::mt19937_64 rng(17);
    const auto big = random_grid(rng, 8, false);
    // two disjoint rectangles composed
    for (int attempt = 0; attempt < 5000; ++attempt) {
        const auto x = random_state(rng, 8);
        const auto r1 = rectangle(x, 0, 1);
        if (!empty_and_marking_free(r1, x, big, 0, 1)) continue;
        const auto y = r1.to();
        const auto r2 = rectangle(y, 4, 5);
        if (!empty_and_marking_free(r2, y, big, 4, 5)) continue;
        CHECK(maslov_index(r1 + r2, big) == 2);
        break;
    }
}

TEST_CASE("property: empty rectangles have index one (>= 1000 samples, n <= 8)") {
    std::mt19937_64 rng(20240611);
    int samples = 0;
    for (int attempt = 0; samples < 1200 && attempt < 200000; ++attempt) {
        const int n = 2 + attempt % 7;
        const auto g = random_grid(rng, n, n >= 4 && attempt % 2 == 0);
        const auto x = random_state(rng, n);
        std::uniform_int_distribution<int> col(0, n - 1);
        const int i = col(rng), j = col(rng);
        if (i == j) continue;
        const auto r = rectangle(x, i, j);
        if (!empty_and_marking_free(r, x, g, i, j)) continue;
        ++samples;
        CHECK(maslov_index(r, g) == 1);
        CHECK(euler_measure_x4(r) == 0);  // 1 - 4 * (1/4)
        CHECK(is_positive(r));
        CHECK(r.has_valid_boundary());
        CHECK(filtration_vector(r, g) == std::array<int, 2>{0, 0});
        // The rectangle is a differential of x.
        const auto targets = differential(g, x);
        CHECK(std::binary_search(targets.begin(), targets.end(), r.to()));
    }
    CHECK(samples >= 1000);
}

TEST_CASE("property: additivity under concatenation (n <= 5)") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 4;
        const auto g = random_grid(rng, n, n >= 4 && trial % 3 == 0);
        const auto x = random_state(rng, n), y = random_state(rng, n), z = random_state(rng, n);
        const auto a = domain_between(x, y), b = domain_between(y, z);
        CHECK(filtration_vector(a + b, g) == filtration_vector(a, g) + filtration_vector(b, g));
        CHECK(maslov_index(a + b, g) == maslov_index(a, g) + maslov_index(b, g));
        CHECK(euler_measure_x4(a + b) == euler_measure_x4(a) + euler_measure_x4(b));
    }
}

TEST_CASE("property: periodic and torus invariance") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 6;
        const bool two = n >= 4 && trial % 2 == 0;
        const auto g = random_grid(rng, n, two);
        const auto x = random_state(rng, n), y = random_state(rng, n);
        const auto d = domain_between(x, y);
        const auto f = filtration_vector(d, g);
        const auto basis = periodic_basis(g, x);
        CHECK(static_cast<int>(basis.size()) == periodic_lattice_rank(g));
        CHECK(static_cast<int>(basis.size()) == (two ? 1 : 0));
        for (const auto& p : basis) {
            CHECK(is_periodic(p, g));
            CHECK(filtration_vector(p, g) == std::array<int, 2>{0, 0});
            CHECK(filtration_vector(d.plus_periodic(p, 1 + trial % 3), g) == f);
        }
        for (int k : {-2, -1, 1, 3}) {
            CHECK(filtration_vector(d.plus_torus(k), g) == f);
            CHECK((maslov_index(d.plus_torus(k), g) - maslov_index(d, g)) % 2 == 0);
        }
    }
}

TEST_CASE("unknot has no periodic domains") {
    GridDiagram g{2, {0, 1}, {1, 0}, {Label::K, Label::K}};
    CHECK(periodic_basis(g, {0, 1}).empty());
    CHECK(periodic_lattice_rank(g) == 0);
}

TEST_CASE("is_positive") {
    std::mt19937_64 rng(3);
    const auto g = random_grid(rng, 6, false);
    const GridState x{0, 1, 2, 3, 4, 5};
    const auto r = rectangle(x, 2, 3);
    CHECK(is_positive(r));
    CHECK_FALSE(is_positive(r.reversed()));
    CHECK_FALSE(is_positive(r.plus_torus(-1)));
    (void)g;
}

TEST_CASE("fast grader agrees with the domain route") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        const auto g = random_grid(rng, n, n >= 4 && trial % 2 == 1);
        const auto x = random_state(rng, n), y = random_state(rng, n);
        const auto d = domain_between(x, y);
        const auto gx = grade(g, x, x), gy = grade(g, y, x);
        CHECK(gx.maslov == 0);
        CHECK(gx.maslov - gy.maslov == maslov_index(d, g));
        const auto f = filtration_vector(d, g);
        CHECK(gx.alexander.x - gy.alexander.x == Half(f[0]));
        CHECK(gx.alexander.y - gy.alexander.y == Half(f[1]));
    }
}
