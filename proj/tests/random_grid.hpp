#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "tpoly/link_encode.hpp"

namespace tpoly::testing {

/// Random grid of a knot or two-component link: O is a random permutation and
/// X[c] = O[next(c)] for a fixed-point-free column permutation with one or two cycles.
inline GridDiagram random_grid(std::mt19937_64& rng, int n, bool two_components) {
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<int> next(n);
    const int split = two_components ? std::uniform_int_distribution<int>(2, n - 2)(rng) : n;
    auto close_cycle = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) next[cols[i]] = cols[i + 1 < end ? i + 1 : begin];
    };
    close_cycle(0, split);
    if (two_components) close_cycle(split, n);
    GridDiagram g;
    g.n = n;
    g.O.resize(n);
    std::iota(g.O.begin(), g.O.end(), 0);
    std::shuffle(g.O.begin(), g.O.end(), rng);
    g.X.resize(n);
    g.labels.assign(n, Label::K);
    for (int c = 0; c < n; ++c) g.X[c] = g.O[next[c]];
    if (two_components)
        for (int i = split; i < n; ++i) g.labels[cols[i]] = Label::U;
    g.validate();
    return g;
}

inline std::vector<int> random_state(std::mt19937_64& rng, int n) {
    std::vector<int> x(n);
    std::iota(x.begin(), x.end(), 0);
    std::shuffle(x.begin(), x.end(), rng);
    return x;
}

}  // namespace tpoly::testing
