#include "tpoly/grid_floer.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <string>

#include "tpoly/error.hpp"
#include "tpoly/gf2.hpp"

namespace tpoly {

namespace {

constexpr int kMaxGrid = 16;

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

// ---------------------------------------------------------------------------
// Gradings

StateGrader::StateGrader(const GridDiagram& g) : n_(g.n) {
    g.validate();
    if (n_ > kMaxGrid) fail_validation("grid too large for the state engine (n > 16)");
    const int n = n_;
    for (int c = 0; c < 2; ++c) {
        alex_[c].assign(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int w = 0;
                for (int k = 0; k < i; ++k) {
                    if (static_cast<int>(g.labels[k]) != c) continue;
                    if (g.O[k] < j && j <= g.X[k]) ++w;
                    if (g.X[k] < j && j <= g.O[k]) --w;
                }
                alex_[c][i * n + j] = -w;
            }
    }
    xo_.assign(n * n, 0);
    ox_.assign(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) {
            for (int k = i; k < n; ++k) xo_[i * n + r] += g.O[k] >= r;
            for (int k = 0; k < i; ++k) ox_[i * n + r] += g.O[k] < r;
        }
    const std::uint32_t full = (1u << n) - 1;
    for (int c = 0; c < 2; ++c) {
        suffix_min_[c].assign(full + 1, 0);
        suffix_max_[c].assign(full + 1, 0);
        for (std::uint32_t mask = full; mask-- > 0;) {
            const int col = std::popcount(mask);
            int lo = INT32_MAX, hi = INT32_MIN;
            for (int r = 0; r < n; ++r) {
                if (mask >> r & 1) continue;
                const std::uint32_t next = mask | (1u << r);
                lo = std::min(lo, alexander_step(c, col, r) + suffix_min_[c][next]);
                hi = std::max(hi, alexander_step(c, col, r) + suffix_max_[c][next]);
            }
            suffix_min_[c][mask] = lo;
            suffix_max_[c][mask] = hi;
        }
        twice_center_[c] = suffix_min_[c][0] + suffix_max_[c][0];
    }
}

int StateGrader::maslov_step(int i, int r, std::uint32_t used) const {
    return std::popcount(used & ((1u << r) - 1)) - xo_[i * n_ + r] - ox_[i * n_ + r];
}

std::array<int, 2> StateGrader::raw_alexander(const GridState& x) const {
    std::array<int, 2> a{0, 0};
    for (int i = 0; i < n_; ++i)
        for (int c = 0; c < 2; ++c) a[c] += alexander_step(c, i, x[i]);
    return a;
}

int StateGrader::maslov(const GridState& x) const {
    int m = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < n_; ++i) {
        m += maslov_step(i, x[i], used);
        used |= 1u << x[i];
    }
    return m;
}

Point2 StateGrader::centered(const std::array<int, 2>& raw) const {
    return {Half::from_twice(2 * raw[0] - twice_center_[0]), Half::from_twice(2 * raw[1] - twice_center_[1])};
}

Point2 StateGrader::alexander(const GridState& x) const { return centered(raw_alexander(x)); }

// ---------------------------------------------------------------------------
// States and the differential

void for_each_state(const GridDiagram& g, const std::function<void(const GridState&)>& fn) {
    g.validate();
    if (g.n > kMaxGrid) fail_validation("grid too large for the state engine (n > 16)");
    GridState x(g.n);
    std::function<void(int, std::uint32_t)> rec = [&](int col, std::uint32_t used) {
        if (col == g.n) {
            fn(x);
            return;
        }
        for (int r = 0; r < g.n; ++r) {
            if (used >> r & 1) continue;
            x[col] = r;
            rec(col + 1, used | (1u << r));
        }
    };
    rec(0, 0);
}

std::vector<GridState> enumerate_states(const GridDiagram& g) {
    std::vector<GridState> out;
    for_each_state(g, [&](const GridState& x) { out.push_back(x); });
    return out;
}

std::vector<GridState> states_with_alexander(const GridDiagram& g, Point2 alexander) {
    const StateGrader grader(g);
    std::vector<GridState> out;
    for_each_state(g, [&](const GridState& x) {
        if (grader.alexander(x) == alexander) out.push_back(x);
    });
    return out;
}

Grading grade(const GridDiagram& g, const GridState& x, const GridState& base) {
    const StateGrader grader(g);
    return {grader.alexander(x), grader.maslov(x) - grader.maslov(base)};
}

namespace {

// free[((i * n + w) * n + r) * n + h]: the w x h rectangle with lower-left square (i, r) has no marking.
std::vector<char> marking_free_table(const GridDiagram& g) {
    const int n = g.n;
    std::vector<char> table(static_cast<std::size_t>(n) * n * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r)
            for (int w = 1; w < n; ++w)
                for (int h = 1; h < n; ++h) {
                    bool ok = true;
                    for (int a = 0; a < w && ok; ++a) {
                        const int c = mod(i + a, n);
                        ok = mod(g.O[c] - r, n) >= h && mod(g.X[c] - r, n) >= h;
                    }
                    table[((static_cast<std::size_t>(i) * n + w) * n + r) * n + h] = ok;
                }
    return table;
}

// Calls fn(i, j) for every empty marking-free rectangle from (i, x[i]) to (j, x[j]).
template <class F>
void for_each_rectangle(int n, const int* x, const std::vector<char>& free, F&& fn) {
    for (int i = 0; i < n; ++i) {
        int lowest = n;
        for (int w = 1; w < n; ++w) {
            const int j = i + w < n ? i + w : i + w - n;
            int h = x[j] - x[i];
            if (h < 0) h += n;
            if (h < lowest) {
                if (free[((static_cast<std::size_t>(i) * n + w) * n + x[i]) * n + h]) fn(i, j);
                lowest = h;
            }
        }
    }
}

}  // namespace

std::vector<GridState> differential(const GridDiagram& g, const GridState& x) {
    g.validate();
    const auto free = marking_free_table(g);
    std::vector<GridState> out;
    for_each_rectangle(g.n, x.data(), free, [&](int i, int j) {
        GridState y = x;
        std::swap(y[i], y[j]);
        out.push_back(std::move(y));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Block elimination

namespace {

using Packed = std::uint64_t;

Packed pack(const int* x, int n) {
    Packed p = 0;
    for (int i = 0; i < n; ++i) p = (p << 4) | static_cast<Packed>(x[i]);
    return p;
}

void unpack(Packed p, int n, int* x) {
    for (int i = n - 1; i >= 0; --i, p >>= 4) x[i] = static_cast<int>(p & 15);
}

void toggle(std::vector<int>& v, int e) {
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it != v.end() && *it == e) v.erase(it);
    else v.insert(it, e);
}

void erase_sorted(std::vector<int>& v, int e) {
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it != v.end() && *it == e) v.erase(it);
}

// Homology ranks of a block complex given by out-edges (dropping Maslov by one).
std::map<int, std::int64_t> block_homology(std::vector<std::vector<int>> out, const std::vector<int>& maslov) {
    const int count = static_cast<int>(out.size());
    std::vector<std::vector<int>> in(count);
    for (int x = 0; x < count; ++x)
        for (int y : out[x]) in[y].push_back(x);
    for (auto& v : in) std::sort(v.begin(), v.end());
    std::vector<char> alive(count, 1);

    auto cancel = [&](int x, int y) {
        std::vector<int> dx = out[x];
        erase_sorted(dx, y);
        std::vector<int> preds = in[y];
        erase_sorted(preds, x);
        for (int z : preds) {
            for (int w : dx) {
                toggle(out[z], w);
                toggle(in[w], z);
            }
            erase_sorted(out[z], y);
        }
        for (int u : in[x]) erase_sorted(out[u], x);
        for (int w : out[x]) erase_sorted(in[w], x);
        for (int w : out[y]) erase_sorted(in[w], y);
        for (int v : {x, y}) {
            out[v].clear();
            in[v].clear();
            alive[v] = 0;
        }
    };

    std::int64_t threshold = 0;
    constexpr std::int64_t kCap = std::int64_t{1} << 20;
    for (;;) {
        bool progressed = false, remaining = false;
        for (int x = 0; x < count; ++x) {
            while (alive[x] && !out[x].empty()) {
                int best = out[x].front();
                for (int y : out[x])
                    if (in[y].size() < in[best].size()) best = y;
                const std::int64_t cost = static_cast<std::int64_t>(in[best].size() - 1) *
                                          static_cast<std::int64_t>(out[x].size() - 1);
                if (cost > threshold) {
                    remaining = true;
                    break;
                }
                cancel(x, best);
                progressed = true;
            }
        }
        if (!remaining) break;
        if (!progressed) {
            if (threshold >= kCap) break;
            threshold = std::max<std::int64_t>(4, threshold * 4);
        }
    }

    std::map<int, std::vector<int>> by_m;
    for (int x = 0; x < count; ++x)
        if (alive[x]) by_m[maslov[x]].push_back(x);
    std::map<int, std::int64_t> rank_from;  // rank of the differential out of level m
    for (const auto& [m, sources] : by_m) {
        auto it = by_m.find(m - 1);
        if (it == by_m.end()) continue;
        const auto& targets = it->second;
        bool any = false;
        for (int x : sources) any = any || !out[x].empty();
        if (!any) continue;
        if (static_cast<double>(sources.size()) * static_cast<double>(targets.size()) > 8.0 * (1ull << 33))
            fail_computation("budget exceeded: dense residual block too large");
        gf2::BitMatrix mat(sources.size(), targets.size());
        for (std::size_t r = 0; r < sources.size(); ++r)
            for (int y : out[sources[r]]) {
                const auto pos = std::lower_bound(targets.begin(), targets.end(), y) - targets.begin();
                mat.flip(r, static_cast<std::size_t>(pos));
            }
        rank_from[m] = static_cast<std::int64_t>(gf2::rank(std::move(mat)));
    }
    std::map<int, std::int64_t> ranks;
    for (const auto& [m, gens] : by_m) {
        const std::int64_t h = static_cast<std::int64_t>(gens.size()) - rank_from[m] -
                               (rank_from.count(m + 1) ? rank_from[m + 1] : 0);
        if (h > 0) ranks[m] = h;
    }
    return ranks;
}

}  // namespace

std::int64_t max_block_from_env() {
    if (const char* env = std::getenv("GRIDFLOER_MAX_BLOCK")) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        fail_validation("GRIDFLOER_MAX_BLOCK must be a positive integer");
    }
    return 5'000'000;
}

RankTable homology_ranks(const GridDiagram& g, const EngineOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    auto check_time = [&] {
        if (options.time_budget_seconds <= 0) return;
        const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - started;
        if (spent.count() > options.time_budget_seconds)
            fail_computation("budget exceeded: time budget of " + std::to_string(options.time_budget_seconds) +
                             " s");
    };
    const StateGrader grader(g);
    const int n = g.n;
    const std::int64_t max_block = options.max_block > 0 ? options.max_block : max_block_from_env();
    const std::array<int, 2> lo{grader.suffix_min(0, 0), grader.suffix_min(1, 0)};
    const std::array<int, 2> hi{grader.suffix_max(0, 0), grader.suffix_max(1, 0)};
    const int width0 = hi[0] - lo[0] + 1, width1 = hi[1] - lo[1] + 1;
    auto key_of = [&](int a0, int a1) { return (a0 - lo[0]) * width1 + (a1 - lo[1]); };

    // Pass 1: block sizes.
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(width0) * width1, 0);
    {
        std::function<void(int, std::uint32_t, int, int)> rec = [&](int col, std::uint32_t used, int a0, int a1) {
            if (col == n) {
                ++sizes[key_of(a0, a1)];
                return;
            }
            for (int r = 0; r < n; ++r)
                if (!(used >> r & 1))
                    rec(col + 1, used | (1u << r), a0 + grader.alexander_step(0, col, r),
                        a1 + grader.alexander_step(1, col, r));
        };
        rec(0, 0, 0, 0);
    }
    for (int a0 = lo[0]; a0 <= hi[0]; ++a0)
        for (int a1 = lo[1]; a1 <= hi[1]; ++a1)
            if (sizes[key_of(a0, a1)] > max_block) {
                const Point2 p = grader.centered({a0, a1});
                fail_computation("budget exceeded: Alexander block (" + p.x.str() + ", " + p.y.str() + ") has " +
                                 std::to_string(sizes[key_of(a0, a1)]) + " states, limit " +
                                 std::to_string(max_block) + " (GRIDFLOER_MAX_BLOCK)");
            }

    // Pass 2: batches of blocks, enumerated with Alexander-range pruning.
    std::vector<int> keys;
    for (int k = 0; k < static_cast<int>(sizes.size()); ++k)
        if (sizes[k] > 0) keys.push_back(k);
    const std::int64_t batch_cap = std::max<std::int64_t>(max_block, 1 << 24);

    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    const int base_maslov = grader.maslov(base);
    const auto free = marking_free_table(g);

    RankTable table;
    table.n = n;
    for (int c = 0; c < n; ++c) ++table.markings[static_cast<int>(g.labels[c])];

    std::size_t next = 0;
    std::vector<int> slot(sizes.size(), -1);
    while (next < keys.size()) {
        std::vector<int> batch;
        std::int64_t total = 0;
        while (next < keys.size() && (batch.empty() || total + sizes[keys[next]] <= batch_cap)) {
            total += sizes[keys[next]];
            batch.push_back(keys[next++]);
        }
        int box_lo0 = INT32_MAX, box_hi0 = INT32_MIN, box_lo1 = INT32_MAX, box_hi1 = INT32_MIN;
        std::vector<std::vector<Packed>> states(batch.size());
        std::vector<std::vector<int>> maslov(batch.size());
        for (std::size_t b = 0; b < batch.size(); ++b) {
            slot[batch[b]] = static_cast<int>(b);
            const int a0 = batch[b] / width1 + lo[0], a1 = batch[b] % width1 + lo[1];
            box_lo0 = std::min(box_lo0, a0);
            box_hi0 = std::max(box_hi0, a0);
            box_lo1 = std::min(box_lo1, a1);
            box_hi1 = std::max(box_hi1, a1);
            states[b].reserve(static_cast<std::size_t>(sizes[batch[b]]));
            maslov[b].reserve(static_cast<std::size_t>(sizes[batch[b]]));
        }
        int x[kMaxGrid];
        std::function<void(int, std::uint32_t, int, int, int)> rec = [&](int col, std::uint32_t used, int a0, int a1,
                                                                          int m) {
            if (a0 + grader.suffix_max(0, used) < box_lo0 || a0 + grader.suffix_min(0, used) > box_hi0 ||
                a1 + grader.suffix_max(1, used) < box_lo1 || a1 + grader.suffix_min(1, used) > box_hi1)
                return;
            if (col == n) {
                const int s = slot[key_of(a0, a1)];
                if (s < 0) return;
                states[s].push_back(pack(x, n));
                maslov[s].push_back(m - base_maslov);
                return;
            }
            for (int r = 0; r < n; ++r) {
                if (used >> r & 1) continue;
                x[col] = r;
                rec(col + 1, used | (1u << r), a0 + grader.alexander_step(0, col, r),
                    a1 + grader.alexander_step(1, col, r), m + grader.maslov_step(col, r, used));
            }
        };
        rec(0, 0, 0, 0, 0);

        for (std::size_t b = 0; b < batch.size(); ++b) {
            const auto& st = states[b];
            const int count = static_cast<int>(st.size());
            std::vector<std::vector<int>> out(count);
            int y[kMaxGrid];
            for (int s = 0; s < count; ++s) {
                unpack(st[s], n, y);
                for_each_rectangle(n, y, free, [&](int i, int j) {
                    std::swap(y[i], y[j]);
                    const Packed target = pack(y, n);
                    std::swap(y[i], y[j]);
                    const auto it = std::lower_bound(st.begin(), st.end(), target);
                    if (it == st.end() || *it != target) fail_computation("differential left its Alexander block");
                    const int t = static_cast<int>(it - st.begin());
                    if (maslov[b][t] != maslov[b][s] - 1) fail_computation("differential does not lower Maslov by one");
                    out[s].push_back(t);
                });
                std::sort(out[s].begin(), out[s].end());
            }
            RankBlock block;
            const int a0 = batch[b] / width1 + lo[0], a1 = batch[b] % width1 + lo[1];
            block.alexander = grader.centered({a0, a1});
            block.generators = count;
            block.ranks = block_homology(std::move(out), maslov[b]);
            table.blocks.push_back(std::move(block));
            slot[batch[b]] = -1;
            check_time();
        }
    }
    std::sort(table.blocks.begin(), table.blocks.end(),
              [](const RankBlock& a, const RankBlock& b) { return a.alexander < b.alexander; });
    return table;
}

// ---------------------------------------------------------------------------
// Hulls and Euler characteristic

Polytope2 tilde_support_hull(const RankTable& t) {
    std::vector<Point2> pts;
    for (const auto& b : t.blocks)
        if (!b.ranks.empty()) pts.push_back(b.alexander);
    if (pts.empty()) fail_computation("rank table has no homology");
    return convex_hull(pts);
}

Polytope2 hat_support_hull(const RankTable& t) {
    const Polytope2 tilde = tilde_support_hull(t);
    const Point2 corner{Half(-(t.markings[0] > 0 ? t.markings[0] - 1 : 0)),
                        Half(-(t.markings[1] > 0 ? t.markings[1] - 1 : 0))};
    const Polytope2 factors = convex_hull({Point2{}, Point2{corner.x, Half(0)}, Point2{Half(0), corner.y}, corner});
    Polytope2 hat;
    try {
        hat = minkowski_diff(tilde, factors);
    } catch (const Error&) {
        fail_computation("tilde support does not factor");
    }
    const Point2 mid{Half::from_twice((hat.min_x() + hat.max_x()).twice() / 2),
                     Half::from_twice((hat.min_y() + hat.max_y()).twice() / 2)};
    if ((hat.min_x() + hat.max_x()).twice() % 2 != 0 || (hat.min_y() + hat.max_y()).twice() % 2 != 0)
        fail_computation("asymmetric support");
    const Polytope2 centered = hat.translated(Point2{Half(0), Half(0)} - mid);
    if (!is_centrally_symmetric(centered)) fail_computation("asymmetric support");
    return centered;
}

Polytope2 thurston_polytope(const Polytope2& hat, const std::array<int, 2>& markings) {
    const bool u = markings[0] > 0, k = markings[1] > 0;
    std::vector<Point2> corners;
    for (int a : {-1, 1})
        for (int b : {-1, 1}) corners.push_back({Half(u ? a : 0), Half(k ? b : 0)});
    return minkowski_diff(hat.scaled(2), convex_hull(corners));
}

LaurentPoly graded_euler(const RankTable& t) {
    if (t.blocks.empty()) return {};
    std::int64_t min0 = INT64_MAX, min1 = INT64_MAX;
    for (const auto& b : t.blocks) {
        min0 = std::min(min0, b.alexander.x.twice());
        min1 = std::min(min1, b.alexander.y.twice());
    }
    LaurentPoly out;
    for (const auto& b : t.blocks)
        for (const auto& [m, r] : b.ranks) {
            const int e0 = static_cast<int>((b.alexander.x.twice() - min0) / 2);
            const int e1 = static_cast<int>((b.alexander.y.twice() - min1) / 2);
            out.add_term(e0, e1, (m % 2 == 0 ? 1 : -1) * r);
        }
    return out;
}

nlohmann::json to_json(const RankTable& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : t.blocks) {
        nlohmann::json ranks = nlohmann::json::object();
        for (const auto& [m, r] : b.ranks) ranks[std::to_string(m)] = r;
        blocks.push_back({{"alexander", point_to_json(b.alexander)}, {"ranks", ranks}, {"generators", b.generators}});
    }
    return {{"n", t.n}, {"markings", {{"U", t.markings[0]}, {"K", t.markings[1]}}}, {"blocks", blocks}};
}

}  // namespace tpoly
