#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "tpoly/error.hpp"
#include "tpoly/link_encode.hpp"

namespace tpoly {

namespace {

// A connected piece of the diagram turned into a graph: crossings, plus two
// subdivision vertices on every arc so that any arc can carry the st edge.
struct PieceGraph {
    int num_crossings = 0;
    std::vector<int> arc_ids;                  // local arc -> PD arc label
    std::vector<int> arc_component;            // local arc -> PD component index
    std::vector<std::array<int, 4>> rotation;  // crossing -> edge per slot, counterclockwise
    std::vector<int> pd_crossing;              // local crossing -> PD crossing index
    std::vector<std::pair<int, int>> edges;    // edge -> (tail, head) along the PD orientation
    std::vector<std::vector<int>> incident;    // vertex -> edges

    int vertex_count() const { return num_crossings + 2 * static_cast<int>(arc_ids.size()); }
    int first_sub(int a) const { return num_crossings + 2 * a; }
    int other_end(int e, int v) const { return edges[e].first == v ? edges[e].second : edges[e].first; }
};

bool slot_is_outgoing(int slot, int sign) {
    if (slot == 0) return false;
    if (slot == 2) return true;
    return sign > 0 ? slot == 1 : slot == 3;
}

PieceGraph build_piece(const PDCode& pd, const std::vector<int>& crossings, const std::vector<int>& comp_of_arc) {
    PieceGraph g;
    g.num_crossings = static_cast<int>(crossings.size());
    g.pd_crossing = crossings;
    std::map<int, int> local;
    for (int x : crossings)
        for (int a : pd.crossings[x].arcs)
            if (!local.count(a)) {
                local[a] = static_cast<int>(g.arc_ids.size());
                g.arc_ids.push_back(a);
                g.arc_component.push_back(comp_of_arc[a]);
            }
    const int m = static_cast<int>(g.arc_ids.size());
    std::vector<int> tail(m, -1), head(m, -1);
    g.rotation.resize(g.num_crossings);
    for (int i = 0; i < g.num_crossings; ++i) {
        const auto& x = pd.crossings[crossings[i]];
        for (int s = 0; s < 4; ++s) {
            const int a = local[x.arcs[s]];
            if (slot_is_outgoing(s, x.sign)) {
                tail[a] = i;
                g.rotation[i][s] = 3 * a;
            } else {
                head[a] = i;
                g.rotation[i][s] = 3 * a + 2;
            }
        }
    }
    g.edges.resize(3 * m);
    g.incident.assign(g.vertex_count(), {});
    for (int a = 0; a < m; ++a) {
        if (tail[a] < 0 || head[a] < 0) fail_validation("arc " + std::to_string(g.arc_ids[a]) + " lacks an end");
        const int A = g.first_sub(a), B = A + 1;
        g.edges[3 * a] = {tail[a], A};
        g.edges[3 * a + 1] = {A, B};
        g.edges[3 * a + 2] = {B, head[a]};
        g.incident[A] = {3 * a, 3 * a + 1};
        g.incident[B] = {3 * a + 1, 3 * a + 2};
    }
    for (int i = 0; i < g.num_crossings; ++i)
        for (int s = 0; s < 4; ++s) g.incident[i].push_back(g.rotation[i][s]);
    return g;
}

// Tarjan's st-numbering; empty if the graph is not biconnected.
std::vector<int> st_numbering(const PieceGraph& g, int s, int t, int st_edge) {
    const int n = g.vertex_count();
    std::vector<int> pre(n, -1), parent(n, -1), low(n, -1), order;
    int counter = 0;
    std::function<void(int, int)> dfs = [&](int v, int via) {
        pre[v] = counter++;
        order.push_back(v);
        low[v] = v;
        std::vector<int> edges = g.incident[v];
        if (v == s) {
            std::stable_partition(edges.begin(), edges.end(), [&](int e) { return e == st_edge; });
        }
        for (int e : edges) {
            if (e == via) continue;
            const int w = g.other_end(e, v);
            if (pre[w] < 0) {
                parent[w] = v;
                dfs(w, e);
                if (pre[low[w]] < pre[low[v]]) low[v] = low[w];
            } else if (pre[w] < pre[low[v]]) {
                low[v] = w;
            }
        }
    };
    dfs(s, -1);
    if (counter != n) return {};
    std::vector<int> next(n, -1), prev(n, -1);
    std::vector<char> minus(n, 0);
    next[s] = t;
    prev[t] = s;
    minus[s] = 1;
    for (int v : order) {
        if (v == s || v == t) continue;
        const int p = parent[v];
        if (minus[low[v]]) {
            const int before = prev[p];
            if (before >= 0) next[before] = v;
            prev[v] = before;
            next[v] = p;
            prev[p] = v;
            minus[p] = 0;
        } else {
            const int after = next[p];
            if (after >= 0) prev[after] = v;
            next[v] = after;
            prev[v] = p;
            next[p] = v;
            minus[p] = 1;
        }
    }
    int head = s;
    while (prev[head] >= 0) head = prev[head];
    std::vector<int> number(n, -1);
    int k = 0;
    for (int v = head; v >= 0; v = next[v]) number[v] = k++;
    if (k != n || number[s] != 0 || number[t] != n - 1) return {};
    for (int v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        bool lower = false, higher = false;
        for (int e : g.incident[v]) {
            const int w = g.other_end(e, v);
            (number[w] < number[v] ? lower : higher) = true;
        }
        if (!lower || !higher) return {};
    }
    return number;
}

struct Sweep {
    MorseWord word;
    std::vector<int> cup_component;    // PD component index per cup, in order
    std::vector<int> cross_crossing;   // local crossing per Cross event, in order
};

std::optional<Sweep> sweep(const PieceGraph& g, const std::vector<int>& number, int s, int st_edge, bool st_left) {
    const int n = g.vertex_count();
    std::vector<int> by_number(n);
    for (int v = 0; v < n; ++v) by_number[number[v]] = v;
    auto component_of_edge = [&](int e) { return g.arc_component[e / 3]; };
    auto is_in = [&](int e, int v) { return number[g.other_end(e, v)] < number[v]; };

    Sweep out;
    std::vector<int> frontier;
    {
        const int other = g.incident[s][0] == st_edge ? g.incident[s][1] : g.incident[s][0];
        frontier = st_left ? std::vector<int>{st_edge, other} : std::vector<int>{other, st_edge};
        out.word.push_back(cup(0));
        out.cup_component.push_back(component_of_edge(st_edge));
    }
    for (int k = 1; k < n; ++k) {
        const int v = by_number[k];
        if (v >= g.num_crossings) {
            const auto& inc = g.incident[v];
            const bool in0 = is_in(inc[0], v), in1 = is_in(inc[1], v);
            if (in0 && in1) {
                if (k != n - 1 || frontier.size() != 2) return std::nullopt;
                out.word.push_back(cap(0));
                frontier.clear();
                continue;
            }
            if (!in0 && !in1) return std::nullopt;
            const int ein = in0 ? inc[0] : inc[1], eout = in0 ? inc[1] : inc[0];
            auto it = std::find(frontier.begin(), frontier.end(), ein);
            if (it == frontier.end()) return std::nullopt;
            *it = eout;
            continue;
        }
        const auto& rot = g.rotation[v];
        std::array<bool, 4> in{};
        int count = 0;
        for (int sl = 0; sl < 4; ++sl) count += (in[sl] = is_in(rot[sl], v));
        if (count == 0 || count == 4) return std::nullopt;
        int start = 0;
        while (!(in[start] && !in[(start + 3) % 4])) ++start;
        std::vector<int> in_slots, out_slots;
        for (int j = 0; j < 4; ++j) (j < count ? in_slots : out_slots).push_back((start + j) % 4);
        std::reverse(out_slots.begin(), out_slots.end());
        auto it = std::find(frontier.begin(), frontier.end(), rot[in_slots[0]]);
        if (it == frontier.end()) return std::nullopt;
        const int p = static_cast<int>(it - frontier.begin());
        if (p + count > static_cast<int>(frontier.size())) return std::nullopt;
        for (int j = 0; j < count; ++j)
            if (frontier[p + j] != rot[in_slots[j]]) return std::nullopt;
        std::vector<int> outs;
        for (int sl : out_slots) outs.push_back(rot[sl]);
        if (count == 2) {
            out.word.push_back(cross(p, in_slots[0] % 2 == 1));
        } else if (count == 1) {
            out.word.push_back(cup(p));
            out.cup_component.push_back(component_of_edge(outs[0]));
            out.word.push_back(cross(p + 1, in_slots[0] % 2 == 0));
        } else {
            out.word.push_back(cross(p + 1, in_slots[1] % 2 == 1));
            out.word.push_back(cap(p));
        }
        out.cross_crossing.push_back(v);
        frontier.erase(frontier.begin() + p, frontier.begin() + p + count);
        frontier.insert(frontier.begin() + p, outs.begin(), outs.end());
    }
    if (!frontier.empty()) return std::nullopt;
    return out;
}

struct Realized {
    GridDiagram grid;
    std::vector<std::pair<int, int>> crossing_cells;  // (column, row) per Cross event
    std::vector<int> column_component;
};

// Rectilinear realisation: one row per event; jogs put the under-strand on a new column.
Realized realize(const Sweep& sw) {
    struct Column {
        int start = -1, end = -1, component = 0;
    };
    std::vector<Column> cols;
    std::vector<int> order, frontier;
    std::vector<std::pair<int, int>> row_cols;
    std::vector<std::pair<int, int>> cells_by_id;
    std::size_t cup_index = 0;
    auto insert_after = [&](int anchor, int id) {
        auto it = anchor < 0 ? order.begin() : std::find(order.begin(), order.end(), anchor) + 1;
        order.insert(it, id);
    };
    auto insert_before = [&](int anchor, int id) { order.insert(std::find(order.begin(), order.end(), anchor), id); };
    auto new_column = [&](int row, int comp) {
        cols.push_back({row, -1, comp});
        return static_cast<int>(cols.size()) - 1;
    };
    for (int r = 0; r < static_cast<int>(sw.word.size()); ++r) {
        const auto& e = sw.word[r];
        const int p = e.pos;
        switch (e.kind) {
            case MorseEvent::Kind::Cup: {
                const int comp = sw.cup_component[cup_index++];
                const int a = new_column(r, comp), b = new_column(r, comp);
                insert_after(p > 0 ? frontier[p - 1] : -1, a);
                insert_after(a, b);
                frontier.insert(frontier.begin() + p, {a, b});
                row_cols.push_back({a, b});
                break;
            }
            case MorseEvent::Kind::Cap: {
                const int a = frontier[p], b = frontier[p + 1];
                cols[a].end = cols[b].end = r;
                frontier.erase(frontier.begin() + p, frontier.begin() + p + 2);
                row_cols.push_back({a, b});
                break;
            }
            case MorseEvent::Kind::Cross: {
                const int a = frontier[p], b = frontier[p + 1];
                if (e.sw_ne_over) {
                    cols[b].end = r;
                    const int b2 = new_column(r, cols[b].component);
                    insert_before(a, b2);
                    frontier[p] = b2;
                    frontier[p + 1] = a;
                    row_cols.push_back({b, b2});
                    cells_by_id.push_back({a, r});
                } else {
                    cols[a].end = r;
                    const int a2 = new_column(r, cols[a].component);
                    insert_after(b, a2);
                    frontier[p] = b;
                    frontier[p + 1] = a2;
                    row_cols.push_back({a, a2});
                    cells_by_id.push_back({b, r});
                }
                break;
            }
        }
    }
    const int n = static_cast<int>(cols.size());
    if (static_cast<int>(row_cols.size()) != n) fail_computation("grid realisation is not square");
    std::vector<int> index(n);
    for (int i = 0; i < n; ++i) index[order[i]] = i;
    Realized out;
    out.grid.n = n;
    out.grid.O.assign(n, -1);
    out.grid.X.assign(n, -1);
    out.grid.labels.assign(n, Label::K);
    out.column_component.assign(n, 0);
    for (int id = 0; id < n; ++id) out.column_component[index[id]] = cols[id].component;
    for (int id0 = 0; id0 < n; ++id0) {
        if (out.grid.O[index[id0]] >= 0) continue;
        int id = id0, row = cols[id0].start;
        while (out.grid.O[index[id]] < 0) {
            const int other = cols[id].start == row ? cols[id].end : cols[id].start;
            out.grid.O[index[id]] = row;
            out.grid.X[index[id]] = other;
            id = row_cols[other].first == id ? row_cols[other].second : row_cols[other].first;
            row = other;
        }
    }
    for (const auto& [id, r] : cells_by_id) out.crossing_cells.push_back({index[id], r});
    return out;
}

void flip_component(GridDiagram& g, const std::vector<int>& column_component, int comp) {
    for (int c = 0; c < g.n; ++c)
        if (column_component[c] == comp) std::swap(g.O[c], g.X[c]);
}

// Orients the realised grid so that every crossing sign agrees with the PD code.
void orient(Realized& r, const Sweep& sw, const PieceGraph& pg, const PDCode& pd) {
    auto signs = [&]() {
        std::map<std::pair<int, int>, int> cell_sign;
        for (const auto& x : grid_crossings(r.grid)) cell_sign[{x.column, x.row}] = x.sign;
        std::vector<int> out;
        for (const auto& cell : r.crossing_cells) {
            auto it = cell_sign.find(cell);
            if (it == cell_sign.end()) fail_computation("grid realisation lost a crossing");
            out.push_back(it->second);
        }
        return out;
    };
    auto mixed = [&](int local) {
        const auto& x = pd.crossings[pg.pd_crossing[local]];
        return pd.component_of_arc(x.arcs[0]) != pd.component_of_arc(x.arcs[1]);
    };
    auto got = signs();
    std::optional<bool> agree;
    for (std::size_t i = 0; i < got.size(); ++i) {
        const int local = sw.cross_crossing[i];
        if (!mixed(local)) continue;
        const bool same = got[i] == pd.crossings[pg.pd_crossing[local]].sign;
        if (agree && *agree != same) fail_computation("inconsistent linking signs in grid realisation");
        agree = same;
    }
    if (agree && !*agree) {
        flip_component(r.grid, r.column_component, r.column_component[0]);
        got = signs();
    }
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i] != pd.crossings[pg.pd_crossing[sw.cross_crossing[i]]].sign)
            fail_computation("grid realisation disagrees with a crossing sign");
}

struct PieceResult {
    GridDiagram raw;
    GridDiagram reduced;
    std::vector<int> column_component;  // for raw
};

GridDiagram with_labels(GridDiagram g, const std::vector<int>& column_component, const PDCode& pd) {
    for (int c = 0; c < g.n; ++c) g.labels[c] = pd.components[column_component[c]].label;
    return g;
}

PieceResult realize_piece(const PDCode& pd, const std::vector<int>& crossings, const std::vector<int>& comp_of_arc) {
    const PieceGraph pg = build_piece(pd, crossings, comp_of_arc);
    std::optional<PieceResult> best;
    bool any_numbering = false;
    const int m = static_cast<int>(pg.arc_ids.size());
    for (int a = 0; a < m; ++a) {
        for (int flip = 0; flip < 2; ++flip) {
            const int s = pg.first_sub(a) + flip, t = pg.first_sub(a) + 1 - flip, st_edge = 3 * a + 1;
            const auto number = st_numbering(pg, s, t, st_edge);
            if (number.empty()) continue;
            any_numbering = true;
            for (const bool st_left : {false, true}) {
                auto sw = sweep(pg, number, s, st_edge, st_left);
                if (!sw) continue;
                Realized r = realize(*sw);
                orient(r, *sw, pg, pd);
                GridDiagram raw = with_labels(r.grid, r.column_component, pd);
                GridDiagram reduced = destabilize_greedy(raw);
                if (!best || reduced.n < best->reduced.n) best = PieceResult{raw, reduced, r.column_component};
            }
        }
    }
    if (!any_numbering) fail_validation("diagrams with nugatory crossings are not supported");
    if (!best) fail_computation("no planar sweep found for the diagram");
    return *best;
}

GridDiagram direct_sum(const GridDiagram& a, const GridDiagram& b) {
    if (a.n == 0) return b;
    GridDiagram out = a;
    out.n = a.n + b.n;
    for (int c = 0; c < b.n; ++c) {
        out.O.push_back(b.O[c] + a.n);
        out.X.push_back(b.X[c] + a.n);
        out.labels.push_back(b.labels[c]);
    }
    return out;
}

GridDiagram build(const PDCode& pd, bool reduced) {
    pd.validate();
    const int arcs = pd.num_arcs();
    std::vector<int> comp_of_arc(arcs + 1, 0);
    for (std::size_t c = 0; c < pd.components.size(); ++c)
        for (int a : pd.components[c].arcs) comp_of_arc[a] = static_cast<int>(c);

    const int nx = static_cast<int>(pd.crossings.size());
    std::vector<int> parent(nx);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::map<int, int> first_at;
    for (int i = 0; i < nx; ++i)
        for (int a : pd.crossings[i].arcs) {
            auto [it, fresh] = first_at.emplace(a, i);
            if (!fresh) parent[find(i)] = find(it->second);
        }
    std::map<int, std::vector<int>> pieces;
    for (int i = 0; i < nx; ++i) pieces[find(i)].push_back(i);

    GridDiagram out;
    for (const auto& [root, crossings] : pieces) {
        const auto piece = realize_piece(pd, crossings, comp_of_arc);
        out = direct_sum(out, reduced ? piece.reduced : piece.raw);
    }
    for (std::size_t c = 0; c < pd.components.size(); ++c) {
        const auto& comp = pd.components[c];
        if (comp.arcs.size() == 1 && !first_at.count(comp.arcs[0])) {
            GridDiagram loop{2, {0, 1}, {1, 0}, {comp.label, comp.label}};
            out = direct_sum(out, loop);
        }
    }
    out.validate();
    if (out.num_components() != static_cast<int>(pd.components.size()))
        fail_computation("grid realisation changed the number of components");
    return out;
}

}  // namespace

GridDiagram pd_to_grid_unreduced(const PDCode& pd) { return build(pd, false); }

GridDiagram pd_to_grid(const PDCode& pd) {
    GridDiagram g = build(pd, true);
    return reduce_grid(g, 4000, 0x5eed);
}

}  // namespace tpoly
