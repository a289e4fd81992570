#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "tpoly/error.hpp"
#include "tpoly/link_encode.hpp"

namespace tpoly {

namespace {

std::vector<int> inverse(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
}

bool is_permutation_of_range(const std::vector<int>& v, int n) {
    std::vector<char> seen(n, 0);
    for (int x : v) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return static_cast<int>(v.size()) == n;
}

}  // namespace

void GridDiagram::validate() const {
    if (n < 2) fail_validation("grid size must be at least 2");
    if (!is_permutation_of_range(O, n)) fail_validation("O markings are not a permutation");
    if (!is_permutation_of_range(X, n)) fail_validation("X markings are not a permutation");
    if (static_cast<int>(labels.size()) != n) fail_validation("one label per column is required");
    for (int c = 0; c < n; ++c)
        if (O[c] == X[c]) fail_validation("O and X collide in column " + std::to_string(c + 1));
    const auto comps = components();
    if (comps.size() > 2) fail_validation("grid has more than two components");
    std::set<Label> used;
    for (const auto& comp : comps) {
        const Label l = labels[comp.front()];
        for (int c : comp)
            if (labels[c] != l) fail_validation("labels differ along a component");
        if (!used.insert(l).second) fail_validation("two components share a label");
    }
}

std::vector<std::vector<int>> GridDiagram::components() const {
    const auto oinv = inverse(O);
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int c0 = 0; c0 < n; ++c0) {
        if (seen[c0]) continue;
        std::vector<int> comp;
        int c = c0;
        do {
            seen[c] = 1;
            comp.push_back(c);
            c = oinv[X[c]];
        } while (c != c0);
        out.push_back(std::move(comp));
    }
    return out;
}

int GridDiagram::markings_of(Label l) const {
    return static_cast<int>(std::count(labels.begin(), labels.end(), l));
}

GridDiagram parse_grid(const std::string& text) {
    GridDiagram g;
    bool have_n = false, have_o = false, have_x = false, have_l = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto err = [&](const std::string& what) { fail_validation("line " + std::to_string(lineno) + ": " + what); };
    auto ints = [&](const std::string& body) {
        std::vector<int> out;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                out.push_back(v - 1);
            } catch (const std::exception&) {
                err("expected an integer, got \"" + item + "\"");
            }
        }
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) err("expected key=value");
        const std::string key = line.substr(0, eq), body = line.substr(eq + 1);
        if (key == "n") {
            try {
                std::size_t used = 0;
                g.n = std::stoi(body, &used);
                if (used != body.size()) throw std::invalid_argument(body);
            } catch (const std::exception&) {
                err("bad grid size");
            }
            have_n = true;
        } else if (key == "O") {
            g.O = ints(body);
            have_o = true;
        } else if (key == "X") {
            g.X = ints(body);
            have_x = true;
        } else if (key == "labels") {
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item != "U" && item != "K") err("label must be U or K");
                g.labels.push_back(parse_label(item));
            }
            have_l = true;
        } else {
            err("unknown key \"" + key + "\"");
        }
        if (key == "O" || key == "X") {
            const auto& v = key == "O" ? g.O : g.X;
            if (have_n && static_cast<int>(v.size()) != g.n) err(key + " must list " + std::to_string(g.n) + " rows");
        }
    }
    lineno = 0;
    if (!have_n || !have_o || !have_x || !have_l) fail_validation("grid file needs n, O, X and labels lines");
    for (int c = 0; c < g.n && c < static_cast<int>(g.O.size()) && c < static_cast<int>(g.X.size()); ++c)
        if (g.O[c] == g.X[c]) fail_validation("O and X collide in column " + std::to_string(c + 1));
    g.validate();
    return g;
}

std::string serialize_grid(const GridDiagram& g) {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
    };
    os << "n=" << g.n << "\nO=";
    list(g.O);
    os << "\nX=";
    list(g.X);
    os << "\nlabels=";
    for (std::size_t i = 0; i < g.labels.size(); ++i) os << (i ? "," : "") << label_char(g.labels[i]);
    os << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Grid moves

namespace {

bool cyclic_adjacent(int a, int b, int n) {
    const int d = ((a - b) % n + n) % n;
    return d == 1 || d == n - 1;
}

GridDiagram remove_row_and_column(const GridDiagram& g, int col, int row) {
    GridDiagram out;
    out.n = g.n - 1;
    auto shift = [row](int r) { return r > row ? r - 1 : r; };
    for (int c = 0; c < g.n; ++c) {
        if (c == col) continue;
        out.O.push_back(shift(g.O[c]));
        out.X.push_back(shift(g.X[c]));
        out.labels.push_back(g.labels[c]);
    }
    return out;
}

bool destabilize_once(GridDiagram& g) {
    const int n = g.n;
    if (n <= 2) return false;
    const auto oinv = inverse(g.O);
    const auto xinv = inverse(g.X);
    for (int c = 0; c < n; ++c) {
        const int o = g.O[c], x = g.X[c];
        if (!cyclic_adjacent(o, x, n)) continue;
        for (const int r : {o, x}) {
            const int r2 = r == o ? x : o;
            // The marking sharing row r with (c, r) has the type of (c, r2).
            const int c2 = r == o ? xinv[r] : oinv[r];
            if (!cyclic_adjacent(c2, c, n)) continue;
            GridDiagram h = g;
            if (r == o) {
                if (h.O[c2] == r2) continue;
                h.X[c2] = r2;
            } else {
                if (h.X[c2] == r2) continue;
                h.O[c2] = r2;
            }
            g = remove_row_and_column(h, c, r);
            return true;
        }
    }
    return false;
}

struct Move {
    bool rows;
    int index;  // swaps index and index + 1 (cyclically)
};

bool intervals_commute(int a0, int a1, int b0, int b1) {
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const bool disjoint = a1 < b0 || b1 < a0;
    const bool nested = (a0 < b0 && b1 < a1) || (b0 < a0 && a1 < b1);
    return disjoint || nested;
}

std::vector<Move> commutations(const GridDiagram& g) {
    std::vector<Move> out;
    const int n = g.n;
    const auto oinv = inverse(g.O);
    const auto xinv = inverse(g.X);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if (intervals_commute(g.O[i], g.X[i], g.O[j], g.X[j])) out.push_back({false, i});
        if (intervals_commute(oinv[i], xinv[i], oinv[j], xinv[j])) out.push_back({true, i});
    }
    return out;
}

void apply(GridDiagram& g, const Move& m) {
    const int i = m.index, j = (m.index + 1) % g.n;
    if (!m.rows) {
        std::swap(g.O[i], g.O[j]);
        std::swap(g.X[i], g.X[j]);
        std::swap(g.labels[i], g.labels[j]);
        return;
    }
    for (int c = 0; c < g.n; ++c) {
        for (int* v : {&g.O[c], &g.X[c]}) {
            if (*v == i) *v = j;
            else if (*v == j) *v = i;
        }
    }
}

}  // namespace

GridDiagram destabilize_greedy(GridDiagram g) {
    while (destabilize_once(g)) {
    }
    return g;
}

GridDiagram reduce_grid(GridDiagram g, int rounds, std::uint64_t seed) {
    GridDiagram best = destabilize_greedy(std::move(g));
    GridDiagram cur = best;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < rounds && cur.n > 2; ++k) {
        const auto moves = commutations(cur);
        if (moves.empty()) break;
        apply(cur, moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
        cur = destabilize_greedy(std::move(cur));
        if (cur.n < best.n) best = cur;
    }
    return best;
}

std::vector<GridCrossing> grid_crossings(const GridDiagram& g) {
    const auto oinv = inverse(g.O);
    const auto xinv = inverse(g.X);
    std::vector<GridCrossing> out;
    for (int c = 0; c < g.n; ++c) {
        const int lo = std::min(g.O[c], g.X[c]), hi = std::max(g.O[c], g.X[c]);
        const int up = g.X[c] > g.O[c] ? 1 : -1;
        for (int r = lo + 1; r < hi; ++r) {
            const int left = std::min(oinv[r], xinv[r]), right = std::max(oinv[r], xinv[r]);
            if (!(left < c && c < right)) continue;
            const int rightward = oinv[r] > xinv[r] ? 1 : -1;
            out.push_back({c, r, -up * rightward, g.labels[c], g.labels[oinv[r]]});
        }
    }
    return out;
}

int grid_linking_number(const GridDiagram& g) {
    int total = 0;
    for (const auto& x : grid_crossings(g))
        if (x.over != x.under) total += x.sign;
    return total / 2;
}

}  // namespace tpoly
