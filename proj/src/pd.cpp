#include "tpoly/link_encode.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tpoly/error.hpp"

namespace tpoly {

Label parse_label(const std::string& s) {
    if (s == "U") return Label::U;
    if (s == "K") return Label::K;
    fail_validation("unknown component label \"" + s + "\"");
}

// ---------------------------------------------------------------------------
// Pretzel tuples

namespace {

bool is_odd(int a) { return a % 2 != 0; }

bool in_family(const std::array<int, 4>& a) {
    for (int i = 0; i < 4; ++i) {
        if (a[i] == 0) return false;
        if ((a[i] > 0) == (a[(i + 1) % 4] > 0)) return false;
    }
    int odd = 0;
    for (int v : a) odd += is_odd(v);
    if (odd != 2) return false;
    for (int i = 0; i < 4; ++i)
        if (is_odd(a[i]) && is_odd(a[(i + 1) % 4])) return true;
    return false;
}

}  // namespace

Canonicalized canonicalize(const SignedPretzel& t) {
    const auto& a = t.coefficients;
    if (!in_family(a)) fail_validation("unsupported pretzel pattern");

    // Rotate until the odd pair sits in positions 4 and 1.
    std::array<int, 4> b = a;
    for (int k = 0; k < 4 && !(is_odd(b[3]) && is_odd(b[0])); ++k) std::rotate(b.begin(), b.begin() + 1, b.end());
    bool mirrored = false;
    if (b[0] > 0) {
        for (int& v : b) v = -v;
        mirrored = true;
    }
    PretzelParams direct{b[1] / 2, (-b[0] - 1) / 2, -b[2] / 2, (b[3] - 1) / 2};
    PretzelParams exchanged{direct.q2, direct.r2, direct.q1, direct.r1};
    auto key = [](const PretzelParams& p) { return std::array<int, 4>{p.q1, p.r1, p.q2, p.r2}; };
    if (key(exchanged) < key(direct)) {
        // the exchanged parameters describe the mirror image
        return {exchanged, !mirrored};
    }
    return {direct, mirrored};
}

SignedPretzel to_signed(const PretzelParams& p) {
    return {{-2 * p.r1 - 1, 2 * p.q1, -2 * p.q2, 2 * p.r2 + 1}};
}

// ---------------------------------------------------------------------------
// PD codes

int PDCode::num_arcs() const {
    int n = 0;
    for (const auto& c : components) n += static_cast<int>(c.arcs.size());
    return n;
}

int PDCode::component_of_arc(int arc) const {
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& arcs = components[i].arcs;
        if (std::find(arcs.begin(), arcs.end(), arc) != arcs.end()) return static_cast<int>(i);
    }
    fail_validation("arc " + std::to_string(arc) + " belongs to no component");
}

int PDCode::next_arc(int arc) const {
    const auto& arcs = components.at(component_of_arc(arc)).arcs;
    auto it = std::find(arcs.begin(), arcs.end(), arc);
    ++it;
    return it == arcs.end() ? arcs.front() : *it;
}

void PDCode::validate() const {
    if (components.empty()) fail_validation("PD code has no components");
    std::set<Label> seen_labels;
    int expected = 1;
    for (const auto& c : components) {
        if (c.arcs.empty()) fail_validation("empty component");
        if (!seen_labels.insert(c.label).second) fail_validation("duplicate component label");
        for (int a : c.arcs) {
            if (a != expected) fail_validation("arc labels must be consecutive along components starting at 1");
            ++expected;
        }
    }
    std::vector<int> uses(expected, 0);
    for (const auto& x : crossings) {
        if (x.sign != 1 && x.sign != -1) fail_validation("crossing sign must be +1 or -1");
        for (int a : x.arcs) {
            if (a < 1 || a >= expected) fail_validation("crossing refers to unknown arc " + std::to_string(a));
            ++uses[a];
        }
    }
    for (const auto& c : components) {
        const bool crossingless = c.arcs.size() == 1 && uses[c.arcs[0]] == 0;
        for (int a : c.arcs)
            if (!crossingless && uses[a] != 2)
                fail_validation("arc " + std::to_string(a) + " appears " + std::to_string(uses[a]) + " times");
    }
    for (const auto& x : crossings) {
        const auto [a, b, c, d] = x.arcs;
        if (next_arc(a) != c) fail_validation("under-strand orientation inconsistent at a crossing");
        if (x.sign > 0 ? next_arc(d) != b : next_arc(b) != d)
            fail_validation("crossing sign inconsistent with over-strand orientation");
    }
}

int PDCode::linking_number() const {
    int total = 0;
    for (const auto& x : crossings)
        if (component_of_arc(x.arcs[0]) != component_of_arc(x.arcs[1])) total += x.sign;
    return total / 2;
}

PDCode reverse_component(const PDCode& pd, int comp) {
    const auto& arcs = pd.components.at(comp).arcs;
    std::map<int, int> relabel;
    const int m = static_cast<int>(arcs.size());
    for (int j = 0; j < m; ++j) relabel[arcs[m - 1 - j]] = arcs[j];
    auto map_arc = [&](int a) {
        auto it = relabel.find(a);
        return it == relabel.end() ? a : it->second;
    };
    PDCode out = pd;
    for (auto& x : out.crossings) {
        const bool under_rev = pd.component_of_arc(x.arcs[0]) == comp;
        const bool over_rev = pd.component_of_arc(x.arcs[1]) == comp;
        std::array<int, 4> a = x.arcs;
        if (under_rev) std::rotate(a.begin(), a.begin() + 2, a.end());
        for (int& v : a) v = map_arc(v);
        x.arcs = a;
        if (under_rev != over_rev) x.sign = -x.sign;
    }
    return out;
}

nlohmann::json to_json(const PDCode& pd) {
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& x : pd.crossings)
        xs.push_back({x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3], x.sign > 0 ? "+" : "-"});
    nlohmann::json comps = nlohmann::json::object();
    for (const auto& c : pd.components) comps[std::string(1, label_char(c.label))] = c.arcs;
    return {{"crossings", xs}, {"components", comps}};
}

PDCode pd_from_json(const nlohmann::json& j) {
    PDCode pd;
    try {
        for (const auto& x : j.at("crossings")) {
            PDCrossing c;
            for (int i = 0; i < 4; ++i) c.arcs[i] = x.at(i).get<int>();
            const auto s = x.at(4).get<std::string>();
            if (s != "+" && s != "-") fail_validation("crossing sign must be \"+\" or \"-\"");
            c.sign = s == "+" ? 1 : -1;
            pd.crossings.push_back(c);
        }
        for (const auto& [name, arcs] : j.at("components").items())
            pd.components.push_back({parse_label(name), arcs.get<std::vector<int>>()});
    } catch (const nlohmann::json::exception& e) {
        fail_validation(std::string("malformed PD JSON: ") + e.what());
    }
    std::sort(pd.components.begin(), pd.components.end(),
              [](const PDComponent& a, const PDComponent& b) { return a.arcs.front() < b.arcs.front(); });
    pd.validate();
    return pd;
}

// ---------------------------------------------------------------------------
// Morse words

MorseEvent cup(int pos) { return {MorseEvent::Kind::Cup, pos, true}; }
MorseEvent cap(int pos) { return {MorseEvent::Kind::Cap, pos, true}; }
MorseEvent cross(int pos, bool sw_ne_over) { return {MorseEvent::Kind::Cross, pos, sw_ne_over}; }

namespace {

// Crossing slots counterclockwise: SW, SE, NE, NW.
constexpr int kSlotX[4] = {-1, 1, 1, -1};
constexpr int kSlotY[4] = {-1, -1, 1, 1};

}  // namespace

PDCode morse_to_pd(const MorseWord& word) {
    struct Node {
        MorseEvent::Kind kind;
        bool sw_ne_over;
    };
    std::vector<Node> nodes;
    std::vector<int> link;  // port -> port, ports are node * 4 + side
    std::vector<int> frontier;
    auto add_node = [&](MorseEvent::Kind k, bool over) {
        nodes.push_back({k, over});
        link.resize(nodes.size() * 4, -1);
        return static_cast<int>(nodes.size()) - 1;
    };
    auto connect = [&](int p, int q) {
        link[p] = q;
        link[q] = p;
    };
    for (const auto& e : word) {
        const int size = static_cast<int>(frontier.size());
        switch (e.kind) {
            case MorseEvent::Kind::Cup: {
                if (e.pos < 0 || e.pos > size) fail_validation("cup position out of range");
                const int c = add_node(e.kind, true);
                frontier.insert(frontier.begin() + e.pos, {c * 4 + 0, c * 4 + 1});
                break;
            }
            case MorseEvent::Kind::Cap: {
                if (e.pos < 0 || e.pos + 1 >= size) fail_validation("cap position out of range");
                const int c = add_node(e.kind, true);
                connect(frontier[e.pos], c * 4 + 0);
                connect(frontier[e.pos + 1], c * 4 + 1);
                frontier.erase(frontier.begin() + e.pos, frontier.begin() + e.pos + 2);
                break;
            }
            case MorseEvent::Kind::Cross: {
                if (e.pos < 0 || e.pos + 1 >= size) fail_validation("crossing position out of range");
                const int x = add_node(e.kind, e.sw_ne_over);
                connect(frontier[e.pos], x * 4 + 0);
                connect(frontier[e.pos + 1], x * 4 + 1);
                frontier[e.pos] = x * 4 + 3;
                frontier[e.pos + 1] = x * 4 + 2;
                break;
            }
        }
    }
    if (!frontier.empty()) fail_validation("Morse word leaves open strands");

    auto through = [&](int port) {
        const int node = port / 4, side = port % 4;
        if (nodes[node].kind == MorseEvent::Kind::Cross) return node * 4 + (side + 2) % 4;
        return node * 4 + (1 - side);
    };

    struct Visit {
        int node;
        int in_slot;
    };
    std::vector<std::vector<Visit>> comps;
    std::vector<char> used(link.size(), 0);
    std::vector<int> free_loops;
    for (int x = 0; x < static_cast<int>(nodes.size()); ++x) {
        if (nodes[x].kind != MorseEvent::Kind::Cross) continue;
        for (int entry : {0, 1}) {
            if (used[x * 4 + entry]) continue;
            std::vector<Visit> visits;
            int arrive = x * 4 + entry;
            do {
                used[arrive] = 1;
                const int leave = through(arrive);
                used[leave] = 1;
                visits.push_back({arrive / 4, arrive % 4});
                int q = link[leave];
                while (nodes[q / 4].kind != MorseEvent::Kind::Cross) {
                    used[q] = 1;
                    used[through(q)] = 1;
                    q = link[through(q)];
                }
                arrive = q;
            } while (arrive != x * 4 + entry);
            comps.push_back(std::move(visits));
        }
    }
    for (int c = 0; c < static_cast<int>(nodes.size()); ++c) {
        if (nodes[c].kind == MorseEvent::Kind::Cross || used[c * 4]) continue;
        int p = c * 4;
        do {
            used[p] = 1;
            used[through(p)] = 1;
            p = link[through(p)];
        } while (p != c * 4);
        free_loops.push_back(c);
    }

    PDCode pd;
    std::vector<std::array<int, 4>> slot_arc(nodes.size(), {0, 0, 0, 0});
    std::vector<std::array<int, 4>> slot_in(nodes.size(), {0, 0, 0, 0});  // 1 if the slot is an arrival
    int next_label = 1;
    for (const auto& visits : comps) {
        PDComponent comp;
        const int m = static_cast<int>(visits.size());
        for (int k = 0; k < m; ++k) comp.arcs.push_back(next_label + k);
        for (int k = 0; k < m; ++k) {
            const auto& v = visits[k];
            slot_arc[v.node][v.in_slot] = next_label + (k + m - 1) % m;
            slot_arc[v.node][(v.in_slot + 2) % 4] = next_label + k;
            slot_in[v.node][v.in_slot] = 1;
        }
        next_label += m;
        pd.components.push_back(std::move(comp));
    }
    for (std::size_t i = 0; i < free_loops.size(); ++i) pd.components.push_back({Label::K, {next_label++}});

    for (int x = 0; x < static_cast<int>(nodes.size()); ++x) {
        if (nodes[x].kind != MorseEvent::Kind::Cross) continue;
        const int over0 = nodes[x].sw_ne_over ? 0 : 1;
        const int under0 = 1 - over0;
        const int over_in = slot_in[x][over0] ? over0 : over0 + 2;
        const int under_in = slot_in[x][under0] ? under0 : under0 + 2;
        const int ox = kSlotX[(over_in + 2) % 4] - kSlotX[over_in], oy = kSlotY[(over_in + 2) % 4] - kSlotY[over_in];
        const int ux = kSlotX[(under_in + 2) % 4] - kSlotX[under_in], uy = kSlotY[(under_in + 2) % 4] - kSlotY[under_in];
        PDCrossing c;
        for (int i = 0; i < 4; ++i) c.arcs[i] = slot_arc[x][(under_in + i) % 4];
        c.sign = ox * uy - oy * ux > 0 ? 1 : -1;
        pd.crossings.push_back(c);
    }
    return pd;
}

MorseWord pretzel_morse(const std::array<int, 4>& twists) {
    MorseWord w{cup(0), cup(1), cup(3), cup(5)};
    for (int col = 0; col < 4; ++col)
        for (int k = 0; k < std::abs(twists[col]); ++k) w.push_back(cross(2 * col, twists[col] > 0));
    for (int p : {5, 3, 1, 0}) w.push_back(cap(p));
    return w;
}

namespace {

// Self-crossings per component.
std::vector<int> self_crossings(const PDCode& pd) {
    std::vector<int> count(pd.components.size(), 0);
    for (const auto& x : pd.crossings) {
        const int a = pd.component_of_arc(x.arcs[0]);
        if (a == pd.component_of_arc(x.arcs[1])) ++count[a];
    }
    return count;
}

// Relabels arcs so that components appear in the given order.
PDCode reorder_components(const PDCode& pd, const std::vector<int>& order) {
    std::map<int, int> relabel;
    PDCode out;
    int next = 1;
    for (int ci : order) {
        PDComponent c = pd.components[ci];
        for (int& a : c.arcs) {
            relabel[a] = next;
            a = next++;
        }
        out.components.push_back(std::move(c));
    }
    out.crossings = pd.crossings;
    for (auto& x : out.crossings)
        for (int& a : x.arcs) a = relabel.at(a);
    return out;
}

}  // namespace

// U is traversed against the direction produced by the sweep. This matches the
// meridian orientation under which the closed-form hull is tight against the
// Alexander polynomial's Newton polytope.
constexpr bool kReverseU = true;

PDCode pretzel_pd(const PretzelParams& p) {
    p.validate();
    const auto s = to_signed(p);
    PDCode pd = morse_to_pd(pretzel_morse(s.coefficients));
    if (pd.components.size() != 2) fail_computation("pretzel diagram does not have two components");
    const auto self = self_crossings(pd);
    const int u = self[0] == 0 ? 0 : 1;
    if (self[u] != 0) fail_computation("no component free of self-crossings");
    pd = reorder_components(pd, {u, 1 - u});
    pd.components[0].label = Label::U;
    pd.components[1].label = Label::K;
    if (kReverseU) pd = reverse_component(pd, 0);
    pd.validate();
    return pd;
}

PDCode braid_closure_pd(int strands, const std::vector<int>& word) {
    if (strands < 1) fail_validation("braid needs at least one strand");
    MorseWord w;
    for (int i = 0; i < strands; ++i) w.push_back(cup(i));
    for (int g : word) {
        const int i = std::abs(g);
        if (g == 0 || i >= strands) fail_validation("braid generator out of range");
        w.push_back(cross(i - 1, g > 0));
    }
    for (int i = strands - 1; i >= 0; --i) w.push_back(cap(i));
    PDCode pd = morse_to_pd(w);
    if (pd.components.size() == 2) {
        pd.components[0].label = Label::U;
        pd.components[1].label = Label::K;
    } else if (pd.components.size() > 2) {
        fail_validation("only knots and two-component links are supported");
    }
    pd.validate();
    return pd;
}

PDCode unknot_pd() {
    PDCode pd;
    pd.components.push_back({Label::K, {1}});
    return pd;
}

PDCode unlink2_pd() {
    PDCode pd;
    pd.components.push_back({Label::U, {1}});
    pd.components.push_back({Label::K, {2}});
    return pd;
}

PDCode hopf_pd() { return braid_closure_pd(2, {1, 1}); }
PDCode trefoil_pd() { return braid_closure_pd(2, {1, 1, 1}); }
PDCode figure_eight_pd() { return braid_closure_pd(3, {1, -2, 1, -2}); }

PDCode torus_connected_sum_pd(int a, int b) {
    std::vector<int> word;
    for (int i = 0; i < 2 * a + 1; ++i) word.push_back(-1);
    for (int i = 0; i < 2 * b + 1; ++i) word.push_back(2);
    return braid_closure_pd(3, word);
}

// ---------------------------------------------------------------------------
// Wirtinger presentation

WirtingerPresentation wirtinger(const PDCode& pd) {
    pd.validate();
    const int arcs = pd.num_arcs();
    std::vector<int> parent(arcs + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& x : pd.crossings) {
        const int b = find(x.arcs[1]), d = find(x.arcs[3]);
        if (b != d) parent[std::max(b, d)] = std::min(b, d);
    }
    WirtingerPresentation w;
    w.num_components = static_cast<int>(pd.components.size());
    std::map<int, int> gen_of_root;
    std::vector<int> gen(arcs + 1, -1);
    for (int a = 1; a <= arcs; ++a) {
        const int r = find(a);
        auto [it, inserted] = gen_of_root.try_emplace(r, w.num_generators);
        if (inserted) {
            ++w.num_generators;
            w.component_of.push_back(pd.components[pd.component_of_arc(a)].label);
        }
        gen[a] = it->second;
    }
    for (const auto& x : pd.crossings) {
        const int o = gen[x.arcs[1]];
        const int in = gen[x.arcs[0]];
        const int out = gen[x.arcs[2]];
        w.relators.push_back({{o, x.sign}, {in, 1}, {o, -x.sign}, {out, -1}});
    }
    return w;
}

int abelianization_rank(const WirtingerPresentation& w) {
    // rank of Z^g / <relations> = g - rank of the integer relation matrix
    std::vector<std::vector<__int128>> m;
    for (const auto& r : w.relators) {
        std::vector<__int128> row(w.num_generators, 0);
        for (const auto& l : r) row[l.generator] += l.power;
        m.push_back(std::move(row));
    }
    int rank = 0;
    const int cols = w.num_generators;
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const __int128 f = m[r][c], g = m[rank][c];
            for (int k = 0; k < cols; ++k) m[r][k] = m[r][k] * g - m[rank][k] * f;
            __int128 cont = 0;
            for (int k = 0; k < cols; ++k) {
                __int128 v = m[r][k] < 0 ? -m[r][k] : m[r][k];
                while (v != 0) {
                    const __int128 t = cont % v;
                    cont = v;
                    v = t;
                }
            }
            if (cont > 1)
                for (int k = 0; k < cols; ++k) m[r][k] /= cont;
        }
        ++rank;
    }
    return cols - rank;
}

}  // namespace tpoly
