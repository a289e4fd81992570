#include "tpoly/domains.hpp"

#include <algorithm>
#include <numeric>

#include "tpoly/error.hpp"

namespace tpoly {

Domain::Domain(GridState from, GridState to) : n_(static_cast<int>(from.size())), from_(std::move(from)), to_(std::move(to)) {
    if (to_.size() != from_.size()) fail_validation("domain endpoints live on different grids");
    m_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

int Domain::idx(int col, int row) const {
    col = ((col % n_) + n_) % n_;
    row = ((row % n_) + n_) % n_;
    return col * n_ + row;
}

Domain Domain::operator+(const Domain& next) const {
    if (to_ != next.from_) fail_validation("domains are not composable");
    Domain out(from_, next.to_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] + next.m_[i];
    return out;
}

Domain Domain::reversed() const {
    Domain out(to_, from_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = -m_[i];
    return out;
}

Domain Domain::plus_torus(int k) const {
    Domain out = *this;
    for (int& v : out.m_) v += k;
    return out;
}

Domain Domain::plus_periodic(const Domain& p, int k) const {
    Domain out = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] += k * p.m_[i];
    return out;
}

bool Domain::has_valid_boundary() const {
    // h(c, j): coefficient of the rightward horizontal edge at height j in column c.
    auto h = [&](int c, int j) { return at(c, j) - at(c, j - 1); };
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const int expected = (to_[i] == j) - (from_[i] == j);
            if (h(i - 1, j) - h(i, j) != expected) return false;
        }
    return true;
}

Domain zero_domain(const GridState& x) { return Domain(x, x); }

Domain rectangle(const GridState& x, int i, int j) {
    const int n = static_cast<int>(x.size());
    if (i == j) fail_validation("rectangle needs two distinct columns");
    GridState y = x;
    std::swap(y[i], y[j]);
    Domain d(x, y);
    const int w = ((j - i) % n + n) % n, h = ((x[j] - x[i]) % n + n) % n;
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < h; ++b) d.add(i + a, x[i] + b, 1);
    return d;
}

Domain domain_between(const GridState& x, const GridState& y) {
    const int n = static_cast<int>(x.size());
    if (static_cast<int>(y.size()) != n) fail_validation("states live on different grids");
    std::vector<int> col_in_y(n);
    for (int c = 0; c < n; ++c) col_in_y[y[c]] = c;
    GridState z = x;
    std::vector<int> key(n);
    for (int c = 0; c < n; ++c) key[c] = col_in_y[x[c]];
    Domain d(x, y);
    for (int pass = 0; pass < n; ++pass)
        for (int i = 0; i + 1 < n; ++i) {
            if (key[i] <= key[i + 1]) continue;
            // Width-one strip in column i between the two rows.
            const int lo = std::min(z[i], z[i + 1]), hi = std::max(z[i], z[i + 1]);
            const int sign = z[i] < z[i + 1] ? 1 : -1;
            for (int r = lo; r < hi; ++r) d.add(i, r, sign);
            std::swap(z[i], z[i + 1]);
            std::swap(key[i], key[i + 1]);
        }
    return d;
}

std::array<int, 2> filtration_vector(const Domain& d, const GridDiagram& g) {
    if (d.n() != g.n) fail_validation("domain and grid sizes differ");
    std::array<int, 2> f{0, 0};
    for (int k = 0; k < g.n; ++k) {
        const int c = static_cast<int>(g.labels[k]);
        f[c] += d.at(k, g.X[k]) - d.at(k, g.O[k]);
    }
    return f;
}

namespace {

// Euler measure (times four) of a set of squares: chi - k/4 + l/4 with pinched
// vertices counted once per sheet.
int region_euler_x4(const std::vector<char>& in, int n) {
    auto at = [&](int c, int r) { return in[((c % n + n) % n) * n + ((r % n + n) % n)]; };
    int v = 0, e = 0, f = 0, k = 0, l = 0;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            f += at(c, r);
            e += at(c, r) || at(c, r - 1);  // horizontal edge at height r in column c
            e += at(c, r) || at(c - 1, r);  // vertical edge at column c in row r
            const int sw = at(c - 1, r - 1), se = at(c, r - 1), ne = at(c, r), nw = at(c - 1, r);
            const int count = sw + se + ne + nw;
            const bool pinch = count == 2 && sw == ne;
            v += count == 0 ? 0 : (pinch ? 2 : 1);
            k += count == 1 ? 1 : (pinch ? 2 : 0);
            l += count == 3;
        }
    return 4 * (v - e + f) - k + l;
}

}  // namespace

int euler_measure_x4(const Domain& d) {
    const int n = d.n();
    const auto& m = d.multiplicities();
    int top = 0, bottom = 0;
    for (int v : m) {
        top = std::max(top, v);
        bottom = std::min(bottom, v);
    }
    int total = 0;
    std::vector<char> level(m.size());
    for (int t = 1; t <= top; ++t) {
        for (std::size_t i = 0; i < m.size(); ++i) level[i] = m[i] >= t;
        total += region_euler_x4(level, n);
    }
    for (int t = 1; t <= -bottom; ++t) {
        for (std::size_t i = 0; i < m.size(); ++i) level[i] = m[i] <= -t;
        total -= region_euler_x4(level, n);
    }
    return total;
}

int maslov_index(const Domain& d, const GridDiagram& g) {
    if (d.n() != g.n) fail_validation("domain and grid sizes differ");
    auto corners = [&](int i, int j) { return d.at(i - 1, j - 1) + d.at(i, j - 1) + d.at(i - 1, j) + d.at(i, j); };
    int x4 = euler_measure_x4(d);
    for (int i = 0; i < g.n; ++i) x4 += corners(i, d.from()[i]) + corners(i, d.to()[i]);
    for (int k = 0; k < g.n; ++k) x4 -= 8 * d.at(k, g.O[k]);
    if (x4 % 4 != 0) fail_computation("Maslov index is not an integer");
    return x4 / 4;
}

bool is_positive(const Domain& d) {
    const auto& m = d.multiplicities();
    return std::all_of(m.begin(), m.end(), [](int v) { return v >= 0; });
}

bool is_periodic(const Domain& d, const GridDiagram& g) {
    if (d.from() != d.to() || !d.has_valid_boundary()) return false;
    for (int k = 0; k < g.n; ++k)
        if (d.at(k, g.O[k]) != 0 || d.at(k, g.X[k]) != 0) return false;
    return true;
}

std::vector<Domain> periodic_basis(const GridDiagram& g, const GridState& base) {
    const auto comps = g.components();
    std::vector<Domain> out;
    for (std::size_t c = 0; c + 1 < comps.size(); ++c) {
        Domain d(base, base);
        for (int col : comps[c]) {
            const int row = g.O[col];
            for (int t = 0; t < g.n; ++t) {
                d.add(col, t, 1);
                d.add(t, row, -1);
            }
        }
        out.push_back(std::move(d));
    }
    return out;
}

int periodic_lattice_rank(const GridDiagram& g) {
    // Unknowns: a_col (column strips) and b_row (row strips); one equation per marking.
    const int n = g.n;
    std::vector<std::vector<long long>> rows;
    for (int k = 0; k < n; ++k)
        for (int row : {g.O[k], g.X[k]}) {
            std::vector<long long> eq(2 * n, 0);
            eq[k] = 1;
            eq[n + row] = 1;
            rows.push_back(eq);
        }
    // Rank over the rationals by fraction-free elimination.
    int rank = 0;
    const int cols = 2 * n;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = rank;
        while (piv < static_cast<int>(rows.size()) && rows[piv][c] == 0) ++piv;
        if (piv == static_cast<int>(rows.size())) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
            const long long a = rows[rank][c], b = rows[r][c];
            long long g = 0;
            for (int t = 0; t < cols; ++t) {
                rows[r][t] = rows[r][t] * a - rows[rank][t] * b;
                g = std::gcd(g, rows[r][t]);
            }
            if (g > 1)
                for (int t = 0; t < cols; ++t) rows[r][t] /= g;
        }
        ++rank;
    }
    // Kernel dimension minus the torus relation (all columns minus all rows).
    return cols - rank - 1;
}

}  // namespace tpoly
