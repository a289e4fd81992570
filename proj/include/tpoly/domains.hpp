#pragma once

#include <array>
#include <vector>

#include "tpoly/link_encode.hpp"

namespace tpoly {

/// A grid state: row of the state point on each vertical circle (column).
using GridState = std::vector<int>;

/// Integer combination of the n*n unit squares of the grid torus.
/// Square (c, r) lies between vertical circles c, c+1 and horizontal circles r, r+1.
class Domain {
public:
    Domain(GridState from, GridState to);

    int n() const { return n_; }
    const GridState& from() const { return from_; }
    const GridState& to() const { return to_; }
    int at(int col, int row) const { return m_[idx(col, row)]; }
    void add(int col, int row, int v) { m_[idx(col, row)] += v; }
    const std::vector<int>& multiplicities() const { return m_; }

    /// Concatenation: requires this->to() == next.from().
    Domain operator+(const Domain& next) const;
    /// The same region read from `to` back to `from`, with negated multiplicities.
    Domain reversed() const;
    /// Adds k copies of the whole torus (endpoints unchanged).
    Domain plus_torus(int k) const;
    /// Adds k times a periodic domain (endpoints unchanged).
    Domain plus_periodic(const Domain& p, int k) const;

    /// Horizontal boundary condition: the alpha part of the boundary runs
    /// from the points of `from` to the points of `to`.
    bool has_valid_boundary() const;

    bool operator==(const Domain&) const = default;

private:
    int idx(int col, int row) const;
    int n_;
    GridState from_, to_;
    std::vector<int> m_;
};

Domain zero_domain(const GridState& x);
/// Rectangle with lower-left corner (i, x[i]) and upper-right corner (j, x[j]).
Domain rectangle(const GridState& x, int i, int j);
/// Canonical connecting domain from x to y (adjacent-transposition bubble order).
Domain domain_between(const GridState& x, const GridState& y);

/// Per label (U, K): multiplicities at X markings minus those at O markings.
std::array<int, 2> filtration_vector(const Domain& d, const GridDiagram& g);

/// Euler measure of the domain, times four.
int euler_measure_x4(const Domain& d);
/// Lipshitz-style index with the basepoint correction: e + n_from + n_to - 2 n_O.
int maslov_index(const Domain& d, const GridDiagram& g);

bool is_positive(const Domain& d);
bool is_periodic(const Domain& d, const GridDiagram& g);
/// One periodic domain per component but the last: its columns minus its rows.
std::vector<Domain> periodic_basis(const GridDiagram& g, const GridState& base);
/// Rank of the lattice of marking-free combinations of row and column strips,
/// modulo the whole torus; equals the size of periodic_basis.
int periodic_lattice_rank(const GridDiagram& g);

}  // namespace tpoly
