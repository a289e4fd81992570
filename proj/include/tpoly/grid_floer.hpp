#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "tpoly/domains.hpp"
#include "tpoly/laurent.hpp"
#include "tpoly/polytope2.hpp"

namespace tpoly {

/// Closed-form gradings of grid states. The raw Alexander grading of label c
/// is minus the sum of the winding numbers of component c around the state
/// points; Maslov is I(x,x) - I(x,O) - I(O,x) up to a constant.
class StateGrader {
public:
    explicit StateGrader(const GridDiagram& g);

    int n() const { return n_; }
    /// Raw Alexander contribution of the point (column i, row r) for label c.
    int alexander_step(int c, int i, int r) const { return alex_[c][i * n_ + r]; }
    /// Maslov contribution of placing row r in column i after rows `used` in columns < i.
    int maslov_step(int i, int r, std::uint32_t used) const;

    std::array<int, 2> raw_alexander(const GridState& x) const;
    int maslov(const GridState& x) const;
    /// Twice the midpoint of the raw Alexander range over all n! states.
    std::array<int, 2> twice_center() const { return twice_center_; }
    /// Alexander grading centered by the full state range.
    Point2 alexander(const GridState& x) const;
    Point2 centered(const std::array<int, 2>& raw) const;

    /// Per used-row mask: min and max of the remaining columns' raw Alexander sum.
    int suffix_min(int c, std::uint32_t mask) const { return suffix_min_[c][mask]; }
    int suffix_max(int c, std::uint32_t mask) const { return suffix_max_[c][mask]; }

private:
    int n_;
    std::array<std::vector<int>, 2> alex_;
    std::vector<int> xo_, ox_;
    std::array<std::vector<int>, 2> suffix_min_, suffix_max_;
    std::array<int, 2> twice_center_{};
};

/// Streams all n! states in lexicographic order.
void for_each_state(const GridDiagram& g, const std::function<void(const GridState&)>& fn);
std::vector<GridState> enumerate_states(const GridDiagram& g);
/// States whose centered Alexander grading equals `alexander`, in lexicographic order.
std::vector<GridState> states_with_alexander(const GridDiagram& g, Point2 alexander);

struct Grading {
    Point2 alexander;  // centered
    int maslov = 0;    // relative to the base state
};
Grading grade(const GridDiagram& g, const GridState& x, const GridState& base);

/// Targets of all empty, marking-free rectangles out of x (each counted once).
std::vector<GridState> differential(const GridDiagram& g, const GridState& x);

struct RankBlock {
    Point2 alexander;                       // centered
    std::map<int, std::int64_t> ranks;      // relative Maslov -> homology rank (nonzero only)
    std::int64_t generators = 0;
};

struct RankTable {
    int n = 0;
    std::array<int, 2> markings{};        // O markings per label (U, K)
    std::vector<RankBlock> blocks;        // sorted by Alexander grading
};

struct EngineOptions {
    std::int64_t max_block = 0;         // 0: read GRIDFLOER_MAX_BLOCK, default 5e6
    double time_budget_seconds = 0;     // 0: unlimited; checked between blocks
};

std::int64_t max_block_from_env();

/// Homology of the fully blocked grid complex over the two-element field,
/// one Alexander block at a time. Maslov gradings are relative to the identity state.
RankTable homology_ranks(const GridDiagram& g, const EngineOptions& options = {});

/// Hull of the Alexander gradings carrying nonzero homology.
Polytope2 tilde_support_hull(const RankTable& t);
/// tilde hull with the per-component two-step factors removed, then centered.
Polytope2 hat_support_hull(const RankTable& t);
/// Twice the hat hull minus the unit cube spanned by the link's components.
Polytope2 thurston_polytope(const Polytope2& hat, const std::array<int, 2>& markings);
/// Sum of (-1)^maslov rank t^alexander, shifted to non-negative exponents.
LaurentPoly graded_euler(const RankTable& t);

nlohmann::json to_json(const RankTable& t);

}  // namespace tpoly
