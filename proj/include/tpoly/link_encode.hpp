#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tpoly/pretzel.hpp"

namespace tpoly {

/// Component label: U is the unknotted component, K the knotted one.
/// For knots the single component is usually labelled K.
enum class Label : std::uint8_t { U = 0, K = 1 };

inline char label_char(Label l) { return l == Label::U ? 'U' : 'K'; }
Label parse_label(const std::string& s);

// ---------------------------------------------------------------------------
// Pretzel tuples

struct SignedPretzel {
    std::array<int, 4> coefficients{};
};

struct Canonicalized {
    PretzelParams params;
    bool mirrored = false;
};

/// Reduces a tuple with alternating signs and two cyclically adjacent odd
/// entries to P(-2r1-1, 2q1, -2q2, 2r2+1). Cyclic rotation and the paired
/// swap P(a,b,c,d) ~ P(b,a,d,c) are applied freely; a global sign flip is
/// recorded in `mirrored`. Of the two mirror-image parameter orders
/// (q1,r1,q2,r2) and (q2,r2,q1,r1) the lexicographically smaller is returned.
Canonicalized canonicalize(const SignedPretzel& t);
SignedPretzel to_signed(const PretzelParams& p);

// ---------------------------------------------------------------------------
// Planar diagram codes

/// Arcs listed counterclockwise starting from the incoming under-strand.
/// Positive crossings have the over-strand running from slot 3 to slot 1.
struct PDCrossing {
    std::array<int, 4> arcs{};
    int sign = 1;
};

struct PDComponent {
    Label label = Label::K;
    std::vector<int> arcs;  // consecutive labels in traversal order
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    std::vector<PDComponent> components;

    int num_arcs() const;
    int component_of_arc(int arc) const;  // index into components
    /// Arc following `arc` along its component.
    int next_arc(int arc) const;
    /// Checks arc multiplicities, orientation consistency and labels.
    void validate() const;
    int linking_number() const;  // sum of mixed crossing signs / 2
};

/// Reverses the orientation of one component; arcs are relabelled so that
/// labels stay consecutive along every component.
PDCode reverse_component(const PDCode& pd, int component);

nlohmann::json to_json(const PDCode& pd);
PDCode pd_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Morse words: a diagram swept bottom to top

struct MorseEvent {
    enum class Kind : std::uint8_t { Cup, Cap, Cross };
    Kind kind = Kind::Cup;
    int pos = 0;              // left strand position affected
    bool sw_ne_over = true;   // Cross only: strand from bottom-left to top-right is over
};

using MorseWord = std::vector<MorseEvent>;

MorseEvent cup(int pos);
MorseEvent cap(int pos);
MorseEvent cross(int pos, bool sw_ne_over);

/// Closes a Morse word into a PD code. Components are numbered in order of
/// discovery and labelled K; callers relabel as needed.
PDCode morse_to_pd(const MorseWord& word);

/// Morse word of the plat closure of a pretzel link with the given column twists.
/// Positive twist counts use sw_ne_over crossings.
MorseWord pretzel_morse(const std::array<int, 4>& twists);

/// Planar diagram of P(-2r1-1, 2q1, -2q2, 2r2+1) with U and K labelled.
PDCode pretzel_pd(const PretzelParams& p);

/// PD code of the closure of a braid word in generators 1..strands-1 (sign = direction).
PDCode braid_closure_pd(int strands, const std::vector<int>& word);

PDCode unknot_pd();         // a single crossingless loop
PDCode unlink2_pd();        // two crossingless loops
PDCode hopf_pd();           // positive Hopf link
PDCode trefoil_pd();        // right-handed trefoil
PDCode figure_eight_pd();
/// T(-2,2a+1) # T(2,2b+1), as the knotted component of a pretzel link.
PDCode torus_connected_sum_pd(int a, int b);

// ---------------------------------------------------------------------------
// Wirtinger presentations

struct Letter {
    int generator = 0;
    int power = 1;  // +1 or -1
};
using Word = std::vector<Letter>;

struct WirtingerPresentation {
    int num_generators = 0;
    std::vector<Label> component_of;  // per generator
    std::vector<Word> relators;       // each relator equals the identity
    int num_components = 0;
};

WirtingerPresentation wirtinger(const PDCode& pd);

/// Rank of the abelianized relation matrix cokernel (should equal the component count).
int abelianization_rank(const WirtingerPresentation& w);

// ---------------------------------------------------------------------------
// Grid diagrams

/// n x n toroidal grid; O[c], X[c] are the rows of the markings in column c.
/// Rows and columns are 0-indexed in memory and 1-indexed in files.
struct GridDiagram {
    int n = 0;
    std::vector<int> O;
    std::vector<int> X;
    std::vector<Label> labels;  // per column

    void validate() const;
    /// Columns of each traced component, in traversal order from its lowest column.
    std::vector<std::vector<int>> components() const;
    int num_components() const { return static_cast<int>(components().size()); }
    int markings_of(Label l) const;  // number of O markings with this label
    bool has_label(Label l) const { return markings_of(l) > 0; }
    bool operator==(const GridDiagram&) const = default;
};

GridDiagram parse_grid(const std::string& text);
std::string serialize_grid(const GridDiagram& g);

/// Grid realisation of a planar diagram followed by greedy destabilisation.
/// Throws a validation error for diagrams with nugatory crossings.
GridDiagram pd_to_grid(const PDCode& pd);
/// The raw rectilinear grid before any destabilisation.
GridDiagram pd_to_grid_unreduced(const PDCode& pd);

/// Removes rows/columns while a 2x2 block with three markings exists.
GridDiagram destabilize_greedy(GridDiagram g);
/// Interleaves commutation moves with greedy destabilisation, keeping the smallest grid seen.
GridDiagram reduce_grid(GridDiagram g, int rounds, std::uint64_t seed);

/// Signed crossings of the grid's planar projection (vertical strands over).
struct GridCrossing {
    int column = 0;
    int row = 0;
    int sign = 0;
    Label over;
    Label under;
};
std::vector<GridCrossing> grid_crossings(const GridDiagram& g);
int grid_linking_number(const GridDiagram& g);

}  // namespace tpoly
