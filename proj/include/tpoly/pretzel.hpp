#pragma once

#include <string>
#include <vector>

#include "tpoly/polytope2.hpp"

namespace tpoly {

/// Twist parameters of the link P(-2r1-1, 2q1, -2q2, 2r2+1); all positive.
struct PretzelParams {
    int q1 = 1;
    int r1 = 1;
    int q2 = 1;
    int r2 = 1;

    int qB() const { return q1 > q2 ? q1 : q2; }
    int qS() const { return q1 < q2 ? q1 : q2; }
    int rB() const { return r1 > r2 ? r1 : r2; }
    int rS() const { return r1 < r2 ? r1 : r2; }

    /// Throws a validation error unless all four fields are >= 1.
    void validate() const;
    std::string str() const;
    bool operator==(const PretzelParams&) const = default;
};

/// Parses "q1,r1,q2,r2".
PretzelParams parse_pretzel_params(const std::string& text);

/// The eight hull generators, or six when q1 + q2 <= 2. Duplicates are kept.
std::vector<Point2> hull_generators(const PretzelParams& p);
/// The specialised table for q1 = q2 = q, r1 = r2 = r.
std::vector<Point2> hull_generators_symmetric(int q, int r);
bool omission_applies(const PretzelParams& p);

Polytope2 dual_thurston_polytope(const PretzelParams& p);

struct SurfaceComplexities {
    int chi_FU = 0;
    int chi_FK = 0;
    int seifert_norm_K = 0;
};

SurfaceComplexities surface_complexities(const PretzelParams& p);

struct KnotComponent {
    std::string left_summand;   // "T(-2,2r1+1)"
    std::string right_summand;  // "T(2,2r2+1)"
    int lo = 0;                 // hat support interval [lo, hi]
    int hi = 0;

    std::string label() const { return left_summand + " # " + right_summand; }
    /// Seifert complexity from the support interval: doubled width minus one.
    int seifert_complexity() const { return (hi - lo) - 1; }
};

KnotComponent knot_component(const PretzelParams& p);

/// (B + [-1,1]^2) / 2: the expected centered hull of the hat support.
Polytope2 hfl_hull_oracle(const PretzelParams& p);

/// Translation from the uncentered support coordinates to centered ones:
/// centered = temporary - temporary_center(p).
Point2 temporary_center(const PretzelParams& p);

struct SupportAssertion {
    enum class Kind {
        OnBoundary,     // point lies on the hull boundary
        Contained,      // point lies in the hull
        RightEdgeTop,   // point is the top of the right vertical edge
    };
    Kind kind;
    Point2 temporary;  // uncentered coordinates
    Point2 centered;
    std::string description;

    bool holds(const Polytope2& centered_hull) const;
};

std::vector<SupportAssertion> support_constraints(const PretzelParams& p);

}  // namespace tpoly
