#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tpoly/half.hpp"

namespace tpoly {

/// Convex polygon in the half-integer lattice, possibly a segment or a point.
///
/// Vertices are strictly convex, listed counterclockwise and start at the
/// lexicographically smallest vertex. Instances are only created through
/// convex_hull, so the canonical form is an invariant of the type.
class Polytope2 {
public:
    Polytope2();  // the point polytope {(0,0)}

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool is_point() const { return vertices_.size() == 1; }
    bool is_segment() const { return vertices_.size() == 2; }

    /// max over vertices of <v, (u, v)>
    Half support(std::int64_t u, std::int64_t v) const;
    bool contains(Point2 p) const;
    bool on_boundary(Point2 p) const;

    Polytope2 translated(Point2 offset) const;
    Polytope2 negated() const;
    Polytope2 scaled(std::int64_t k) const;  // k >= 0
    /// Scales by 1/2; throws if a vertex would leave the half-integer lattice.
    Polytope2 halved() const;

    /// Highest vertex on the vertical line x = max_x.
    Point2 right_edge_top() const;

    Half min_x() const;
    Half max_x() const;
    Half min_y() const;
    Half max_y() const;

    bool operator==(const Polytope2&) const = default;

    friend Polytope2 convex_hull(std::span<const Point2> points);

private:
    explicit Polytope2(std::vector<Point2> canonical) : vertices_(std::move(canonical)) {}
    std::vector<Point2> vertices_;
};

/// Errors with "no points" on an empty input.
Polytope2 convex_hull(std::span<const Point2> points);
inline Polytope2 convex_hull(std::initializer_list<Point2> points) {
    return convex_hull(std::span<const Point2>(points.begin(), points.size()));
}

bool is_centrally_symmetric(const Polytope2& p);

struct Centered {
    std::vector<Point2> points;  // sorted, deduplicated, symmetric about the origin
    Point2 center;
};

/// Translates a point set so it becomes symmetric about the origin.
/// The center is the midpoint of the bounding box; errors with
/// "asymmetric support" when the translated set is not symmetric.
Centered center(std::span<const Point2> points);

Polytope2 minkowski_sum(const Polytope2& p, const Polytope2& q);

/// R with R + Q = P, computed edge by edge and verified by re-adding Q.
/// Errors with "degenerate decomposition" when no such R exists.
Polytope2 minkowski_diff(const Polytope2& p, const Polytope2& q);

/// max over vertices of |<v, cls>|; requires a centrally symmetric ball.
Half thurston_norm(const Polytope2& ball, std::int64_t a, std::int64_t b);

/// The square [-r, r]^2.
Polytope2 square(std::int64_t r);
/// Segment between two points.
Polytope2 segment(Point2 a, Point2 b);
Polytope2 point_polytope(Point2 a);

nlohmann::json to_json(const Polytope2& p);
Polytope2 polytope_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(Point2 p);  // [xn, xd, yn, yd]
Point2 point_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Polytope2& p);

}  // namespace tpoly
