#include "tpoly/polytope2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tpoly {

namespace {

using i64 = std::int64_t;

// Cross product of (b - a) and (c - a) in twice-units squared.
__int128 cross(Point2 a, Point2 b, Point2 c) {
    const __int128 abx = b.x.twice() - a.x.twice();
    const __int128 aby = b.y.twice() - a.y.twice();
    const __int128 acx = c.x.twice() - a.x.twice();
    const __int128 acy = c.y.twice() - a.y.twice();
    return abx * acy - aby * acx;
}

struct Edge {
    i64 dx;  // primitive direction, twice-units
    i64 dy;
    i64 length;  // multiple of the primitive direction
};

std::vector<Edge> edges_of(const Polytope2& p) {
    const auto& v = p.vertices();
    std::vector<Edge> out;
    if (v.size() < 2) return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 d = v[(i + 1) % v.size()] - v[i];
        const i64 g = std::gcd(d.x.twice(), d.y.twice());
        out.push_back({d.x.twice() / g, d.y.twice() / g, g});
    }
    return out;
}

// Angular order over (-90deg, 270deg], the order in which edges leave the
// lexicographically smallest vertex.
bool angle_less(i64 ax, i64 ay, i64 bx, i64 by) {
    const int ha = (ax > 0 || (ax == 0 && ay > 0)) ? 0 : 1;
    const int hb = (bx > 0 || (bx == 0 && by > 0)) ? 0 : 1;
    if (ha != hb) return ha < hb;
    return static_cast<__int128>(ax) * by - static_cast<__int128>(ay) * bx > 0;
}

}  // namespace

Polytope2::Polytope2() : vertices_{Point2{}} {}

Polytope2 convex_hull(std::span<const Point2> points) {
    if (points.empty()) fail_validation("no points");
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return Polytope2(std::move(pts));

    std::vector<Point2> lower;
    std::vector<Point2> upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0) lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0) upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return Polytope2(std::move(lower));
}

Half Polytope2::support(i64 u, i64 v) const {
    Half best = vertices_.front().dot(u, v);
    for (const auto& p : vertices_) best = std::max(best, p.dot(u, v));
    return best;
}

bool Polytope2::contains(Point2 p) const {
    const auto& v = vertices_;
    if (v.size() == 1) return v[0] == p;
    if (v.size() == 2) {
        return cross(v[0], v[1], p) == 0 && std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
               std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
    return true;
}

bool Polytope2::on_boundary(Point2 p) const {
    if (!contains(p)) return false;
    if (vertices_.size() <= 2) return true;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) == 0) return true;
    return false;
}

Polytope2 Polytope2::translated(Point2 offset) const {
    std::vector<Point2> out;
    for (const auto& p : vertices_) out.push_back(p + offset);
    return Polytope2(std::move(out));  // translation keeps canonical order
}

Polytope2 Polytope2::negated() const {
    std::vector<Point2> out;
    for (const auto& p : vertices_) out.push_back(-p);
    return convex_hull(out);
}

Polytope2 Polytope2::scaled(i64 k) const {
    if (k < 0) fail_validation("negative scale factor");
    if (k == 0) return Polytope2();
    std::vector<Point2> out;
    for (const auto& p : vertices_) out.push_back(p * k);
    return Polytope2(std::move(out));
}

Polytope2 Polytope2::halved() const {
    std::vector<Point2> out;
    for (const auto& p : vertices_) out.push_back({p.x.halved(), p.y.halved()});
    return Polytope2(std::move(out));
}

Point2 Polytope2::right_edge_top() const {
    Point2 best = vertices_.front();
    for (const auto& p : vertices_)
        if (p.x > best.x || (p.x == best.x && p.y > best.y)) best = p;
    return best;
}

Half Polytope2::min_x() const { return -support(-1, 0); }
Half Polytope2::max_x() const { return support(1, 0); }
Half Polytope2::min_y() const { return -support(0, -1); }
Half Polytope2::max_y() const { return support(0, 1); }

bool is_centrally_symmetric(const Polytope2& p) { return p.negated() == p; }

Centered center(std::span<const Point2> points) {
    if (points.empty()) fail_validation("no points");
    const Polytope2 hull = convex_hull(points);
    const i64 cx2 = hull.min_x().twice() + hull.max_x().twice();
    const i64 cy2 = hull.min_y().twice() + hull.max_y().twice();
    if (cx2 % 2 != 0 || cy2 % 2 != 0) fail_computation("asymmetric support");
    const Point2 c{Half::from_twice(cx2 / 2), Half::from_twice(cy2 / 2)};

    std::set<Point2> shifted;
    for (const auto& p : points) shifted.insert(p - c);
    for (const auto& p : shifted)
        if (!shifted.contains(-p)) fail_computation("asymmetric support");
    return {std::vector<Point2>(shifted.begin(), shifted.end()), c};
}

Polytope2 minkowski_sum(const Polytope2& p, const Polytope2& q) {
    std::vector<Point2> sums;
    sums.reserve(p.size() * q.size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(a + b);
    return convex_hull(sums);
}

Polytope2 minkowski_diff(const Polytope2& p, const Polytope2& q) {
    auto dir_less = [](const std::pair<i64, i64>& a, const std::pair<i64, i64>& b) {
        return angle_less(a.first, a.second, b.first, b.second);
    };
    std::map<std::pair<i64, i64>, i64, decltype(dir_less)> lengths(dir_less);
    for (const auto& e : edges_of(p)) lengths[{e.dx, e.dy}] += e.length;
    for (const auto& e : edges_of(q)) lengths[{e.dx, e.dy}] -= e.length;

    Point2 cur = p.vertices().front() - q.vertices().front();
    std::vector<Point2> walk{cur};
    for (const auto& [dir, len] : lengths) {
        if (len < 0) fail_computation("degenerate decomposition");
        if (len == 0) continue;
        cur = cur + Point2{Half::from_twice(dir.first * len), Half::from_twice(dir.second * len)};
        walk.push_back(cur);
    }
    if (walk.back() != walk.front()) fail_computation("degenerate decomposition");
    walk.pop_back();
    if (walk.empty()) walk.push_back(cur);
    Polytope2 r = convex_hull(walk);
    if (minkowski_sum(r, q) != p) fail_computation("degenerate decomposition");
    return r;
}

Half thurston_norm(const Polytope2& ball, i64 a, i64 b) {
    if (!is_centrally_symmetric(ball)) fail_validation("dual ball is not centrally symmetric");
    return ball.support(a, b);
}

Polytope2 square(i64 r) {
    return convex_hull({Point2{-r, -r}, Point2{r, -r}, Point2{r, r}, Point2{-r, r}});
}
Polytope2 segment(Point2 a, Point2 b) { return convex_hull({a, b}); }
Polytope2 point_polytope(Point2 a) { return convex_hull({a}); }

nlohmann::json point_to_json(Point2 p) {
    return nlohmann::json::array({p.x.numerator(), p.x.denominator(), p.y.numerator(), p.y.denominator()});
}

Point2 point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) fail_validation("point must be [xn, xd, yn, yd]");
    return {Half::from_fraction(j[0].get<i64>(), j[1].get<i64>()),
            Half::from_fraction(j[2].get<i64>(), j[3].get<i64>())};
}

nlohmann::json to_json(const Polytope2& p) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : p.vertices()) verts.push_back(point_to_json(v));
    return {{"vertices", verts}};
}

Polytope2 polytope_from_json(const nlohmann::json& j) {
    if (!j.contains("vertices")) fail_validation("polytope JSON needs a \"vertices\" array");
    std::vector<Point2> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(point_from_json(v));
    return convex_hull(pts);
}

std::ostream& operator<<(std::ostream& os, const Polytope2& p) {
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p.vertices()[i];
    return os << ']';
}

}  // namespace tpoly
