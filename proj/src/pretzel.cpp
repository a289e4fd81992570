#include "tpoly/pretzel.hpp"

#include <algorithm>
#include <sstream>

namespace tpoly {

void PretzelParams::validate() const {
    if (q1 < 1 || r1 < 1 || q2 < 1 || r2 < 1)
        fail_validation("pretzel parameters must be positive, got " + str());
}

std::string PretzelParams::str() const {
    std::ostringstream os;
    os << q1 << ',' << r1 << ',' << q2 << ',' << r2;
    return os.str();
}

PretzelParams parse_pretzel_params(const std::string& text) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            vals.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail_validation("cannot parse pretzel parameter \"" + item + "\"");
        }
    }
    if (vals.size() != 4) fail_validation("expected q1,r1,q2,r2, got \"" + text + "\"");
    PretzelParams p{vals[0], vals[1], vals[2], vals[3]};
    p.validate();
    return p;
}

bool omission_applies(const PretzelParams& p) { return p.q1 + p.q2 <= 2; }

std::vector<Point2> hull_generators(const PretzelParams& p) {
    p.validate();
    const int qB = p.qB(), qS = p.qS(), rB = p.rB(), rS = p.rS();
    const int qq = p.q1 + p.q2;
    const int rr = p.r1 + p.r2;
    std::vector<Point2> pts{
        {qB - qS - 1, 2 * rr + qB - qS - 1},
        {-qB + qS + 1, -2 * rr - qB + qS + 1},
    };
    if (!omission_applies(p)) {
        pts.push_back({qq - 3, 2 * rB - 2 * rS + qq - 3});
        pts.push_back({-qq + 3, -2 * rB + 2 * rS - qq + 3});
    }
    pts.push_back({qq - 1, 2 * rB - 2 * rS + qq - 3});
    pts.push_back({-qq + 1, -2 * rB + 2 * rS - qq + 3});
    pts.push_back({qq - 1, -2 * rr + qq - 1});
    pts.push_back({-qq + 1, 2 * rr - qq + 1});
    return pts;
}

std::vector<Point2> hull_generators_symmetric(int q, int r) {
    std::vector<Point2> pts{{-1, 4 * r - 1}, {1, -4 * r + 1}};
    if (2 * q > 2) {
        pts.push_back({2 * q - 3, 2 * q - 3});
        pts.push_back({-2 * q + 3, -2 * q + 3});
    }
    pts.push_back({2 * q - 1, 2 * q - 3});
    pts.push_back({-2 * q + 1, -2 * q + 3});
    pts.push_back({2 * q - 1, -4 * r + 2 * q - 1});
    pts.push_back({-2 * q + 1, 4 * r - 2 * q + 1});
    return pts;
}

Polytope2 dual_thurston_polytope(const PretzelParams& p) { return convex_hull(hull_generators(p)); }

SurfaceComplexities surface_complexities(const PretzelParams& p) {
    p.validate();
    const int qB = p.qB(), qS = p.qS(), rB = p.rB(), rS = p.rS();
    SurfaceComplexities s;
    s.chi_FU = 1 - p.q1 - p.q2;
    s.chi_FK = -std::max(2 * p.r1 + 2 * p.r2 + qB - qS - 1, 2 * rB - 2 * rS + p.q1 + p.q2 - 3);
    s.seifert_norm_K = 2 * p.r1 + 2 * p.r2 - 1;
    return s;
}

KnotComponent knot_component(const PretzelParams& p) {
    p.validate();
    KnotComponent k;
    k.left_summand = "T(-2," + std::to_string(2 * p.r1 + 1) + ")";
    k.right_summand = "T(2," + std::to_string(2 * p.r2 + 1) + ")";
    k.lo = -p.r1 - p.r2;
    k.hi = p.r1 + p.r2;
    return k;
}

Polytope2 hfl_hull_oracle(const PretzelParams& p) {
    return minkowski_sum(dual_thurston_polytope(p), square(1)).halved();
}

Point2 temporary_center(const PretzelParams& p) {
    const int qq = p.q1 + p.q2;
    return {Half::from_twice(qq), Half::from_twice(qq) + Half(p.r1 + p.r2)};
}

bool SupportAssertion::holds(const Polytope2& hull) const {
    switch (kind) {
        case Kind::OnBoundary: return hull.on_boundary(centered);
        case Kind::Contained: return hull.contains(centered);
        case Kind::RightEdgeTop: return hull.right_edge_top() == centered;
    }
    return false;
}

std::vector<SupportAssertion> support_constraints(const PretzelParams& p) {
    p.validate();
    const Point2 c = temporary_center(p);
    const int rr = p.r1 + p.r2;
    std::vector<SupportAssertion> out;
    auto add = [&](SupportAssertion::Kind kind, Point2 t, std::string what) {
        out.push_back({kind, t, t - c, std::move(what)});
    };
    add(SupportAssertion::Kind::OnBoundary, {0, 2 * rr + 1}, "(0, 2r1+2r2+1) maximizes y on the boundary");
    for (int k = 0; k < p.qB(); ++k)
        add(SupportAssertion::Kind::Contained, {k, 2 * rr + 1 + k},
            "(" + std::to_string(k) + ", 2r1+2r2+1+" + std::to_string(k) + ") is a support point");
    add(SupportAssertion::Kind::Contained, {p.qB(), 2 * rr + p.qB()}, "(qB, 2r1+2r2+qB) is a support point");
    add(SupportAssertion::Kind::RightEdgeTop, {p.q1 + p.q2, p.q1 + p.q2 + 2 * p.rB() - 1},
        "max y over qB+1 <= x <= q1+q2 is q1+q2+2rB-1, attained on the right edge");
    return out;
}

}  // namespace tpoly
