#include "tpoly/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "tpoly/error.hpp"

namespace tpoly {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail_computation("Laurent coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail_computation("Laurent coefficient overflow");
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::int64_t c) { return monomial(0, 0, c); }

LaurentPoly LaurentPoly::monomial(int a, int b, std::int64_t c) {
    LaurentPoly p;
    p.add_term(a, b, c);
    return p;
}

std::int64_t LaurentPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int a, int b, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1.first + e2.first, e1.second + e2.second, checked_mul(c1, c2));
    return r;
}

LaurentPoly LaurentPoly::shifted(int da, int db) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first + da, e.second + db}] = c;
    return r;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.first, -e.second}] = c;
    return r;
}

LaurentPoly LaurentPoly::divided_by_t_minus_one(int var) const {
    // Group by the other exponent; each group is a univariate Laurent polynomial in t_var.
    std::map<int, std::map<int, std::int64_t>> groups;
    for (const auto& [e, c] : terms_) {
        const int mine = var == 0 ? e.first : e.second;
        const int other = var == 0 ? e.second : e.first;
        groups[other][mine] = c;
    }
    LaurentPoly q;
    for (auto& [other, uni] : groups) {
        // f = (t - 1) g, peel from the top degree down: g_{d-1} = f_d + g_d.
        const int lo = uni.begin()->first;
        const int hi = uni.rbegin()->first;
        std::int64_t carry = 0;
        for (int d = hi; d > lo; --d) {
            auto it = uni.find(d);
            const std::int64_t fd = it == uni.end() ? 0 : it->second;
            carry = checked_add(carry, fd);
            if (carry != 0) {
                if (var == 0) q.add_term(d - 1, other, carry);
                else q.add_term(other, d - 1, carry);
            }
        }
        if (checked_add(carry, uni.at(lo)) != 0) fail_computation("division by (t - 1) is not exact");
    }
    return q;
}

LaurentPoly LaurentPoly::normalized() const {
    if (terms_.empty()) return {};
    const auto lo = terms_.begin()->first;
    LaurentPoly r = shifted(-lo.first, -lo.second);
    if (r.terms_.rbegin()->second < 0) r = -r;
    return r;
}

std::pair<LaurentPoly::Exponent, LaurentPoly::Exponent> LaurentPoly::exponent_box() const {
    if (terms_.empty()) fail_computation("zero polynomial has no exponents");
    Exponent lo = terms_.begin()->first, hi = lo;
    for (const auto& [e, c] : terms_) {
        lo = {std::min(lo.first, e.first), std::min(lo.second, e.second)};
        hi = {std::max(hi.first, e.first), std::max(hi.second, e.second)};
    }
    return {lo, hi};
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t mag = c;
        if (c < 0) {
            os << (first ? "-" : " - ");
            mag = -c;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        const bool bare = e.first == 0 && e.second == 0;
        if (mag != 1 || bare) os << mag;
        auto var = [&](const char* name, int p) {
            if (p == 0) return;
            os << name;
            if (p != 1) os << '^' << p;
        };
        if (!bare && mag != 1) os << '*';
        var("u", e.first);
        if (e.first != 0 && e.second != 0) os << '*';
        var("k", e.second);
    }
    return os.str();
}

bool equal_up_to_unit(const LaurentPoly& f, const LaurentPoly& g) { return f.normalized() == g.normalized(); }

LaurentPoly one_minus_t_power(int var, int k) {
    LaurentPoly r = LaurentPoly::constant(1);
    const LaurentPoly f = LaurentPoly::constant(1) - (var == 0 ? LaurentPoly::monomial(1, 0) : LaurentPoly::monomial(0, 1));
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}

nlohmann::json to_json(const LaurentPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({e.first, e.second, c});
    return {{"terms", terms}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    LaurentPoly f;
    for (const auto& t : j.at("terms")) f.add_term(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<std::int64_t>());
    return f;
}

}  // namespace tpoly
