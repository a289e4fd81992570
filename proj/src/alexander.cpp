#include "tpoly/alexander.hpp"

#include <algorithm>
#include <cmath>

#include "tpoly/error.hpp"

namespace tpoly {

namespace {

LaurentPoly var_power(const std::vector<Label>& component_of, int generator, int power) {
    return variable_of(component_of.at(generator)) == 0 ? LaurentPoly::monomial(power, 0)
                                                         : LaurentPoly::monomial(0, power);
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a, p))
        if (e & 1) r = mul_mod(r, a, p);
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce(std::int64_t c, u64 p) {
    const std::int64_t r = c % static_cast<std::int64_t>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

u64 det_mod(std::vector<std::vector<u64>> a, u64 p) {
    const std::size_t n = a.size();
    u64 det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = det ? p - det : 0;
        }
        det = mul_mod(det, a[c][c], p);
        const u64 inv = inv_mod(a[c][c], p);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const u64 f = mul_mod(a[r][c], inv, p);
            for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + p - mul_mod(f, a[c][k], p)) % p;
        }
    }
    return det;
}

// Coefficients (ascending) of the polynomial through (xs[i], ys[i]) modulo p.
std::vector<u64> interpolate(const std::vector<u64>& xs, std::vector<u64> ys, u64 p) {
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = mul_mod((ys[i] + p - ys[i - 1]) % p, inv_mod((xs[i] + p - xs[i - j]) % p, p), p);
            if (i == j) break;
        }
    std::vector<u64> coeffs(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // coeffs = coeffs * (x - xs[k]) + ys[k]
        for (std::size_t i = n - 1; i > 0; --i)
            coeffs[i] = (coeffs[i - 1] + p - mul_mod(coeffs[i], xs[k], p)) % p;
        coeffs[0] = (p - mul_mod(coeffs[0], xs[k], p)) % p;
        coeffs[0] = (coeffs[0] + ys[k]) % p;
    }
    return coeffs;
}

}  // namespace

LaurentPoly fox_derivative(const Word& word, int generator, const std::vector<Label>& component_of) {
    LaurentPoly result;
    LaurentPoly prefix = LaurentPoly::constant(1);
    for (const auto& letter : word) {
        const LaurentPoly t = var_power(component_of, letter.generator, 1);
        if (letter.power > 0) {
            if (letter.generator == generator) result += prefix;
            prefix = prefix * t;
        } else {
            const LaurentPoly t_inv = var_power(component_of, letter.generator, -1);
            prefix = prefix * t_inv;
            if (letter.generator == generator) result += -prefix;
        }
    }
    return result;
}

PolyMatrix alexander_matrix(const WirtingerPresentation& w) {
    PolyMatrix m;
    for (const auto& rel : w.relators) {
        std::vector<LaurentPoly> row;
        for (int g = 0; g < w.num_generators; ++g) row.push_back(fox_derivative(rel, g, w.component_of));
        m.push_back(std::move(row));
    }
    return m;
}

LaurentPoly determinant(const PolyMatrix& input) {
    const std::size_t n = input.size();
    if (n == 0) return LaurentPoly::constant(1);
    for (const auto& row : input)
        if (row.size() != n) fail_computation("determinant of a non-square matrix");

    // Shift rows to non-negative exponents and collect degree and coefficient bounds.
    PolyMatrix m = input;
    int deg_u = 0, deg_k = 0;
    long double log2_bound = 0;
    int shift_u = 0, shift_k = 0;
    for (auto& row : m) {
        int min_u = 0, min_k = 0, max_u = 0, max_k = 0;
        bool first = true;
        long double l1 = 0;
        for (const auto& f : row)
            for (const auto& [e, c] : f.terms()) {
                if (first) {
                    min_u = max_u = e.first;
                    min_k = max_k = e.second;
                    first = false;
                }
                min_u = std::min(min_u, e.first);
                max_u = std::max(max_u, e.first);
                min_k = std::min(min_k, e.second);
                max_k = std::max(max_k, e.second);
                l1 += static_cast<long double>(c < 0 ? -c : c);
            }
        if (first) return {};
        for (auto& f : row) f = f.shifted(-min_u, -min_k);
        shift_u += min_u;
        shift_k += min_k;
        deg_u += max_u - min_u;
        deg_k += max_k - min_k;
        log2_bound += std::log2(l1);
    }
    if (log2_bound > 119) fail_computation("determinant coefficients may exceed the exact range");

    static constexpr u64 primes[] = {(u64{1} << 61) - 1, 1000000007ULL, 998244353ULL};
    const std::size_t pu = deg_u + 1, pk = deg_k + 1;
    // coeffs[prime][a][b]
    std::vector<std::vector<std::vector<u64>>> residues;
    for (const u64 p : primes) {
        std::vector<u64> xs(pu), ys(pk);
        for (std::size_t i = 0; i < pu; ++i) xs[i] = i + 2;
        for (std::size_t j = 0; j < pk; ++j) ys[j] = j + 2;
        // value[i][j] = det at (xs[i], ys[j])
        std::vector<std::vector<u64>> by_k(pu, std::vector<u64>(pk));
        for (std::size_t i = 0; i < pu; ++i)
            for (std::size_t j = 0; j < pk; ++j) {
                std::vector<std::vector<u64>> a(n, std::vector<u64>(n, 0));
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) {
                        u64 v = 0;
                        for (const auto& [e, coef] : m[r][c].terms())
                            v = (v + mul_mod(reduce(coef, p),
                                             mul_mod(pow_mod(xs[i], e.first, p), pow_mod(ys[j], e.second, p), p), p)) %
                                p;
                        a[r][c] = v;
                    }
                by_k[i][j] = det_mod(std::move(a), p);
            }
        // Interpolate in k for each u-point, then in u for each k-coefficient.
        for (std::size_t i = 0; i < pu; ++i) by_k[i] = interpolate(ys, by_k[i], p);
        std::vector<std::vector<u64>> coeff(pu, std::vector<u64>(pk));
        for (std::size_t b = 0; b < pk; ++b) {
            std::vector<u64> column(pu);
            for (std::size_t i = 0; i < pu; ++i) column[i] = by_k[i][b];
            const auto c = interpolate(xs, column, p);
            for (std::size_t a = 0; a < pu; ++a) coeff[a][b] = c[a];
        }
        residues.push_back(std::move(coeff));
    }

    // Chinese remaindering into a symmetric signed range.
    LaurentPoly out;
    const u128 p0 = primes[0], p1 = primes[1], p2 = primes[2];
    const u128 modulus = p0 * p1 * p2;
    for (std::size_t a = 0; a < pu; ++a)
        for (std::size_t b = 0; b < pk; ++b) {
            // Garner's algorithm.
            const u64 r0 = residues[0][a][b], r1 = residues[1][a][b], r2 = residues[2][a][b];
            const u64 x1 = mul_mod((r1 + primes[1] - static_cast<u64>(r0 % primes[1])) % primes[1],
                                   inv_mod(static_cast<u64>(p0 % p1), primes[1]), primes[1]);
            const u128 partial = static_cast<u128>(r0) + p0 * x1;  // value mod p0 p1
            const u64 partial_mod2 = static_cast<u64>(partial % p2);
            const u64 x2 = mul_mod((r2 + primes[2] - partial_mod2) % primes[2],
                                   inv_mod(static_cast<u64>((p0 * p1) % p2), primes[2]), primes[2]);
            const u128 value = partial + p0 * p1 * x2;
            __int128 signed_value = value > modulus / 2 ? -static_cast<__int128>(modulus - value)
                                                        : static_cast<__int128>(value);
            if (signed_value == 0) continue;
            if (signed_value > INT64_MAX || signed_value < INT64_MIN)
                fail_computation("determinant coefficient exceeds 64 bits");
            out.add_term(static_cast<int>(a) + shift_u, static_cast<int>(b) + shift_k,
                         static_cast<std::int64_t>(signed_value));
        }
    return out;
}

LaurentPoly alexander_poly(const WirtingerPresentation& w, int deleted_generator, int deleted_relator) {
    if (w.num_components < 1 || w.num_components > 2) fail_validation("Alexander polynomial needs one or two components");
    if (w.num_generators == 0) fail_validation("presentation has no generators");
    if (deleted_generator < 0) {
        deleted_generator = 0;
        if (w.num_components == 2) {
            auto it = std::find(w.component_of.begin(), w.component_of.end(), Label::U);
            if (it == w.component_of.end()) fail_validation("two-component presentation lacks component U");
            deleted_generator = static_cast<int>(it - w.component_of.begin());
        }
    }
    if (deleted_generator >= w.num_generators) fail_validation("deleted generator out of range");
    const int rows = static_cast<int>(w.relators.size());
    if (rows > 0 && deleted_relator < 0) deleted_relator = rows - 1;
    if (deleted_relator >= rows) fail_validation("deleted relator out of range");

    const PolyMatrix full = alexander_matrix(w);
    PolyMatrix minor;
    for (int r = 0; r < rows; ++r) {
        if (r == deleted_relator) continue;
        std::vector<LaurentPoly> row;
        for (int g = 0; g < w.num_generators; ++g)
            if (g != deleted_generator) row.push_back(full[r][g]);
        minor.push_back(std::move(row));
    }
    const std::size_t cols = static_cast<std::size_t>(w.num_generators - 1);
    if (minor.size() != cols) return {};
    LaurentPoly det = determinant(minor);
    if (w.num_components == 2) det = det.divided_by_t_minus_one(variable_of(w.component_of[deleted_generator]));
    return det.normalized();
}

Polytope2 newton_polytope(const LaurentPoly& f) {
    if (f.is_zero()) fail_validation("zero polynomial has no Newton polytope");
    std::vector<Point2> pts;
    for (const auto& [e, c] : f.terms()) pts.push_back({Half(e.first), Half(e.second)});
    const auto centered = center(pts);
    return convex_hull(centered.points);
}

bool mcmullen_check(const Polytope2& newton, const Polytope2& dual_ball) {
    return std::all_of(newton.vertices().begin(), newton.vertices().end(),
                       [&](const Point2& v) { return dual_ball.contains(v); });
}

}  // namespace tpoly
