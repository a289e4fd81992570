#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace tpoly {

/// Integer Laurent polynomial in t_U and t_K. Exponent pairs are (U, K).
class LaurentPoly {
public:
    using Exponent = std::pair<int, int>;

    LaurentPoly() = default;
    static LaurentPoly constant(std::int64_t c);
    static LaurentPoly monomial(int a, int b, std::int64_t c = 1);

    const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int a, int b) const;
    void add_term(int a, int b, std::int64_t c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly shifted(int da, int db) const;
    /// Substitutes t -> t^-1 in both variables.
    LaurentPoly inverted() const;

    /// Exact division by (t_var - 1), var 0 = U, 1 = K. Throws when inexact.
    LaurentPoly divided_by_t_minus_one(int var) const;

    /// Lexicographically smallest exponent moved to (0,0) and the
    /// lexicographically largest coefficient made positive.
    LaurentPoly normalized() const;

    std::pair<Exponent, Exponent> exponent_box() const;  // ((minA,minB),(maxA,maxB)); requires nonzero

    std::string str() const;

private:
    std::map<Exponent, std::int64_t> terms_;
};

/// Equality up to multiplication by a signed monomial.
bool equal_up_to_unit(const LaurentPoly& f, const LaurentPoly& g);

/// (1 - t_var)^k
LaurentPoly one_minus_t_power(int var, int k);

nlohmann::json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace tpoly
