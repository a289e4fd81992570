#pragma once

#include <vector>

#include "tpoly/laurent.hpp"
#include "tpoly/link_encode.hpp"
#include "tpoly/polytope2.hpp"

namespace tpoly {

/// Variable index of a label: 0 for t_U, 1 for t_K.
inline int variable_of(Label l) { return l == Label::U ? 0 : 1; }

/// Fox derivative of `word` with respect to `generator`, abelianised so that
/// each generator maps to its component's variable.
LaurentPoly fox_derivative(const Word& word, int generator, const std::vector<Label>& component_of);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// One row per relator, one column per generator.
PolyMatrix alexander_matrix(const WirtingerPresentation& w);

/// Exact determinant of a square matrix of Laurent polynomials. Each row is
/// shifted to non-negative exponents, the determinant is evaluated modulo
/// several primes on a grid of points, interpolated and lifted by CRT.
LaurentPoly determinant(const PolyMatrix& m);

/// Multivariable Alexander polynomial in canonical normalised form.
/// The deleted column defaults to the first generator of component U
/// (or generator 0 for knots); the deleted row defaults to the last relator.
/// For two-component links the minor is divided by (t - 1) of the deleted
/// column's variable.
LaurentPoly alexander_poly(const WirtingerPresentation& w, int deleted_generator = -1, int deleted_relator = -1);

/// Centered hull of the exponent vectors.
Polytope2 newton_polytope(const LaurentPoly& f);

/// True iff every vertex of the Newton polytope lies in the dual ball.
bool mcmullen_check(const Polytope2& newton, const Polytope2& dual_ball);

}  // namespace tpoly
