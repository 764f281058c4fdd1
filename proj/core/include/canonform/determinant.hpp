#pragma once

#include <cstddef>
#include <vector>

#include "canonform/matrix.hpp"

namespace canonform {

/// Largest order accepted by `det_expansion`.
inline constexpr std::size_t kExpansionLimit = 8;
/// Largest entry count accepted by `rank_by_minors`.
inline constexpr std::size_t kRankOracleEntries = 36;

/// Sum over all permutations f of sgn(f) * prod A(i, f(i)), computed literally.
Elem det_expansion(const Matrix& a);

/// Exact determinant. Fraction-free (Bareiss) elimination over Z and Q[x],
/// Gaussian elimination over Q.
Elem det(const Matrix& a);

enum class Axis { Rows, Cols };

struct LaplaceTerm {
    Indices varying;  ///< the index set Y running over P_k(n)
    Elem value;       ///< signed product (-1)^(sum X + sum Y) det A[X|Y] det A(X|Y)
};

/// Generalized Laplace expansion along the fixed index set `fixed` (rows or
/// columns); the terms are listed in lexicographic order of Y.
std::vector<LaplaceTerm> laplace_terms(const Matrix& a, const Indices& fixed, Axis axis);
Elem laplace(const Matrix& a, const Indices& fixed, Axis axis);

/// Delta(X, Y, A) = (-1)^(sum X + sum Y) det A[X|Y] det A(X|Y).
Elem restricted_det_sum(const Matrix& a, const Indices& x, const Indices& y);

/// Signed cofactor matrix C(i,j) = (-1)^(i+j) det A(i|j).
Matrix cofactor_matrix(const Matrix& a);
/// Transpose of the signed cofactor matrix; A adj(A) = adj(A) A = det(A) I.
Matrix adjugate(const Matrix& a);

/// x(i) = det(A with column i replaced by y) / det(A). Integer input is
/// solved over Q. Over Q[x] the quotients must be exact.
Matrix cramer_solve(const Matrix& a, const Matrix& y);

struct CauchyBinetTerm {
    Indices inner;  ///< F in P_k(p)
    Elem value;     ///< det A[G|F] det B[F|H]
};

struct CauchyBinetResult {
    Elem minor;  ///< det((AB)[G|H])
    std::vector<CauchyBinetTerm> terms;
};

/// det((AB)[G|H]) together with its Cauchy-Binet expansion over the inner
/// index sets. The two sides are compared before returning; a mismatch is
/// reported as an Internal error.
CauchyBinetResult minor_of_product(const Matrix& a, const Matrix& b, const Indices& rows, const Indices& cols);

/// Largest k with a nonzero k x k minor, by exhaustive enumeration.
std::size_t rank_by_minors(const Matrix& a);

/// A^-1 = adj(A) / det(A); requires det(A) to be a unit of the ring.
Matrix inverse(const Matrix& a);

/// Trace of a square matrix.
Elem trace(const Matrix& a);

}  // namespace canonform
