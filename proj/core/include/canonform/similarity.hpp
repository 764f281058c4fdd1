#pragma once

#include <optional>
#include <vector>

#include "canonform/invariants.hpp"

namespace canonform {

/// xI - A over Q[x]. Integer input is lifted to Q.
Matrix char_matrix(const Matrix& a);
Polynomial char_poly(const Matrix& a);

/// P = sum_k coeffs[k] x^k with every coeffs[k] an n x m matrix over Q.
/// The top coefficient is nonzero unless P itself is zero.
struct CanonicalPresentation {
    std::vector<Matrix> coeffs;

    std::size_t degree() const noexcept { return coeffs.size() - 1; }
    Matrix to_matrix() const;
};

CanonicalPresentation canonical_presentation(const Matrix& p);

/// sum_k P_k A^k.
Matrix right_eval(const Matrix& p, const Matrix& a);
/// sum_k A^k P_k.
Matrix left_eval(const Matrix& p, const Matrix& a);
/// q(A) by Horner's rule.
Matrix eval_poly(const Polynomial& q, const Matrix& a);

/// Monic invariant factors of xI - A, units included as 1; length n.
std::vector<Polynomial> similarity_invariants(const Matrix& a);
Polynomial minimal_poly(const Matrix& a);

/// Superdiagonal ones and bottom row (a_0 .. a_{k-1}) where
/// q(x) = x^k - sum a_j x^j, i.e. a_j = -coeff_j(q).
Matrix companion(const Polynomial& q);
/// alpha on the diagonal, ones on the superdiagonal.
Matrix hypercompanion(const Rational& alpha, std::size_t k);

struct SimilarityCertificate {
    Matrix s;
    Matrix s_inv;
    Matrix target;  ///< s_inv * A * s
};

/// Replays S S^-1 = I and S^-1 A S = target.
bool verify(const Matrix& a, const SimilarityCertificate& cert);

/// Some S with S^-1 A S = B, or nullopt when the similarity invariants differ.
std::optional<SimilarityCertificate> similar(const Matrix& a, const Matrix& b);

/// Elementary divisors of xI - A, in block order.
std::vector<PrimePower> similarity_elementary_divisors(const Matrix& a);

/// Direct sum of companion matrices of the elementary divisors.
SimilarityCertificate rcf(const Matrix& a);
/// Direct sum of hypercompanion matrices; every elementary divisor must be a
/// power of a linear polynomial.
SimilarityCertificate jordan(const Matrix& a);

}  // namespace canonform
