#pragma once

#include <vector>

#include "canonform/hermite.hpp"

namespace canonform {

/// P A Q = D with P, Q unimodular. `p_inv` and `q_inv` are tracked alongside
/// so callers never need to invert a polynomial matrix.
struct SmithResult {
    Matrix p;
    Matrix q;
    Matrix d;
    std::vector<Elem> diag;  ///< d_1 .. d_r
    std::size_t rank = 0;
    Matrix p_inv;
    Matrix q_inv;
};

/// Some diagonal form P A Q = D; no divisibility between the entries.
SmithResult diagonalize(const Matrix& a);

struct Smith2x2 {
    Matrix p;  ///< [[1, 1], [-c, 1-c]], c = t d2 / delta
    Matrix q;  ///< [[s, -d2/delta], [t, d1/delta]]
    Matrix p_inv;
    Matrix q_inv;
    Elem delta;   ///< gcd(d1, d2)
    Elem lambda;  ///< d1 d2 / delta
};

/// p * diag(d1, d2) * q = diag(delta, lambda).
Smith2x2 smith_2x2(const Elem& d1, const Elem& d2);

/// Diagonal form whose first entry divides all the others.
SmithResult weak_smith(const Matrix& a);

/// Smith form: d_1 | d_2 | ... | d_r, every d_i a canonical associate.
SmithResult smith(const Matrix& a);

}  // namespace canonform
