#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "canonform/determinant.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

/// One elementary row or column operation.
///   Swap:   exchange lines i and j                    (type I)
///   AddMul: line i += c * line j, i != j              (type II)
///   Scale:  line i *= u, u a unit                     (type III)
struct ElemOp {
    enum class Kind { Swap, AddMul, Scale };

    Kind kind;
    Axis axis;
    std::size_t i;
    std::size_t j;  ///< unused for Scale
    Elem c;         ///< multiplier for AddMul, unit for Scale

    static ElemOp swap(Axis axis, std::size_t i, std::size_t j);
    static ElemOp add_mul(Axis axis, std::size_t target, Elem c, std::size_t source);
    static ElemOp scale(Axis axis, std::size_t i, Elem unit);

    friend bool operator==(const ElemOp&, const ElemOp&) = default;
};

/// Rows: op_matrix(op) * A. Columns: A * op_matrix(op).
Matrix apply_op(const Matrix& a, const ElemOp& op);
/// The n x n matrix obtained by applying `op` to the identity.
Matrix op_matrix(const ElemOp& op, Ring ring, std::size_t n);
ElemOp inverse_op(const ElemOp& op);
std::string to_string(const ElemOp& op);

/// A matrix under reduction together with the accumulated transforms. Row
/// operations act on `work` from the left and are mirrored into `left`
/// (left * original = work) and `left_inv`; column operations likewise into
/// `right` and `right_inv` (work = left * original * right).
class Reduction {
public:
    explicit Reduction(Matrix original);

    const Matrix& work() const noexcept { return work_; }
    const Matrix& left() const noexcept { return left_; }
    const Matrix& left_inv() const noexcept { return left_inv_; }
    const Matrix& right() const noexcept { return right_; }
    const Matrix& right_inv() const noexcept { return right_inv_; }
    const std::vector<ElemOp>& ops() const noexcept { return ops_; }

    void apply(const ElemOp& op);
    /// Multiplies the left transform by an explicit unimodular matrix with a
    /// known inverse (used for 2x2 blocks embedded by general direct sums).
    void apply_left(const Matrix& p, const Matrix& p_inv);
    void apply_right(const Matrix& q, const Matrix& q_inv);

    /// Type I/II row operations turning column `col` restricted to `rows` into
    /// (.., d, .., 0, ..) with d (an associate of the gcd) at row `target`.
    /// Returns false when every listed entry is zero.
    bool clear_column(std::size_t col, const Indices& rows, std::size_t target);
    /// Column analogue of clear_column.
    bool clear_row(std::size_t row, const Indices& cols, std::size_t target);

    Ring ring() const noexcept { return work_.ring(); }

private:
    Matrix work_;
    Matrix left_;
    Matrix left_inv_;
    Matrix right_;
    Matrix right_inv_;
    std::vector<ElemOp> ops_;
};

struct ClearedColumn {
    Matrix q;        ///< unimodular, product of type I and II row matrices
    Matrix reduced;  ///< q * A
};

/// Moves a gcd of the listed entries of column j into row s and zeroes the
/// other listed rows with the Euclidean algorithm; unlisted rows are
/// untouched. The gcd is correct up to a unit since no scaling is used.
ClearedColumn clear_column(const Matrix& a, std::size_t j, const Indices& rows, std::size_t s);

struct HermiteResult {
    Matrix q;       ///< unimodular, q * A = h
    Matrix q_inv;
    Matrix h;
    Indices primary_cols;
    std::size_t rank = 0;
    std::vector<ElemOp> ops;  ///< row operations in application order
};

/// Row echelon (Hermite) form without SDR normalization.
HermiteResult hermite_form(const Matrix& a);
/// Hermite canonical form: primary entries are canonical associates, entries
/// above them canonical residues modulo the primary entry.
HermiteResult hermite_canonical(const Matrix& a);

struct ColumnHermiteResult {
    Matrix q;  ///< unimodular, A * q = h
    Matrix h;
    Indices primary_rows;
    std::size_t rank = 0;
};

ColumnHermiteResult column_hermite_canonical(const Matrix& a);

struct HermiteShape {
    std::size_t rank = 0;
    Indices primary_cols;
};

struct HermiteCheck {
    std::optional<HermiteShape> shape;
    std::string reason;  ///< set when rejected

    explicit operator bool() const noexcept { return shape.has_value(); }
};

HermiteCheck is_hermite_canonical(const Matrix& h);

struct Solution {
    Matrix particular;
    std::vector<Matrix> null_basis;
};

/// General solution of A x = y over Q (integer input is lifted). Returns
/// nullopt for an inconsistent system. Q[x] input is rejected.
std::optional<Solution> solve(const Matrix& a, const Matrix& y);

/// A word of elementary row operations which, applied in order to the
/// identity, reproduces the unit matrix U.
std::vector<ElemOp> decompose_unit(const Matrix& u);

/// True iff P = [[I_r, *], [0, U]] with U a unit block.
bool stabilizer_shape(const Matrix& p, std::size_t r);

}  // namespace canonform
