#include "canonform/hermite.hpp"

#include <algorithm>

namespace canonform {

ElemOp ElemOp::swap(Axis axis, std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "swap needs distinct indices");
    return {Kind::Swap, axis, i, j, Elem()};
}

ElemOp ElemOp::add_mul(Axis axis, std::size_t target, Elem c, std::size_t source) {
    if (target == source) throw Error(ErrorKind::InvalidArgument, "add-multiple needs distinct indices");
    return {Kind::AddMul, axis, target, source, std::move(c)};
}

ElemOp ElemOp::scale(Axis axis, std::size_t i, Elem unit) {
    if (!unit.is_unit()) throw Error(ErrorKind::NotAUnit, "scale factor " + to_string(unit) + " is not a unit");
    return {Kind::Scale, axis, i, 0, std::move(unit)};
}

namespace {

void check_op(const ElemOp& op, std::size_t lines, Ring ring) {
    auto in_range = [&](std::size_t k) { return k >= 1 && k <= lines; };
    if (!in_range(op.i) || (op.kind != ElemOp::Kind::Scale && !in_range(op.j)))
        throw Error(ErrorKind::IndexOutOfRange, "elementary operation index outside 1.." + std::to_string(lines));
    if (op.kind != ElemOp::Kind::Swap && op.c.ring() != ring)
        throw Error(ErrorKind::RingMismatch, "operation coefficient ring differs from matrix ring");
    if (op.kind == ElemOp::Kind::Scale && !op.c.is_unit())
        throw Error(ErrorKind::NotAUnit, "scale factor " + to_string(op.c) + " is not a unit");
}

// Applies op in place without validation.
void apply_rows(Matrix& m, const ElemOp& op) {
    switch (op.kind) {
        case ElemOp::Kind::Swap: m.swap_rows(op.i, op.j); break;
        case ElemOp::Kind::AddMul: m.add_row_multiple(op.i, op.c, op.j); break;
        case ElemOp::Kind::Scale: m.scale_row(op.i, op.c); break;
    }
}

void apply_cols(Matrix& m, const ElemOp& op) {
    switch (op.kind) {
        case ElemOp::Kind::Swap: m.swap_cols(op.i, op.j); break;
        case ElemOp::Kind::AddMul: m.add_col_multiple(op.i, op.c, op.j); break;
        case ElemOp::Kind::Scale: m.scale_col(op.i, op.c); break;
    }
}

// m <- m * E^-1 where E is the row-operation matrix of op.
void right_multiply_by_inverse_row_op(Matrix& m, const ElemOp& op) {
    switch (op.kind) {
        case ElemOp::Kind::Swap: m.swap_cols(op.i, op.j); break;
        case ElemOp::Kind::AddMul: m.add_col_multiple(op.j, -op.c, op.i); break;
        case ElemOp::Kind::Scale: m.scale_col(op.i, unit_inverse(op.c)); break;
    }
}

// m <- C^-1 * m where C is the column-operation matrix of op.
void left_multiply_by_inverse_col_op(Matrix& m, const ElemOp& op) {
    switch (op.kind) {
        case ElemOp::Kind::Swap: m.swap_rows(op.i, op.j); break;
        case ElemOp::Kind::AddMul: m.add_row_multiple(op.j, -op.c, op.i); break;
        case ElemOp::Kind::Scale: m.scale_row(op.i, unit_inverse(op.c)); break;
    }
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 1; j <= b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

}  // namespace

Matrix apply_op(const Matrix& a, const ElemOp& op) {
    Matrix out = a;
    if (op.axis == Axis::Rows) {
        check_op(op, a.rows(), a.ring());
        apply_rows(out, op);
    } else {
        check_op(op, a.cols(), a.ring());
        apply_cols(out, op);
    }
    return out;
}

Matrix op_matrix(const ElemOp& op, Ring ring, std::size_t n) {
    return apply_op(Matrix::identity(ring, n), op);
}

ElemOp inverse_op(const ElemOp& op) {
    switch (op.kind) {
        case ElemOp::Kind::Swap: return op;
        case ElemOp::Kind::AddMul: return ElemOp::add_mul(op.axis, op.i, -op.c, op.j);
        case ElemOp::Kind::Scale: return ElemOp::scale(op.axis, op.i, unit_inverse(op.c));
    }
    throw Error(ErrorKind::Internal, "bad operation kind");
}

std::string to_string(const ElemOp& op) {
    const char* line = op.axis == Axis::Rows ? "R" : "C";
    const std::string i = std::to_string(op.i);
    const std::string j = std::to_string(op.j);
    switch (op.kind) {
        case ElemOp::Kind::Swap: return std::string(line) + "[" + i + "][" + j + "]";
        case ElemOp::Kind::AddMul: return std::string(line) + "[" + i + "]+(" + to_string(op.c) + ")[" + j + "]";
        case ElemOp::Kind::Scale: return std::string(line) + "(" + to_string(op.c) + ")[" + i + "]";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Reduction

Reduction::Reduction(Matrix original)
    : work_(std::move(original)),
      left_(Matrix::identity(work_.ring(), work_.rows())),
      left_inv_(left_),
      right_(Matrix::identity(work_.ring(), work_.cols())),
      right_inv_(right_) {}

void Reduction::apply(const ElemOp& op) {
    if (op.axis == Axis::Rows) {
        check_op(op, work_.rows(), ring());
        apply_rows(work_, op);
        apply_rows(left_, op);
        right_multiply_by_inverse_row_op(left_inv_, op);
    } else {
        check_op(op, work_.cols(), ring());
        apply_cols(work_, op);
        apply_cols(right_, op);
        left_multiply_by_inverse_col_op(right_inv_, op);
    }
    ops_.push_back(op);
}

void Reduction::apply_left(const Matrix& p, const Matrix& p_inv) {
    work_ = p * work_;
    left_ = p * left_;
    left_inv_ = left_inv_ * p_inv;
}

void Reduction::apply_right(const Matrix& q, const Matrix& q_inv) {
    work_ = work_ * q;
    right_ = right_ * q;
    right_inv_ = q_inv * right_inv_;
}

bool Reduction::clear_column(std::size_t col, const Indices& rows, std::size_t target) {
    if (std::find(rows.begin(), rows.end(), target) == rows.end())
        throw Error(ErrorKind::InvalidArgument, "target row must be one of the listed rows");
    bool any = false;
    for (std::size_t r : rows) {
        if (r < 1 || r > work_.rows()) throw Error(ErrorKind::IndexOutOfRange, "row outside matrix");
        any = any || !work_(r, col).is_zero();
    }
    if (!any) return false;
    for (std::size_t r : rows) {
        if (r == target) continue;
        // Euclid on the pair (target, r): r -= q target, exchanging only while a
        // remainder survives, so a pivot that already divides r stays put.
        while (!work_(r, col).is_zero()) {
            if (!work_(target, col).is_zero()) {
                Elem q = divmod(work_(r, col), work_(target, col)).quotient;
                if (!q.is_zero()) apply(ElemOp::add_mul(Axis::Rows, r, -q, target));
                if (work_(r, col).is_zero()) break;
            }
            apply(ElemOp::swap(Axis::Rows, target, r));
        }
    }
    return true;
}

bool Reduction::clear_row(std::size_t row, const Indices& cols, std::size_t target) {
    if (std::find(cols.begin(), cols.end(), target) == cols.end())
        throw Error(ErrorKind::InvalidArgument, "target column must be one of the listed columns");
    bool any = false;
    for (std::size_t c : cols) {
        if (c < 1 || c > work_.cols()) throw Error(ErrorKind::IndexOutOfRange, "column outside matrix");
        any = any || !work_(row, c).is_zero();
    }
    if (!any) return false;
    for (std::size_t c : cols) {
        if (c == target) continue;
        while (!work_(row, c).is_zero()) {
            if (!work_(row, target).is_zero()) {
                Elem q = divmod(work_(row, c), work_(row, target)).quotient;
                if (!q.is_zero()) apply(ElemOp::add_mul(Axis::Cols, c, -q, target));
                if (work_(row, c).is_zero()) break;
            }
            apply(ElemOp::swap(Axis::Cols, target, c));
        }
    }
    return true;
}

ClearedColumn clear_column(const Matrix& a, std::size_t j, const Indices& rows, std::size_t s) {
    if (j < 1 || j > a.cols()) throw Error(ErrorKind::IndexOutOfRange, "column outside matrix");
    Reduction red(a);
    if (!red.clear_column(j, rows, s))
        throw Error(ErrorKind::AllZeroColumn, "no nonzero entry among the listed rows of column " + std::to_string(j));
    return {red.left(), red.work()};
}

// ---------------------------------------------------------------------------
// Hermite forms

namespace {

HermiteResult finish(const Reduction& red, Indices primary) {
    const std::size_t rank = primary.size();
    return {red.left(), red.left_inv(), red.work(), std::move(primary), rank, red.ops()};
}

Indices echelon(Reduction& red) {
    const Matrix& w = red.work();
    Indices primary;
    std::size_t r = 0;
    for (std::size_t j = 1; j <= w.cols() && r < w.rows(); ++j) {
        Indices rows;
        for (std::size_t i = r + 1; i <= w.rows(); ++i) rows.push_back(i);
        if (!red.clear_column(j, rows, r + 1)) continue;
        ++r;
        primary.push_back(j);
    }
    return primary;
}

}  // namespace

HermiteResult hermite_form(const Matrix& a) {
    Reduction red(a);
    Indices primary = echelon(red);
    return finish(red, std::move(primary));
}

HermiteResult hermite_canonical(const Matrix& a) {
    Reduction red(a);
    Indices primary = echelon(red);
    // Associates phase for every primary entry, then residues left to right.
    for (std::size_t t = 1; t <= primary.size(); ++t) {
        Elem u = canonical_associate(red.work()(t, primary[t - 1])).unit;
        if (!u.is_one()) red.apply(ElemOp::scale(Axis::Rows, t, std::move(u)));
    }
    for (std::size_t t = 1; t <= primary.size(); ++t) {
        const std::size_t jt = primary[t - 1];
        for (std::size_t i = 1; i < t; ++i) {
            Elem q = divmod(red.work()(i, jt), red.work()(t, jt)).quotient;
            if (!q.is_zero()) red.apply(ElemOp::add_mul(Axis::Rows, i, -q, t));
        }
    }
    return finish(red, std::move(primary));
}

ColumnHermiteResult column_hermite_canonical(const Matrix& a) {
    HermiteResult t = hermite_canonical(transpose(a));
    return {transpose(t.q), transpose(t.h), t.primary_cols, t.rank};
}

HermiteCheck is_hermite_canonical(const Matrix& h) {
    HermiteShape shape;
    bool seen_zero_row = false;
    for (std::size_t i = 1; i <= h.rows(); ++i) {
        std::size_t lead = 0;
        for (std::size_t j = 1; j <= h.cols() && lead == 0; ++j)
            if (!h(i, j).is_zero()) lead = j;
        if (lead == 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return {std::nullopt, "nonzero row " + std::to_string(i) + " below a zero row"};
        if (!shape.primary_cols.empty() && lead <= shape.primary_cols.back())
            return {std::nullopt, "primary column of row " + std::to_string(i) + " does not increase"};
        shape.primary_cols.push_back(lead);
    }
    shape.rank = shape.primary_cols.size();
    for (std::size_t t = 1; t <= shape.rank; ++t) {
        const std::size_t jt = shape.primary_cols[t - 1];
        const Elem& p = h(t, jt);
        if (!(canonical(p) == p))
            return {std::nullopt, "primary entry " + to_string(p) + " in row " + std::to_string(t) +
                                      " is not a canonical associate"};
        for (std::size_t i = 1; i < t; ++i) {
            const Elem& e = h(i, jt);
            if (!(canonical_residue(e, p) == e))
                return {std::nullopt, "entry " + to_string(e) + " above primary entry " + to_string(p) +
                                          " is not a canonical residue"};
        }
    }
    return {std::move(shape), {}};
}

std::optional<Solution> solve(const Matrix& a_in, const Matrix& y_in) {
    if (a_in.ring() == Ring::QX) throw Error(ErrorKind::UnsupportedRing, "solve works over Q (and Z lifted to Q)");
    if (a_in.ring() != y_in.ring()) throw Error(ErrorKind::RingMismatch, "A and y over different rings");
    if (y_in.rows() != a_in.rows() || y_in.cols() != 1)
        throw Error(ErrorKind::ShapeMismatch, "right-hand side must be m x 1");
    const Matrix a = lift(a_in, Ring::Q);
    const std::size_t n = a.cols();
    const HermiteResult hr = hermite_canonical(hconcat(a, lift(y_in, Ring::Q)));
    if (!hr.primary_cols.empty() && hr.primary_cols.back() == n + 1) return std::nullopt;

    Matrix particular(Ring::Q, n, 1);
    for (std::size_t t = 1; t <= hr.rank; ++t) particular(hr.primary_cols[t - 1], 1) = hr.h(t, n + 1);

    std::vector<Matrix> basis;
    std::vector<bool> is_primary(n + 1, false);
    for (auto j : hr.primary_cols) is_primary[j] = true;
    for (std::size_t k = 1; k <= n; ++k) {
        if (is_primary[k]) continue;
        Matrix v(Ring::Q, n, 1);
        v(k, 1) = Elem::one(Ring::Q);
        for (std::size_t t = 1; t <= hr.rank; ++t) v(hr.primary_cols[t - 1], 1) = -hr.h(t, k);
        basis.push_back(std::move(v));
    }
    return Solution{std::move(particular), std::move(basis)};
}

std::vector<ElemOp> decompose_unit(const Matrix& u) {
    if (!u.is_square()) throw Error(ErrorKind::NotSquare, "unit decomposition needs a square matrix");
    if (!det(u).is_unit()) throw Error(ErrorKind::NotAUnit, "matrix is not unimodular");
    // E_k ... E_1 U = I, so U = E_1^-1 ... E_k^-1.
    HermiteResult hr = hermite_canonical(u);
    if (!(hr.h == Matrix::identity(u.ring(), u.rows())))
        throw Error(ErrorKind::Internal, "Hermite form of a unit is not the identity");
    std::vector<ElemOp> word;
    word.reserve(hr.ops.size());
    for (auto it = hr.ops.rbegin(); it != hr.ops.rend(); ++it) word.push_back(inverse_op(*it));
    return word;
}

bool stabilizer_shape(const Matrix& p, std::size_t r) {
    if (!p.is_square() || r > p.rows()) return false;
    const std::size_t n = p.rows();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= r; ++j) {
            const bool want_one = i == j;
            if (want_one ? !p(i, j).is_one() : !p(i, j).is_zero()) return false;
        }
    if (r == n) return true;
    Indices lead;
    for (std::size_t i = 1; i <= r; ++i) lead.push_back(i);
    const Matrix tail = r == 0 ? p : submatrix_sets(p, lead, lead, SetMode::DropDrop);
    return det(tail).is_unit();
}

}  // namespace canonform
