#include "canonform/smith.hpp"

#include <algorithm>

namespace canonform {

namespace {

Indices range(std::size_t from, std::size_t to) {
    Indices out;
    for (std::size_t i = from; i <= to; ++i) out.push_back(i);
    return out;
}

// Pivot by pivot: clear column k below the pivot, then row k to its right,
// until both are clean. Returns the rank.
std::size_t diagonalize_in_place(Reduction& red) {
    const std::size_t m = red.work().rows();
    const std::size_t n = red.work().cols();
    std::size_t k = 1;
    for (; k <= std::min(m, n); ++k) {
        std::size_t c = 0;
        for (std::size_t j = k; j <= n && c == 0; ++j)
            for (std::size_t i = k; i <= m; ++i)
                if (!red.work()(i, j).is_zero()) {
                    c = j;
                    break;
                }
        if (c == 0) break;
        if (c != k) red.apply(ElemOp::swap(Axis::Cols, k, c));
        const Indices rows = range(k, m);
        const Indices cols = range(k, n);
        for (;;) {
            red.clear_column(k, rows, k);
            bool row_clean = true;
            for (std::size_t j = k + 1; j <= n && row_clean; ++j) row_clean = red.work()(k, j).is_zero();
            if (row_clean) break;
            red.clear_row(k, cols, k);
            bool col_clean = true;
            for (std::size_t i = k + 1; i <= m && col_clean; ++i) col_clean = red.work()(i, k).is_zero();
            if (col_clean) break;
        }
    }
    return k - 1;
}

Matrix embed(const Matrix& block, std::size_t n, std::size_t k, std::size_t i) {
    if (n == 2) return block;
    return general_direct_sum(block, Matrix::identity(block.ring(), n - 2), {k, i}, {k, i});
}

// Replaces (d_k, d_i) by (gcd, lcm) when d_k does not already divide d_i.
void merge(Reduction& red, std::size_t k, std::size_t i) {
    const Elem d1 = red.work()(k, k);
    const Elem di = red.work()(i, i);
    if (divides(d1, di)) return;
    const Integer before = valuation(d1);
    Smith2x2 step = smith_2x2(d1, di);
    const std::size_t m = red.work().rows();
    const std::size_t n = red.work().cols();
    red.apply_left(embed(step.p, m, k, i), embed(step.p_inv, m, k, i));
    red.apply_right(embed(step.q, n, k, i), embed(step.q_inv, n, k, i));
    if (!(valuation(red.work()(k, k)) < before))
        throw Error(ErrorKind::Internal, "Smith step did not decrease the valuation of " + to_string(d1));
}

SmithResult finish(const Reduction& red, std::size_t rank) {
    std::vector<Elem> diag;
    for (std::size_t k = 1; k <= rank; ++k) diag.push_back(red.work()(k, k));
    return {red.left(), red.right(), red.work(), std::move(diag), rank, red.left_inv(), red.right_inv()};
}

}  // namespace

SmithResult diagonalize(const Matrix& a) {
    Reduction red(a);
    const std::size_t rank = diagonalize_in_place(red);
    return finish(red, rank);
}

Smith2x2 smith_2x2(const Elem& d1, const Elem& d2) {
    if (d1.is_zero() || d2.is_zero()) throw Error(ErrorKind::ZeroArgument, "2x2 Smith step needs nonzero entries");
    const Ring ring = d1.ring();
    const auto [delta, s, t] = egcd(d1, d2);
    const Elem one = Elem::one(ring);
    const Elem a1 = exact_div(d1, delta);
    const Elem a2 = exact_div(d2, delta);
    const Elem c = t * a2;
    Smith2x2 out{Matrix(ring, 2, 2, {one, one, -c, one - c}),
                 Matrix(ring, 2, 2, {s, -a2, t, a1}),
                 Matrix(ring, 2, 2, {one - c, -one, c, one}),
                 Matrix(ring, 2, 2, {a1, a2, -t, s}),
                 delta,
                 d1 * a2};
    return out;
}

SmithResult weak_smith(const Matrix& a) {
    Reduction red(a);
    const std::size_t rank = diagonalize_in_place(red);
    for (std::size_t i = 2; i <= rank; ++i) merge(red, 1, i);
    return finish(red, rank);
}

SmithResult smith(const Matrix& a) {
    Reduction red(a);
    const std::size_t rank = diagonalize_in_place(red);
    for (std::size_t k = 1; k < rank; ++k)
        for (std::size_t i = k + 1; i <= rank; ++i) merge(red, k, i);
    for (std::size_t k = 1; k <= rank; ++k) {
        Elem u = canonical_associate(red.work()(k, k)).unit;
        if (!u.is_one()) red.apply(ElemOp::scale(Axis::Rows, k, std::move(u)));
    }
    return finish(red, rank);
}

}  // namespace canonform
