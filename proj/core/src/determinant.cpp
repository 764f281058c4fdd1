#include "canonform/determinant.hpp"

#include "canonform/perm.hpp"

namespace canonform {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square())
        throw Error(ErrorKind::NotSquare, std::string(what) + " of a " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " matrix");
}

Elem signed_unit(Ring ring, std::size_t exponent_sum) {
    return Elem::from_int(ring, exponent_sum % 2 == 0 ? 1 : -1);
}

// Fraction-free elimination; every division is exact in an integral domain.
Elem det_bareiss(Matrix m) {
    const std::size_t n = m.rows();
    const Ring ring = m.ring();
    Elem prev = Elem::one(ring);
    bool negate = false;
    for (std::size_t k = 1; k < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot <= n && m(pivot, k).is_zero()) ++pivot;
            if (pivot > n) return Elem::zero(ring);
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i <= n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Elem num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_div(num, prev);
            }
            m(i, k) = Elem::zero(ring);
        }
        prev = m(k, k);
    }
    return negate ? -m(n, n) : m(n, n);
}

Elem det_field(Matrix m) {
    const std::size_t n = m.rows();
    const Ring ring = m.ring();
    Elem result = Elem::one(ring);
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t pivot = k;
        while (pivot <= n && m(pivot, k).is_zero()) ++pivot;
        if (pivot > n) return Elem::zero(ring);
        if (pivot != k) {
            m.swap_rows(k, pivot);
            result = -result;
        }
        result *= m(k, k);
        const Elem inv = unit_inverse(m(k, k));
        for (std::size_t i = k + 1; i <= n; ++i) {
            if (m(i, k).is_zero()) continue;
            m.add_row_multiple(i, -(m(i, k) * inv), k);
        }
    }
    return result;
}

}  // namespace

Elem det_expansion(const Matrix& a) {
    require_square(a, "determinant");
    const std::size_t n = a.rows();
    if (n > kExpansionLimit)
        throw Error(ErrorKind::TooLargeForOracle, "permutation expansion limited to n <= " + std::to_string(kExpansionLimit));
    Elem total = Elem::zero(a.ring());
    for (const auto& f : all_permutations(n)) {
        Elem term = Elem::from_int(a.ring(), sign(f));
        for (std::size_t i = 1; i <= n && !term.is_zero(); ++i) term *= a(i, f(i));
        total += term;
    }
    return total;
}

Elem det(const Matrix& a) {
    require_square(a, "determinant");
    if (a.rows() == 1) return a(1, 1);
    return a.ring() == Ring::Q ? det_field(a) : det_bareiss(a);
}

std::vector<LaplaceTerm> laplace_terms(const Matrix& a, const Indices& fixed, Axis axis) {
    require_square(a, "Laplace expansion");
    const std::size_t n = a.rows();
    if (fixed.empty() || fixed.size() >= n)
        throw Error(ErrorKind::BadIndexSets, "Laplace expansion needs 1 <= |X| < n");
    const Indices checked = complement(complement(fixed, n), n);
    if (checked.size() != fixed.size()) throw Error(ErrorKind::BadIndexSets, "repeated index in fixed set");
    std::vector<LaplaceTerm> out;
    for (const Indices& y : subsets(n, checked.size())) {
        const Indices& rows = axis == Axis::Rows ? checked : y;
        const Indices& cols = axis == Axis::Rows ? y : checked;
        out.push_back({y, restricted_det_sum(a, rows, cols)});
    }
    return out;
}

Elem laplace(const Matrix& a, const Indices& fixed, Axis axis) {
    Elem total = Elem::zero(a.ring());
    for (const auto& t : laplace_terms(a, fixed, axis)) total += t.value;
    return total;
}

Elem restricted_det_sum(const Matrix& a, const Indices& x, const Indices& y) {
    require_square(a, "restricted determinant sum");
    if (x.size() != y.size()) throw Error(ErrorKind::SizeMismatch, "|X| must equal |Y|");
    if (x.empty() || x.size() >= a.rows()) throw Error(ErrorKind::BadIndexSets, "need 1 <= |X| < n");
    Matrix kept = submatrix_sets(a, x, y, SetMode::KeepKeep);
    Matrix dropped = submatrix_sets(a, x, y, SetMode::DropDrop);
    if (kept.rows() != x.size()) throw Error(ErrorKind::BadIndexSets, "index sets must not repeat");
    return signed_unit(a.ring(), index_sum(x) + index_sum(y)) * det(kept) * det(dropped);
}

Matrix cofactor_matrix(const Matrix& a) {
    require_square(a, "cofactor matrix");
    const std::size_t n = a.rows();
    Matrix c(a.ring(), n, n);
    if (n == 1) {
        c(1, 1) = Elem::one(a.ring());
        return c;
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            c(i, j) = signed_unit(a.ring(), i + j) * det(submatrix_sets(a, {i}, {j}, SetMode::DropDrop));
    return c;
}

Matrix adjugate(const Matrix& a) { return transpose(cofactor_matrix(a)); }

Matrix cramer_solve(const Matrix& a_in, const Matrix& y_in) {
    require_square(a_in, "Cramer's rule");
    if (y_in.rows() != a_in.rows() || y_in.cols() != 1)
        throw Error(ErrorKind::ShapeMismatch, "right-hand side must be n x 1");
    if (a_in.ring() != y_in.ring()) throw Error(ErrorKind::RingMismatch, "A and y over different rings");
    const Ring ring = a_in.ring() == Ring::Z ? Ring::Q : a_in.ring();
    const Matrix a = lift(a_in, ring);
    const Matrix y = lift(y_in, ring);
    const Elem d = det(a);
    if (d.is_zero()) throw Error(ErrorKind::SingularMatrix, "det(A) = 0");
    const std::size_t n = a.rows();
    Matrix x(ring, n, 1);
    for (std::size_t i = 1; i <= n; ++i) {
        Matrix replaced = a;
        for (std::size_t k = 1; k <= n; ++k) replaced(k, i) = y(k, 1);
        auto [q, r] = divmod(det(replaced), d);
        if (!r.is_zero())
            throw Error(ErrorKind::NotAUnit, "det(A) = " + to_string(d) + " does not divide the Cramer numerator");
        x(i, 1) = q;
    }
    return x;
}

CauchyBinetResult minor_of_product(const Matrix& a, const Matrix& b, const Indices& rows, const Indices& cols) {
    if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "A and B over different rings");
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "inner dimensions differ");
    if (rows.size() != cols.size() || rows.empty())
        throw Error(ErrorKind::ShapeMismatch, "minor needs |G| = |H| >= 1");
    const std::size_t k = rows.size();
    const Matrix c = a * b;
    CauchyBinetResult out{det(submatrix_sets(c, rows, cols, SetMode::KeepKeep)), {}};
    Elem sum = Elem::zero(a.ring());
    for (const Indices& f : subsets(a.cols(), k)) {
        Elem v = det(submatrix_sets(a, rows, f, SetMode::KeepKeep)) * det(submatrix_sets(b, f, cols, SetMode::KeepKeep));
        sum += v;
        out.terms.push_back({f, std::move(v)});
    }
    if (!(sum == out.minor))
        throw Error(ErrorKind::Internal, "Cauchy-Binet mismatch: " + to_string(out.minor) + " vs " + to_string(sum));
    return out;
}

std::size_t rank_by_minors(const Matrix& a) {
    if (a.rows() * a.cols() > kRankOracleEntries)
        throw Error(ErrorKind::TooLargeForOracle, "minor enumeration limited to " + std::to_string(kRankOracleEntries) + " entries");
    for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k)
        for (const Indices& g : subsets(a.rows(), k))
            for (const Indices& h : subsets(a.cols(), k))
                if (!det(submatrix(a, g, h)).is_zero()) return k;
    return 0;
}

Matrix inverse(const Matrix& a) {
    require_square(a, "inverse");
    const Elem d = det(a);
    if (!d.is_unit()) throw Error(ErrorKind::NotAUnit, "det(A) = " + to_string(d) + " is not a unit");
    return unit_inverse(d) * adjugate(a);
}

Elem trace(const Matrix& a) {
    require_square(a, "trace");
    Elem t = Elem::zero(a.ring());
    for (std::size_t i = 1; i <= a.rows(); ++i) t += a(i, i);
    return t;
}

}  // namespace canonform
