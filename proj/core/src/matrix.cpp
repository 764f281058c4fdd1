#include "canonform/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace canonform {

namespace {

void require_shape(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::ShapeMismatch, what);
}

void require_ring(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring())
        throw Error(ErrorKind::RingMismatch, "matrices over " + std::string(to_string(a.ring())) +
                                                 " and " + std::string(to_string(b.ring())));
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Elem::zero(ring)) {
    if (rows == 0 || cols == 0) throw Error(ErrorKind::ShapeMismatch, "empty matrices are not supported");
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : ring_(ring), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error(ErrorKind::ShapeMismatch, "empty matrices are not supported");
    if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
    for (const auto& e : data_)
        if (e.ring() != ring) throw Error(ErrorKind::RingMismatch, "entry ring differs from matrix ring");
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = Elem::one(ring);
    return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(ErrorKind::ShapeMismatch, "empty matrix");
    std::vector<Elem> data;
    data.reserve(rows.size() * rows.front().size());
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(ring, rows.size(), rows.front().size(), std::move(data));
}

Matrix Matrix::from_ints(Ring ring, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Elem>> out;
    for (const auto& r : rows) {
        auto& row = out.emplace_back();
        for (long v : r) row.push_back(Elem::from_int(ring, v));
    }
    return from_rows(ring, out);
}

Matrix Matrix::from_strings(Ring ring, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Elem>> out;
    for (const auto& r : rows) {
        auto& row = out.emplace_back();
        for (const auto& s : r) row.push_back(parse_scalar(s, ring));
    }
    return from_rows(ring, out);
}

Matrix Matrix::diagonal(Ring ring, const std::vector<Elem>& diag) {
    Matrix m(ring, diag.size(), diag.size());
    for (std::size_t i = 1; i <= diag.size(); ++i) m.set(i, i, diag[i - 1]);
    return m;
}

const Elem& Matrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw Error(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") outside " + std::to_string(rows_) + "x" +
                                                    std::to_string(cols_));
    return (*this)(i, j);
}

void Matrix::set(std::size_t i, std::size_t j, Elem value) {
    at(i, j);
    if (value.ring() != ring_) throw Error(ErrorKind::RingMismatch, "entry ring differs from matrix ring");
    (*this)(i, j) = std::move(value);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Elem& e) { return e.is_zero(); });
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_ring(*this, other);
    require_shape(rows_ == other.rows_ && cols_ == other.cols_, "adding matrices of different shape");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_ring(*this, other);
    require_shape(rows_ == other.rows_ && cols_ == other.cols_, "subtracting matrices of different shape");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_ring(a, b);
    require_shape(a.cols_ == b.rows_, "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                          " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix d(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 1; i <= a.rows_; ++i)
        for (std::size_t k = 1; k <= a.cols_; ++k) {
            const Elem& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 1; j <= b.cols_; ++j) d(i, j) += aik * b(k, j);
        }
    return d;
}

Matrix operator*(const Elem& c, Matrix a) {
    if (c.ring() != a.ring_) throw Error(ErrorKind::RingMismatch, "scalar ring differs from matrix ring");
    for (auto& e : a.data_) e *= c;
    return a;
}

Matrix operator-(Matrix a) {
    for (auto& e : a.data_) e = -e;
    return a;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 1; k <= cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 1; k <= rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Matrix::add_row_multiple(std::size_t i, const Elem& c, std::size_t j) {
    if (c.is_zero()) return;
    for (std::size_t k = 1; k <= cols_; ++k) {
        const Elem& src = (*this)(j, k);
        if (!src.is_zero()) (*this)(i, k) += c * src;
    }
}

void Matrix::add_col_multiple(std::size_t i, const Elem& c, std::size_t j) {
    if (c.is_zero()) return;
    for (std::size_t k = 1; k <= rows_; ++k) {
        const Elem& src = (*this)(k, j);
        if (!src.is_zero()) (*this)(k, i) += c * src;
    }
}

void Matrix::scale_row(std::size_t i, const Elem& u) {
    for (std::size_t k = 1; k <= cols_; ++k) (*this)(i, k) *= u;
}

void Matrix::scale_col(std::size_t i, const Elem& u) {
    for (std::size_t k = 1; k <= rows_; ++k) (*this)(k, i) *= u;
}

Matrix multiply(const Matrix& a, const Matrix& b) { return a * b; }

Matrix transpose(const Matrix& a) {
    Matrix t(a.ring(), a.cols(), a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Matrix power(const Matrix& a, unsigned k) {
    if (!a.is_square()) throw Error(ErrorKind::NotSquare, "matrix power of a non-square matrix");
    Matrix result = Matrix::identity(a.ring(), a.rows());
    for (unsigned i = 0; i < k; ++i) result = result * a;
    return result;
}

Matrix lift(const Matrix& a, Ring to) {
    if (a.ring() == to) return a;
    std::vector<Elem> data;
    data.reserve(a.entries().size());
    for (const auto& e : a.entries()) data.push_back(Elem::lift(e, to));
    return Matrix(to, a.rows(), a.cols(), std::move(data));
}

Matrix to_integer(const Matrix& a) {
    if (a.ring() == Ring::Z) return a;
    std::vector<Elem> data;
    for (const auto& e : a.entries()) {
        Rational q;
        if (e.ring() == Ring::Q) {
            q = e.as_rat();
        } else {
            const Polynomial& p = e.as_poly();
            if (!p.is_constant()) throw Error(ErrorKind::InvalidArgument, "non-constant entry " + to_string(e));
            q = p.coeff(0);
        }
        if (q.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "non-integral entry " + to_string(e));
        data.emplace_back(Integer(q.get_num()));
    }
    return Matrix(Ring::Z, a.rows(), a.cols(), std::move(data));
}

Matrix submatrix(const Matrix& x, const Indices& row_selector, const Indices& col_selector) {
    if (row_selector.empty() || col_selector.empty()) throw Error(ErrorKind::EmptyResult, "empty selector");
    for (auto i : row_selector)
        if (i < 1 || i > x.rows()) throw Error(ErrorKind::IndexOutOfRange, "row selector out of range");
    for (auto j : col_selector)
        if (j < 1 || j > x.cols()) throw Error(ErrorKind::IndexOutOfRange, "column selector out of range");
    Matrix y(x.ring(), row_selector.size(), col_selector.size());
    for (std::size_t p = 1; p <= row_selector.size(); ++p)
        for (std::size_t q = 1; q <= col_selector.size(); ++q) y(p, q) = x(row_selector[p - 1], col_selector[q - 1]);
    return y;
}

Indices complement(const Indices& set, std::size_t n) {
    std::vector<bool> in(n + 1, false);
    for (auto i : set) {
        if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "index set entry outside 1.." + std::to_string(n));
        in[i] = true;
    }
    Indices out;
    for (std::size_t i = 1; i <= n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

namespace {

Indices checked_set(const Indices& set, std::size_t n) {
    Indices sorted = set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto i : sorted)
        if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "index set entry outside 1.." + std::to_string(n));
    return sorted;
}

}  // namespace

Matrix submatrix_sets(const Matrix& x, const Indices& rows, const Indices& cols, SetMode mode) {
    const bool keep_rows = mode == SetMode::KeepKeep || mode == SetMode::KeepDrop;
    const bool keep_cols = mode == SetMode::KeepKeep || mode == SetMode::DropKeep;
    Indices r = keep_rows ? checked_set(rows, x.rows()) : complement(checked_set(rows, x.rows()), x.rows());
    Indices c = keep_cols ? checked_set(cols, x.cols()) : complement(checked_set(cols, x.cols()), x.cols());
    if (r.empty() || c.empty()) throw Error(ErrorKind::EmptyResult, "submatrix selection is empty");
    return submatrix(x, r, c);
}

std::vector<Indices> subsets(std::size_t n, std::size_t k) {
    std::vector<Indices> out;
    if (k > n) return out;
    Indices cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{1});
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::size_t index_sum(const Indices& set) { return std::accumulate(set.begin(), set.end(), std::size_t{0}); }

Matrix block_diagonal(const Matrix& b, const Matrix& c) {
    require_ring(b, c);
    Matrix a(b.ring(), b.rows() + c.rows(), b.cols() + c.cols());
    for (std::size_t i = 1; i <= b.rows(); ++i)
        for (std::size_t j = 1; j <= b.cols(); ++j) a(i, j) = b(i, j);
    for (std::size_t i = 1; i <= c.rows(); ++i)
        for (std::size_t j = 1; j <= c.cols(); ++j) a(b.rows() + i, b.cols() + j) = c(i, j);
    return a;
}

Matrix direct_sum(const Matrix& b, const Matrix& c) {
    if (!b.is_square() || !c.is_square()) throw Error(ErrorKind::ShapeMismatch, "direct sum needs square blocks");
    return block_diagonal(b, c);
}

Matrix general_direct_sum(const Matrix& b, const Matrix& c, const Indices& x, const Indices& y) {
    require_ring(b, c);
    if (!b.is_square() || !c.is_square()) throw Error(ErrorKind::ShapeMismatch, "direct sum needs square blocks");
    const std::size_t r = b.rows();
    const std::size_t n = r + c.rows();
    if (x.size() != r || y.size() != r) throw Error(ErrorKind::BadIndexSets, "|X| and |Y| must equal the size of B");
    Indices xs = checked_set(x, n), ys = checked_set(y, n);
    if (xs.size() != r || ys.size() != r) throw Error(ErrorKind::BadIndexSets, "index sets must not repeat");
    Indices xc = complement(xs, n), yc = complement(ys, n);
    Matrix a(b.ring(), n, n);
    for (std::size_t p = 1; p <= r; ++p)
        for (std::size_t q = 1; q <= r; ++q) a(xs[p - 1], ys[q - 1]) = b(p, q);
    for (std::size_t p = 1; p <= xc.size(); ++p)
        for (std::size_t q = 1; q <= yc.size(); ++q) a(xc[p - 1], yc[q - 1]) = c(p, q);
    return a;
}

}  // namespace canonform
