#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "canonform/domain.hpp"

namespace canonform {

/// 1-based index list. As a selector it may repeat or be unordered; as an
/// index set it is strictly increasing.
using Indices = std::vector<std::size_t>;

/// Dense m x n matrix over one ring, m, n >= 1. All indexing is 1-based.
class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols);  // zero matrix
    Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) { return {ring, rows, cols}; }
    static Matrix identity(Ring ring, std::size_t n);
    static Matrix from_rows(Ring ring, const std::vector<std::vector<Elem>>& rows);
    /// Integer literal convenience; entries are embedded into `ring`.
    static Matrix from_ints(Ring ring, std::initializer_list<std::initializer_list<long>> rows);
    /// Each string is parsed with the scalar grammar of `ring`.
    static Matrix from_strings(Ring ring, const std::vector<std::vector<std::string>>& rows);
    static Matrix diagonal(Ring ring, const std::vector<Elem>& diag);

    Ring ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Elem& operator()(std::size_t i, std::size_t j) const { return data_[offset(i, j)]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[offset(i, j)]; }
    /// Bounds-checked access; IndexOutOfRange on failure.
    const Elem& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Elem value);

    bool is_zero() const;
    bool is_diagonal() const;

    /// Row-major entries.
    const std::vector<Elem>& entries() const noexcept { return data_; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Elem& c, Matrix a);
    friend Matrix operator-(Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    // Row/column primitives used by the elimination routines.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += c * row j
    void add_row_multiple(std::size_t i, const Elem& c, std::size_t j);
    /// col i += c * col j
    void add_col_multiple(std::size_t i, const Elem& c, std::size_t j);
    void scale_row(std::size_t i, const Elem& u);
    void scale_col(std::size_t i, const Elem& u);

private:
    std::size_t offset(std::size_t i, std::size_t j) const { return (i - 1) * cols_ + (j - 1); }

    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix power(const Matrix& a, unsigned k);
/// Entrywise embedding into a larger ring (Z -> Q -> Q[x]).
Matrix lift(const Matrix& a, Ring to);
/// Q -> Z when every entry is an integer; InvalidArgument otherwise.
Matrix to_integer(const Matrix& a);

/// X[f|g]: Y(p, q) = X(f(p), g(q)). Selectors may repeat entries.
Matrix submatrix(const Matrix& x, const Indices& row_selector, const Indices& col_selector);

enum class SetMode { KeepKeep, DropDrop, KeepDrop, DropKeep };

/// X[a|b], X(a|b), X[a|b) and X(a|b]: "keep" selects the listed indices,
/// "drop" selects the complement, always in increasing order.
Matrix submatrix_sets(const Matrix& x, const Indices& rows, const Indices& cols, SetMode mode);

/// The increasing complement of `set` in {1..n}.
Indices complement(const Indices& set, std::size_t n);
/// All k-subsets of {1..n}, lexicographic.
std::vector<Indices> subsets(std::size_t n, std::size_t k);
/// Sum of the entries of an index set.
std::size_t index_sum(const Indices& set);

/// B (+) C, block diagonal; B and C square.
Matrix direct_sum(const Matrix& b, const Matrix& c);
/// A with A[X|Y] = B, A(X|Y) = C and zero elsewhere; |X| = |Y| = rows(B).
Matrix general_direct_sum(const Matrix& b, const Matrix& c, const Indices& x, const Indices& y);
/// B (+) C for non-square blocks, used for Theta padding.
Matrix block_diagonal(const Matrix& b, const Matrix& c);

// Matrix file format:
//   ring Z|Q|Q[x]
//   rows <m>
//   cols <n>
//   <m lines of n whitespace-separated scalars>
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);
Matrix read_matrix_file(const std::string& path);

/// Parses "Z", "Q" or "Q[x]".
Ring parse_ring(std::string_view name);

}  // namespace canonform
