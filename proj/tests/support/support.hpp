#pragma once

// Random instances and small independent oracles shared by the unit and
// acceptance tests. Everything is seeded; nothing here calls the reduction
// algorithms under test.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "canonform/matrix.hpp"

namespace testsupport {

using canonform::Elem;
using canonform::Integer;
using canonform::Matrix;
using canonform::Polynomial;
using canonform::Rational;
using canonform::Ring;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Polynomial random_poly(Rng& rng, long max_degree, long bound) {
    std::vector<Rational> c;
    const long deg = uniform(rng, 0, max_degree);
    for (long k = 0; k <= deg; ++k) c.emplace_back(uniform(rng, -bound, bound));
    return Polynomial(std::move(c));
}

// Z: |e| <= bound. Q: numerator |p| <= bound over 1..4. Q[x]: degree <= 2,
// integer coefficients in [-3, 3].
inline Elem random_elem(Rng& rng, Ring ring, long bound = 9) {
    switch (ring) {
        case Ring::Z: return Elem(Integer(uniform(rng, -bound, bound)));
        case Ring::Q: {
            Rational q(uniform(rng, -bound, bound), uniform(rng, 1, 4));
            q.canonicalize();
            return Elem(q);
        }
        case Ring::QX: return Elem(random_poly(rng, 2, 3));
    }
    return Elem();
}

inline Matrix random_matrix(Rng& rng, Ring ring, std::size_t m, std::size_t n, long bound = 9, double zero_prob = 0.2) {
    Matrix a(ring, m, n);
    std::bernoulli_distribution zero(zero_prob);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (!zero(rng)) a(i, j) = random_elem(rng, ring, bound);
    return a;
}

inline Elem random_unit(Rng& rng, Ring ring) {
    switch (ring) {
        case Ring::Z: return Elem::from_int(Ring::Z, uniform(rng, 0, 1) ? 1 : -1);
        case Ring::Q: return Elem(Rational(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 3)));
        case Ring::QX: return Elem(Polynomial(Rational(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 2))));
    }
    return Elem();
}

// A product of random elementary matrices; multipliers stay small so that
// entries remain desk-sized.
inline Matrix random_unimodular(Rng& rng, Ring ring, std::size_t n, std::size_t steps = 0) {
    Matrix u = Matrix::identity(ring, n);
    if (steps == 0) steps = 2 * n + 2;
    for (std::size_t s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
        auto j = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
        const long kind = uniform(rng, 0, 5);
        if (kind == 0) {
            if (i != j) u.swap_rows(i, j);
        } else if (kind == 1) {
            Elem unit = random_unit(rng, ring);
            u.scale_row(i, unit);
        } else if (i != j) {
            Elem c = ring == Ring::QX ? Elem(random_poly(rng, 1, 2)) : random_elem(rng, ring, 2);
            u.add_row_multiple(i, c, j);
        }
    }
    return u;
}

inline Polynomial random_monic(Rng& rng, long degree, long bound = 5) {
    std::vector<Rational> c;
    for (long k = 0; k < degree; ++k) c.emplace_back(uniform(rng, -bound, bound));
    c.emplace_back(1);
    return Polynomial(std::move(c));
}

// Cofactor expansion along the first row.
inline Elem cofactor_det(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(1, 1);
    Elem total = Elem::zero(a.ring());
    for (std::size_t j = 1; j <= n; ++j) {
        if (a(1, j).is_zero()) continue;
        Matrix minor(a.ring(), n - 1, n - 1);
        for (std::size_t i = 2; i <= n; ++i)
            for (std::size_t k = 1, c = 1; k <= n; ++k)
                if (k != j) minor(i - 1, c++) = a(i, k);
        Elem term = a(1, j) * cofactor_det(minor);
        total = j % 2 == 1 ? total + term : total - term;
    }
    return total;
}

inline std::vector<long> prime_factors(long v) {
    std::vector<long> out;
    v = std::labs(v);
    for (long p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            out.push_back(p);
            v /= p;
        }
    if (v > 1) out.push_back(v);
    return out;
}

// gcd from prime factorizations, with gcd(a, 0) = |a|.
inline long gcd_by_factoring(long a, long b) {
    if (a == 0) return std::labs(b);
    if (b == 0) return std::labs(a);
    std::vector<long> fa = prime_factors(a), fb = prime_factors(b);
    long g = 1;
    for (long p : fa) {
        for (auto it = fb.begin(); it != fb.end(); ++it)
            if (*it == p) {
                g *= p;
                fb.erase(it);
                break;
            }
    }
    return g;
}

}  // namespace testsupport

namespace testsupport {

// Gauss-Jordan over Q for a square nonsingular system; independent of the
// library's elimination code.
inline std::vector<Rational> gauss_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> y) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (a[p][k] == 0) ++p;
        std::swap(a[p], a[k]);
        std::swap(y[p], y[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            y[i] -= f * y[k];
        }
    }
    for (std::size_t k = 0; k < n; ++k) y[k] /= a[k][k];
    return y;
}


// Rank over Q of a list of equal-length vectors by plain elimination.
inline std::size_t rank_of_vectors(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t width = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < width; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<Rational> flatten(const Matrix& a) {
    std::vector<Rational> out;
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out.push_back(a(i, j).as_rat());
    return out;
}

inline Matrix inverse_by_gauss(const Matrix& s) {
    const std::size_t n = s.rows();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = s(i + 1, j + 1).as_rat();
    Matrix inv(Ring::Q, n, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> e(n, Rational(0));
        e[c] = 1;
        const auto col = gauss_solve(rows, e);
        for (std::size_t i = 0; i < n; ++i) inv(i + 1, c + 1) = Elem(col[i]);
    }
    return inv;
}

struct JordanBlock {
    long alpha;
    std::size_t size;
};

struct JordanSample {
    Matrix a;                   // S J S^-1
    Matrix j;                   // blocks in the documented order
    std::vector<JordanBlock> blocks;
};

// Blocks ordered by eigenvalue descending (x - alpha ascending in the prime
// order), then by size ascending.
inline JordanSample random_jordan_sample(Rng& rng, std::size_t n, long alpha_bound = 2) {
    std::vector<JordanBlock> blocks;
    std::size_t left = n;
    while (left > 0) {
        const auto size = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(left)));
        blocks.push_back({uniform(rng, -alpha_bound, alpha_bound), size});
        left -= size;
    }
    std::sort(blocks.begin(), blocks.end(), [](const JordanBlock& x, const JordanBlock& y) {
        return x.alpha != y.alpha ? x.alpha > y.alpha : x.size < y.size;
    });
    Matrix j = Matrix::zero(Ring::Q, n, n);
    std::size_t at = 1;
    for (const JordanBlock& b : blocks) {
        for (std::size_t k = 0; k < b.size; ++k) {
            j(at + k, at + k) = Elem::from_int(Ring::Q, b.alpha);
            if (k + 1 < b.size) j(at + k, at + k + 1) = Elem::one(Ring::Q);
        }
        at += b.size;
    }
    const Matrix s = lift(random_unimodular(rng, Ring::Z, n), Ring::Q);
    return {s * j * inverse_by_gauss(s), j, blocks};
}

}  // namespace testsupport

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<canonform::Matrix> {
    static String convert(const canonform::Matrix& m) { return ("\n" + canonform::format_matrix(m)).c_str(); }
};
template <>
struct StringMaker<canonform::Elem> {
    static String convert(const canonform::Elem& e) { return canonform::to_string(e).c_str(); }
};
}  // namespace doctest
#endif
