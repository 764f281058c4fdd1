#include <doctest.h>

#include "canonform/matrix.hpp"
#include "support.hpp"

using namespace canonform;
using testsupport::Rng;

namespace {

Matrix zm(std::initializer_list<std::initializer_list<long>> rows) { return Matrix::from_ints(Ring::Z, rows); }

// A 4x4 with distinct entries a_ij = 10 i + j.
Matrix tagged4() {
    Matrix a(Ring::Z, 4, 4);
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; j <= 4; ++j) a(i, j) = Elem::from_int(Ring::Z, static_cast<long>(10 * i + j));
    return a;
}

}  // namespace

TEST_CASE("construction rejects bad shapes and mixed rings") {
    CHECK_THROWS_AS(Matrix(Ring::Z, 0, 3), Error);
    CHECK_THROWS_AS(Matrix(Ring::Z, 1, 2, {Elem::from_int(Ring::Z, 1), Elem::from_int(Ring::Q, 1)}), Error);
    CHECK_THROWS_AS(zm({{1, 2}, {3}}), Error);
    CHECK_THROWS_AS(tagged4().at(5, 1), Error);
}

TEST_CASE("multiply") {
    const Matrix q2 = zm({{1, -1}, {-2, 3}});
    CHECK(q2 * zm({{18}, {12}}) == zm({{6}, {0}}));
    const Matrix x = zm({{2, 5, 4, -2, 2, 1}, {0, 1, 1, 0, -1, 0}, {2, 6, 5, 0, -1, 0}});
    CHECK(Matrix::identity(Ring::Z, 3) * x == x);
    CHECK(zm({{1, 2}, {2, 3}}) * zm({{3, -2}, {-2, 1}}) == zm({{-1, 0}, {0, -1}}));
    CHECK_THROWS_AS(q2 * x, Error);
    CHECK_THROWS_AS(q2 * Matrix::identity(Ring::Q, 2), Error);
}

TEST_CASE("transpose") {
    const Matrix x = zm({{1, 2, 3}, {4, 5, 6}});
    CHECK(transpose(x) == zm({{1, 4}, {2, 5}, {3, 6}}));
    const Matrix a = zm({{0, 4, 6, 2}, {8, 2, 10, 8}, {2, 0, 4, 4}});
    CHECK(transpose(transpose(a)) == a);
}

TEST_CASE("submatrix selectors") {
    const Matrix x = zm({{1, 2, 3}, {4, 5, 6}});
    const Indices f{1, 2, 1}, g{2, 3, 2, 1};
    CHECK(submatrix(x, f, g) == zm({{2, 3, 2, 1}, {5, 6, 5, 4}, {2, 3, 2, 1}}));
    CHECK(submatrix(x, {1, 2}, {1, 2, 3}) == x);
    CHECK(transpose(submatrix(x, f, g)) == submatrix(transpose(x), g, f));
    CHECK_THROWS_AS(submatrix(x, {3}, {1}), Error);
}

TEST_CASE("submatrix by index sets") {
    const Matrix a = tagged4();
    CHECK(submatrix_sets(a, {2}, {3}, SetMode::DropDrop) == zm({{11, 12, 14}, {31, 32, 34}, {41, 42, 44}}));
    CHECK(transpose(submatrix_sets(a, {2}, {3}, SetMode::DropDrop)) ==
          submatrix_sets(transpose(a), {3}, {2}, SetMode::DropDrop));
    CHECK(submatrix_sets(a, {1, 2, 3, 4}, {1, 2, 3, 4}, SetMode::KeepKeep) == a);
    const Matrix b = zm({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}});
    CHECK(submatrix_sets(b, {3, 1}, {1, 2}, SetMode::KeepKeep) == zm({{1, 2}, {7, 8}}));
    CHECK(submatrix_sets(b, {1}, {1}, SetMode::KeepDrop) == zm({{2, 3}}));
    CHECK(submatrix_sets(b, {1}, {1}, SetMode::DropKeep) == zm({{4}, {7}, {10}}));
    try {
        (void)submatrix_sets(b, {1, 2, 3, 4}, {1}, SetMode::DropKeep);
        FAIL("empty complement accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyResult);
    }
    CHECK_THROWS_AS(submatrix_sets(b, {5}, {1}, SetMode::KeepKeep), Error);
}

TEST_CASE("direct sums") {
    const Matrix b = zm({{1, 2}, {2, 3}}), c = zm({{3, 4}, {4, 1}});
    CHECK(direct_sum(b, c) == zm({{1, 2, 0, 0}, {2, 3, 0, 0}, {0, 0, 3, 4}, {0, 0, 4, 1}}));
    CHECK(general_direct_sum(b, c, {1, 3}, {1, 3}) == zm({{1, 0, 2, 0}, {0, 3, 0, 4}, {2, 0, 3, 0}, {0, 4, 0, 1}}));
    CHECK(general_direct_sum(b, c, {1, 2}, {1, 2}) == direct_sum(b, c));
    const Matrix padded = direct_sum(b, Matrix::zero(Ring::Z, 1, 1));
    CHECK(padded == zm({{1, 2, 0}, {2, 3, 0}, {0, 0, 0}}));
    CHECK_THROWS_AS(general_direct_sum(b, c, {1, 1}, {1, 3}), Error);
    CHECK_THROWS_AS(general_direct_sum(b, c, {1}, {1}), Error);
    CHECK_THROWS_AS(direct_sum(zm({{1, 2}}), c), Error);
}

TEST_CASE("algebraic laws on random matrices") {
    Rng rng(31);
    for (Ring ring : {Ring::Z, Ring::Q, Ring::QX}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto dim = [&] { return static_cast<std::size_t>(testsupport::uniform(rng, 1, 4)); };
            const std::size_t m = dim(), k = dim(), l = dim(), n = dim();
            const Matrix a = testsupport::random_matrix(rng, ring, m, k);
            const Matrix b = testsupport::random_matrix(rng, ring, k, l);
            const Matrix c = testsupport::random_matrix(rng, ring, l, n);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(transpose(a * b) == transpose(b) * transpose(a));

            Indices g, h;
            for (std::size_t p = 0; p < 3; ++p) g.push_back(static_cast<std::size_t>(testsupport::uniform(rng, 1, static_cast<long>(m))));
            for (std::size_t p = 0; p < 2; ++p) h.push_back(static_cast<std::size_t>(testsupport::uniform(rng, 1, static_cast<long>(l))));
            Indices all_k;
            for (std::size_t p = 1; p <= k; ++p) all_k.push_back(p);
            REQUIRE(submatrix(a * b, g, h) == submatrix(a, g, all_k) * submatrix(b, all_k, h));

            // Row i of AB as a combination of the rows of B.
            const Matrix ab = a * b;
            for (std::size_t i = 1; i <= m; ++i) {
                Matrix row(ring, 1, l);
                for (std::size_t r = 1; r <= k; ++r)
                    for (std::size_t j = 1; j <= l; ++j) row(1, j) += a(i, r) * b(r, j);
                REQUIRE(submatrix(ab, {i}, [&] {
                            Indices cols;
                            for (std::size_t j = 1; j <= l; ++j) cols.push_back(j);
                            return cols;
                        }()) == row);
            }
        }
    }
}

TEST_CASE("file format round trip") {
    const Matrix m = parse_matrix("ring Q[x]\nrows 1\ncols 2\nx^2-1 3/2*x\n");
    CHECK(m(1, 1) == parse_scalar("x^2-1", Ring::QX));
    CHECK(parse_matrix(format_matrix(m)) == m);

    const Matrix d = read_matrix_file(std::string(CANONFORM_TEST_DATA) + "/dirsum.mtx");
    CHECK(d == zm({{1, 2, 0, 0}, {2, 3, 0, 0}, {0, 0, 3, 4}, {0, 0, 4, 1}}));

    Rng rng(13);
    for (Ring ring : {Ring::Z, Ring::Q, Ring::QX})
        for (int trial = 0; trial < 200; ++trial) {
            const Matrix a = testsupport::random_matrix(rng, ring, static_cast<std::size_t>(testsupport::uniform(rng, 1, 5)),
                                                        static_cast<std::size_t>(testsupport::uniform(rng, 1, 5)), 200);
            REQUIRE(parse_matrix(format_matrix(a)) == a);
        }
}

TEST_CASE("file format errors carry positions") {
    auto expect = [](const char* text, ErrorKind kind, std::size_t line) {
        try {
            (void)parse_matrix(text);
            FAIL("accepted: " << text);
        } catch (const ParseError& e) {
            CHECK(e.kind() == kind);
            CHECK(e.line() == line);
        }
    };
    expect("ring Z\nrows 0\ncols 1\n", ErrorKind::Parse, 2);
    expect("ring R\nrows 1\ncols 1\n1\n", ErrorKind::Parse, 1);
    expect("ring Z\nrows 1\ncols 2\n1\n", ErrorKind::Parse, 4);
    expect("ring Z\nrows 2\ncols 1\n1\n", ErrorKind::Parse, 4);
    expect("ring Z\n# comment\nrows 1\ncols 2\n1 x\n", ErrorKind::RingMismatch, 5);
    expect("ring Q\nrows 1\ncols 1\n1/0\n", ErrorKind::Parse, 4);
    try {
        (void)parse_matrix("ring Z\nrows 1\ncols 2\n1 2/3\n");
    } catch (const ParseError& e) {
        CHECK(e.column() >= 3);
    }
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/file.mtx"), ParseError);
}
