#include <doctest.h>

#include "canonform/determinant.hpp"
#include "canonform/similarity.hpp"
#include "support.hpp"

using namespace canonform;
using testsupport::Rng;

namespace {

Matrix qm(std::initializer_list<std::initializer_list<long>> rows) { return Matrix::from_ints(Ring::Q, rows); }
Matrix pm(const std::vector<std::vector<std::string>>& rows) { return Matrix::from_strings(Ring::QX, rows); }
Polynomial P(const char* s) { return parse_scalar(s, Ring::QX).as_poly(); }

Matrix random_q(Rng& rng, std::size_t n) { return testsupport::random_matrix(rng, Ring::Q, n, n, 4, 0.3); }

Matrix random_poly_matrix(Rng& rng, std::size_t m, std::size_t n) {
    Matrix p(Ring::QX, m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) p(i, j) = Elem(testsupport::random_poly(rng, 2, 3));
    return p;
}

bool prime_power_less(const PrimePower& a, const PrimePower& b) {
    const auto c = prime_order(a.prime, b.prime);
    return c != 0 ? c < 0 : a.exponent < b.exponent;
}

}  // namespace

TEST_CASE("characteristic matrix and polynomial") {
    CHECK(char_matrix(qm({{5}})) == pm({{"x-5"}}));
    CHECK(char_poly(Matrix::identity(Ring::Q, 3)) == P("x^3-3*x^2+3*x-1"));
    CHECK(char_poly(qm({{0, 1}, {0, 0}})) == P("x^2"));
    CHECK(char_matrix(Matrix::from_ints(Ring::Z, {{1, 2}, {3, 4}})) == pm({{"x-1", "-2"}, {"-3", "x-4"}}));
    CHECK_THROWS_AS(char_matrix(Matrix::identity(Ring::QX, 2)), Error);
    CHECK_THROWS_AS(char_matrix(qm({{1, 2}})), Error);

    const Polynomial p = P("x^3-2*x^2+5*x-7");
    CHECK(char_matrix(companion(p)) == pm({{"x", "-1", "0"}, {"0", "x", "-1"}, {"-7", "5", "x-2"}}));
    CHECK(char_matrix(hypercompanion(3, 3)) == pm({{"x-3", "-1", "0"}, {"0", "x-3", "-1"}, {"0", "0", "x-3"}}));

    Rng rng(157);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial q = testsupport::random_monic(rng, testsupport::uniform(rng, 1, 5));
        REQUIRE(char_poly(companion(q)) == q);
    }
}

TEST_CASE("canonical presentation") {
    const Matrix p = pm({{"1/3*x^2", "x^3-1/2*x^2"}, {"2*x^3+2/5", "2*x-3"}});
    const CanonicalPresentation cp = canonical_presentation(p);
    REQUIRE(cp.degree() == 3);
    CHECK(cp.coeffs[3] == qm({{0, 1}, {2, 0}}));
    CHECK(cp.coeffs[2] == Matrix::from_strings(Ring::Q, {{"1/3", "-1/2"}, {"0", "0"}}));
    CHECK(cp.coeffs[1] == qm({{0, 0}, {0, 2}}));
    CHECK(cp.coeffs[0] == Matrix::from_strings(Ring::Q, {{"0", "0"}, {"2/5", "-3"}}));
    CHECK(cp.to_matrix() == p);

    const CanonicalPresentation c = canonical_presentation(pm({{"4", "1/2"}}));
    CHECK(c.degree() == 0);
    CHECK(c.coeffs[0] == Matrix::from_strings(Ring::Q, {{"4", "1/2"}}));

    const Matrix a = qm({{1, 2}, {3, 4}});
    const CanonicalPresentation ch = canonical_presentation(char_matrix(a));
    REQUIRE(ch.degree() == 1);
    CHECK(ch.coeffs[1] == Matrix::identity(Ring::Q, 2));
    CHECK(ch.coeffs[0] == -a);

    Rng rng(163);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix r = random_poly_matrix(rng, 2, 3);
        REQUIRE(canonical_presentation(r).to_matrix() == r);
    }
}

TEST_CASE("evaluation at a matrix") {
    const Matrix a = qm({{1, 2}, {3, 4}});
    CHECK(right_eval(char_matrix(a), a).is_zero());
    CHECK(left_eval(char_matrix(a), a).is_zero());
    const Matrix c = pm({{"2", "1/2"}, {"0", "-1"}});
    CHECK(right_eval(c, a) == Matrix::from_strings(Ring::Q, {{"2", "1/2"}, {"0", "-1"}}));
    // P = x E_12: right evaluation gives E_12 A, left evaluation A E_12.
    const Matrix e = pm({{"0", "x"}, {"0", "0"}});
    CHECK(right_eval(e, a) == qm({{3, 4}, {0, 0}}));
    CHECK(left_eval(e, a) == qm({{0, 1}, {0, 3}}));

    Rng rng(167);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const Matrix m = random_q(rng, n);
        const Matrix p = random_poly_matrix(rng, n, n);
        const Matrix q = random_poly_matrix(rng, n, n);
        const Elem alpha = testsupport::random_elem(rng, Ring::Q), beta = testsupport::random_elem(rng, Ring::Q);
        const Elem alpha_x = Elem::lift(alpha, Ring::QX), beta_x = Elem::lift(beta, Ring::QX);
        REQUIRE(right_eval(alpha_x * p + beta_x * q, m) == alpha * right_eval(p, m) + beta * right_eval(q, m));

        // Quasi-multiplicativity: rho(PQ) = sum_k P_k rho(Q) A^k.
        const CanonicalPresentation cp = canonical_presentation(p);
        const Matrix rq = right_eval(q, m);
        Matrix expect = Matrix::zero(Ring::Q, n, n);
        for (std::size_t k = 0; k < cp.coeffs.size(); ++k) expect += cp.coeffs[k] * rq * power(m, static_cast<unsigned>(k));
        REQUIRE(right_eval(p * q, m) == expect);

        const Polynomial f = testsupport::random_poly(rng, 3, 4);
        Matrix fi = Matrix::zero(Ring::QX, n, n);
        for (std::size_t i = 1; i <= n; ++i) fi(i, i) = Elem(f);
        REQUIRE(eval_poly(f, m) == right_eval(fi, m));
    }
}

TEST_CASE("similarity invariants and minimal polynomial examples") {
    const Polynomial pa = P("x^3+x-4");
    CHECK(similarity_invariants(companion(pa)) == std::vector<Polynomial>{1, 1, pa});
    CHECK(similarity_invariants(hypercompanion(2, 3)) == std::vector<Polynomial>{1, 1, P("x-2").pow(3)});
    CHECK(similarity_invariants(Matrix::identity(Ring::Q, 2)) == std::vector<Polynomial>{P("x-1"), P("x-1")});

    CHECK(minimal_poly(Matrix::identity(Ring::Q, 4)) == P("x-1"));
    CHECK(minimal_poly(qm({{1, 1}, {0, 1}})) == P("x^2-2*x+1"));
    CHECK(minimal_poly(qm({{1, 0}, {0, 2}})) == P("x^2-3*x+2"));
}

TEST_CASE("companion and hypercompanion matrices") {
    CHECK(companion(P("x^2-3*x+2")) == qm({{0, 1}, {-2, 3}}));
    CHECK(companion(P("x-5")) == qm({{5}}));
    CHECK(companion(P("x^3")) == qm({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    try {
        (void)companion(P("2*x-1"));
        FAIL("non-monic accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMonic);
    }
    CHECK_THROWS_AS(companion(P("1")), Error);

    CHECK(hypercompanion(Rational(7, 2), 1) == Matrix::from_strings(Ring::Q, {{"7/2"}}));
    CHECK(hypercompanion(0, 2) == qm({{0, 1}, {0, 0}}));
    for (long alpha = -2; alpha <= 2; ++alpha)
        for (std::size_t k = 1; k <= 5; ++k) {
            std::vector<Polynomial> expect(k, Polynomial(1));
            expect.back() = Polynomial::linear(alpha).pow(static_cast<unsigned>(k));
            REQUIRE(similarity_invariants(hypercompanion(alpha, k)) == expect);
        }
}

TEST_CASE("rational canonical form examples") {
    const Matrix c = companion(P("x^2-3*x+2"));
    const SimilarityCertificate r = rcf(c);
    CHECK(verify(c, r));
    // Elementary divisors x-2 and x-1; larger roots come first.
    CHECK(r.target == qm({{2, 0}, {0, 1}}));

    const SimilarityCertificate d = rcf(qm({{1, 0}, {0, 2}}));
    CHECK(d.target == qm({{2, 0}, {0, 1}}));
    CHECK(verify(qm({{1, 0}, {0, 2}}), d));

    const SimilarityCertificate n = rcf(qm({{0, 1}, {0, 0}}));
    CHECK(n.target == qm({{0, 1}, {0, 0}}));
    CHECK(n.s == Matrix::identity(Ring::Q, 2));

    const Matrix rot = qm({{0, -1}, {1, 0}});
    const SimilarityCertificate rr = rcf(rot);
    CHECK(rr.target == companion(P("x^2+1")));
    CHECK(verify(rot, rr));
}

TEST_CASE("Jordan form examples") {
    const Matrix j2 = qm({{1, 1}, {0, 1}});
    const SimilarityCertificate j = jordan(j2);
    CHECK(j.target == j2);
    CHECK(j.s == Matrix::identity(Ring::Q, 2));
    CHECK(jordan(qm({{0, 1}, {0, 0}})).target == hypercompanion(0, 2));

    try {
        (void)jordan(qm({{0, -1}, {1, 0}}));
        FAIL("irreducible quadratic accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonLinearElementaryDivisor);
        CHECK(std::string(e.what()).find("x^2+1") != std::string::npos);
    }

    const Matrix a = Matrix::from_ints(Ring::Z, {{2, 1, 0}, {0, 2, 0}, {0, 0, -1}});
    const SimilarityCertificate ja = jordan(a);
    CHECK(ja.target == qm({{2, 1, 0}, {0, 2, 0}, {0, 0, -1}}));
    CHECK(verify(lift(a, Ring::Q), ja));
}

TEST_CASE("similar") {
    for (long alpha = -2; alpha <= 2; ++alpha)
        for (unsigned k = 1; k <= 4; ++k) {
            const Matrix c = companion(Polynomial::linear(alpha).pow(k));
            const Matrix h = hypercompanion(alpha, k);
            const auto cert = similar(c, h);
            REQUIRE(cert);
            REQUIRE(cert->s_inv * c * cert->s == h);
            REQUIRE(cert->s * cert->s_inv == Matrix::identity(Ring::Q, k));
        }
    const Matrix a = qm({{3, 1}, {-2, 5}});
    const auto self = similar(a, a);
    REQUIRE(self);
    CHECK(self->s_inv * a * self->s == a);
    CHECK_FALSE(similar(Matrix::identity(Ring::Q, 2), qm({{1, 1}, {0, 1}})));
    CHECK_THROWS_AS(similar(Matrix::identity(Ring::Q, 2), Matrix::identity(Ring::Q, 3)), Error);

    Rng rng(173);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const Matrix b = random_q(rng, n);
        const Matrix s = lift(testsupport::random_unimodular(rng, Ring::Z, n), Ring::Q);
        const Matrix conj = testsupport::inverse_by_gauss(s) * b * s;
        const auto cert = similar(b, conj);
        REQUIRE(cert);
        REQUIRE(verify(b, *cert));
        REQUIRE(cert->target == conj);
    }
}

TEST_CASE("Cayley-Hamilton and the minimal polynomial") {
    Rng rng(179);
    int factored = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 5));
        const Matrix a = random_q(rng, n);
        const Polynomial f = char_poly(a);
        REQUIRE(eval_poly(f, a).is_zero());
        const auto qs = similarity_invariants(a);
        REQUIRE(eval_poly(qs.back(), a).is_zero());

        const Polynomial m = minimal_poly(a);
        REQUIRE(m.is_monic());
        REQUIRE(eval_poly(m, a).is_zero());
        REQUIRE(divmod(f, m).second.is_zero());

        // Independent degree check: the first power of A that depends on the
        // lower ones.
        std::vector<std::vector<Rational>> powers{testsupport::flatten(Matrix::identity(Ring::Q, n))};
        Matrix ak = Matrix::identity(Ring::Q, n);
        long degree = 0;
        for (;;) {
            ak = ak * a;
            powers.push_back(testsupport::flatten(ak));
            ++degree;
            if (testsupport::rank_of_vectors(powers) < powers.size()) break;
        }
        REQUIRE(m.degree() == degree);

        try {
            for (const PrimePower& pp : factor(Elem(m)).factors)
                REQUIRE_FALSE(eval_poly(divmod(m, pp.prime.as_poly()).first, a).is_zero());
            ++factored;
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::FactorizationIncomplete);
        }
    }
    CHECK(factored >= 100);
}

TEST_CASE("direct-sum law for elementary divisors") {
    Rng rng(181);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix b = random_q(rng, static_cast<std::size_t>(testsupport::uniform(rng, 1, 3)));
        const Matrix c = random_q(rng, static_cast<std::size_t>(testsupport::uniform(rng, 1, 3)));
        auto expect = similarity_elementary_divisors(b);
        const auto ec = similarity_elementary_divisors(c);
        expect.insert(expect.end(), ec.begin(), ec.end());
        std::sort(expect.begin(), expect.end(), prime_power_less);
        try {
            const auto got = similarity_elementary_divisors(direct_sum(b, c));
            REQUIRE(got == expect);
            ++checked;
        } catch (const Error& e) {
            // Two irreducible quadratics merged into one quartic invariant factor.
            REQUIRE(e.kind() == ErrorKind::FactorizationIncomplete);
        }
    }
    CHECK(checked >= 60);
}

TEST_CASE("rcf and Jordan certificates on random matrices") {
    Rng rng(191);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const Matrix a = random_q(rng, n);
        try {
            const SimilarityCertificate r = rcf(a);
            REQUIRE(verify(a, r));
            REQUIRE(det(r.s) != Elem::zero(Ring::Q));
            REQUIRE(trace(r.target) == trace(a));
            REQUIRE(char_poly(r.target) == char_poly(a));
            REQUIRE(rcf(r.target).target == r.target);
            ++checked;
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::FactorizationIncomplete);
        }
    }
    CHECK(checked >= 70);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const testsupport::JordanSample sample = testsupport::random_jordan_sample(rng, n);
        const SimilarityCertificate j = jordan(sample.a);
        REQUIRE(verify(sample.a, j));
        REQUIRE(j.target == sample.j);
        REQUIRE(trace(j.target) == trace(sample.a));
        REQUIRE(jordan(sample.j).target == sample.j);
    }
}
