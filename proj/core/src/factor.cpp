#include <algorithm>
#include <map>
#include <optional>

#include "canonform/domain.hpp"

namespace canonform {

namespace {

std::vector<std::pair<Integer, unsigned>> factor_positive(Integer n) {
    std::vector<std::pair<Integer, unsigned>> out;
    auto pull = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    pull(2);
    pull(3);
    // 6k +- 1 wheel
    for (Integer p = 5; p * p <= n; p += 6) {
        pull(p);
        Integer p2 = p + 2;
        pull(p2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_positive(abs(n))) {
        const std::size_t count = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

Polynomial monic(const Polynomial& p) {
    return p * Rational(1 / p.leading());
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    return gcd(Elem(a), Elem(b)).as_poly();
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
    return exact_div(Elem(a), Elem(b)).as_poly();
}

std::optional<Rational> rational_root(const Polynomial& g) {
    if (g.coeff(0) == 0) return Rational(0);
    // Scale to a primitive integer polynomial; roots p/q have p | a0 and q | an.
    Integer den_lcm = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    const Rational scaled0 = g.coeff(0) * den_lcm;
    const Rational scaledn = g.leading() * den_lcm;
    const Integer a0 = scaled0.get_num();
    const Integer an = scaledn.get_num();
    const auto ps = positive_divisors(a0);
    const auto qs = positive_divisors(an);
    for (const auto& q : qs) {
        for (const auto& p : ps) {
            Rational r(p, q);
            r.canonicalize();
            if (r.get_den() != q) continue;  // already tried in lowest terms
            if (g(r) == 0) return r;
            if (g(Rational(-r)) == 0) return Rational(-r);
        }
    }
    return std::nullopt;
}

/// Irreducible monic factors of a squarefree monic polynomial.
std::vector<Polynomial> split_squarefree(Polynomial g) {
    std::vector<Polynomial> out;
    while (g.degree() >= 1) {
        if (g.degree() == 1) {
            out.push_back(g);
            break;
        }
        if (auto root = rational_root(g)) {
            Polynomial lin = Polynomial::linear(*root);
            out.push_back(lin);
            g = poly_exact_div(g, lin);
            continue;
        }
        // No rational root: quadratics and cubics are then irreducible over Q.
        if (g.degree() <= 3) {
            out.push_back(g);
            break;
        }
        throw Error(ErrorKind::FactorizationIncomplete,
                    "cannot split " + to_string(g) + " over Q (degree >= 4 without rational roots)");
    }
    return out;
}

/// Yun's squarefree decomposition of a monic polynomial of positive degree:
/// pairs (g_i, i) with f = prod g_i^i and the g_i squarefree, pairwise coprime.
std::vector<std::pair<Polynomial, unsigned>> squarefree(const Polynomial& f) {
    std::vector<std::pair<Polynomial, unsigned>> out;
    Polynomial fp = f.derivative();
    Polynomial a = poly_gcd(f, fp);
    Polynomial b = poly_exact_div(f, a);
    Polynomial c = poly_exact_div(fp, a);
    Polynomial d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() >= 1) {
        Polynomial ai = poly_gcd(b, d);
        b = poly_exact_div(b, ai);
        c = poly_exact_div(d, ai);
        d = c - b.derivative();
        if (ai.degree() >= 1) out.emplace_back(ai, i);
        ++i;
    }
    return out;
}

}  // namespace

Factorization factor(const Elem& a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroArgument, "factor of zero");
    Factorization out;
    switch (a.ring()) {
        case Ring::Z: {
            const Integer& n = a.as_int();
            out.unit = Elem(Integer(sgn(n)));
            for (auto& [p, e] : factor_positive(abs(n))) out.factors.push_back({Elem(p), e});
            break;
        }
        case Ring::Q:
            out.unit = a;
            break;
        case Ring::QX: {
            const Polynomial& p = a.as_poly();
            out.unit = Elem(Polynomial(p.leading()));
            if (p.degree() == 0) break;
            for (const auto& [g, mult] : squarefree(monic(p)))
                for (auto& prime : split_squarefree(g)) out.factors.push_back({Elem(prime), mult});
            break;
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const PrimePower& x, const PrimePower& y) {
        return prime_order(x.prime, y.prime) < 0;
    });
    return out;
}

}  // namespace canonform
