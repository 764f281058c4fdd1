#include "canonform/invariants.hpp"

#include <algorithm>

namespace canonform {

namespace {

Elem power(const Elem& base, unsigned exponent) {
    Elem out = Elem::one(base.ring());
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

bool ed_less(const PrimePower& a, const PrimePower& b) {
    auto c = prime_order(a.prime, b.prime);
    if (c != 0) return c < 0;
    return a.exponent < b.exponent;
}

}  // namespace

std::vector<Elem> det_divisors_by_minors(const Matrix& a) {
    const std::size_t m = a.rows(), n = a.cols(), top = std::min(m, n);
    if (top > 4) {
        std::size_t total = 0;
        for (std::size_t k = 1; k <= top; ++k) total += binomial(m, k) * binomial(n, k);
        if (total > kMinorOracleLimit)
            throw Error(ErrorKind::TooLargeForOracle,
                        std::to_string(total) + " minors exceed the limit of " + std::to_string(kMinorOracleLimit));
    }
    std::vector<Elem> f{Elem::one(a.ring())};
    for (std::size_t k = 1; k <= top; ++k) {
        Elem g = Elem::zero(a.ring());
        for (const Indices& rows : subsets(m, k))
            for (const Indices& cols : subsets(n, k)) {
                if (g.is_unit()) break;
                g = gcd(g, det(submatrix(a, rows, cols)));
            }
        if (g.is_zero()) break;
        f.push_back(g);
    }
    return f;
}

std::vector<Elem> invariant_factors(const Matrix& a) { return smith(a).diag; }

std::vector<Elem> det_divisors(const Matrix& a) {
    std::vector<Elem> f{Elem::one(a.ring())};
    for (const Elem& q : invariant_factors(a)) f.push_back(canonical(f.back() * q));
    return f;
}

std::vector<PrimePower> elementary_divisors_of(const std::vector<Elem>& qs) {
    std::vector<PrimePower> out;
    for (const Elem& q : qs) {
        if (q.is_unit()) continue;
        for (PrimePower& pp : factor(q).factors) out.push_back(std::move(pp));
    }
    std::stable_sort(out.begin(), out.end(), ed_less);
    return out;
}

std::vector<PrimePower> elementary_divisors(const Matrix& a) { return elementary_divisors_of(invariant_factors(a)); }

InvariantReport invariant_report(const Matrix& a) {
    InvariantReport out;
    out.invariant_factors = invariant_factors(a);
    out.rank = out.invariant_factors.size();
    out.det_divisors.push_back(Elem::one(a.ring()));
    for (const Elem& q : out.invariant_factors) out.det_divisors.push_back(canonical(out.det_divisors.back() * q));
    out.elementary_divisors = elementary_divisors_of(out.invariant_factors);
    return out;
}

std::vector<Elem> invariant_factors_from_elementary(const std::vector<PrimePower>& eds, std::size_t r, Ring ring) {
    std::vector<PrimePower> sorted = eds;
    for (const PrimePower& pp : sorted) {
        if (pp.prime.ring() != ring) throw Error(ErrorKind::RingMismatch, "elementary divisor over another ring");
        if (pp.exponent == 0) throw Error(ErrorKind::InvalidArgument, "elementary divisor exponent must be positive");
    }
    std::stable_sort(sorted.begin(), sorted.end(), ed_less);
    std::vector<Elem> q(r, Elem::one(ring));
    for (std::size_t start = 0; start < sorted.size();) {
        std::size_t end = start;
        while (end < sorted.size() && sorted[end].prime == sorted[start].prime) ++end;
        const std::size_t count = end - start;
        if (count > r)
            throw Error(ErrorKind::RankTooSmall, "prime " + to_string(sorted[start].prime) + " occurs " +
                                                     std::to_string(count) + " times but r = " + std::to_string(r));
        // Exponents ascend within the run, so they fill the last `count` slots.
        for (std::size_t k = 0; k < count; ++k)
            q[r - count + k] *= power(sorted[start + k].prime, sorted[start + k].exponent);
        start = end;
    }
    return q;
}

bool equivalent(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "matrices over different rings");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::ShapeMismatch, "equivalence needs matrices of the same shape");
    return smith(a).diag == smith(b).diag;
}

}  // namespace canonform
