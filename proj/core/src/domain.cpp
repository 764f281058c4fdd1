#include "canonform/domain.hpp"

#include <algorithm>
#include <cassert>

namespace canonform {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::ZeroModulus: return "ZeroModulus";
        case ErrorKind::FactorizationIncomplete: return "FactorizationIncomplete";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::EmptyResult: return "EmptyResult";
        case ErrorKind::BadIndexSets: return "BadIndexSets";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::TooLargeForOracle: return "TooLargeForOracle";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::AllZeroColumn: return "AllZeroColumn";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::RankTooSmall: return "RankTooSmall";
        case ErrorKind::NonLinearElementaryDivisor: return "NonLinearElementaryDivisor";
        case ErrorKind::UnsupportedRing: return "UnsupportedRing";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

std::string_view to_string(Ring ring) noexcept {
    switch (ring) {
        case Ring::Z: return "Z";
        case Ring::Q: return "Q";
        case Ring::QX: return "Q[x]";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) {
        coeffs_.push_back(constant);
        coeffs_.back().canonicalize();
    }
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) {
    return Polynomial(std::vector<Rational>{Rational(-root), Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Polynomial p;
    p.coeffs_ = std::move(out);
    p.trim();
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial p = a;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    const Rational& lead = b.coeffs_.back();
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        Rational c = rem[k] / lead;
        quot[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs_[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Elem

Elem Elem::zero(Ring ring) { return from_int(ring, 0); }
Elem Elem::one(Ring ring) { return from_int(ring, 1); }

Elem Elem::from_int(Ring ring, long n) {
    switch (ring) {
        case Ring::Z: return Elem(Integer(n));
        case Ring::Q: return Elem(Rational(n));
        case Ring::QX: return Elem(Polynomial(Rational(n)));
    }
    throw Error(ErrorKind::Internal, "bad ring tag");
}

Elem Elem::lift(const Elem& value, Ring to) {
    const Ring from = value.ring();
    if (from == to) return value;
    if (static_cast<int>(from) > static_cast<int>(to))
        throw Error(ErrorKind::RingMismatch,
                    "cannot lower " + std::string(to_string(from)) + " to " +
                        std::string(to_string(to)));
    Rational q = from == Ring::Z ? Rational(value.as_int()) : value.as_rat();
    if (to == Ring::Q) return Elem(q);
    return Elem(Polynomial(q));
}

bool Elem::is_zero() const {
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Polynomial>)
                return v.is_zero();
            else
                return v == 0;
        },
        value_);
}

bool Elem::is_one() const {
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Polynomial>)
                return v.degree() == 0 && v.coeffs()[0] == 1;
            else
                return v == 1;
        },
        value_);
}

bool Elem::is_unit() const {
    switch (ring()) {
        case Ring::Z: return abs(as_int()) == 1;
        case Ring::Q: return as_rat() != 0;
        case Ring::QX: return as_poly().degree() == 0;
    }
    return false;
}

const Integer& Elem::as_int() const {
    if (const auto* p = std::get_if<Integer>(&value_)) return *p;
    throw Error(ErrorKind::RingMismatch, "expected an element of Z");
}

const Rational& Elem::as_rat() const {
    if (const auto* p = std::get_if<Rational>(&value_)) return *p;
    throw Error(ErrorKind::RingMismatch, "expected an element of Q");
}

const Polynomial& Elem::as_poly() const {
    if (const auto* p = std::get_if<Polynomial>(&value_)) return *p;
    throw Error(ErrorKind::RingMismatch, "expected an element of Q[x]");
}

namespace {

void require_same_ring(const Elem& a, const Elem& b) {
    if (a.ring() != b.ring())
        throw Error(ErrorKind::RingMismatch, std::string(to_string(a.ring())) + " vs " +
                                                 std::string(to_string(b.ring())));
}

}  // namespace

Elem& Elem::operator+=(const Elem& other) {
    require_same_ring(*this, other);
    std::visit(
        [&](auto& v) {
            using T = std::decay_t<decltype(v)>;
            v += std::get<T>(other.value_);
        },
        value_);
    return *this;
}

Elem& Elem::operator-=(const Elem& other) {
    require_same_ring(*this, other);
    std::visit(
        [&](auto& v) {
            using T = std::decay_t<decltype(v)>;
            v -= std::get<T>(other.value_);
        },
        value_);
    return *this;
}

Elem& Elem::operator*=(const Elem& other) {
    require_same_ring(*this, other);
    std::visit(
        [&](auto& v) {
            using T = std::decay_t<decltype(v)>;
            v *= std::get<T>(other.value_);
        },
        value_);
    return *this;
}

Elem operator-(const Elem& a) {
    return std::visit([](const auto& v) -> Elem {
        using T = std::decay_t<decltype(v)>;
        return Elem(T(-v));
    }, a.value_);
}

bool operator==(const Elem& a, const Elem& b) {
    return a.value_ == b.value_;
}

Elem arith(const Elem& a, const Elem& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::Add: return a + b;
        case ArithKind::Sub: return a - b;
        case ArithKind::Mul: return a * b;
        case ArithKind::Neg: return -a;
    }
    throw Error(ErrorKind::Internal, "bad arithmetic kind");
}

// ---------------------------------------------------------------------------
// Euclidean structure

DivMod divmod(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "divmod by zero");
    switch (a.ring()) {
        case Ring::Z: {
            const Integer& bi = b.as_int();
            Integer babs = abs(bi);
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), a.as_int().get_mpz_t(), babs.get_mpz_t());
            Integer q = (a.as_int() - r) / bi;
            return {Elem(q), Elem(r)};
        }
        case Ring::Q: return {Elem(Rational(a.as_rat() / b.as_rat())), Elem::zero(Ring::Q)};
        case Ring::QX: {
            auto [q, r] = divmod(a.as_poly(), b.as_poly());
            return {Elem(std::move(q)), Elem(std::move(r))};
        }
    }
    throw Error(ErrorKind::Internal, "bad ring tag");
}

Integer valuation(const Elem& a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
    switch (a.ring()) {
        case Ring::Z: return abs(a.as_int());
        case Ring::Q: return 1;
        case Ring::QX: return Integer(a.as_poly().degree());
    }
    throw Error(ErrorKind::Internal, "bad ring tag");
}

bool divides(const Elem& d, const Elem& a) {
    require_same_ring(d, a);
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).remainder.is_zero();
}

Elem exact_div(const Elem& a, const Elem& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error(ErrorKind::InvalidArgument, to_string(b) + " does not divide " + to_string(a));
    return q;
}

Elem unit_inverse(const Elem& u) {
    if (!u.is_unit()) throw Error(ErrorKind::NotAUnit, to_string(u) + " is not a unit");
    switch (u.ring()) {
        case Ring::Z: return u;
        case Ring::Q: return Elem(Rational(1 / u.as_rat()));
        case Ring::QX: return Elem(Polynomial(Rational(1 / u.as_poly().coeffs()[0])));
    }
    throw Error(ErrorKind::Internal, "bad ring tag");
}

Associate canonical_associate(const Elem& a) {
    const Ring ring = a.ring();
    if (a.is_zero()) return {Elem::one(ring), a};
    switch (ring) {
        case Ring::Z:
            if (a.as_int() < 0) return {Elem::from_int(ring, -1), -a};
            return {Elem::one(ring), a};
        case Ring::Q: return {Elem(Rational(1 / a.as_rat())), Elem::one(ring)};
        case Ring::QX: {
            Rational inv = 1 / a.as_poly().leading();
            return {Elem(Polynomial(inv)), Elem(a.as_poly() * inv)};
        }
    }
    throw Error(ErrorKind::Internal, "bad ring tag");
}

Elem canonical(const Elem& a) { return canonical_associate(a).canonical; }

Elem canonical_residue(const Elem& a, const Elem& m) {
    require_same_ring(a, m);
    if (m.is_zero()) throw Error(ErrorKind::ZeroModulus, "residue modulo zero");
    return divmod(a, m).remainder;
}

Elem gcd(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    Elem x = a;
    Elem y = b;
    while (!y.is_zero()) {
        Elem r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical(x);
}

Elem lcm(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Elem::zero(a.ring());
    return canonical(exact_div(a * b, gcd(a, b)));
}

Bezout egcd(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::ZeroArgument, "egcd(0, 0)");
    const Ring ring = a.ring();
    // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    Elem r0 = a, r1 = b;
    Elem s0 = Elem::one(ring), s1 = Elem::zero(ring);
    Elem t0 = Elem::zero(ring), t1 = Elem::one(ring);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Elem s = s0 - q * s1;
        Elem t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    auto [u, d] = canonical_associate(r0);
    return {d, u * s0, u * t0};
}

std::strong_ordering prime_order(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    switch (a.ring()) {
        case Ring::Z: {
            int c = cmp(a.as_int(), b.as_int());
            return c < 0 ? std::strong_ordering::less
                         : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        case Ring::Q: {
            int c = cmp(a.as_rat(), b.as_rat());
            return c < 0 ? std::strong_ordering::less
                         : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        case Ring::QX: {
            const Polynomial& p = a.as_poly();
            const Polynomial& q = b.as_poly();
            if (auto c = p.degree() <=> q.degree(); c != 0) return c;
            for (long k = p.degree(); k >= 0; --k) {
                int c = cmp(p.coeff(static_cast<std::size_t>(k)), q.coeff(static_cast<std::size_t>(k)));
                if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace canonform
