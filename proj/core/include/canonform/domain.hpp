#pragma once

// Exact scalars for the three Euclidean domains Z, Q and Q[x], together with
// the division / gcd / normalization primitives that every reduction
// algorithm in this library is written against.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "canonform/error.hpp"

namespace canonform {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Ring { Z, Q, QX };

std::string_view to_string(Ring ring) noexcept;

/// Univariate polynomial with rational coefficients. `coeffs()[i]` is the
/// coefficient of x^i; the zero polynomial has no coefficients and every
/// other value has a nonzero last coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(const Rational& constant);  // NOLINT: implicit lift of constants
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

    static Polynomial x() { return monomial(1, 1); }
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// x - root
    static Polynomial linear(const Rational& root);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Degree of a nonzero polynomial; -1 for zero.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const;
    Rational leading() const;
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    Polynomial derivative() const;
    Rational operator()(const Rational& at) const;
    Polynomial pow(unsigned exponent) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Long division: a = b*q + r with deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// A ring-tagged scalar. Arithmetic between two Elems requires equal tags and
/// throws RingMismatch otherwise.
class Elem {
public:
    /// Integer zero.
    Elem() : value_(Integer(0)) {}
    Elem(Integer v) : value_(std::move(v)) {}        // NOLINT
    Elem(Rational v) : value_(std::move(v)) { std::get<Rational>(value_).canonicalize(); }  // NOLINT
    Elem(Polynomial v) : value_(std::move(v)) {}     // NOLINT

    static Elem zero(Ring ring);
    static Elem one(Ring ring);
    /// The integer n viewed as an element of `ring`.
    static Elem from_int(Ring ring, long n);
    /// Embeds `value` into a ring at least as large (Z -> Q -> Q[x]).
    static Elem lift(const Elem& value, Ring to);

    Ring ring() const noexcept { return static_cast<Ring>(value_.index()); }
    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    const Integer& as_int() const;
    const Rational& as_rat() const;
    const Polynomial& as_poly() const;

    Elem& operator+=(const Elem& other);
    Elem& operator-=(const Elem& other);
    Elem& operator*=(const Elem& other);

    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
    friend Elem operator-(const Elem& a);
    friend bool operator==(const Elem& a, const Elem& b);

private:
    std::variant<Integer, Rational, Polynomial> value_;
};

enum class ArithKind { Add, Sub, Mul, Neg };

/// Generic entry point; `b` is ignored for Neg.
Elem arith(const Elem& a, const Elem& b, ArithKind kind);

struct DivMod {
    Elem quotient;
    Elem remainder;
};

/// Euclidean division a = b*q + r. Over Z the remainder satisfies 0 <= r < |b|;
/// over Q it is always zero; over Q[x], deg r < deg b.
DivMod divmod(const Elem& a, const Elem& b);

/// |a| over Z, degree over Q[x], 1 over Q.
Integer valuation(const Elem& a);

bool divides(const Elem& d, const Elem& a);

/// a / b when b divides a; throws InvalidArgument otherwise.
Elem exact_div(const Elem& a, const Elem& b);

/// Multiplicative inverse of a unit; NotAUnit otherwise.
Elem unit_inverse(const Elem& u);

struct Associate {
    Elem unit;       ///< u
    Elem canonical;  ///< u * a, in the associates SDR
};

/// Canonical representative of the associate class of `a`: nonnegative over
/// Z, 0 or 1 over Q, zero or monic over Q[x].
Associate canonical_associate(const Elem& a);

Elem canonical(const Elem& a);

/// Representative of a mod m in the residues SDR.
Elem canonical_residue(const Elem& a, const Elem& m);

/// Canonical gcd; gcd(a, 0) = canonical(a) and gcd(0, 0) = 0.
Elem gcd(const Elem& a, const Elem& b);
/// Canonical lcm; lcm(a, 0) = 0.
Elem lcm(const Elem& a, const Elem& b);

struct Bezout {
    Elem d;
    Elem s;
    Elem t;
};

/// Extended Euclid: s*a + t*b = d with d the canonical gcd.
Bezout egcd(const Elem& a, const Elem& b);

struct PrimePower {
    Elem prime;
    unsigned exponent = 1;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    Elem unit;
    std::vector<PrimePower> factors;  ///< sorted by `prime_order`, primes distinct
};

/// Factors a nonzero element into canonical primes. Over Q[x] only linear,
/// quadratic and cubic irreducible factors can be certified; a larger
/// surviving factor raises FactorizationIncomplete.
Factorization factor(const Elem& a);

/// Deterministic total order on canonical primes: numeric over Z; for monic
/// polynomials degree first, then coefficients from x^(d-1) down to x^0.
std::strong_ordering prime_order(const Elem& a, const Elem& b);

/// Parses one scalar in the grammar used by matrix files and the CLI.
Elem parse_scalar(std::string_view text, Ring ring);
std::string to_string(const Elem& value);
std::string to_string(const Polynomial& p);
std::string to_string(const Rational& q);

}  // namespace canonform
