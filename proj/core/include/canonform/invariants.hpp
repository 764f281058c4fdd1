#pragma once

#include <vector>

#include "canonform/smith.hpp"

namespace canonform {

/// Largest number of minors `det_divisors_by_minors` enumerates when both
/// dimensions exceed 4.
inline constexpr std::size_t kMinorOracleLimit = 5000;

/// f_0 .. f_r with f_k the canonical gcd of all k x k minors; stops at the rank.
std::vector<Elem> det_divisors_by_minors(const Matrix& a);

struct InvariantReport {
    std::size_t rank = 0;
    std::vector<Elem> det_divisors;       ///< f_0 .. f_r
    std::vector<Elem> invariant_factors;  ///< q_1 .. q_r
    std::vector<PrimePower> elementary_divisors;
};

/// f- and q-sequences read off the Smith form; no factorization involved.
std::vector<Elem> invariant_factors(const Matrix& a);
std::vector<Elem> det_divisors(const Matrix& a);

/// Prime powers of every non-unit invariant factor, ordered by prime and
/// then exponent.
std::vector<PrimePower> elementary_divisors(const Matrix& a);
std::vector<PrimePower> elementary_divisors_of(const std::vector<Elem>& invariant_factors);

InvariantReport invariant_report(const Matrix& a);

/// Rebuilds q_1 | ... | q_r from an elementary-divisor multiset: each prime's
/// exponents are padded with zeros to length r and sorted increasingly.
std::vector<Elem> invariant_factors_from_elementary(const std::vector<PrimePower>& eds, std::size_t r, Ring ring);

/// True iff A = P B Q for unimodular P, Q.
bool equivalent(const Matrix& a, const Matrix& b);

}  // namespace canonform
