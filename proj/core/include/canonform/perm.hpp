#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace canonform {

/// A bijection of {1..n}, stored in one-line notation: images()[i-1] = f(i).
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidArgument unless `one_line` rearranges 1..n.
    explicit Permutation(std::vector<std::size_t> one_line);

    static Permutation identity(std::size_t n);
    /// Single cycle (c1 c2 ... ck) acting on {1..n}.
    static Permutation cycle(std::size_t n, std::span<const std::size_t> cycle);
    static Permutation cycle(std::size_t n, std::initializer_list<std::size_t> cycle) {
        return Permutation::cycle(n, std::span<const std::size_t>(cycle.begin(), cycle.size()));
    }
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t x) const { return images_.at(x - 1); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// (fg)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);

/// Disjoint cycles covering 1..n, fixed points included, each starting at
/// its minimum element and sorted by that element.
std::vector<std::vector<std::size_t>> cycles(const Permutation& f);

/// Sum over cycles of (length - 1): the fewest transpositions composing to f.
std::size_t index(const Permutation& f);

/// Pairs (i, j), i < j, with f(i) > f(j), in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> inversions(const Permutation& f);

/// (-1)^index(f)
int sign(const Permutation& f);

/// An injective map {1..n} -> {1..codomain}.
class Injection {
public:
    Injection(std::vector<std::size_t> images, std::size_t codomain);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t codomain() const noexcept { return codomain_; }
    std::size_t operator()(std::size_t x) const { return images_.at(x - 1); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    bool strictly_increasing() const;

    friend bool operator==(const Injection&, const Injection&) = default;

private:
    std::vector<std::size_t> images_;
    std::size_t codomain_;
};

struct InjectionSplit {
    Injection increasing;  ///< f, strictly increasing with image(f) = image(h)
    Permutation order;     ///< g, so that h = f o g
};

/// The unique factorization h = f o g with f strictly increasing.
InjectionSplit decompose_injection(const Injection& h);

Injection compose(const Injection& f, const Permutation& g);

/// Every permutation of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace canonform
