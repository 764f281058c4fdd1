#include "canonform/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "canonform/error.hpp"

namespace canonform {

Permutation::Permutation(std::vector<std::size_t> one_line) : images_(std::move(one_line)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (std::size_t v : images_) {
        if (v < 1 || v > images_.size() || seen[v])
            throw Error(ErrorKind::InvalidArgument, "not a permutation of 1.." + std::to_string(images_.size()));
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return Permutation(std::move(v));
}

Permutation Permutation::cycle(std::size_t n, std::span<const std::size_t> c) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 1 || c[k] > n) throw Error(ErrorKind::IndexOutOfRange, "cycle entry outside 1..n");
        v[c[k] - 1] = c[(k + 1) % c.size()];
    }
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "transposition needs distinct points");
    return cycle(n, {i, j});
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw Error(ErrorKind::SizeMismatch, "composing permutations of different degree");
    std::vector<std::size_t> v(f.size());
    for (std::size_t x = 1; x <= f.size(); ++x) v[x - 1] = f(g(x));
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& f) {
    std::vector<std::size_t> v(f.size());
    for (std::size_t x = 1; x <= f.size(); ++x) v[f(x) - 1] = x;
    return Permutation(std::move(v));
}

std::vector<std::vector<std::size_t>> cycles(const Permutation& f) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(f.size() + 1, false);
    for (std::size_t start = 1; start <= f.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> c;
        for (std::size_t x = start; !seen[x]; x = f(x)) {
            seen[x] = true;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t index(const Permutation& f) {
    std::size_t total = 0;
    for (const auto& c : cycles(f)) total += c.size() - 1;
    return total;
}

std::vector<std::pair<std::size_t, std::size_t>> inversions(const Permutation& f) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= f.size(); ++i)
        for (std::size_t j = i + 1; j <= f.size(); ++j)
            if (f(i) > f(j)) out.emplace_back(i, j);
    return out;
}

int sign(const Permutation& f) { return index(f) % 2 == 0 ? 1 : -1; }

Injection::Injection(std::vector<std::size_t> images, std::size_t codomain)
    : images_(std::move(images)), codomain_(codomain) {
    std::vector<bool> seen(codomain + 1, false);
    for (std::size_t v : images_) {
        if (v < 1 || v > codomain || seen[v])
            throw Error(ErrorKind::InvalidArgument, "not an injection into 1.." + std::to_string(codomain));
        seen[v] = true;
    }
}

bool Injection::strictly_increasing() const {
    return std::adjacent_find(images_.begin(), images_.end(), std::greater_equal<>()) == images_.end();
}

InjectionSplit decompose_injection(const Injection& h) {
    std::vector<std::size_t> sorted = h.images();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> order(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto pos = std::lower_bound(sorted.begin(), sorted.end(), h.images()[i]);
        order[i] = static_cast<std::size_t>(pos - sorted.begin()) + 1;
    }
    return {Injection(std::move(sorted), h.codomain()), Permutation(std::move(order))};
}

Injection compose(const Injection& f, const Permutation& g) {
    if (f.size() != g.size()) throw Error(ErrorKind::SizeMismatch, "domain sizes differ");
    std::vector<std::size_t> v(f.size());
    for (std::size_t x = 1; x <= f.size(); ++x) v[x - 1] = f(g(x));
    return Injection(std::move(v), f.codomain());
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace canonform
