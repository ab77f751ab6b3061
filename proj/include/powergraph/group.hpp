#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/errors.hpp"

namespace powergraph {

using ElementId = int;

struct PrimePower {
    long long prime = 0;
    int exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition with primes ascending. value() multiplies it back.
struct Factorization {
    std::vector<PrimePower> parts;

    long long value() const {
        long long v = 1;
        for (const auto& pp : parts)
            for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
        return v;
    }

    std::vector<long long> primes() const {
        std::vector<long long> ps;
        ps.reserve(parts.size());
        for (const auto& pp : parts) ps.push_back(pp.prime);
        return ps;
    }

    const PrimePower* find(long long p) const {
        for (const auto& pp : parts)
            if (pp.prime == p) return &pp;
        return nullptr;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline Factorization factorize(long long n) {
    if (n < 1) throw Error("factorize: argument must be positive");
    Factorization f;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.parts.push_back({p, e});
    }
    if (n > 1) f.parts.push_back({n, 1});
    return f;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Generators of a dicyclic group, remembered by the builder so callers can
// name the distinguished elements of Q_{2^n} without re-deriving them.
struct DicyclicTags {
    ElementId x;
    ElementId y;
};

// Finite group as a complete multiplication table. The identity is always
// element 0. Element orders and inverses are computed once at construction.
// Untrusted tables should go through validate_table, which checks the axioms
// and relabels the identity to 0 before constructing one of these.
class GroupTable {
public:
    GroupTable(std::string name, int order, std::vector<ElementId> table)
        : name_(std::move(name)), order_(order), table_(std::move(table)) {
        if (order_ < 1) throw Error("group order must be positive");
        if (table_.size() != static_cast<std::size_t>(order_) * order_)
            throw Error("multiplication table has wrong size");
        for (ElementId v : table_)
            if (v < 0 || v >= order_) throw Error("multiplication table entry out of range");
        for (ElementId g = 0; g < order_; ++g)
            if (mul(0, g) != g || mul(g, 0) != g)
                throw Error("element 0 is not an identity; use validate_table for raw tables");
        orders_.resize(order_);
        inverse_.assign(order_, -1);
        orders_[0] = 1;
        inverse_[0] = 0;
        for (ElementId g = 1; g < order_; ++g) {
            int m = 1;
            ElementId acc = g;
            while (acc != 0) {
                if (mul(acc, g) == 0) inverse_[g] = acc;
                acc = mul(acc, g);
                if (++m > order_)
                    throw Error("powers of element " + std::to_string(g) +
                                " never reach the identity; use validate_table for raw tables");
            }
            orders_[g] = m;
        }
        cyclic_ = std::find(orders_.begin(), orders_.end(), order_) != orders_.end();
    }

    const std::string& name() const { return name_; }
    int order() const { return order_; }

    ElementId mul(ElementId a, ElementId b) const {
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }

    ElementId inverse(ElementId a) const { return inverse_[a]; }

    ElementId power(ElementId g, long long k) const {
        const int o = orders_[g];
        k %= o;
        if (k < 0) k += o;
        ElementId acc = 0;
        for (long long i = 0; i < k; ++i) acc = mul(acc, g);
        return acc;
    }

    int order_of(ElementId g) const { return orders_[g]; }
    const std::vector<int>& orders() const { return orders_; }
    bool is_cyclic() const { return cyclic_; }

    const std::optional<DicyclicTags>& dicyclic_tags() const { return tags_; }
    void set_dicyclic_tags(DicyclicTags t) { tags_ = t; }

    const std::vector<ElementId>& raw_table() const { return table_; }

private:
    std::string name_;
    int order_;
    std::vector<ElementId> table_;
    std::vector<int> orders_;
    std::vector<ElementId> inverse_;
    bool cyclic_ = false;
    std::optional<DicyclicTags> tags_;
};

inline int element_order(const GroupTable& g, ElementId x) {
    if (x < 0 || x >= g.order()) throw Error("element_order: element out of range");
    return g.order_of(x);
}

// true iff G is isomorphic to (Z_2)^m with m >= 1, i.e. every non-identity
// element has order 2. Z_1 is excluded.
inline bool is_elementary_abelian_2(const GroupTable& g) {
    if (g.order() < 2) return false;
    for (ElementId x = 1; x < g.order(); ++x)
        if (g.order_of(x) != 2) return false;
    return true;
}

namespace detail {

// Associativity is cubic to check exhaustively. Past the cap we sample
// random triples instead; the seed is fixed so validation is reproducible.
inline void check_associativity(const std::vector<std::vector<int>>& t, int n, int exhaustive_cap) {
    auto bad = [&](int a, int b, int c) { return t[t[a][b]][c] != t[a][t[b][c]]; };
    if (n <= exhaustive_cap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (bad(a, b, c))
                        throw NotAGroupError("associativity", {a, b, c},
                                             "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                 ")*" + std::to_string(c) + " != " +
                                                 std::to_string(a) + "*(" + std::to_string(b) +
                                                 "*" + std::to_string(c) + ")");
        return;
    }
    std::mt19937 rng(0x5eed5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const long long samples = 10LL * n * n;
    for (long long i = 0; i < samples; ++i) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        if (bad(a, b, c))
            throw NotAGroupError("associativity", {a, b, c}, "sampled triple fails");
    }
}

} // namespace detail

// Checks the group axioms on a raw table and returns a GroupTable with the
// identity relabeled to element 0. Throws NotAGroupError with a witness when
// an axiom fails.
inline GroupTable validate_table(const std::vector<std::vector<int>>& raw,
                                 std::string name = "group",
                                 int assoc_exhaustive_cap = 512) {
    const int n = static_cast<int>(raw.size());
    if (n < 1) throw NotAGroupError("shape", {-1, -1, -1}, "table is empty");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(raw[i].size()) != n)
            throw NotAGroupError("shape", {i, -1, -1},
                                 "row " + std::to_string(i) + " does not have " +
                                     std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j)
            if (raw[i][j] < 0 || raw[i][j] >= n)
                throw NotAGroupError("closure", {i, j, raw[i][j]},
                                     "entry at (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") is outside [0," + std::to_string(n) + ")");
    }

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = raw[e][g] == g && raw[g][e] == g;
        if (ok) identity = e;
    }
    if (identity < 0)
        throw NotAGroupError("identity", {-1, -1, -1}, "no two-sided identity element");

    // Latin square property: each row and column is a permutation.
    std::vector<int> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int j = 0; j < n; ++j) {
            if (seen[raw[i][j]] >= 0)
                throw NotAGroupError("cancellation", {i, seen[raw[i][j]], j},
                                     "row " + std::to_string(i) + " repeats value " +
                                         std::to_string(raw[i][j]));
            seen[raw[i][j]] = j;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int i = 0; i < n; ++i) {
            if (seen[raw[i][j]] >= 0)
                throw NotAGroupError("cancellation", {seen[raw[i][j]], i, j},
                                     "column " + std::to_string(j) + " repeats value " +
                                         std::to_string(raw[i][j]));
            seen[raw[i][j]] = i;
        }
    }

    detail::check_associativity(raw, n, assoc_exhaustive_cap);

    // Relabel by the transposition (0 identity) so the identity lands at 0.
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[0], sigma[identity]);
    std::vector<ElementId> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<std::size_t>(sigma[a]) * n + sigma[b]] = sigma[raw[a][b]];
    return GroupTable(std::move(name), n, std::move(flat));
}

inline constexpr int kDefaultOrderCap = 20000;

// Closes a set of permutations (given as image vectors on [0, d)) under
// composition and returns the resulting permutation group. The identity is
// discovered first, so it gets index 0; the rest are indexed in BFS order.
inline GroupTable closure_from_permutations(const std::vector<std::vector<int>>& generators,
                                            std::string name = "perm group",
                                            int order_cap = kDefaultOrderCap) {
    if (generators.empty()) throw Error("closure_from_permutations: no generators");
    const int d = static_cast<int>(generators[0].size());
    if (d < 1) throw Error("closure_from_permutations: degree must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != d)
            throw Error("closure_from_permutations: generators have mixed degrees");
        std::vector<char> hit(d, 0);
        for (int v : g) {
            if (v < 0 || v >= d || hit[v])
                throw Error("closure_from_permutations: generator is not a permutation");
            hit[v] = 1;
        }
    }

    auto compose = [d](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(d);
        for (int i = 0; i < d; ++i) r[i] = p[q[i]];
        return r;
    };

    std::vector<int> identity(d);
    std::iota(identity.begin(), identity.end(), 0);

    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    auto intern = [&](std::vector<int> p) {
        auto [it, fresh] = index.try_emplace(std::move(p), static_cast<int>(elems.size()));
        if (fresh) {
            elems.push_back(it->first);
            if (static_cast<int>(elems.size()) > order_cap)
                throw ResourceCapError("permutation closure too large", elems.size(), order_cap);
        }
        return it->second;
    };

    intern(identity);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : generators) intern(compose(elems[i], g));

    const int n = static_cast<int>(elems.size());
    std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
    return GroupTable(std::move(name), n, std::move(table));
}

} // namespace powergraph
