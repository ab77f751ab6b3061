#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powergraph/bitset.hpp"
#include "powergraph/group.hpp"

namespace powergraph {

struct CyclicSubgroup {
    ElementId generator;   // smallest generator
    int order;
    Bitset members;        // over element ids
};

inline CyclicSubgroup cyclic_subgroup(const GroupTable& g, ElementId x) {
    if (x < 0 || x >= g.order()) throw Error("cyclic_subgroup: element out of range");
    Bitset members(g.order());
    ElementId acc = 0;
    members.set(0);
    while (true) {
        acc = g.mul(acc, x);
        if (acc == 0) break;
        members.set(acc);
    }
    return {x, g.order_of(x), std::move(members)};
}

// The maximal cyclic subgroups of G, ordered by smallest generator, plus a
// per-element mask of which family members contain each element. Every
// element lies in at least one member and distinct members are incomparable.
struct MaximalCyclicFamily {
    std::vector<CyclicSubgroup> subgroups;
    std::vector<Bitset> membership_mask;   // indexed by element, over family indices

    int size() const { return static_cast<int>(subgroups.size()); }
    const Bitset& mask(ElementId g) const { return membership_mask[g]; }

    Bitset full_mask() const {
        Bitset m(size());
        for (int i = 0; i < size(); ++i) m.set(i);
        return m;
    }
};

inline MaximalCyclicFamily maximal_cyclic_subgroups(const GroupTable& g) {
    const int n = g.order();
    std::vector<Bitset> gen_sets;
    gen_sets.reserve(n);
    for (ElementId x = 0; x < n; ++x) gen_sets.push_back(cyclic_subgroup(g, x).members);

    // one representative per distinct cyclic subgroup, smallest generator first
    std::map<Bitset, ElementId> first_gen;
    std::vector<ElementId> reps;
    for (ElementId x = 0; x < n; ++x)
        if (first_gen.emplace(gen_sets[x], x).second) reps.push_back(x);

    MaximalCyclicFamily fam;
    for (ElementId r : reps) {
        bool maximal = true;
        for (ElementId s : reps)
            if (s != r && gen_sets[r].is_subset_of(gen_sets[s]) && gen_sets[r] != gen_sets[s]) {
                maximal = false;
                break;
            }
        if (maximal) fam.subgroups.push_back({r, g.order_of(r), gen_sets[r]});
    }

    fam.membership_mask.assign(n, Bitset(fam.size()));
    for (int i = 0; i < fam.size(); ++i)
        fam.subgroups[i].members.for_each(
            [&](int x) { fam.membership_mask[x].set(i); });
    return fam;
}

// Indices of family members containing every element of S. S must be nonempty.
inline Bitset m_restricted(const MaximalCyclicFamily& fam, const std::vector<ElementId>& s) {
    if (s.empty()) throw Error("m_restricted: S must be nonempty");
    Bitset acc = fam.mask(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) acc &= fam.mask(s[i]);
    return acc;
}

// Cyc(G): elements g such that <g, h> is cyclic for every h. Equivalently,
// g shares a maximal cyclic subgroup with every element of G.
inline Bitset cyc_set(const GroupTable& g, const MaximalCyclicFamily& fam) {
    const int n = g.order();
    Bitset out(n);
    for (ElementId x = 0; x < n; ++x) {
        bool in = true;
        for (ElementId h = 0; h < n && in; ++h)
            in = fam.mask(x).intersects(fam.mask(h));
        if (in) out.set(x);
    }
    return out;
}

inline Bitset cyc_set(const GroupTable& g) { return cyc_set(g, maximal_cyclic_subgroups(g)); }

// A group of order divisible by p has a unique subgroup of order p exactly
// when it contains p-1 elements of order p.
inline bool has_unique_subgroup_of_prime_order(const GroupTable& g, long long p) {
    if (!is_prime(p)) throw Error("has_unique_subgroup_of_prime_order: p must be prime");
    if (g.order() % p != 0)
        throw Error("has_unique_subgroup_of_prime_order: p does not divide the group order");
    long long count = 0;
    for (ElementId x = 0; x < g.order(); ++x)
        if (g.order_of(x) == p) ++count;
    return count == p - 1;
}

struct SylowProfile {
    long long prime;
    int exponent;                        // p^exponent is the Sylow order
    bool unique;                         // exactly one Sylow p-subgroup
    bool cyclic;                         // Sylow p-subgroups are cyclic
    bool generalized_quaternion;         // Sylow 2-subgroups are Q_{2^m}, m >= 3
};

// The Sylow p-subgroup is unique exactly when the p-power-order elements
// number p^exponent (they then form the subgroup). A 2-group with a unique
// involution is cyclic or generalized quaternion, which pins down the
// generalized_quaternion flag without constructing the subgroup.
inline SylowProfile sylow_profile(const GroupTable& g, long long p) {
    if (!is_prime(p)) throw Error("sylow_profile: p must be prime");
    const Factorization f = factorize(g.order());
    const PrimePower* pp = f.find(p);
    if (!pp) throw Error("sylow_profile: p does not divide the group order");

    long long sylow_order = 1;
    for (int i = 0; i < pp->exponent; ++i) sylow_order *= p;

    long long p_elements = 0;
    bool cyclic = false;
    for (ElementId x = 0; x < g.order(); ++x) {
        long long o = g.order_of(x);
        while (o % p == 0) o /= p;
        if (o == 1) ++p_elements;
        if (g.order_of(x) == sylow_order) cyclic = true;
    }

    SylowProfile prof{p, pp->exponent, p_elements == sylow_order, cyclic, false};
    if (p == 2 && pp->exponent >= 3 && !cyclic && has_unique_subgroup_of_prime_order(g, 2))
        prof.generalized_quaternion = true;
    return prof;
}

inline std::optional<ElementId> has_element_of_order(const GroupTable& g, long long m) {
    for (ElementId x = 0; x < g.order(); ++x)
        if (g.order_of(x) == m) return x;
    return std::nullopt;
}

} // namespace powergraph
