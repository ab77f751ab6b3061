#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powergraph/group.hpp"
#include "powergraph/subgroups.hpp"

namespace powergraph {

// Witness that G has the structure forcing the complement of its power graph
// to have a star of diameter 3: writing |G| = p_1^a_1 ... p_t^a_t with t >= 2,
// G has a unique subgroup of order p_i for every i, and for the deficient
// prime p_k there is an element whose order is |G| / p_k^(a_k - beta) with
// 1 <= beta < a_k while every other Sylow subgroup is unique.
struct PsiWitness {
    int prime_index;          // k, 0-based position in the ascending prime list
    long long prime;          // p_k
    int beta;                 // reduced exponent at p_k
    ElementId element;        // element of order element_order
    long long element_order;  // |G| / p_k^(a_k - beta)
};

// Witness pair for diameter 3 of the enhanced complement star: <x, y> is
// cyclic, neither <x> nor <y> is maximal, x and y lie outside Cyc(G), and
// every maximal cyclic subgroup contains x or y.
struct PhiWitness {
    ElementId x;
    ElementId y;
};

namespace detail {

inline long long count_p_power_order_elements(const GroupTable& g, long long p) {
    long long count = 0;
    for (ElementId x = 0; x < g.order(); ++x) {
        long long o = g.order_of(x);
        while (o % p == 0) o /= p;
        if (o == 1) ++count;
    }
    return count;
}

inline void audit_psi_witness(const GroupTable& g, const PsiWitness& w) {
    const Factorization f = factorize(g.order());
    if (f.parts.size() < 2) throw Error("psi witness audit: fewer than two primes");
    for (const auto& pp : f.parts)
        if (!has_unique_subgroup_of_prime_order(g, pp.prime))
            throw Error("psi witness audit: order-p subgroup not unique");
    if (w.prime_index < 0 || w.prime_index >= static_cast<int>(f.parts.size()) ||
        f.parts[static_cast<std::size_t>(w.prime_index)].prime != w.prime)
        throw Error("psi witness audit: prime index mismatch");
    const PrimePower& pk = f.parts[static_cast<std::size_t>(w.prime_index)];
    if (w.beta < 1 || w.beta >= pk.exponent)
        throw Error("psi witness audit: beta out of range");
    long long expected = g.order();
    for (int i = 0; i < pk.exponent - w.beta; ++i) expected /= pk.prime;
    if (expected != w.element_order || g.order_of(w.element) != w.element_order)
        throw Error("psi witness audit: element order mismatch");
    for (const auto& pp : f.parts) {
        if (pp.prime == w.prime) continue;
        long long sylow = 1;
        for (int i = 0; i < pp.exponent; ++i) sylow *= pp.prime;
        if (count_p_power_order_elements(g, pp.prime) != sylow)
            throw Error("psi witness audit: Sylow subgroup not unique away from p_k");
    }
}

inline void audit_phi_witness(const GroupTable& g, const MaximalCyclicFamily& fam,
                              const Bitset& cyc, const PhiWitness& w) {
    if (w.x == w.y || w.x < 0 || w.y < 0 || w.x >= g.order() || w.y >= g.order())
        throw Error("phi witness audit: bad pair");
    if (cyc.test(w.x) || cyc.test(w.y))
        throw Error("phi witness audit: witness lies in Cyc(G)");
    if (!fam.mask(w.x).intersects(fam.mask(w.y)))
        throw Error("phi witness audit: <x, y> is not cyclic");
    for (ElementId v : {w.x, w.y})
        for (int i = 0; i < fam.size(); ++i)
            if (fam.subgroups[i].members.test(v) && fam.subgroups[i].order == g.order_of(v))
                throw Error("phi witness audit: witness generates a maximal cyclic subgroup");
    Bitset covered = fam.mask(w.x);
    covered |= fam.mask(w.y);
    if (!(covered == fam.full_mask()))
        throw Error("phi witness audit: some maximal cyclic subgroup avoids both witnesses");
}

} // namespace detail

// Searches (k, beta) ascending and returns the first witness, or nullopt.
inline std::optional<PsiWitness> is_psi_group(const GroupTable& g) {
    const Factorization f = factorize(g.order());
    const int t = static_cast<int>(f.parts.size());
    if (t < 2) return std::nullopt;
    for (const auto& pp : f.parts)
        if (!has_unique_subgroup_of_prime_order(g, pp.prime)) return std::nullopt;

    std::vector<char> sylow_unique(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        long long sylow = 1;
        for (int j = 0; j < f.parts[i].exponent; ++j) sylow *= f.parts[i].prime;
        sylow_unique[i] = detail::count_p_power_order_elements(g, f.parts[i].prime) == sylow;
    }

    for (int k = 0; k < t; ++k) {
        bool others_unique = true;
        for (int i = 0; i < t && others_unique; ++i)
            if (i != k) others_unique = sylow_unique[i];
        if (!others_unique) continue;
        for (int beta = 1; beta < f.parts[k].exponent; ++beta) {
            long long target = g.order();
            for (int i = 0; i < f.parts[k].exponent - beta; ++i) target /= f.parts[k].prime;
            if (auto e = has_element_of_order(g, target)) {
                PsiWitness w{k, f.parts[k].prime, beta, *e, target};
                detail::audit_psi_witness(g, w);
                return w;
            }
        }
    }
    return std::nullopt;
}

// Scans pairs outside Cyc(G) in lexicographic order and returns the first
// pair whose membership masks intersect, cover the whole family, and whose
// members generate no maximal cyclic subgroup. Cyclic groups are never Phi.
inline std::optional<PhiWitness> is_phi_group(const GroupTable& g,
                                              const MaximalCyclicFamily& fam,
                                              const Bitset& cyc) {
    if (g.is_cyclic()) return std::nullopt;
    const int n = g.order();

    std::vector<ElementId> verts;
    for (ElementId x = 0; x < n; ++x)
        if (!cyc.test(x)) verts.push_back(x);

    std::vector<char> generates_maximal(static_cast<std::size_t>(n), 0);
    for (ElementId x : verts)
        for (int i = 0; i < fam.size(); ++i)
            if (fam.subgroups[i].members.test(x) && fam.subgroups[i].order == g.order_of(x))
                generates_maximal[x] = 1;

    const Bitset full = fam.full_mask();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const ElementId x = verts[i];
        if (generates_maximal[x]) continue;
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const ElementId y = verts[j];
            if (generates_maximal[y]) continue;
            if (!fam.mask(x).intersects(fam.mask(y))) continue;
            Bitset covered = fam.mask(x);
            covered |= fam.mask(y);
            if (covered == full) {
                PhiWitness w{x, y};
                detail::audit_phi_witness(g, fam, cyc, w);
                return w;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<PhiWitness> is_phi_group(const GroupTable& g) {
    const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
    return is_phi_group(g, fam, cyc_set(g, fam));
}

inline bool is_cyclic_p_group(const GroupTable& g) {
    return g.is_cyclic() && factorize(g.order()).parts.size() <= 1;
}

enum class DiameterReason { ElemAbelian2, Psi, Phi, Otherwise };

inline std::string to_string(DiameterReason r) {
    switch (r) {
    case DiameterReason::ElemAbelian2: return "ElemAbelian2";
    case DiameterReason::Psi: return "Psi";
    case DiameterReason::Phi: return "Phi";
    case DiameterReason::Otherwise: return "Otherwise";
    }
    return "?";
}

struct DiameterPrediction {
    int value;
    DiameterReason reason;
    std::optional<PsiWitness> psi;
    std::optional<PhiWitness> phi;
};

// Diameter of the star of the power graph complement, by classification
// alone. Defined for every group except cyclic p-groups, whose power graph
// is complete.
inline DiameterPrediction predict_power_diameter(const GroupTable& g) {
    if (is_cyclic_p_group(g))
        throw EdgelessComplementError(
            "power graph of a cyclic p-group is complete; its complement has no edges");
    if (is_elementary_abelian_2(g)) return {1, DiameterReason::ElemAbelian2, {}, {}};
    if (auto w = is_psi_group(g)) return {3, DiameterReason::Psi, w, {}};
    return {2, DiameterReason::Otherwise, {}, {}};
}

// Same for the enhanced power graph complement; defined for non-cyclic groups.
inline DiameterPrediction predict_enhanced_diameter(const GroupTable& g,
                                                    const MaximalCyclicFamily& fam,
                                                    const Bitset& cyc) {
    if (g.is_cyclic())
        throw EdgelessComplementError(
            "enhanced power graph of a cyclic group is complete; its complement has no edges");
    if (is_elementary_abelian_2(g)) return {1, DiameterReason::ElemAbelian2, {}, {}};
    if (auto w = is_phi_group(g, fam, cyc)) return {3, DiameterReason::Phi, {}, w};
    return {2, DiameterReason::Otherwise, {}, {}};
}

inline DiameterPrediction predict_enhanced_diameter(const GroupTable& g) {
    const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
    return predict_enhanced_diameter(g, fam, cyc_set(g, fam));
}

// Nilpotent means every Sylow subgroup is unique (the group is the direct
// product of its Sylow subgroups).
inline bool is_nilpotent(const GroupTable& g) {
    for (long long p : factorize(g.order()).primes())
        if (!sylow_profile(g, p).unique) return false;
    return true;
}

// G isomorphic to Q_{2^m} x Z_n with m >= 3 and n >= 3 odd: nilpotent, with
// generalized quaternion Sylow 2-subgroup and cyclic odd Sylow subgroups.
inline bool recognize_q2m_times_odd_cyclic(const GroupTable& g) {
    const Factorization f = factorize(g.order());
    const PrimePower* two = f.find(2);
    if (!two || two->exponent < 3) return false;
    long long odd_part = g.order();
    while (odd_part % 2 == 0) odd_part /= 2;
    if (odd_part < 3) return false;
    for (const auto& pp : f.parts) {
        const SylowProfile prof = sylow_profile(g, pp.prime);
        if (!prof.unique) return false;
        if (pp.prime == 2 && !prof.generalized_quaternion) return false;
        if (pp.prime != 2 && !prof.cyclic) return false;
    }
    return true;
}

} // namespace powergraph
