#pragma once

#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "powergraph/classify.hpp"
#include "powergraph/expr.hpp"
#include "powergraph/graph.hpp"

namespace powergraph {

enum class GraphKind { Power, Enhanced };

inline std::string to_string(GraphKind k) {
    return k == GraphKind::Power ? "power" : "enhanced";
}

// Which families of groups to enumerate, up to max_order. Extra expressions
// are parsed and appended regardless of the order bound. Entries whose name
// repeats an earlier one are dropped, so the catalog is duplicate-free by
// name and its order is reproducible.
struct CatalogSpec {
    int max_order = 100;
    bool abelian = true;
    bool dihedral = true;
    bool dicyclic = true;
    bool symmetric_alternating = true;
    bool semidirect = true;
    bool products = true;
    std::vector<std::string> extra_exprs;
};

namespace detail {

inline void partitions_desc(int a, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (a == 0) {
        out.push_back(cur);
        return;
    }
    for (int next = std::min(a, max_part); next >= 1; --next) {
        cur.push_back(next);
        partitions_desc(a - next, next, cur, out);
        cur.pop_back();
    }
}

// Invariant-factor parameter lists for every abelian group of order n,
// ascending factors, each dividing the next.
inline std::vector<std::vector<long long>> abelian_types(long long n) {
    const Factorization f = factorize(n);
    std::vector<std::vector<std::vector<int>>> per_prime;
    for (const auto& pp : f.parts) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_desc(pp.exponent, pp.exponent, cur, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<std::vector<long long>> out;
    std::vector<std::size_t> choice(per_prime.size(), 0);
    while (true) {
        std::size_t rows = 0;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            rows = std::max(rows, per_prime[i][choice[i]].size());
        std::vector<long long> factors(rows, 1);
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const auto& lambda = per_prime[i][choice[i]];
            for (std::size_t j = 0; j < lambda.size(); ++j)
                for (int rep = 0; rep < lambda[j]; ++rep) factors[j] *= f.parts[i].prime;
        }
        std::reverse(factors.begin(), factors.end());
        out.push_back(std::move(factors));

        std::size_t i = 0;
        for (; i < per_prime.size(); ++i) {
            if (++choice[i] < per_prime[i].size()) break;
            choice[i] = 0;
        }
        if (i == per_prime.size()) break;
    }
    return out;
}

inline long long pow_mod(long long k, long long e, long long m) {
    long long acc = 1 % m;
    k %= m;
    for (long long i = 0; i < e; ++i) acc = (acc * k) % m;
    return acc;
}

} // namespace detail

inline std::vector<GroupTable> build_catalog(const CatalogSpec& spec) {
    if (spec.max_order < 4) throw Error("catalog max_order must be at least 4");
    std::vector<GroupTable> out;
    std::set<std::string> names;
    auto add = [&](const GroupExpr& e) {
        GroupTable g = build_group(e);
        if (names.insert(g.name()).second) out.push_back(std::move(g));
    };

    if (spec.abelian)
        for (long long n = 4; n <= spec.max_order; ++n)
            for (auto& factors : detail::abelian_types(n))
                add({GroupKind::Abelian, std::move(factors), {}});

    if (spec.dihedral)
        for (long long n = 3; 2 * n <= spec.max_order; ++n)
            add({GroupKind::Dihedral, {n}, {}});

    if (spec.dicyclic)
        for (long long m = 2; 4 * m <= spec.max_order; ++m)
            add({GroupKind::Dicyclic, {m}, {}});

    if (spec.symmetric_alternating) {
        for (long long n = 3; n <= 6; ++n)
            if (expr_order({GroupKind::Symmetric, {n}, {}}) <= spec.max_order)
                add({GroupKind::Symmetric, {n}, {}});
        for (long long n = 4; n <= 6; ++n)
            if (expr_order({GroupKind::Alternating, {n}, {}}) <= spec.max_order)
                add({GroupKind::Alternating, {n}, {}});
    }

    if (spec.semidirect)
        for (long long m = 2; m <= 32 && 2 * m <= spec.max_order; ++m)
            for (long long n = 2; m * n <= spec.max_order; ++n)
                for (long long k = 1; k < m; ++k) {
                    if (std::gcd(k, m) != 1) continue;
                    if (detail::pow_mod(k, n, m) != 1 % m) continue;
                    add({GroupKind::Semidirect, {m, n, k}, {}});
                }

    if (spec.products) {
        // structured factors first so pair names read "Q_8 x Z_3", not the reverse
        const std::vector<std::string> seeds = {
            "dicyclic:2", "dicyclic:4", "dicyclic:8", "dihedral:4",  "dihedral:5",
            "symmetric:3", "symmetric:4", "alternating:4", "abelian:2,2", "cyclic:2",
            "cyclic:3",   "cyclic:4",   "cyclic:5",   "cyclic:6",   "cyclic:7",
            "cyclic:8",   "cyclic:9",
        };
        std::vector<GroupExpr> parsed;
        parsed.reserve(seeds.size());
        for (const auto& s : seeds) parsed.push_back(parse_group_expr(s));
        for (std::size_t i = 0; i < parsed.size(); ++i)
            for (std::size_t j = i; j < parsed.size(); ++j) {
                GroupExpr e{GroupKind::Product, {}, {parsed[i], parsed[j]}};
                if (expr_order(e) <= spec.max_order) add(e);
            }
    }

    for (const auto& s : spec.extra_exprs) add(parse_group_expr(s));
    return out;
}

// One verification outcome for one group and one graph kind. predicted,
// reason and measured stay empty when the record is inapplicable (cyclic
// p-group for the power graph, cyclic group for the enhanced one). match is
// true only for applicable records whose prediction is confirmed.
struct VerificationRecord {
    std::string name;
    int order = 0;
    GraphKind kind = GraphKind::Power;
    bool applicable = false;
    std::optional<int> predicted;
    std::optional<DiameterReason> reason;
    std::optional<int> measured;
    int nontrivial_components = 0;
    int isolated_count = 0;
    bool match = false;

    // diagnostics, not serialized
    std::optional<PsiWitness> psi;
    std::optional<PhiWitness> phi;

    friend bool operator==(const VerificationRecord& a, const VerificationRecord& b) {
        return a.name == b.name && a.order == b.order && a.kind == b.kind &&
               a.applicable == b.applicable && a.predicted == b.predicted &&
               a.reason == b.reason && a.measured == b.measured &&
               a.nontrivial_components == b.nontrivial_components &&
               a.isolated_count == b.isolated_count && a.match == b.match;
    }
};

struct TheoremViolationError : Error {
    TheoremViolationError(VerificationRecord rec, const std::string& detail)
        : Error("theorem violation for " + rec.name + " [" + to_string(rec.kind) +
                "]: " + detail),
          record(std::move(rec)) {}
    VerificationRecord record;
};

namespace detail {

// True when G itself is a generalized quaternion group: a non-cyclic 2-group
// with a unique involution (necessarily of order at least 8).
inline bool is_generalized_quaternion(const GroupTable& g) {
    const Factorization f = factorize(g.order());
    return f.parts.size() == 1 && f.parts[0].prime == 2 && f.parts[0].exponent >= 3 &&
           !g.is_cyclic() && has_unique_subgroup_of_prime_order(g, 2);
}

// Elements expected to be adjacent to everything in the power graph: the
// identity, plus the generators when G is cyclic, plus the unique involution
// when G is generalized quaternion.
inline std::vector<int> expected_power_isolated(const GroupTable& g) {
    std::vector<int> out{0};
    if (g.is_cyclic()) {
        for (ElementId x = 1; x < g.order(); ++x)
            if (g.order_of(x) == g.order()) out.push_back(x);
    } else if (is_generalized_quaternion(g)) {
        out.push_back(*has_element_of_order(g, 2));
    }
    return out;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace detail

inline VerificationRecord verify_one(const GroupTable& g, GraphKind kind,
                                     const std::string& name) {
    VerificationRecord rec;
    rec.name = name;
    rec.order = g.order();
    rec.kind = kind;

    MaximalCyclicFamily fam;
    Bitset cyc;
    SimpleGraph graph;
    if (kind == GraphKind::Power) {
        rec.applicable = !is_cyclic_p_group(g);
        graph = power_graph(g);
    } else {
        rec.applicable = !g.is_cyclic();
        fam = maximal_cyclic_subgroups(g);
        cyc = cyc_set(g, fam);
        graph = enhanced_power_graph(g, fam);
    }

    const SimpleGraph comp = complement(graph);
    const StarDecomposition st = star(comp);
    rec.isolated_count = static_cast<int>(st.isolated.size());
    for (const auto& c : components(comp))
        if (c.size() >= 2) ++rec.nontrivial_components;

    const std::vector<int> expected_isolated =
        kind == GraphKind::Power ? detail::expected_power_isolated(g) : cyc.to_indices();

    if (!rec.applicable) {
        if (!st.kept.empty())
            throw TheoremViolationError(
                rec, "complement should have no edges but has " +
                         std::to_string(comp.edge_count()));
        return rec;
    }

    if (st.isolated != expected_isolated)
        throw TheoremViolationError(
            rec, "isolated vertices {" + detail::join_ints(st.isolated) +
                     "} differ from expected {" + detail::join_ints(expected_isolated) + "}");

    const DiameterPrediction pred =
        kind == GraphKind::Power ? predict_power_diameter(g)
                                 : predict_enhanced_diameter(g, fam, cyc);
    rec.predicted = pred.value;
    rec.reason = pred.reason;
    rec.psi = pred.psi;
    rec.phi = pred.phi;

    if (st.kept.empty())
        throw TheoremViolationError(rec, "complement unexpectedly has no edges");

    try {
        rec.measured = diameter(st.graph);
    } catch (const DisconnectedError& e) {
        throw TheoremViolationError(rec, "star is disconnected between elements " +
                                             std::to_string(st.kept[e.u]) + " and " +
                                             std::to_string(st.kept[e.v]));
    }

    if (rec.nontrivial_components != 1)
        throw TheoremViolationError(rec, "expected exactly one nontrivial component, found " +
                                             std::to_string(rec.nontrivial_components));
    if (*rec.measured != *rec.predicted)
        throw TheoremViolationError(rec, "predicted diameter " + std::to_string(*rec.predicted) +
                                             " but measured " + std::to_string(*rec.measured));
    rec.match = true;
    return rec;
}

inline std::pair<VerificationRecord, VerificationRecord> verify_group(const std::string& name,
                                                                      const GroupTable& g) {
    return {verify_one(g, GraphKind::Power, name), verify_one(g, GraphKind::Enhanced, name)};
}

inline std::pair<VerificationRecord, VerificationRecord> verify_group(const GroupTable& g) {
    return verify_group(g.name(), g);
}

struct SweepResult {
    std::vector<VerificationRecord> records;
    std::vector<std::string> violations;
    bool success() const { return violations.empty(); }
};

// Verifies every catalog group for both graph kinds. Violations are
// collected rather than thrown; the offending record still lands in the
// report with match == false.
inline SweepResult sweep(const std::vector<GroupTable>& catalog) {
    SweepResult res;
    for (const auto& g : catalog)
        for (GraphKind kind : {GraphKind::Power, GraphKind::Enhanced}) {
            try {
                res.records.push_back(verify_one(g, kind, g.name()));
            } catch (const TheoremViolationError& e) {
                res.records.push_back(e.record);
                res.violations.push_back(e.what());
            }
        }
    return res;
}

inline SweepResult sweep(const CatalogSpec& spec) { return sweep(build_catalog(spec)); }

// Independent check that <x, y> is cyclic: close {x, y} under multiplication
// and look for an element whose order is the subgroup size. Deliberately
// avoids the maximal-cyclic-family machinery.
inline bool oracle_pair_cyclic(const GroupTable& g, ElementId x, ElementId y) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
        throw Error("oracle_pair_cyclic: element out of range");
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::vector<ElementId> members;
    auto absorb = [&](ElementId v) {
        if (!in[v]) {
            in[v] = 1;
            members.push_back(v);
        }
    };
    absorb(0);
    absorb(x);
    absorb(y);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            absorb(g.mul(members[i], members[j]));
            absorb(g.mul(members[j], members[i]));
        }
    const long long size = static_cast<long long>(members.size());
    for (ElementId m : members)
        if (g.order_of(m) == size) return true;
    return false;
}

struct PhiHit {
    std::string name;
    PhiWitness witness;
};

// Finds every Phi-group in the catalog and cross-checks each hit against the
// measured diameter of its enhanced complement star.
inline std::vector<PhiHit> search_phi(const std::vector<GroupTable>& catalog) {
    std::vector<PhiHit> hits;
    for (const auto& g : catalog) {
        if (g.is_cyclic()) continue;
        const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
        const Bitset cyc = cyc_set(g, fam);
        const auto w = is_phi_group(g, fam, cyc);
        if (!w) continue;
        const StarDecomposition st = star(complement(enhanced_power_graph(g, fam)));
        VerificationRecord rec;
        rec.name = g.name();
        rec.order = g.order();
        rec.kind = GraphKind::Enhanced;
        rec.applicable = true;
        rec.predicted = 3;
        rec.reason = DiameterReason::Phi;
        rec.phi = w;
        try {
            rec.measured = diameter(st.graph);
        } catch (const DisconnectedError&) {
            throw TheoremViolationError(rec, "phi group has a disconnected star");
        }
        if (*rec.measured != 3)
            throw TheoremViolationError(rec, "phi group measured diameter " +
                                                 std::to_string(*rec.measured));
        hits.push_back({g.name(), *w});
    }
    return hits;
}

inline std::vector<PhiHit> search_phi(const CatalogSpec& spec) {
    return search_phi(build_catalog(spec));
}

inline std::optional<DiameterReason> reason_from_string(const std::string& s) {
    if (s == "ElemAbelian2") return DiameterReason::ElemAbelian2;
    if (s == "Psi") return DiameterReason::Psi;
    if (s == "Phi") return DiameterReason::Phi;
    if (s == "Otherwise") return DiameterReason::Otherwise;
    return std::nullopt;
}

// Report lines are JSON objects with a fixed key order so byte-identical
// reruns are possible.
inline nlohmann::ordered_json record_to_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["order"] = r.order;
    j["kind"] = to_string(r.kind);
    j["applicable"] = r.applicable;
    j["predicted"] = r.predicted ? nlohmann::ordered_json(*r.predicted)
                                 : nlohmann::ordered_json(nullptr);
    j["reason"] = r.reason ? nlohmann::ordered_json(to_string(*r.reason))
                           : nlohmann::ordered_json(nullptr);
    j["measured"] = r.measured ? nlohmann::ordered_json(*r.measured)
                               : nlohmann::ordered_json(nullptr);
    j["nontrivial_components"] = r.nontrivial_components;
    j["isolated_count"] = r.isolated_count;
    j["match"] = r.match;
    return j;
}

inline VerificationRecord record_from_json(const nlohmann::ordered_json& j) {
    VerificationRecord r;
    r.name = j.at("name").get<std::string>();
    r.order = j.at("order").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "power" && kind != "enhanced")
        throw ParseError("report: unknown graph kind '" + kind + "'");
    r.kind = kind == "power" ? GraphKind::Power : GraphKind::Enhanced;
    r.applicable = j.at("applicable").get<bool>();
    if (!j.at("predicted").is_null()) r.predicted = j.at("predicted").get<int>();
    if (!j.at("reason").is_null()) {
        r.reason = reason_from_string(j.at("reason").get<std::string>());
        if (!r.reason) throw ParseError("report: unknown reason tag");
    }
    if (!j.at("measured").is_null()) r.measured = j.at("measured").get<int>();
    r.nontrivial_components = j.at("nontrivial_components").get<int>();
    r.isolated_count = j.at("isolated_count").get<int>();
    r.match = j.at("match").get<bool>();
    return r;
}

inline void write_report(const std::vector<VerificationRecord>& records, std::ostream& out) {
    for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

inline void write_report(const std::vector<VerificationRecord>& records,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_report(records, out);
    if (!out) throw IoError("write failed: " + path);
}

inline std::vector<VerificationRecord> parse_report(std::istream& in) {
    std::vector<VerificationRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(nlohmann::ordered_json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("report: bad JSON line: ") + e.what());
        }
    }
    return out;
}

} // namespace powergraph
