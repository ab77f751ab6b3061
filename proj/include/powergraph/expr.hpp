#pragma once

#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "powergraph/group.hpp"

namespace powergraph {

// Group construction expressions:
//
//   expr  := atom | "product(" expr ("," expr)+ ")"
//   atom  := "cyclic:" INT
//          | "abelian:" INT ("," INT)*
//          | "dihedral:" INT
//          | "dicyclic:" INT
//          | "quaternion:" INT          (power of two >= 8; sugar for dicyclic:INT/4)
//          | "symmetric:" INT           (INT <= 6)
//          | "alternating:" INT         (INT <= 6)
//          | "semidirect:" INT "," INT "," INT
//
// Whitespace may appear between any two tokens. Integer lists are consumed
// greedily, so inside product(...) a comma followed by a digit extends the
// current atom's parameter list rather than starting a new child.
enum class GroupKind {
    Cyclic,
    Abelian,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
    Product,
    Semidirect,
};

struct GroupExpr {
    GroupKind kind;
    std::vector<long long> params;
    std::vector<GroupExpr> children;

    friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

namespace detail {

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!consume(c)) throw ParseError("expected " + what, static_cast<long>(pos));
    }

    long long parse_int() {
        skip_ws();
        const std::size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000'000LL)
                throw ParseError("integer parameter too large", static_cast<long>(start));
            ++pos;
        }
        if (pos == start) throw ParseError("expected an integer", static_cast<long>(pos));
        return v;
    }

    bool next_is_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    std::string parse_word() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a group kind", static_cast<long>(pos));
        return std::string(text.substr(start, pos - start));
    }

    GroupExpr parse_expr() {
        skip_ws();
        const std::size_t word_pos = pos;
        const std::string word = parse_word();
        if (word == "product") {
            expect('(', "'(' after product");
            GroupExpr e{GroupKind::Product, {}, {}};
            e.children.push_back(parse_expr());
            while (consume(',')) e.children.push_back(parse_expr());
            expect(')', "')' closing product");
            if (e.children.size() < 2)
                throw ParseError("product needs at least two factors",
                                 static_cast<long>(word_pos));
            return e;
        }
        expect(':', "':' after '" + word + "'");
        return parse_atom(word, word_pos);
    }

    GroupExpr parse_atom(const std::string& word, std::size_t word_pos) {
        const long at = static_cast<long>(word_pos);
        if (word == "cyclic") {
            const long long n = parse_int();
            if (n < 1) throw ParseError("cyclic order must be at least 1", at);
            return {GroupKind::Cyclic, {n}, {}};
        }
        if (word == "abelian") {
            std::vector<long long> factors{parse_int()};
            // Greedy: a comma only continues the list when a digit follows.
            while (peek() == ',') {
                const std::size_t save = pos;
                ++pos;
                if (!next_is_digit()) {
                    pos = save;
                    break;
                }
                factors.push_back(parse_int());
            }
            for (long long f : factors)
                if (f < 1) throw ParseError("abelian factors must be at least 1", at);
            return {GroupKind::Abelian, std::move(factors), {}};
        }
        if (word == "dihedral") {
            const long long n = parse_int();
            if (n < 1) throw ParseError("dihedral parameter must be at least 1", at);
            return {GroupKind::Dihedral, {n}, {}};
        }
        if (word == "dicyclic") {
            const long long n = parse_int();
            if (n < 1) throw ParseError("dicyclic parameter must be at least 1", at);
            return {GroupKind::Dicyclic, {n}, {}};
        }
        if (word == "quaternion") {
            const long long n = parse_int();
            if (n < 8 || (n & (n - 1)) != 0)
                throw ParseError("quaternion order must be a power of two, at least 8", at);
            return {GroupKind::Dicyclic, {n / 4}, {}};
        }
        if (word == "symmetric" || word == "alternating") {
            const long long n = parse_int();
            if (n < 1 || n > 6)
                throw ParseError(word + " degree must be between 1 and 6", at);
            return {word == "symmetric" ? GroupKind::Symmetric : GroupKind::Alternating,
                    {n},
                    {}};
        }
        if (word == "semidirect") {
            const long long m = parse_int();
            expect(',', "',' in semidirect parameters");
            const long long n = parse_int();
            expect(',', "',' in semidirect parameters");
            const long long k = parse_int();
            if (m < 1 || n < 1) throw ParseError("semidirect orders must be at least 1", at);
            if (std::gcd(k % m, m) != 1)
                throw ParseError("semidirect action invalid: gcd(k, m) != 1", at);
            long long pw = 1 % m;
            for (long long i = 0; i < n; ++i) pw = (pw * (k % m)) % m;
            if (pw != 1 % m)
                throw ParseError("semidirect action invalid: k^n is not 1 mod m", at);
            return {GroupKind::Semidirect, {m, n, k}, {}};
        }
        throw ParseError("unknown group kind '" + word + "'", at);
    }
};

} // namespace detail

inline GroupExpr parse_group_expr(std::string_view text) {
    detail::ExprParser p{text};
    GroupExpr e = p.parse_expr();
    if (!p.at_end())
        throw ParseError("trailing input after expression", static_cast<long>(p.pos));
    return e;
}

// Order of the group an expression denotes, without building it. Saturates
// at a value safely above any sane cap so callers can range-check first.
inline long long expr_order(const GroupExpr& e) {
    constexpr long long kSaturate = 1LL << 40;
    auto mul_sat = [](long long a, long long b) {
        if (a == 0 || b == 0) return 0LL;
        return a > kSaturate / b ? kSaturate : a * b;
    };
    switch (e.kind) {
    case GroupKind::Cyclic: return e.params[0];
    case GroupKind::Abelian: {
        long long v = 1;
        for (long long f : e.params) v = mul_sat(v, f);
        return v;
    }
    case GroupKind::Dihedral: return mul_sat(2, e.params[0]);
    case GroupKind::Dicyclic: return mul_sat(4, e.params[0]);
    case GroupKind::Symmetric:
    case GroupKind::Alternating: {
        long long v = 1;
        for (long long i = 2; i <= e.params[0]; ++i) v *= i;
        if (e.kind == GroupKind::Alternating && v > 1) v /= 2;
        return v;
    }
    case GroupKind::Product: {
        long long v = 1;
        for (const auto& c : e.children) v = mul_sat(v, expr_order(c));
        return v;
    }
    case GroupKind::Semidirect: return mul_sat(e.params[0], e.params[1]);
    }
    throw Error("expr_order: unreachable");
}

namespace detail {

inline GroupTable make_cyclic(long long n) {
    const int in = static_cast<int>(n);
    std::vector<ElementId> t(static_cast<std::size_t>(in) * in);
    for (int a = 0; a < in; ++a)
        for (int b = 0; b < in; ++b) t[static_cast<std::size_t>(a) * in + b] = (a + b) % in;
    return GroupTable("Z_" + std::to_string(n), in, std::move(t));
}

inline GroupTable make_product_pair(const GroupTable& ga, const GroupTable& gb) {
    const int na = ga.order(), nb = gb.order(), n = na * nb;
    std::vector<ElementId> t(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    const int lhs = a1 * nb + b1, rhs = a2 * nb + b2;
                    t[static_cast<std::size_t>(lhs) * n + rhs] =
                        ga.mul(a1, a2) * nb + gb.mul(b1, b2);
                }
    return GroupTable(ga.name() + " x " + gb.name(), n, std::move(t));
}

inline GroupTable make_dihedral(long long nl) {
    // Elements (a, j) with a in Z_n and j a flip bit, encoded as a + n*j.
    const int n = static_cast<int>(nl), N = 2 * n;
    std::vector<ElementId> t(static_cast<std::size_t>(N) * N);
    auto id = [n](int a, int j) { return a + n * j; };
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < 2; ++j)
            for (int b = 0; b < n; ++b)
                for (int k = 0; k < 2; ++k) {
                    const int a2 = j == 0 ? (a + b) % n : ((a - b) % n + n) % n;
                    t[static_cast<std::size_t>(id(a, j)) * N + id(b, k)] = id(a2, j ^ k);
                }
    return GroupTable("D_" + std::to_string(nl), N, std::move(t));
}

inline GroupTable make_dicyclic(long long ml) {
    // Dic_m = <x, y | x^{2m} = e, y^2 = x^m, y x y^{-1} = x^{-1}>.
    // Elements x^a y^j encoded as a + 2m*j. When 4m is a power of two this
    // is the generalized quaternion group Q_{4m}.
    const int m = static_cast<int>(ml), two_m = 2 * m, N = 4 * m;
    std::vector<ElementId> t(static_cast<std::size_t>(N) * N);
    auto id = [two_m](int a, int j) { return a + two_m * j; };
    for (int a = 0; a < two_m; ++a)
        for (int j = 0; j < 2; ++j)
            for (int b = 0; b < two_m; ++b)
                for (int k = 0; k < 2; ++k) {
                    int a2;
                    if (j == 0) a2 = (a + b) % two_m;
                    else if (k == 0) a2 = ((a - b) % two_m + two_m) % two_m;
                    else a2 = (((a - b + m) % two_m) + two_m) % two_m;
                    t[static_cast<std::size_t>(id(a, j)) * N + id(b, k)] = id(a2, j ^ k);
                }
    const long long order = N;
    const bool pow2 = order >= 8 && (order & (order - 1)) == 0;
    GroupTable g(pow2 ? "Q_" + std::to_string(order) : "Dic_" + std::to_string(ml), N,
                 std::move(t));
    g.set_dicyclic_tags({1, two_m});
    return g;
}

inline GroupTable make_symmetric_or_alternating(long long nl, bool alternating) {
    const int n = static_cast<int>(nl);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    do {
        if (alternating) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
            if (inversions % 2) continue;
        }
        index.emplace(perm, static_cast<int>(elems.size()));
        elems.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const int N = static_cast<int>(elems.size());
    std::vector<ElementId> t(static_cast<std::size_t>(N) * N);
    std::vector<int> comp(n);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = elems[a][elems[b][i]];
            t[static_cast<std::size_t>(a) * N + b] = index.at(comp);
        }
    return GroupTable((alternating ? "A_" : "S_") + std::to_string(nl), N, std::move(t));
}

inline GroupTable make_semidirect(long long ml, long long nl, long long kl) {
    // Z_m x| Z_n with b a b^{-1} = a^k: (a1,b1)(a2,b2) = (a1 + k^{b1} a2, b1 + b2).
    const int m = static_cast<int>(ml), n = static_cast<int>(nl), N = m * n;
    std::vector<long long> kpow(n);
    kpow[0] = 1 % m;
    for (int b = 1; b < n; ++b) kpow[b] = (kpow[b - 1] * (kl % m)) % m;
    std::vector<ElementId> t(static_cast<std::size_t>(N) * N);
    auto id = [m](long long a, int b) { return static_cast<int>(a) + m * b; };
    for (int a1 = 0; a1 < m; ++a1)
        for (int b1 = 0; b1 < n; ++b1)
            for (int a2 = 0; a2 < m; ++a2)
                for (int b2 = 0; b2 < n; ++b2)
                    t[static_cast<std::size_t>(id(a1, b1)) * N + id(a2, b2)] =
                        id((a1 + kpow[b1] * a2) % m, (b1 + b2) % n);
    return GroupTable("Z_" + std::to_string(ml) + ":Z_" + std::to_string(nl) + "(" +
                          std::to_string(kl) + ")",
                      N, std::move(t));
}

} // namespace detail

inline GroupTable build_group(const GroupExpr& e, int order_cap = kDefaultOrderCap) {
    const long long n = expr_order(e);
    if (n > order_cap) throw ResourceCapError("group too large to build", n, order_cap);
    switch (e.kind) {
    case GroupKind::Cyclic: return detail::make_cyclic(e.params[0]);
    case GroupKind::Abelian: {
        GroupTable g = detail::make_cyclic(e.params[0]);
        for (std::size_t i = 1; i < e.params.size(); ++i)
            g = detail::make_product_pair(g, detail::make_cyclic(e.params[i]));
        return g;
    }
    case GroupKind::Dihedral: return detail::make_dihedral(e.params[0]);
    case GroupKind::Dicyclic: return detail::make_dicyclic(e.params[0]);
    case GroupKind::Symmetric:
        return detail::make_symmetric_or_alternating(e.params[0], false);
    case GroupKind::Alternating:
        return detail::make_symmetric_or_alternating(e.params[0], true);
    case GroupKind::Product: {
        GroupTable g = build_group(e.children[0], order_cap);
        for (std::size_t i = 1; i < e.children.size(); ++i)
            g = detail::make_product_pair(g, build_group(e.children[i], order_cap));
        return g;
    }
    case GroupKind::Semidirect:
        return detail::make_semidirect(e.params[0], e.params[1], e.params[2]);
    }
    throw Error("build_group: unreachable");
}

inline GroupTable build_group(std::string_view expr_text, int order_cap = kDefaultOrderCap) {
    return build_group(parse_group_expr(expr_text), order_cap);
}

} // namespace powergraph
