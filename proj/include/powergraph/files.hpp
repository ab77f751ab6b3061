#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "powergraph/group.hpp"

namespace powergraph {

// .cay format: first line is the order n, then n lines of n 0-based element
// indices forming the multiplication table (row = left factor).
inline void write_cayley(const GroupTable& g, std::ostream& out) {
    const int n = g.order();
    out << n << "\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << "\n";
    }
}

inline void write_cayley_file(const GroupTable& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_cayley(g, out);
    if (!out) throw IoError("write failed: " + path);
}

inline GroupTable read_cayley(std::istream& in, std::string name) {
    long long n = 0;
    if (!(in >> n)) throw ParseError("cayley table: missing order line");
    if (n < 1 || n > 100000) throw ParseError("cayley table: implausible order");
    std::vector<std::vector<int>> raw(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (!(in >> raw[i][j]))
                throw ParseError("cayley table: expected " + std::to_string(n * n) +
                                 " entries, input ended early");
    return validate_table(raw, std::move(name));
}

inline GroupTable read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    return read_cayley(in, std::filesystem::path(path).stem().string());
}

// .perm format: first line is the degree d, each further non-empty line is
// one generator given as d images of 0..d-1.
inline std::vector<std::vector<int>> read_permutations(std::istream& in) {
    std::string line;
    long long degree = -1;
    std::vector<std::vector<int>> gens;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> vals;
        int v;
        while (ls >> v) vals.push_back(v);
        if (vals.empty()) continue;
        if (degree < 0) {
            if (vals.size() != 1 || vals[0] < 1)
                throw ParseError("permutation file: first line must be the degree");
            degree = vals[0];
            continue;
        }
        if (static_cast<long long>(vals.size()) != degree)
            throw ParseError("permutation file: generator line has " +
                             std::to_string(vals.size()) + " images, expected " +
                             std::to_string(degree));
        gens.push_back(std::move(vals));
    }
    if (degree < 0) throw ParseError("permutation file: empty input");
    if (gens.empty()) throw ParseError("permutation file: no generators");
    return gens;
}

inline GroupTable read_perm_file(const std::string& path, int order_cap = kDefaultOrderCap) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    auto gens = read_permutations(in);
    return closure_from_permutations(gens, std::filesystem::path(path).stem().string(),
                                     order_cap);
}

} // namespace powergraph
