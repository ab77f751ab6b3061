#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace powergraph {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad expression or file syntax. position is a byte offset into the input
// where the problem was noticed, or -1 when there is no sensible offset.
struct ParseError : Error {
    ParseError(const std::string& msg, long position = -1)
        : Error(position >= 0 ? msg + " (at offset " + std::to_string(position) + ")" : msg),
          position(position) {}
    long position;
};

// Requested construction would exceed the configured order cap.
struct ResourceCapError : Error {
    ResourceCapError(const std::string& msg, long long requested, long long cap)
        : Error(msg + ": " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
          requested(requested), cap(cap) {}
    long long requested;
    long long cap;
};

// A multiplication table failed a group axiom. axiom names the failed
// property and witness holds the offending indices (unused slots are -1).
struct NotAGroupError : Error {
    NotAGroupError(const std::string& axiom, std::array<int, 3> witness, const std::string& detail)
        : Error("not a group (" + axiom + "): " + detail), axiom(axiom), witness(witness) {}
    std::string axiom;
    std::array<int, 3> witness;
};

// Diameter was requested for a graph that is not connected.
struct DisconnectedError : Error {
    DisconnectedError(int u, int v)
        : Error("graph is disconnected: no path between vertices " + std::to_string(u) +
                " and " + std::to_string(v)),
          u(u), v(v) {}
    int u;
    int v;
};

// Diameter prediction was requested where the complement has no edges
// (power graph of a cyclic p-group, enhanced power graph of a cyclic group).
struct EdgelessComplementError : Error {
    explicit EdgelessComplementError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace powergraph
