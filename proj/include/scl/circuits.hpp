#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "scl/turn_graph.hpp"

namespace scl {

inline constexpr std::size_t kDefaultCircuitCap = 1'000'000;

// Embedded directed circuit of a turn graph, rotated to start at its
// smallest turn. edges[t] joins turns[t] to turns[t + 1] (wrapping).
struct Circuit {
    std::vector<int> turns;
    std::vector<EdgeId> edges;

    std::size_t length() const { return turns.size(); }

    friend bool operator==(const Circuit& a, const Circuit& b) { return a.turns == b.turns; }
    friend std::strong_ordering operator<=>(const Circuit& a, const Circuit& b) {
        return a.turns <=> b.turns;
    }
};

// Johnson's algorithm on a 0-based adjacency list. Each circuit starts at its
// smallest vertex; the result is sorted lexicographically. Throws
// CircuitCapExceeded once more than cap circuits are found.
std::vector<std::vector<int>> elementary_circuits(const std::vector<std::vector<int>>& adjacency,
                                                  std::size_t cap = kDefaultCircuitCap);

std::vector<Circuit> enumerate_embedded_circuits(const TurnGraph& g,
                                                 std::size_t cap = kDefaultCircuitCap);

struct IncidenceProfile {
    std::vector<int> vertex_counts;  // indexed by turn - 1
    std::vector<int> edge_counts;    // indexed by EdgeId
};

IncidenceProfile incidence(const Circuit& c, const TurnGraph& g);

}  // namespace scl
