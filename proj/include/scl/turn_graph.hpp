#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scl/word.hpp"

namespace scl {

// Turn i (1-based) is the position just after letter i of the cyclic word.
struct Turn {
    int index = 0;
    Letter before;  // x_i
    Letter after;   // x_{i+1}, wrapping

    std::string label() const { return {before.to_char(), after.to_char()}; }
};

// Edge i -> j exists when x_i^{-1} == x_{j+1}; the transverse letter is x_i^{-1}.
struct TurnEdge {
    int from = 0;
    int to = 0;
    Letter transverse;

    friend bool operator==(const TurnEdge&, const TurnEdge&) = default;
};

using EdgeId = std::size_t;

class TurnGraph {
public:
    explicit TurnGraph(CyclicWord word);

    const CyclicWord& word() const { return word_; }
    int num_turns() const { return static_cast<int>(word_.size()); }
    const Turn& turn(int index) const { return turns_[word_.wrap(index) - 1]; }
    const std::vector<Turn>& turns() const { return turns_; }

    // Sorted by (from, to); an edge is identified by its position here.
    const std::vector<TurnEdge>& edges() const { return edges_; }
    const TurnEdge& edge(EdgeId id) const { return edges_[id]; }
    std::optional<EdgeId> find_edge(int from, int to) const;

    EdgeId dual(EdgeId id) const { return dual_[id]; }
    TurnEdge dual_edge(const TurnEdge& e) const;

    std::span<const EdgeId> out_edges(int turn) const { return out_[word_.wrap(turn) - 1]; }
    std::span<const EdgeId> in_edges(int turn) const { return in_[word_.wrap(turn) - 1]; }

    // Unordered dual pairs {e, dual(e)} with e <= dual(e), in order of e.
    std::vector<std::pair<EdgeId, EdgeId>> dual_pairs() const;
    std::size_t self_dual_count() const;

    // 0-based adjacency lists (turn i maps to vertex i - 1).
    std::vector<std::vector<int>> adjacency() const;

private:
    CyclicWord word_;
    std::vector<Turn> turns_;
    std::vector<TurnEdge> edges_;
    std::vector<EdgeId> dual_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

TurnGraph build_turn_graph(const CyclicWord& w);

// DOT digraph; every dual pair shares a dualpair=<id> edge attribute.
std::string export_dot(const TurnGraph& g);

}  // namespace scl
