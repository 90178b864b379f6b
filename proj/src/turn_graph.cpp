#include "scl/turn_graph.hpp"

#include <algorithm>
#include <sstream>

#include "scl/errors.hpp"

namespace scl {

TurnGraph::TurnGraph(CyclicWord word) : word_(std::move(word)) {
    const int len = num_turns();
    turns_.reserve(len);
    for (int i = 1; i <= len; ++i) turns_.push_back({i, word_.at(i), word_.at(i + 1)});

    for (int i = 1; i <= len; ++i) {
        const Letter want = word_.at(i).inverse();
        for (int j = 1; j <= len; ++j) {
            if (word_.at(j + 1) == want) edges_.push_back({i, j, want});
        }
    }

    out_.assign(len, {});
    in_.assign(len, {});
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        if (e.from == e.to) throw InvariantViolation("turn graph has a loop");
        out_[e.from - 1].push_back(id);
        in_[e.to - 1].push_back(id);
    }

    dual_.resize(edges_.size());
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        const auto d = find_edge(word_.wrap(e.to + 1), word_.wrap(e.from - 1));
        if (!d) throw InvariantViolation("dual edge missing");
        dual_[id] = *d;
    }
}

std::optional<EdgeId> TurnGraph::find_edge(int from, int to) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{from, to},
                                     [](const TurnEdge& e, const std::pair<int, int>& key) {
                                         return std::pair{e.from, e.to} < key;
                                     });
    if (it == edges_.end() || it->from != from || it->to != to) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

TurnEdge TurnGraph::dual_edge(const TurnEdge& e) const {
    const auto id = find_edge(e.from, e.to);
    if (!id) throw InputError("edge is not in the turn graph");
    return edges_[dual_[*id]];
}

std::vector<std::pair<EdgeId, EdgeId>> TurnGraph::dual_pairs() const {
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        if (id <= dual_[id]) pairs.emplace_back(id, dual_[id]);
    }
    return pairs;
}

std::size_t TurnGraph::self_dual_count() const {
    std::size_t count = 0;
    for (EdgeId id = 0; id < edges_.size(); ++id) count += dual_[id] == id;
    return count;
}

std::vector<std::vector<int>> TurnGraph::adjacency() const {
    std::vector<std::vector<int>> adj(num_turns());
    for (const auto& e : edges_) adj[e.from - 1].push_back(e.to - 1);
    return adj;
}

TurnGraph build_turn_graph(const CyclicWord& w) { return TurnGraph(w); }

std::string export_dot(const TurnGraph& g) {
    std::vector<std::size_t> pair_id(g.edges().size());
    std::size_t next = 0;
    for (const auto& [e, d] : g.dual_pairs()) {
        pair_id[e] = next;
        pair_id[d] = next;
        ++next;
    }

    std::ostringstream os;
    os << "digraph turn_graph {\n";
    os << "  label=\"" << g.word().to_string() << "\";\n";
    for (const auto& t : g.turns()) {
        os << "  " << t.index << " [label=\"" << t.label() << "\"];\n";
    }
    for (EdgeId id = 0; id < g.edges().size(); ++id) {
        const auto& e = g.edge(id);
        os << "  " << e.from << " -> " << e.to << " [letter=\"" << e.transverse.to_char()
           << "\", dualpair=" << pair_id[id] << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace scl
