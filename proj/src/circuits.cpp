#include "scl/circuits.hpp"

#include <algorithm>

#include "scl/errors.hpp"

namespace scl {
namespace {

// Vertices >= start that lie in the strongly connected component of start
// within the subgraph induced on {start, start + 1, ...}.
std::vector<char> component_of(const std::vector<std::vector<int>>& adj,
                               const std::vector<std::vector<int>>& radj, int start) {
    const auto n = adj.size();
    auto sweep = [&](const std::vector<std::vector<int>>& g) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g[v]) {
                if (w >= start && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    };
    auto fwd = sweep(adj);
    const auto bwd = sweep(radj);
    for (std::size_t v = 0; v < n; ++v) fwd[v] = fwd[v] && bwd[v];
    return fwd;
}

class JohnsonSearch {
public:
    JohnsonSearch(const std::vector<std::vector<int>>& adj, std::size_t cap)
        : adj_(adj), cap_(cap), blocked_(adj.size(), 0), block_map_(adj.size()) {}

    std::vector<std::vector<int>> run() {
        const int n = static_cast<int>(adj_.size());
        std::vector<std::vector<int>> radj(n);
        for (int v = 0; v < n; ++v) {
            for (int w : adj_[v]) radj[w].push_back(v);
        }
        for (start_ = 0; start_ < n; ++start_) {
            in_scc_ = component_of(adj_, radj, start_);
            for (int v = start_; v < n; ++v) {
                blocked_[v] = 0;
                block_map_[v].clear();
            }
            circuit(start_);
        }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    bool circuit(int v) {
        bool closed = false;
        path_.push_back(v);
        blocked_[v] = 1;
        for (int w : adj_[v]) {
            if (w < start_ || !in_scc_[w]) continue;
            if (w == start_) {
                if (found_.size() >= cap_) throw CircuitCapExceeded(found_.size() + 1, cap_);
                found_.push_back(path_);
                closed = true;
            } else if (!blocked_[w] && circuit(w)) {
                closed = true;
            }
        }
        if (closed) {
            unblock(v);
        } else {
            for (int w : adj_[v]) {
                if (w < start_ || !in_scc_[w]) continue;
                auto& b = block_map_[w];
                if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
            }
        }
        path_.pop_back();
        return closed;
    }

    void unblock(int u) {
        blocked_[u] = 0;
        auto pending = std::move(block_map_[u]);
        block_map_[u].clear();
        for (int w : pending) {
            if (blocked_[w]) unblock(w);
        }
    }

    const std::vector<std::vector<int>>& adj_;
    std::size_t cap_;
    int start_ = 0;
    std::vector<char> in_scc_;
    std::vector<char> blocked_;
    std::vector<std::vector<int>> block_map_;
    std::vector<int> path_;
    std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<std::vector<int>> elementary_circuits(const std::vector<std::vector<int>>& adjacency,
                                                  std::size_t cap) {
    if (cap < 1) throw InputError("circuit cap must be at least 1");
    for (const auto& row : adjacency) {
        for (int w : row) {
            if (w < 0 || static_cast<std::size_t>(w) >= adjacency.size()) {
                throw InputError("adjacency target out of range");
            }
        }
    }
    // Parallel edges would duplicate circuits.
    auto adj = adjacency;
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return JohnsonSearch(adj, cap).run();
}

std::vector<Circuit> enumerate_embedded_circuits(const TurnGraph& g, std::size_t cap) {
    const auto raw = elementary_circuits(g.adjacency(), cap);
    std::vector<Circuit> out;
    out.reserve(raw.size());
    for (const auto& cycle : raw) {
        Circuit c;
        c.turns.reserve(cycle.size());
        for (int v : cycle) c.turns.push_back(v + 1);
        for (std::size_t t = 0; t < c.turns.size(); ++t) {
            const auto id = g.find_edge(c.turns[t], c.turns[(t + 1) % c.turns.size()]);
            if (!id) throw InvariantViolation("circuit step is not an edge");
            c.edges.push_back(*id);
        }
        if (c.length() < 2) throw InvariantViolation("monogon in turn graph");
        out.push_back(std::move(c));
    }
    return out;
}

IncidenceProfile incidence(const Circuit& c, const TurnGraph& g) {
    IncidenceProfile p;
    p.vertex_counts.assign(g.num_turns(), 0);
    p.edge_counts.assign(g.edges().size(), 0);
    for (int v : c.turns) ++p.vertex_counts[g.word().wrap(v) - 1];
    for (EdgeId e : c.edges) {
        if (e >= g.edges().size()) throw InputError("circuit references a foreign edge");
        ++p.edge_counts[e];
    }
    return p;
}

}  // namespace scl
