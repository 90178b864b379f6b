#include "scl/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scl/errors.hpp"

namespace scl {
namespace {

template <typename T>
std::size_t min_rotation(const std::vector<T>& seq) {
    std::size_t best = 0;
    const std::size_t len = seq.size();
    for (std::size_t r = 1; r < len; ++r) {
        for (std::size_t i = 0; i < len; ++i) {
            const auto& a = seq[(r + i) % len];
            const auto& b = seq[(best + i) % len];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    return best;
}

template <typename T>
void rotate_to(std::vector<T>& seq, std::size_t start) {
    std::rotate(seq.begin(), seq.begin() + static_cast<long>(start), seq.end());
}

bool is_power_of(const std::string& text, const std::string& w) {
    if (text.empty() || text.size() % w.size() != 0) return false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != w[i % w.size()]) return false;
    }
    return true;
}

}  // namespace

SurfaceDescription build_surface(const TurnGraph& g, std::span<const Circuit> circuits,
                                 std::span<const BigInt> weights) {
    if (weights.size() != circuits.size()) throw InputError("weights and circuits differ in length");
    SurfaceDescription s{.word = g.word()};

    for (std::size_t i = 0; i < circuits.size(); ++i) {
        if (weights[i] < 0) throw InputError("negative weight");
        if (!weights[i].fits_ulong_p()) throw ResourceLimit("weight too large to instantiate");
        if (circuits[i].length() < 2) throw InvariantViolation("monogon disk");
        const auto copies = weights[i].get_ui();
        for (std::size_t c = 0; c < copies; ++c) {
            s.disks.push_back({i, c, circuits[i].turns, circuits[i].edges});
        }
    }
    if (s.disks.empty()) throw InputError("cannot build a surface from the zero vector");

    // Disks are created in (circuit, copy) order, so these lists are sorted.
    std::vector<std::vector<SideRef>> by_edge(g.edges().size());
    std::size_t total_sides = 0;
    for (std::size_t d = 0; d < s.disks.size(); ++d) {
        for (std::size_t t = 0; t < s.disks[d].edges.size(); ++t) {
            by_edge.at(s.disks[d].edges[t]).push_back({d, t});
            ++total_sides;
        }
    }

    for (const auto& [e, d] : g.dual_pairs()) {
        const Letter letter = g.edge(e).transverse;
        if (e == d) {
            const auto& sides = by_edge[e];
            if (sides.size() % 2 != 0) throw InputError("odd number of sides on a self-dual edge");
            for (std::size_t i = 0; i < sides.size(); i += 2) {
                s.rectangles.push_back({letter, sides[i], sides[i + 1]});
            }
            continue;
        }
        if (by_edge[e].size() != by_edge[d].size()) {
            throw InputError("weight vector violates a dual-pair equation");
        }
        for (std::size_t i = 0; i < by_edge[e].size(); ++i) {
            s.rectangles.push_back({letter, by_edge[e][i], by_edge[d][i]});
        }
    }

    const auto len = static_cast<long>(g.num_turns());
    std::vector<long> per_turn(len, 0);
    for (const auto& disk : s.disks) {
        for (int v : disk.turns) ++per_turn[v - 1];
    }
    if (std::adjacent_find(per_turn.begin(), per_turn.end(), std::not_equal_to<>()) !=
        per_turn.end()) {
        throw InvariantViolation("turns are visited unequally often");
    }
    s.n = per_turn[0];
    if (static_cast<std::size_t>(s.n * len) != total_sides) {
        throw InvariantViolation("side count disagrees with degree");
    }
    s.chi = -s.n * len / 2 + static_cast<long>(s.disks.size());

    const auto trace = trace_boundary(to_handle_diagram(s));
    if (trace.inner.size() != s.disks.size()) {
        throw InvariantViolation("inner boundary does not match the disks");
    }
    s.boundary_words = trace.outer;
    return s;
}

HandleDiagram::HandleDiagram(CyclicWord word, std::vector<int> positions,
                             std::vector<std::size_t> successor, std::vector<std::size_t> partner)
    : word_(std::move(word)),
      positions_(std::move(positions)),
      successor_(std::move(successor)),
      partner_(std::move(partner)) {
    const std::size_t m = positions_.size();
    if (m == 0 || m % word_.size() != 0) throw InputError("instance count is not a multiple of |w|");
    if (successor_.size() != m || partner_.size() != m) throw InputError("diagram size mismatch");

    predecessor_.assign(m, m);
    for (std::size_t p = 0; p < m; ++p) {
        if (positions_[p] < 1 || positions_[p] > static_cast<int>(word_.size())) {
            throw InputError("letter position out of range");
        }
        const auto s = successor_[p];
        if (s >= m || predecessor_[s] != m) throw InputError("successor is not a permutation");
        predecessor_[s] = p;
    }
    for (std::size_t p = 0; p < m; ++p) {
        if (positions_[successor_[p]] != word_.wrap(positions_[p] + 1)) {
            throw InputError("outer boundary does not read w");
        }
        const auto q = partner_[p];
        if (q >= m || q == p || partner_[q] != p) {
            throw InputError("handle pairing is not a fixed-point-free involution");
        }
        if (!letter(p).is_inverse_of(letter(q))) throw InputError("handle joins non-inverse letters");
    }
}

HandleDiagram diagram_from_matching(const CyclicWord& w, std::span<const int> powers,
                                    std::vector<std::size_t> partner) {
    const std::size_t len = w.size();
    std::vector<int> positions;
    std::vector<std::size_t> successor;
    for (int k : powers) {
        if (k < 1) throw InputError("boundary circles must have positive degree");
        const std::size_t base = positions.size();
        const std::size_t span = static_cast<std::size_t>(k) * len;
        for (std::size_t t = 0; t < span; ++t) {
            positions.push_back(static_cast<int>(t % len) + 1);
            successor.push_back(base + (t + 1) % span);
        }
    }
    return HandleDiagram(w, std::move(positions), std::move(successor), std::move(partner));
}

HandleDiagram to_handle_diagram(const SurfaceDescription& s) {
    std::vector<std::size_t> offset(s.disks.size() + 1, 0);
    for (std::size_t d = 0; d < s.disks.size(); ++d) offset[d + 1] = offset[d] + s.disks[d].turns.size();
    const std::size_t m = offset.back();
    auto index = [&](const SideRef& r) { return offset.at(r.disk) + r.side; };

    std::vector<int> positions(m);
    for (std::size_t d = 0; d < s.disks.size(); ++d) {
        for (std::size_t t = 0; t < s.disks[d].turns.size(); ++t) positions[offset[d] + t] = s.disks[d].turns[t];
    }

    std::vector<std::size_t> partner(m, m);
    for (const auto& r : s.rectangles) {
        const auto a = index(r.from);
        const auto b = index(r.to);
        if (partner[a] != m || partner[b] != m) throw InputError("disk side attached twice");
        partner[a] = b;
        partner[b] = a;
    }
    if (std::find(partner.begin(), partner.end(), m) != partner.end()) {
        throw InputError("disk side without a rectangle");
    }

    // Past the letter on side t, the boundary turns the corner and runs along
    // the rectangle glued to side t - 1.
    std::vector<std::size_t> successor(m);
    for (std::size_t d = 0; d < s.disks.size(); ++d) {
        const std::size_t sides = s.disks[d].turns.size();
        for (std::size_t t = 0; t < sides; ++t) {
            successor[offset[d] + t] = partner[offset[d] + (t + sides - 1) % sides];
        }
    }
    return HandleDiagram(s.word, std::move(positions), std::move(successor), std::move(partner));
}

BoundaryTrace trace_boundary(const HandleDiagram& d) {
    BoundaryTrace out;
    const std::size_t m = d.size();

    std::vector<char> seen(m, 0);
    for (std::size_t p = 0; p < m; ++p) {
        if (seen[p]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t q = p; !seen[q]; q = d.successor(q)) {
            seen[q] = 1;
            cycle.push_back(q);
        }
        const auto start = std::find_if(cycle.begin(), cycle.end(),
                                        [&](std::size_t q) { return d.position(q) == 1; });
        rotate_to(cycle, static_cast<std::size_t>(start - cycle.begin()));
        std::string text;
        for (auto q : cycle) text.push_back(d.letter(q).to_char());
        out.outer.push_back(std::move(text));
        out.outer_instances.push_back(std::move(cycle));
    }

    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t p = 0; p < m; ++p) {
        if (seen[p]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t q = p; !seen[q]; q = d.inner_next(q)) {
            seen[q] = 1;
            cycle.push_back(q);
        }
        std::vector<int> turns;
        for (auto q : cycle) turns.push_back(d.position(q));
        const auto r = min_rotation(turns);
        rotate_to(turns, r);
        rotate_to(cycle, r);
        out.inner.push_back(std::move(turns));
        out.inner_instances.push_back(std::move(cycle));
    }
    return out;
}

BigRational diagram_value(const HandleDiagram& d) {
    const auto inner = trace_boundary(d).inner.size();
    return BigRational(static_cast<long>(d.word().size())) / BigRational(4) -
           BigRational(BigInt(static_cast<long>(inner)), BigInt(2 * d.degree()));
}

HandleDiagram turn_surgery(const HandleDiagram& d, int turn, std::size_t p1, std::size_t p2) {
    if (p1 == p2) throw InputError("surgery needs two distinct instances");
    if (p1 >= d.size() || p2 >= d.size()) throw InputError("instance out of range");
    const int t = d.word().wrap(turn);
    if (d.position(p1) != t || d.position(p2) != t) {
        throw InputError("surgery instances are not at turn " + std::to_string(t));
    }
    std::vector<int> positions(d.size());
    for (std::size_t p = 0; p < d.size(); ++p) positions[p] = d.position(p);
    auto successor = d.successors();
    std::swap(successor[p1], successor[p2]);
    return HandleDiagram(d.word(), std::move(positions), std::move(successor), d.partners());
}

bool is_taut(const HandleDiagram& d) {
    for (const auto& c : trace_boundary(d).inner) {
        auto sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    return true;
}

HandleDiagram make_taut(const HandleDiagram& d, std::vector<SurgeryStep>* log) {
    HandleDiagram cur = d;
    for (;;) {
        const auto trace = trace_boundary(cur);
        std::optional<SurgeryStep> step;
        for (int turn = 1; turn <= static_cast<int>(cur.word().size()) && !step; ++turn) {
            for (const auto& comp : trace.inner_instances) {
                std::vector<std::size_t> at;
                for (auto q : comp) {
                    if (cur.position(q) == turn) at.push_back(q);
                }
                if (at.size() < 2) continue;
                std::sort(at.begin(), at.end());
                if (!step || std::pair{at[0], at[1]} < std::pair{step->p1, step->p2}) {
                    step = SurgeryStep{turn, at[0], at[1], trace.inner.size(), 0};
                }
            }
        }
        if (!step) return cur;
        cur = turn_surgery(cur, step->turn, step->p1, step->p2);
        step->inner_after = trace_boundary(cur).inner.size();
        if (step->inner_after != step->inner_before + 1) {
            throw InvariantViolation("turn surgery on one component did not split it");
        }
        if (log) log->push_back(*step);
    }
}

namespace {

void partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

std::size_t saturating_factorial(std::size_t k, std::size_t limit) {
    std::size_t acc = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        if (acc > limit / i) return limit + 1;
        acc *= i;
    }
    return acc;
}

class MatchingSearch {
public:
    MatchingSearch(const CyclicWord& w, std::vector<int> powers, bool reduce_symmetry)
        : w_(w), powers_(std::move(powers)), reduce_(reduce_symmetry) {
        const std::size_t len = w.size();
        for (std::size_t c = 0; c < powers_.size(); ++c) {
            for (std::size_t t = 0; t < powers_[c] * len; ++t) {
                circle_.push_back(c);
                offset_in_circle_.push_back(t);
            }
        }
        const auto m = circle_.size();
        positive_.assign(w.rank() + 1, {});
        negative_.assign(w.rank() + 1, {});
        for (std::size_t p = 0; p < m; ++p) {
            const auto& l = w.at(static_cast<long>(p % len) + 1);
            (l.sign > 0 ? positive_ : negative_)[l.generator].push_back(p);
        }
        // Generator of the first instance goes first so symmetry pruning
        // happens at the top of the search.
        const int g0 = w.at(1).generator;
        order_.push_back(g0);
        for (int g = 1; g <= w.rank(); ++g) {
            if (g != g0 && !positive_[g].empty()) order_.push_back(g);
        }
        partner_.assign(m, m);
        predecessor_.resize(m);
        std::size_t base = 0;
        for (int k : powers_) {
            const std::size_t span = static_cast<std::size_t>(k) * len;
            for (std::size_t t = 0; t < span; ++t) predecessor_[base + t] = base + (t + span - 1) % span;
            base += span;
        }
    }

    // Most inner components found across all matchings.
    std::size_t run() {
        recurse(0);
        return best_inner_;
    }

private:
    bool canonical_first_partner() const {
        const std::size_t q = partner_[0];
        const std::size_t c = circle_[q];
        if (c == 0) return true;
        if (offset_in_circle_[q] >= w_.size()) return false;
        return c == 1 || powers_[c - 1] != powers_[c];
    }

    void recurse(std::size_t depth) {
        if (depth == order_.size()) {
            evaluate();
            return;
        }
        const int g = order_[depth];
        const auto& pos = positive_[g];
        const auto& neg = negative_[g];
        std::vector<std::size_t> perm(neg.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (std::size_t i = 0; i < pos.size(); ++i) {
                partner_[pos[i]] = neg[perm[i]];
                partner_[neg[perm[i]]] = pos[i];
            }
            if (depth == 0 && reduce_ && !canonical_first_partner()) continue;
            recurse(depth + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    void evaluate() {
        const auto m = partner_.size();
        seen_.assign(m, 0);
        std::size_t inner = 0;
        for (std::size_t p = 0; p < m; ++p) {
            if (seen_[p]) continue;
            ++inner;
            for (std::size_t q = p; !seen_[q]; q = predecessor_[partner_[q]]) seen_[q] = 1;
        }
        best_inner_ = std::max(best_inner_, inner);
    }

    const CyclicWord& w_;
    std::vector<int> powers_;
    bool reduce_;
    std::vector<std::size_t> circle_;
    std::vector<std::size_t> offset_in_circle_;
    std::vector<std::vector<std::size_t>> positive_;
    std::vector<std::vector<std::size_t>> negative_;
    std::vector<int> order_;
    std::vector<std::size_t> partner_;
    std::vector<char> seen_;
    std::vector<std::size_t> predecessor_;
    std::size_t best_inner_ = 0;
};

}  // namespace

BigRational brute_force_scl_bound(const CyclicWord& w, int n_max, const OracleOptions& options) {
    if (n_max < 1) throw InputError("oracle degree must be at least 1");
    if (!in_commutator_subgroup(w)) throw InputError("oracle needs a word in the commutator subgroup");

    std::vector<std::size_t> counts;
    for (const auto& [g, sum] : exponent_sums(w)) {
        (void)sum;
        std::size_t c = 0;
        for (const auto& l : w.letters()) c += l.generator == g && l.sign > 0;
        counts.push_back(c);
    }

    const std::size_t limit = options.max_matchings;
    std::vector<std::pair<int, std::vector<int>>> layouts;
    std::size_t total = 0;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> prefix;
        partitions(n, n, prefix, parts);
        std::size_t per_layout = 1;
        for (auto c : counts) {
            const auto f = saturating_factorial(c * static_cast<std::size_t>(n), limit);
            per_layout = (f != 0 && per_layout > limit / f) ? limit + 1 : per_layout * f;
        }
        for (auto& p : parts) {
            total = std::min(total + per_layout, limit + 1);
            layouts.emplace_back(n, std::move(p));
        }
    }
    if (total > limit) {
        throw ResourceLimit("oracle would enumerate more than " + std::to_string(limit) + " matchings");
    }

    // Maximize inner / n exactly.
    BigRational best_ratio(-1);
    for (const auto& [n, powers] : layouts) {
        const auto inner = MatchingSearch(w, powers, options.reduce_symmetry).run();
        const BigRational ratio(BigInt(static_cast<long>(inner)), BigInt(n));
        if (ratio > best_ratio) best_ratio = ratio;
    }
    return BigRational(static_cast<long>(w.size())) / BigRational(4) - best_ratio / BigRational(2);
}

VerificationReport verify_certificate(const SclResult& result) {
    if (result.infinite) throw InputError("infinite scl has no certificate surface");
    auto fail = [](const std::string& what) { throw InvariantViolation("verification failed: " + what); };

    const TurnGraph g(result.word);
    const auto len = static_cast<long>(result.word.size());
    const auto s = build_surface(g, result.circuits, result.integer_weights);

    VerificationReport rep;
    rep.n = s.n;
    rep.chi = s.chi;
    if (BigInt(s.n) != result.n) fail("surface degree differs from n");
    if (2 * static_cast<long>(s.rectangles.size()) != s.n * len) fail("rectangle count differs from n|w|/2");
    if (s.chi != -s.n * len / 2 + static_cast<long>(s.disks.size())) fail("Euler characteristic formula");
    if (s.chi != -static_cast<long>(s.rectangles.size()) + static_cast<long>(s.disks.size())) {
        fail("handle count Euler characteristic");
    }

    const auto w_text = result.word.to_string();
    long degree_sum = 0;
    for (const auto& b : s.boundary_words) {
        if (!is_power_of(b, w_text)) fail("boundary word " + b + " is not a power of w");
        degree_sum += static_cast<long>(b.size()) / len;
    }
    if (degree_sum != s.n) fail("boundary degrees do not sum to n");
    rep.boundary_components = s.boundary_words.size();

    const auto diagram = to_handle_diagram(s);
    const auto trace = trace_boundary(diagram);
    rep.inner_components = trace.inner.size();
    rep.taut = is_taut(diagram);
    if (!rep.taut) fail("surface is not taut");

    std::map<std::vector<int>, BigInt> traced;
    for (const auto& c : trace.inner) traced[c] += 1;
    for (std::size_t i = 0; i < result.circuits.size(); ++i) {
        const auto it = traced.find(result.circuits[i].turns);
        const BigInt got = it == traced.end() ? BigInt(0) : it->second;
        if (got != result.integer_weights[i]) fail("traced circuit multiplicities differ from weights");
    }

    RationalVector u(result.integer_weights.begin(), result.integer_weights.end());
    for (const auto& [e, d] : g.dual_pairs()) {
        const auto fe = edge_flow(result.circuits, u, e);
        const auto fd = edge_flow(result.circuits, u, d);
        long handles = 0;
        for (const auto& r : s.rectangles) {
            const auto& de = s.disks[r.from.disk].edges[r.from.side];
            handles += de == e;
        }
        if (fe != fd || fe != BigRational(handles)) fail("dual-pair handle count");
    }

    rep.certificate = certificate_value(result.word.size(), result.integer_weights, result.n);
    if (rep.certificate != result.scl) fail("certificate identity");
    if (result.scl.sign() < 0 || result.scl > BigRational(len) / BigRational(4)) fail("scl out of [0, |w|/4]");
    return rep;
}

}  // namespace scl
