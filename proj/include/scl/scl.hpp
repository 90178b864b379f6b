#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scl/circuits.hpp"
#include "scl/exact_lp.hpp"
#include "scl/rational.hpp"
#include "scl/turn_graph.hpp"
#include "scl/word.hpp"

namespace scl {

// The linear program over circuit weights u_1..u_k:
//   maximize sum u_i  s.t.  F_e(u) - F_dual(e)(u) = 0 for each dual pair,
//                           F_{turn 1}(u) = 1,  u >= 0.
// Dual-pair rows that vanish identically are left out of lp.rows.
struct SclProgram {
    ExactLp lp;
    std::vector<std::pair<EdgeId, EdgeId>> dual_pairs;  // every pair with e != dual(e)
    std::size_t omitted_rows = 0;
};

SclProgram assemble_lp(const TurnGraph& g, std::span<const Circuit> circuits);

// F_v(u) for turn v, and F_e(u) for edge e, extended linearly over circuits.
BigRational vertex_flow(const TurnGraph& g, std::span<const Circuit> circuits,
                        std::span<const BigRational> u, int turn);
BigRational edge_flow(std::span<const Circuit> circuits, std::span<const BigRational> u,
                      EdgeId edge);

// Smallest positive integer multiple of a nonnegative, nonzero vector.
std::vector<BigInt> scale_to_integer(std::span<const BigRational> u);

struct SclOptions {
    std::size_t max_circuits = kDefaultCircuitCap;
    // When set, circuits are shuffled with this seed before the LP is built.
    std::optional<std::uint64_t> circuit_order_seed;
};

struct SclResult {
    std::string input;
    CyclicWord word;
    std::size_t removed = 0;
    bool infinite = false;
    BigRational scl{};                // valid when !infinite
    BigInt n{};                       // degree of the certificate surface
    std::vector<Circuit> circuits{};  // all embedded circuits, in LP column order
    std::vector<BigInt> integer_weights{};  // parallel to circuits
    std::size_t lp_variables = 0;
    std::size_t lp_constraints = 0;

    // Indices of circuits with positive weight.
    std::vector<std::size_t> circuits_used() const;
};

SclResult compute_scl(std::string_view word_text, const SclOptions& options = {});
SclResult compute_scl(const CyclicWord& w, const SclOptions& options = {});

// |w|/4 - (sum weights) / (2 n).
BigRational certificate_value(std::size_t word_length, std::span<const BigInt> weights,
                              const BigInt& n);

}  // namespace scl
