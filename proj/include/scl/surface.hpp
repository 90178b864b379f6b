#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scl/circuits.hpp"
#include "scl/rational.hpp"
#include "scl/scl.hpp"
#include "scl/turn_graph.hpp"
#include "scl/word.hpp"

namespace scl {

// Side t of a disk runs from corner turns[t] to corner turns[t + 1].
struct SideRef {
    std::size_t disk = 0;
    std::size_t side = 0;

    friend bool operator==(const SideRef&, const SideRef&) = default;
};

struct Disk {
    std::size_t circuit = 0;  // index into the circuit list used to build the surface
    std::size_t copy = 0;
    std::vector<int> turns;
    std::vector<EdgeId> edges;
};

// A 1-handle joining a side labelled e to a side labelled dual(e).
struct Rectangle {
    Letter letter;  // transverse label x_i^{-1} for e: i -> j
    SideRef from;   // labelled e
    SideRef to;     // labelled dual(e)
};

struct SurfaceDescription {
    CyclicWord word;
    std::vector<Disk> disks{};
    std::vector<Rectangle> rectangles{};
    long chi = 0;
    long n = 0;
    std::vector<std::string> boundary_words{};
};

// Glues weights[i] copies of the polygon of circuit i along rectangles. Sides
// with labels e and dual(e) are each sorted by (circuit, copy, side) and paired
// in order. Throws InputError for a zero vector or unbalanced dual pairs.
SurfaceDescription build_surface(const TurnGraph& g, std::span<const Circuit> circuits,
                                 std::span<const BigInt> weights);

// Combinatorial model of the collar-plus-handles part of a surface. Letter
// instances are indexed 0..size()-1. successor() walks the outer boundary, and
// partner() is the inverse-letter pairing made by the 1-handles. The turn just
// after instance p is turn position(p).
class HandleDiagram {
public:
    // Validates every structural invariant; throws InputError otherwise.
    HandleDiagram(CyclicWord word, std::vector<int> positions, std::vector<std::size_t> successor,
                  std::vector<std::size_t> partner);

    const CyclicWord& word() const { return word_; }
    std::size_t size() const { return positions_.size(); }
    long degree() const { return static_cast<long>(size() / word_.size()); }

    int position(std::size_t p) const { return positions_[p]; }
    const Letter& letter(std::size_t p) const { return word_.at(positions_[p]); }
    std::size_t successor(std::size_t p) const { return successor_[p]; }
    std::size_t predecessor(std::size_t p) const { return predecessor_[p]; }
    std::size_t partner(std::size_t p) const { return partner_[p]; }

    const std::vector<std::size_t>& successors() const { return successor_; }
    const std::vector<std::size_t>& partners() const { return partner_; }

    // Inner boundary step: the turn after p leads, across the handle at p, to
    // the turn before partner(p).
    std::size_t inner_next(std::size_t p) const { return predecessor_[partner_[p]]; }

    friend bool operator==(const HandleDiagram& a, const HandleDiagram& b) {
        return a.word_ == b.word_ && a.positions_ == b.positions_ &&
               a.successor_ == b.successor_ && a.partner_ == b.partner_;
    }

private:
    CyclicWord word_;
    std::vector<int> positions_;
    std::vector<std::size_t> successor_;
    std::vector<std::size_t> predecessor_;
    std::vector<std::size_t> partner_;
};

// Outer circles reading w^{powers[c]} laid out consecutively, with the given
// pairing of instances.
HandleDiagram diagram_from_matching(const CyclicWord& w, std::span<const int> powers,
                                    std::vector<std::size_t> partner);

HandleDiagram to_handle_diagram(const SurfaceDescription& s);

struct BoundaryTrace {
    std::vector<std::string> outer;                     // each a positive power of w
    std::vector<std::vector<std::size_t>> outer_instances;
    std::vector<std::vector<int>> inner;                // turn circuits, minimal rotation
    std::vector<std::vector<std::size_t>> inner_instances;  // aligned with the stored rotation
};

BoundaryTrace trace_boundary(const HandleDiagram& d);

// |w|/4 - inner / (2 n).
BigRational diagram_value(const HandleDiagram& d);

// Swaps the outer successors of two instances of the same turn.
HandleDiagram turn_surgery(const HandleDiagram& d, int turn, std::size_t p1, std::size_t p2);

bool is_taut(const HandleDiagram& d);

struct SurgeryStep {
    int turn = 0;
    std::size_t p1 = 0;
    std::size_t p2 = 0;
    std::size_t inner_before = 0;
    std::size_t inner_after = 0;
};

// Surgers at the lowest repeated turn, lexicographically first instance pair,
// until every inner component is embedded.
HandleDiagram make_taut(const HandleDiagram& d, std::vector<SurgeryStep>* log = nullptr);

struct OracleOptions {
    std::size_t max_matchings = 10'000'000;
    // Skip matchings equivalent under rotating or permuting identical w-circles.
    bool reduce_symmetry = false;
};

// Minimum of |w|/4 - inner/(2n) over every boundary layout and every inverse
// letter matching of degree n <= n_max. An upper bound for scl(w).
BigRational brute_force_scl_bound(const CyclicWord& w, int n_max, const OracleOptions& options = {});

struct VerificationReport {
    long chi = 0;
    long n = 0;
    std::size_t boundary_components = 0;
    std::size_t inner_components = 0;
    bool taut = false;
    BigRational certificate;
};

// Rebuilds the surface for a finite result and checks the Euler
// characteristic formula, boundary words, tautness, traced weights and the
// certificate identity. Throws InvariantViolation on any failure.
VerificationReport verify_certificate(const SclResult& result);

}  // namespace scl
