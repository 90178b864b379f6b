#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scl/rational.hpp"

namespace scl {

// maximize objective . u  subject to  rows * u == rhs,  u >= 0.
struct ExactLp {
    std::size_t num_vars = 0;
    RationalVector objective;
    std::vector<RationalVector> rows;
    RationalVector rhs;

    std::size_t num_constraints() const { return rows.size(); }
    // Throws InputError on inconsistent dimensions.
    void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    BigRational value;               // meaningful when optimal
    RationalVector point;            // basic feasible solution when optimal
    std::vector<std::size_t> basis;  // basic variables, one per independent row
};

// Two-phase dense tableau simplex with Bland's rule. Pivot choices are fully
// determined by the input, so repeated solves agree bit for bit.
LpSolution simplex_solve(const ExactLp& lp);

inline constexpr std::size_t kDefaultMaxBases = 1'000'000;

// All basic feasible solutions, found by trying every column basis. Sorted and
// deduplicated. Throws ResourceLimit when more than max_bases candidate bases
// would have to be examined. Intended as an independent check on simplex_solve.
std::vector<RationalVector> enumerate_vertices(const ExactLp& lp,
                                               std::size_t max_bases = kDefaultMaxBases);

BigRational dot(const RationalVector& a, const RationalVector& b);

// Exact check of rows * point == rhs and point >= 0.
bool is_feasible(const ExactLp& lp, const RationalVector& point);

}  // namespace scl
