#include "scl/exact_lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "scl/errors.hpp"

namespace scl {
namespace {

using Row = std::vector<mpq_class>;

class Tableau {
public:
    Tableau(const ExactLp& lp) : n_(lp.num_vars) {
        const auto m = lp.rows.size();
        rows_.resize(m, Row(n_ + 1));
        for (std::size_t r = 0; r < m; ++r) {
            const bool flip = lp.rhs[r].sign() < 0;
            for (std::size_t j = 0; j < n_; ++j) {
                rows_[r][j] = flip ? mpq_class(-lp.rows[r][j].raw()) : lp.rows[r][j].raw();
            }
            rows_[r][n_] = flip ? mpq_class(-lp.rhs[r].raw()) : lp.rhs[r].raw();
        }
        // Artificial variable r is encoded as basis index n_ + r.
        basis_.resize(m);
        std::iota(basis_.begin(), basis_.end(), n_);
        cost_.assign(n_ + 1, 0);
    }

    std::size_t width() const { return n_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    // Reduced costs for the objective given by var_cost (size n_) plus
    // artificial_cost on every artificial variable.
    void price(const std::vector<mpq_class>& var_cost, const mpq_class& artificial_cost) {
        auto basic_cost = [&](std::size_t b) { return b < n_ ? var_cost[b] : artificial_cost; };
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = var_cost[j];
        cost_[n_] = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const mpq_class cb = basic_cost(basis_[r]);
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= n_; ++j) {
                if (sgn(rows_[r][j]) != 0) cost_[j] -= cb * rows_[r][j];
            }
        }
        // cost_[n_] now holds -(objective value).
    }

    mpq_class objective_value() const { return -cost_[n_]; }

    // Runs Bland-rule pivots until optimal. Returns false when unbounded.
    bool optimize() {
        for (;;) {
            std::size_t entering = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(cost_[j]) > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == n_) return true;

            std::size_t leaving = rows_.size();
            mpq_class best;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const auto& a = rows_[r][entering];
                if (sgn(a) <= 0) continue;
                mpq_class ratio = rows_[r][n_] / a;
                if (leaving == rows_.size() || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = std::move(ratio);
                }
            }
            if (leaving == rows_.size()) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t q) {
        Row& prow = rows_[r];
        const mpq_class inv = 1 / prow[q];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= n_; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        auto eliminate = [&](Row& row) {
            if (sgn(row[q]) == 0) return;
            const mpq_class f = row[q];
            for (std::size_t j : nz) row[j] -= f * prow[j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r) eliminate(rows_[i]);
        }
        eliminate(cost_);
        basis_[r] = q;
    }

    // After phase one: pivot zero-level artificials out of the basis, dropping
    // rows that are linear combinations of the others.
    void drive_out_artificials() {
        for (std::size_t r = 0; r < rows_.size();) {
            if (basis_[r] < n_) {
                ++r;
                continue;
            }
            std::size_t q = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(rows_[r][j]) != 0) {
                    q = j;
                    break;
                }
            }
            if (q == n_) {
                rows_.erase(rows_.begin() + static_cast<long>(r));
                basis_.erase(basis_.begin() + static_cast<long>(r));
                continue;
            }
            pivot(r, q);
            ++r;
        }
    }

    RationalVector point() const {
        RationalVector x(n_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < n_) x[basis_[r]] = BigRational(rows_[r][n_]);
        }
        return x;
    }

private:
    std::size_t n_;
    std::vector<Row> rows_;
    std::vector<std::size_t> basis_;
    Row cost_;
};

// Gauss-Jordan on [A | b]. Returns independent rows in reduced form, or
// nullopt-like empty result with consistent=false.
struct Reduced {
    bool consistent = true;
    std::vector<Row> rows;  // each of size n + 1
};

Reduced row_reduce(const ExactLp& lp) {
    const std::size_t n = lp.num_vars;
    std::vector<Row> m;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        Row row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = lp.rows[r][j].raw();
        row[n] = lp.rhs[r].raw();
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        const mpq_class inv = 1 / m[rank][col];
        for (auto& v : m[rank]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || sgn(m[i][col]) == 0) continue;
            const mpq_class f = m[i][col];
            for (std::size_t j = 0; j <= n; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    Reduced out;
    for (std::size_t i = rank; i < m.size(); ++i) {
        if (sgn(m[i][n]) != 0) out.consistent = false;
    }
    m.resize(rank);
    out.rows = std::move(m);
    return out;
}

// Solves the square system restricted to columns; empty result when singular.
std::vector<mpq_class> solve_square(const std::vector<Row>& rows,
                                    const std::vector<std::size_t>& cols, std::size_t rhs_col) {
    const std::size_t k = cols.size();
    std::vector<Row> a(k, Row(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = rows[i][cols[j]];
        a[i][k] = rows[i][rhs_col];
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && sgn(a[piv][col]) == 0) ++piv;
        if (piv == k) return {};
        std::swap(a[col], a[piv]);
        const mpq_class inv = 1 / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            const mpq_class f = a[i][col];
            for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<mpq_class> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k];
    return x;
}

// n choose k, saturating at limit + 1.
std::size_t bounded_binomial(std::size_t n, std::size_t k, std::size_t limit) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(limit)) return limit + 1;
    }
    return static_cast<std::size_t>(acc + 0.5L);
}

}  // namespace

void ExactLp::validate() const {
    if (objective.size() != num_vars) throw InputError("objective length differs from num_vars");
    if (rhs.size() != rows.size()) throw InputError("rhs length differs from row count");
    for (const auto& row : rows) {
        if (row.size() != num_vars) throw InputError("constraint row has wrong length");
    }
}

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

BigRational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InputError("dot product of mismatched vectors");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i].raw() * b[i].raw();
    }
    return BigRational(acc);
}

bool is_feasible(const ExactLp& lp, const RationalVector& point) {
    if (point.size() != lp.num_vars) return false;
    for (const auto& x : point) {
        if (x.sign() < 0) return false;
    }
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        if (dot(lp.rows[r], point) != lp.rhs[r]) return false;
    }
    return true;
}

LpSolution simplex_solve(const ExactLp& lp) {
    lp.validate();
    Tableau t(lp);

    // Phase one: maximize minus the sum of artificials.
    t.price(std::vector<mpq_class>(lp.num_vars, 0), mpq_class(-1));
    t.optimize();
    if (sgn(t.objective_value()) < 0) return {LpStatus::infeasible, {}, {}, {}};
    t.drive_out_artificials();

    std::vector<mpq_class> cost(lp.num_vars);
    for (std::size_t j = 0; j < lp.num_vars; ++j) cost[j] = lp.objective[j].raw();
    t.price(cost, mpq_class(0));
    if (!t.optimize()) return {LpStatus::unbounded, {}, {}, {}};

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.value = BigRational(t.objective_value());
    sol.point = t.point();
    sol.basis = t.basis();
    return sol;
}

std::vector<RationalVector> enumerate_vertices(const ExactLp& lp, std::size_t max_bases) {
    lp.validate();
    const auto reduced = row_reduce(lp);
    if (!reduced.consistent) return {};
    const std::size_t n = lp.num_vars;
    const std::size_t rank = reduced.rows.size();
    if (bounded_binomial(n, rank, max_bases) > max_bases) {
        throw ResourceLimit("vertex enumeration would examine more than " +
                            std::to_string(max_bases) + " bases");
    }

    std::set<RationalVector> vertices;
    std::vector<std::size_t> cols(rank);
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
        const auto x = solve_square(reduced.rows, cols, n);
        if (rank == 0 || !x.empty()) {
            bool nonneg = true;
            for (const auto& v : x) nonneg = nonneg && sgn(v) >= 0;
            if (nonneg) {
                RationalVector point(n);
                for (std::size_t i = 0; i < rank; ++i) point[cols[i]] = BigRational(x[i]);
                vertices.insert(std::move(point));
            }
        }
        // Next combination in lexicographic order.
        std::size_t i = rank;
        while (i > 0 && cols[i - 1] == n - rank + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < rank; ++j) cols[j] = cols[j - 1] + 1;
    }
    return {vertices.begin(), vertices.end()};
}

}  // namespace scl
