#include "scl/scl.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "scl/errors.hpp"

namespace scl {

SclProgram assemble_lp(const TurnGraph& g, std::span<const Circuit> circuits) {
    if (circuits.empty()) throw InputError("no circuits to build a program from");
    const std::size_t k = circuits.size();

    std::vector<std::vector<int>> edge_count(g.edges().size(), std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (EdgeId e : circuits[i].edges) ++edge_count[e][i];
    }

    SclProgram prog;
    prog.lp.num_vars = k;
    prog.lp.objective.assign(k, BigRational(1));
    for (const auto& [e, d] : g.dual_pairs()) {
        if (e == d) continue;
        prog.dual_pairs.emplace_back(e, d);
        RationalVector row(k);
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            const int c = edge_count[e][i] - edge_count[d][i];
            row[i] = BigRational(c);
            nonzero = nonzero || c != 0;
        }
        if (!nonzero) {
            ++prog.omitted_rows;
            continue;
        }
        prog.lp.rows.push_back(std::move(row));
        prog.lp.rhs.emplace_back(0);
    }

    RationalVector norm(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& t = circuits[i].turns;
        norm[i] = BigRational(static_cast<long>(std::count(t.begin(), t.end(), 1)));
    }
    prog.lp.rows.push_back(std::move(norm));
    prog.lp.rhs.emplace_back(1);
    return prog;
}

BigRational vertex_flow(const TurnGraph& g, std::span<const Circuit> circuits,
                        std::span<const BigRational> u, int turn) {
    const int v = g.word().wrap(turn);
    BigRational acc;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        const auto& t = circuits[i].turns;
        const auto c = std::count(t.begin(), t.end(), v);
        if (c != 0) acc += u[i] * BigRational(static_cast<long>(c));
    }
    return acc;
}

BigRational edge_flow(std::span<const Circuit> circuits, std::span<const BigRational> u,
                      EdgeId edge) {
    BigRational acc;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        const auto& es = circuits[i].edges;
        const auto c = std::count(es.begin(), es.end(), edge);
        if (c != 0) acc += u[i] * BigRational(static_cast<long>(c));
    }
    return acc;
}

std::vector<BigInt> scale_to_integer(std::span<const BigRational> u) {
    bool any = false;
    for (const auto& x : u) {
        if (x.sign() < 0) throw InputError("weight vector has a negative entry");
        any = any || !x.is_zero();
    }
    if (!any) throw InputError("cannot scale the zero vector");

    const BigInt lcm = lcm_of_denominators(u);
    std::vector<BigInt> out;
    out.reserve(u.size());
    BigInt g = 0;
    for (const auto& x : u) {
        BigInt v = x.numerator() * (lcm / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    for (auto& v : out) v /= g;
    return out;
}

BigRational certificate_value(std::size_t word_length, std::span<const BigInt> weights,
                              const BigInt& n) {
    if (n <= 0) throw InvariantViolation("certificate degree must be positive");
    BigInt total = 0;
    for (const auto& w : weights) total += w;
    return BigRational(static_cast<long>(word_length)) / BigRational(4) -
           BigRational(total, BigInt(2 * n));
}

std::vector<std::size_t> SclResult::circuits_used() const {
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < integer_weights.size(); ++i) {
        if (integer_weights[i] > 0) used.push_back(i);
    }
    return used;
}

SclResult compute_scl(const CyclicWord& w, const SclOptions& options) {
    SclResult res{.input = w.to_string(), .word = w};
    if (!in_commutator_subgroup(w)) {
        res.infinite = true;
        return res;
    }

    const TurnGraph g(w);
    res.circuits = enumerate_embedded_circuits(g, options.max_circuits);
    if (options.circuit_order_seed) {
        std::mt19937_64 rng(*options.circuit_order_seed);
        std::shuffle(res.circuits.begin(), res.circuits.end(), rng);
    }
    if (res.circuits.empty()) throw InvariantViolation("turn graph of a word in [F,F] has no circuits");

    const auto prog = assemble_lp(g, res.circuits);
    res.lp_variables = prog.lp.num_vars;
    res.lp_constraints = prog.lp.num_constraints();

    const auto sol = simplex_solve(prog.lp);
    if (sol.status != LpStatus::optimal) {
        throw InvariantViolation("scl program is " + to_string(sol.status));
    }
    const auto len = BigRational(static_cast<long>(w.size()));
    res.scl = len / BigRational(4) - sol.value / BigRational(2);

    res.integer_weights = scale_to_integer(sol.point);
    BigInt n = 0;
    for (std::size_t i = 0; i < res.circuits.size(); ++i) {
        const auto& t = res.circuits[i].turns;
        n += res.integer_weights[i] * static_cast<long>(std::count(t.begin(), t.end(), 1));
    }
    res.n = n;
    if (certificate_value(w.size(), res.integer_weights, res.n) != res.scl) {
        throw InvariantViolation("certificate identity fails for the scaled weights");
    }
    return res;
}

SclResult compute_scl(std::string_view word_text, const SclOptions& options) {
    const auto parsed = parse_word(word_text);
    auto reduced = cyclically_reduce(parsed);
    auto res = compute_scl(reduced.word, options);
    res.input = std::string(word_text);
    res.removed = reduced.removed;
    return res;
}

}  // namespace scl
