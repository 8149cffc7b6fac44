#pragma once

// Groebner bases of submodules of k[x]^M for generators in "triangular"
// position (the i-th generator has index i), under the weighted order
//
//     x^r e_i > x^s e_j  iff  u_x r + u_i > u_x s + u_j, or equal and i > j.
//
// The update loop cancels the leading term of g_r against the basis element
// g_s carrying the same index, either by subtracting a shifted multiple of
// g_s or, when g_r's leading coefficient has smaller degree, by swapping the
// two and shifting g_r first.  On exit every g_i has its leading term at
// index i, which makes the set a Groebner basis.
//
// Indices are 0-based in code: coordinates e_0..e_{M-1}.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hermes/errors.hpp"
#include "hermes/galois.hpp"
#include "hermes/xpoly.hpp"

namespace hermes {

using ModuleVec = std::vector<XPoly>;

struct WeightedOrder {
    int ux = 1;
    std::vector<int> weights;  // u_i for coordinate i

    int size() const { return static_cast<int>(weights.size()); }

    // deg_u(a e_j), kNegInf for a = 0
    int deg(const XPoly& a, int j) const {
        return a.is_zero() ? kNegInf : ux * a.degree() + weights[static_cast<std::size_t>(j)];
    }
};

// Leading term position of a module vector: weighted degree and coordinate.
struct LeadingTerm {
    int deg = kNegInf;
    int index = -1;

    bool operator==(const LeadingTerm&) const = default;
    // >_u on leading monomials
    bool operator<(const LeadingTerm& o) const { return deg != o.deg ? deg < o.deg : index < o.index; }
};

inline LeadingTerm leading_term(const ModuleVec& g, const WeightedOrder& ord) {
    LeadingTerm best;
    for (int j = 0; j < static_cast<int>(g.size()); ++j) {
        const int dj = ord.deg(g[static_cast<std::size_t>(j)], j);
        if (dj == kNegInf) continue;
        if (best.index < 0 || dj >= best.deg) best = LeadingTerm{dj, j};
    }
    return best;
}

// Largest coordinate holding a nonzero entry; -1 for the zero vector.
inline int vec_index(const ModuleVec& g) {
    for (int j = static_cast<int>(g.size()) - 1; j >= 0; --j) {
        if (!g[static_cast<std::size_t>(j)].is_zero()) return j;
    }
    return -1;
}

struct OpCounter {
    std::uint64_t mult_count = 0;
};

struct GOptions {
    // Assert that (deg LT(g_r) - deg a_rr e_r, ind LT(g_r)) drops lexicographically on every update.
    bool check_termination = false;
    // Assert the diagonal-dominance invariant over all permutations of
    // {0..r} after each update, whenever r + 1 <= this value.
    int permutation_check_max = 0;
};

struct GResult {
    std::vector<ModuleVec> basis;
    OpCounter counter;
    std::size_t updates = 0;
};

namespace detail {

inline bool diagonal_dominates(const std::vector<ModuleVec>& g, const WeightedOrder& ord, int r) {
    const int n = r + 1;
    auto d = [&](int i, int j) { return ord.deg(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], j); };
    long long diag = 0;
    for (int i = 0; i < n; ++i) {
        if (d(i, i) == kNegInf) return false;
        diag += d(i, i);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        long long s = 0;
        bool finite = true;
        for (int i = 0; i < n && finite; ++i) {
            const int v = d(i, perm[static_cast<std::size_t>(i)]);
            if (v == kNegInf) finite = false;
            s += v;
        }
        if (finite && s >= diag) return false;
    }
    return true;
}

}  // namespace detail

inline void check_generators(const std::vector<ModuleVec>& gens, const WeightedOrder& ord) {
    const int m = static_cast<int>(gens.size());
    if (ord.size() != m) throw ParameterError("order has " + std::to_string(ord.size()) + " weights for " + std::to_string(m) + " generators");
    if (ord.ux <= 0) throw ParameterError("x weight must be positive");
    for (int i = 0; i < m; ++i) {
        const ModuleVec& g = gens[static_cast<std::size_t>(i)];
        if (static_cast<int>(g.size()) != m) throw ParameterError("generator " + std::to_string(i) + " has wrong rank");
        const int idx = vec_index(g);
        if (idx < 0) throw ParameterError("generator " + std::to_string(i) + " is zero");
        if (idx != i) {
            throw ParameterError("generator " + std::to_string(i) + " has index " + std::to_string(idx));
        }
    }
}

inline GResult algorithm_g(const GaloisField& f, std::vector<ModuleVec> g, const WeightedOrder& ord, const GOptions& opt = {}) {
    check_generators(g, ord);
    const PolyOps ops{f};
    const int m = static_cast<int>(g.size());
    GResult res;

    for (int r = 1; r < m; ++r) {
        LeadingTerm lt = leading_term(g[static_cast<std::size_t>(r)], ord);
        while (lt.index != r) {
            const int s = lt.index;
            ModuleVec& gr = g[static_cast<std::size_t>(r)];
            ModuleVec& gs = g[static_cast<std::size_t>(s)];
            const XPoly& ars = gr[static_cast<std::size_t>(s)];
            const XPoly& ass = gs[static_cast<std::size_t>(s)];
            const int d = ars.degree() - ass.degree();
            const Elem c = f.div(ars.lead(), ass.lead());
            res.counter.mult_count += 1;

            const int metric_before = lt.deg - ord.deg(gr[static_cast<std::size_t>(r)], r);

            if (d >= 0) {
                for (int j = 0; j < m; ++j) {
                    res.counter.mult_count += ops.sub_scaled_shift(gr[static_cast<std::size_t>(j)], c, d, gs[static_cast<std::size_t>(j)]);
                }
            } else {
                ModuleVec old_s = std::move(gs);
                gs = gr;
                for (auto& a : gr) a = PolyOps::shift(a, -d);
                for (int j = 0; j < m; ++j) {
                    res.counter.mult_count += ops.sub_scaled_shift(gr[static_cast<std::size_t>(j)], c, 0, old_s[static_cast<std::size_t>(j)]);
                }
            }
            ++res.updates;

            const LeadingTerm next = leading_term(g[static_cast<std::size_t>(r)], ord);
            if (opt.check_termination) {
                if (vec_index(g[static_cast<std::size_t>(r)]) != r) throw InternalError("update changed the index of g_r");
                const int metric_after = next.deg - ord.deg(g[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)], r);
                const bool drops = metric_after < metric_before || (metric_after == metric_before && next.index < lt.index);
                if (!drops) throw InternalError("termination metric did not decrease at r=" + std::to_string(r));
            }
            if (opt.permutation_check_max > 0 && r + 1 <= opt.permutation_check_max) {
                if (!detail::diagonal_dominates(g, ord, r)) {
                    throw InternalError("diagonal dominance lost at r=" + std::to_string(r));
                }
            }
            lt = next;
        }
    }
    res.basis = std::move(g);
    return res;
}

// Position of the basis element with the smallest leading term; exact ties
// go to the smaller position.
inline std::size_t smallest_element(const std::vector<ModuleVec>& basis, const WeightedOrder& ord) {
    if (basis.empty()) throw ParameterError("empty basis");
    std::size_t best = 0;
    LeadingTerm best_lt = leading_term(basis[0], ord);
    for (std::size_t t = 1; t < basis.size(); ++t) {
        const LeadingTerm lt = leading_term(basis[t], ord);
        if (lt < best_lt) {
            best = t;
            best_lt = lt;
        }
    }
    return best;
}

// sum_{i=1}^M c d i^2 / u_x where c bounds every deg_u(a_ij e_j) and d bounds
// deg_u(a_ij e_j) - deg_u(a_ii e_i) for j <= i.  Rounded down, which is exact
// for comparison against an integer tally.
inline std::uint64_t counter_bound(const std::vector<ModuleVec>& gens, const WeightedOrder& ord) {
    const int m = static_cast<int>(gens.size());
    long long c = 0;
    long long d = 0;
    for (int i = 0; i < m; ++i) {
        const auto& gi = gens[static_cast<std::size_t>(i)];
        const int dii = ord.deg(gi[static_cast<std::size_t>(i)], i);
        for (int j = 0; j < m; ++j) {
            const int dij = ord.deg(gi[static_cast<std::size_t>(j)], j);
            if (dij == kNegInf) continue;
            c = std::max<long long>(c, dij);
            if (j <= i && dii != kNegInf) d = std::max<long long>(d, dij - dii);
        }
    }
    long long squares = 0;
    for (long long i = 1; i <= m; ++i) squares += i * i;
    return static_cast<std::uint64_t>((c * d * squares) / ord.ux);
}

}  // namespace hermes
