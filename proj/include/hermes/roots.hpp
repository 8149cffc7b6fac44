#pragma once

// Roots of Q(z) in L(u P_inf).
//
// A root mu satisfies Q(P, mu(P)) = 0 at every rational point P, so the value
// of mu at P is confined to the roots S_P of the univariate polynomial Q(P, z)
// (or unconstrained when that polynomial vanishes identically).  find_roots
// picks k points whose evaluation rows are independent, preferring small S_P,
// enumerates the admissible value combinations there, solves for the message,
// and keeps the candidates that satisfy Q(mu) = 0 exactly in R.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hermes/code.hpp"
#include "hermes/errors.hpp"
#include "hermes/hermitian.hpp"
#include "hermes/linalg.hpp"

namespace hermes {

struct PointRoots {
    bool all = false;          // Q(P, z) is identically zero
    std::vector<Elem> values;  // roots in canonical order when !all

    std::size_t weight(int field_order) const { return all ? static_cast<std::size_t>(field_order) : values.size(); }
};

inline PointRoots pointwise_roots(const HermitianCode& code, const ModElem& Q, const Point& p) {
    const GaloisField& f = code.field();
    const HermitianRing& R = code.ring();
    std::vector<Elem> uni(static_cast<std::size_t>(Q.l()) + 1);
    bool all = true;
    for (int i = 0; i <= Q.l(); ++i) {
        uni[static_cast<std::size_t>(i)] = R.evaluate(Q[i], p.x, p.y);
        if (!uni[static_cast<std::size_t>(i)].is_zero()) all = false;
    }
    PointRoots out;
    out.all = all;
    if (all) return out;
    const XPoly poly(std::move(uni));
    const PolyOps ops{f};
    for (Elem c : f.elements()) {
        if (ops.eval(poly, c).is_zero()) out.values.push_back(c);
    }
    return out;
}

struct Root {
    Vec message;
    RingElem mu;
};

struct RootReport {
    std::vector<Root> roots;      // sorted by message in canonical order
    std::vector<int> info_set;    // 0-based point positions used (find_roots only)
    std::uint64_t candidates = 0;  // candidate messages enumerated
};

namespace detail {

inline void sort_roots(std::vector<Root>& roots) {
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.message < b.message; });
    roots.erase(std::unique(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.message == b.message; }),
                roots.end());
}

}  // namespace detail

inline RootReport find_roots(const ModElem& Q, const HermitianCode& code) {
    if (Q.is_zero()) throw DomainError("root finding for the zero polynomial");
    const GaloisField& f = code.field();
    const HermitianRing& R = code.ring();
    const auto& pts = code.points();
    const int n = code.n();
    const int k = code.k();

    std::vector<PointRoots> sets;
    sets.reserve(pts.size());
    for (const Point& p : pts) {
        sets.push_back(pointwise_roots(code, Q, p));
        if (!sets.back().all && sets.back().values.empty()) return RootReport{};
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sets[static_cast<std::size_t>(a)].weight(f.order()) < sets[static_cast<std::size_t>(b)].weight(f.order());
    });

    RootReport report;
    EchelonBasis span(f, static_cast<std::size_t>(k));
    Matrix sub;
    for (int idx : order) {
        if (static_cast<int>(report.info_set.size()) == k) break;
        Vec row = code.basis_row(pts[static_cast<std::size_t>(idx)]);
        if (span.insert(row)) {
            report.info_set.push_back(idx);
            sub.push_back(std::move(row));
        }
    }
    if (static_cast<int>(report.info_set.size()) != k) throw InternalError("no information set: evaluation map not injective");
    const auto inv = invert(f, sub);
    if (!inv) throw InternalError("information set matrix is singular");

    // Admissible values per information-set point.
    const auto elems = f.elements();
    std::vector<std::vector<Elem>> choices;
    for (int idx : report.info_set) {
        const PointRoots& s = sets[static_cast<std::size_t>(idx)];
        choices.push_back(s.all ? elems : s.values);
    }

    std::vector<std::size_t> digit(choices.size(), 0);
    Vec values(choices.size());
    while (true) {
        for (std::size_t t = 0; t < choices.size(); ++t) values[t] = choices[t][digit[t]];
        Vec message = mat_vec(f, *inv, values);
        RingElem mu = code.message_function(message);

        ++report.candidates;
        bool consistent = true;
        for (int p = 0; p < n && consistent; ++p) {
            const PointRoots& s = sets[static_cast<std::size_t>(p)];
            if (s.all) continue;
            const Elem val = code.evaluate(mu, pts[static_cast<std::size_t>(p)]);
            consistent = std::binary_search(s.values.begin(), s.values.end(), val);
        }
        if (consistent && R.substitute(Q, mu).is_zero()) report.roots.push_back(Root{std::move(message), std::move(mu)});

        std::size_t t = 0;
        while (t < digit.size() && ++digit[t] == choices[t].size()) digit[t++] = 0;
        if (t == digit.size()) break;
    }
    detail::sort_roots(report.roots);
    return report;
}

inline constexpr std::uint64_t kDefaultExhaustiveBudget = std::uint64_t{1} << 20;

// Reference semantics for find_roots: checks every message in F^k.
inline RootReport exhaustive_roots(const ModElem& Q, const HermitianCode& code,
                                   std::uint64_t budget = kDefaultExhaustiveBudget) {
    const GaloisField& f = code.field();
    const HermitianRing& R = code.ring();
    const int k = code.k();
    std::uint64_t total = 1;
    for (int t = 0; t < k; ++t) {
        total *= static_cast<std::uint64_t>(f.order());
        if (total > budget) {
            throw ParameterError("exhaustive root search over " + std::to_string(f.order()) + "^" + std::to_string(k) +
                                 " messages exceeds the budget of " + std::to_string(budget));
        }
    }
    RootReport report;
    const auto elems = f.elements();
    std::vector<std::size_t> digit(static_cast<std::size_t>(k), 0);
    Vec message(static_cast<std::size_t>(k));
    for (std::uint64_t c = 0; c < total; ++c) {
        for (std::size_t t = 0; t < digit.size(); ++t) message[t] = elems[digit[t]];
        RingElem mu = code.message_function(message);
        ++report.candidates;
        if (R.substitute(Q, mu).is_zero()) report.roots.push_back(Root{message, std::move(mu)});
        std::size_t t = 0;
        while (t < digit.size() && ++digit[t] == elems.size()) digit[t++] = 0;
    }
    detail::sort_roots(report.roots);
    return report;
}

}  // namespace hermes
