#pragma once

// Full list decoder: interpolate, find the roots of Q in L(u P_inf), and
// re-encode each root.  Every root is reported with its Hamming distance to
// the received word; callers decide whether to filter.  Any codeword c with
// d(v, c) < n - deg_u(Q)/m is guaranteed to be on the list.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hermes/code.hpp"
#include "hermes/errors.hpp"
#include "hermes/interp.hpp"
#include "hermes/roots.hpp"

namespace hermes {

inline int hamming_distance(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw ParameterError("hamming distance of vectors with lengths " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    }
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] == b[i] ? 0 : 1;
    return d;
}

struct DecodeEntry {
    Vec message;
    Vec codeword;
    int distance = 0;
};

// n - deg_u(Q)/m as the fraction num/den.
struct Radius {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct DecodeResult {
    ModElem Q;
    std::vector<DecodeEntry> entries;  // ascending distance, then canonical message order
    Radius guarantee_radius;
    OpCounter counter;
    std::uint64_t counter_bound = 0;

    bool contains(const Vec& message) const {
        return std::any_of(entries.begin(), entries.end(), [&](const DecodeEntry& e) { return e.message == message; });
    }
};

inline DecodeResult list_decode(const HermitianCode& code, const Vec& v, int m, int l) {
    InterpResult ir = interpolate(code, v, m, l);
    DecodeResult out;
    out.counter = ir.counter;
    out.counter_bound = ir.counter_bound;
    out.guarantee_radius = Radius{static_cast<long long>(code.n()) * m - code.ring().deg_u(ir.Q), m};

    const RootReport roots = find_roots(ir.Q, code);
    for (const Root& r : roots.roots) {
        DecodeEntry e;
        e.message = r.message;
        e.codeword = code.evaluate_all(r.mu);
        e.distance = hamming_distance(e.codeword, v);
        out.entries.push_back(std::move(e));
    }
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const DecodeEntry& a, const DecodeEntry& b) { return a.distance < b.distance; });
    out.Q = std::move(ir.Q);
    return out;
}

}  // namespace hermes
