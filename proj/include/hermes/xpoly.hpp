#pragma once

// Dense univariate polynomials over GF(q^2), lowest degree first.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "hermes/galois.hpp"

namespace hermes {

// Degree of the zero polynomial; compares below every real degree.  Kept far
// from INT_MIN so that adding a handful of weights cannot overflow.
inline constexpr int kNegInf = std::numeric_limits<int>::min() / 8;

class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

    static XPoly constant(Elem c) { return XPoly(std::vector<Elem>{c}); }
    // c * x^d
    static XPoly monomial(Elem c, int d) {
        if (c.is_zero()) return {};
        std::vector<Elem> v(static_cast<std::size_t>(d) + 1);
        v.back() = c;
        return XPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
    Elem lead() const { return c_.empty() ? Elem::zero() : c_.back(); }
    // Coefficient of x^k; zero beyond the stored range.
    Elem operator[](int k) const {
        return (k < 0 || k >= static_cast<int>(c_.size())) ? Elem::zero() : c_[static_cast<std::size_t>(k)];
    }
    std::span<const Elem> coeffs() const { return c_; }
    std::size_t nonzero_terms() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem e) { return !e.is_zero(); }));
    }

    // Writes a coefficient, growing or trimming storage as needed.
    void set(int k, Elem v) {
        if (k >= static_cast<int>(c_.size())) {
            if (v.is_zero()) return;
            c_.resize(static_cast<std::size_t>(k) + 1);
        }
        c_[static_cast<std::size_t>(k)] = v;
        trim();
    }

    bool operator==(const XPoly&) const = default;

private:
    friend struct PolyOps;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Elem> c_;
};

// Arithmetic helpers. All take the field explicitly; polynomials do not
// carry a context.
struct PolyOps {
    const GaloisField& f;

    XPoly add(const XPoly& a, const XPoly& b) const {
        const auto& big = a.c_.size() >= b.c_.size() ? a : b;
        const auto& small = a.c_.size() >= b.c_.size() ? b : a;
        XPoly r = big;
        for (std::size_t k = 0; k < small.c_.size(); ++k) r.c_[k] = f.add(r.c_[k], small.c_[k]);
        r.trim();
        return r;
    }

    XPoly neg(const XPoly& a) const {
        XPoly r = a;
        for (auto& e : r.c_) e = f.neg(e);
        return r;
    }

    XPoly sub(const XPoly& a, const XPoly& b) const { return add(a, neg(b)); }

    XPoly scale(const XPoly& a, Elem c) const {
        if (c.is_zero()) return {};
        XPoly r = a;
        for (auto& e : r.c_) e = f.mul(e, c);
        return r;
    }

    // a * x^d, d >= 0
    static XPoly shift(const XPoly& a, int d) {
        if (a.is_zero() || d == 0) return a;
        XPoly r;
        r.c_.assign(static_cast<std::size_t>(d), Elem::zero());
        r.c_.insert(r.c_.end(), a.c_.begin(), a.c_.end());
        return r;
    }

    XPoly mul(const XPoly& a, const XPoly& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        XPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Elem::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
            }
        }
        r.trim();
        return r;
    }

    XPoly pow(const XPoly& a, int k) const {
        XPoly r = XPoly::constant(f.one());
        for (int t = 0; t < k; ++t) r = mul(r, a);
        return r;
    }

    // dst <- dst - c * x^d * src; returns the number of field multiplications.
    std::uint64_t sub_scaled_shift(XPoly& dst, Elem c, int d, const XPoly& src) const {
        if (src.is_zero() || c.is_zero()) return 0;
        const Elem nc = f.neg(c);
        const std::size_t need = src.c_.size() + static_cast<std::size_t>(d);
        if (dst.c_.size() < need) dst.c_.resize(need);
        std::uint64_t mults = 0;
        for (std::size_t k = 0; k < src.c_.size(); ++k) {
            if (src.c_[k].is_zero()) continue;
            auto& t = dst.c_[k + static_cast<std::size_t>(d)];
            t = f.add(t, f.mul(nc, src.c_[k]));
            ++mults;
        }
        dst.trim();
        return mults;
    }

    // Division with remainder by a divisor with nonzero leading coefficient.
    std::pair<XPoly, XPoly> divmod(const XPoly& a, const XPoly& b) const {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        XPoly rem = a;
        if (a.degree() < b.degree()) return {XPoly{}, rem};
        const Elem inv_lead = f.inv(b.lead());
        std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int d = rem.degree() - b.degree();
            const Elem c = f.mul(rem.lead(), inv_lead);
            quot[static_cast<std::size_t>(d)] = c;
            sub_scaled_shift(rem, c, d, b);
        }
        return {XPoly(std::move(quot)), rem};
    }

    Elem eval(const XPoly& a, Elem x) const {
        Elem acc = Elem::zero();
        for (auto it = a.c_.rbegin(); it != a.c_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
        return acc;
    }
};

}  // namespace hermes
