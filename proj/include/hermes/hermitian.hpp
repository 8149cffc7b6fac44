#pragma once

// The coordinate ring R = F[x,y]/(x^{q+1} - y^q - y) of the Hermitian curve
// and the module R[z]_l of polynomials in z over R of degree at most l.
//
// R is free over F[x] with basis 1, y, ..., y^{q-1}, so a ring element is q
// x-polynomials.  An element of R[z]_l is an (l+1) x q grid of x-polynomials,
// entry (i,j) being the coefficient of y^j z^i.
//
// Monomials x^r y^j z^i are weighted deg_u = q r + (q+1) j + u i and ordered
// by deg_u, ties going to the larger z-exponent.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermes/galois.hpp"
#include "hermes/xpoly.hpp"

namespace hermes {

struct RingElem {
    std::vector<XPoly> y;  // y[j] is the coefficient of y^j

    bool is_zero() const {
        return std::all_of(y.begin(), y.end(), [](const XPoly& p) { return p.is_zero(); });
    }
    bool operator==(const RingElem&) const = default;
};

// x^r y^j z^i
struct Monomial {
    int r = 0;
    int j = 0;
    int i = 0;

    int deg_u(int q, int u) const { return q * r + (q + 1) * j + u * i; }
    bool operator==(const Monomial&) const = default;
};

// Strict >_u comparison of two monomials.
inline bool monomial_greater(const Monomial& a, const Monomial& b, int q, int u) {
    const int da = a.deg_u(q, u);
    const int db = b.deg_u(q, u);
    if (da != db) return da > db;
    if (a.i != b.i) return a.i > b.i;
    // Equal weight and z-exponent force equal y-exponent; r then agrees too.
    return a.j > b.j || (a.j == b.j && a.r > b.r);
}

// Position (i,j) of the basis element y^j z^i; ordered lexicographically, i first.
struct BasisIndex {
    int i = 0;
    int j = 0;
    auto operator<=>(const BasisIndex&) const = default;
};

class ModElem {
public:
    ModElem() = default;
    ModElem(int q, int l, int u)
        : q_(q), u_(u), z_(static_cast<std::size_t>(l) + 1, RingElem{std::vector<XPoly>(static_cast<std::size_t>(q))}) {}

    int q() const { return q_; }
    int l() const { return static_cast<int>(z_.size()) - 1; }
    int u() const { return u_; }

    RingElem& operator[](int i) { return z_.at(static_cast<std::size_t>(i)); }
    const RingElem& operator[](int i) const { return z_.at(static_cast<std::size_t>(i)); }
    XPoly& at(int i, int j) { return z_.at(static_cast<std::size_t>(i)).y.at(static_cast<std::size_t>(j)); }
    const XPoly& at(int i, int j) const { return z_.at(static_cast<std::size_t>(i)).y.at(static_cast<std::size_t>(j)); }

    bool is_zero() const {
        return std::all_of(z_.begin(), z_.end(), [](const RingElem& a) { return a.is_zero(); });
    }

    // Largest i with a nonzero coefficient of z^i; -1 for zero.
    int z_degree() const {
        for (int i = l(); i >= 0; --i) {
            if (!(*this)[i].is_zero()) return i;
        }
        return -1;
    }

    // Same element viewed in R[z]_{new_l}; throws if it does not fit.
    ModElem resized(int new_l) const {
        if (z_degree() > new_l) throw ParameterError("element has z-degree above " + std::to_string(new_l));
        ModElem r(q_, new_l, u_);
        for (int i = 0; i <= std::min(new_l, l()); ++i) r[i] = (*this)[i];
        return r;
    }

    // Equality of the represented polynomial, independent of grid size.
    bool operator==(const ModElem& o) const {
        if (q_ != o.q_) return false;
        const int top = std::max(l(), o.l());
        const RingElem zero{std::vector<XPoly>(static_cast<std::size_t>(q_))};
        for (int i = 0; i <= top; ++i) {
            const RingElem& a = i <= l() ? (*this)[i] : zero;
            const RingElem& b = i <= o.l() ? o[i] : zero;
            if (!(a == b)) return false;
        }
        return true;
    }

private:
    int q_ = 0;
    int u_ = 0;
    std::vector<RingElem> z_;
};

class HermitianRing {
public:
    explicit HermitianRing(FieldPtr field) : field_(std::move(field)), q_(field_->q()) {}

    const GaloisField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int q() const { return q_; }
    PolyOps px() const { return PolyOps{*field_}; }

    // ---- ring elements -------------------------------------------------

    RingElem zero() const { return RingElem{std::vector<XPoly>(static_cast<std::size_t>(q_))}; }
    RingElem constant(Elem c) const { return monomial(c, 0, 0); }
    RingElem one() const { return constant(field_->one()); }
    RingElem x() const { return monomial(field_->one(), 1, 0); }
    RingElem y() const { return monomial(field_->one(), 0, 1); }
    RingElem from_x(XPoly a) const {
        RingElem r = zero();
        r.y[0] = std::move(a);
        return r;
    }
    // c x^r y^j, 0 <= j < q
    RingElem monomial(Elem c, int r, int j) const {
        if (j < 0 || j >= q_) throw ParameterError("y-exponent out of range");
        RingElem out = zero();
        out.y[static_cast<std::size_t>(j)] = XPoly::monomial(c, r);
        return out;
    }

    RingElem add(const RingElem& a, const RingElem& b) const {
        check(a);
        check(b);
        RingElem r = zero();
        for (int j = 0; j < q_; ++j) r.y[sz(j)] = px().add(a.y[sz(j)], b.y[sz(j)]);
        return r;
    }

    RingElem neg(const RingElem& a) const {
        check(a);
        RingElem r = zero();
        for (int j = 0; j < q_; ++j) r.y[sz(j)] = px().neg(a.y[sz(j)]);
        return r;
    }

    RingElem sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

    RingElem scale(const RingElem& a, Elem c) const {
        check(a);
        RingElem r = zero();
        for (int j = 0; j < q_; ++j) r.y[sz(j)] = px().scale(a.y[sz(j)], c);
        return r;
    }

    RingElem mul_x(const RingElem& a, const XPoly& b) const {
        check(a);
        RingElem r = zero();
        for (int j = 0; j < q_; ++j) r.y[sz(j)] = px().mul(a.y[sz(j)], b);
        return r;
    }

    // Product followed by the rewrite y^q -> x^{q+1} - y, applied from the
    // top y-degree down until every y-degree is below q.
    RingElem mul(const RingElem& a, const RingElem& b) const {
        check(a);
        check(b);
        const PolyOps ops = px();
        std::vector<XPoly> full(static_cast<std::size_t>(2 * q_ - 1));
        for (int j = 0; j < q_; ++j) {
            if (a.y[sz(j)].is_zero()) continue;
            for (int k = 0; k < q_; ++k) {
                if (b.y[sz(k)].is_zero()) continue;
                full[sz(j + k)] = ops.add(full[sz(j + k)], ops.mul(a.y[sz(j)], b.y[sz(k)]));
            }
        }
        for (int t = 2 * q_ - 2; t >= q_; --t) {
            XPoly c = std::move(full[sz(t)]);
            full[sz(t)] = XPoly{};
            if (c.is_zero()) continue;
            // c y^t = c y^{t-q} (x^{q+1} - y)
            full[sz(t - q_)] = ops.add(full[sz(t - q_)], PolyOps::shift(c, q_ + 1));
            full[sz(t - q_ + 1)] = ops.sub(full[sz(t - q_ + 1)], c);
        }
        full.resize(sz(q_));
        return RingElem{std::move(full)};
    }

    RingElem pow(const RingElem& a, int k) const {
        RingElem r = one();
        for (int t = 0; t < k; ++t) r = mul(r, a);
        return r;
    }

    // -v_{P_inf}(a) = max_j q deg(a_j) + (q+1) j.  The candidates are
    // pairwise distinct since they differ mod q.
    int pole_order(const RingElem& a) const {
        check(a);
        int best = kNegInf;
        for (int j = 0; j < q_; ++j) {
            const XPoly& c = a.y[sz(j)];
            if (c.is_zero()) continue;
            best = std::max(best, q_ * c.degree() + (q_ + 1) * j);
        }
        if (best == kNegInf) throw DomainError("pole order of the zero element");
        return best;
    }

    Elem evaluate(const RingElem& a, Elem px_, Elem py) const {
        check(a);
        const PolyOps ops = px();
        Elem acc = Elem::zero();
        for (int j = q_ - 1; j >= 0; --j) acc = field_->add(field_->mul(acc, py), ops.eval(a.y[sz(j)], px_));
        return acc;
    }

    // ---- elements of R[z]_l ------------------------------------------

    ModElem mod_zero(int l, int u) const { return ModElem(q_, l, u); }

    ModElem mod_from_ring(const RingElem& a, int l, int u) const {
        check(a);
        ModElem f(q_, l, u);
        f[0] = a;
        return f;
    }

    // z - h
    ModElem z_minus(const RingElem& h, int l, int u) const {
        if (l < 1) throw ParameterError("z - h needs l >= 1");
        ModElem f = mod_from_ring(neg(h), l, u);
        f[1] = one();
        return f;
    }

    ModElem mod_add(const ModElem& f, const ModElem& g) const {
        check(f);
        check(g);
        ModElem r(q_, std::max(f.l(), g.l()), f.u());
        for (int i = 0; i <= r.l(); ++i) {
            if (i <= f.l()) r[i] = add(r[i], f[i]);
            if (i <= g.l()) r[i] = add(r[i], g[i]);
        }
        return r;
    }

    ModElem mod_sub(const ModElem& f, const ModElem& g) const { return mod_add(f, mod_scale(g, field_->neg(field_->one()))); }

    ModElem mod_scale(const ModElem& f, Elem c) const {
        check(f);
        ModElem r(q_, f.l(), f.u());
        for (int i = 0; i <= f.l(); ++i) r[i] = scale(f[i], c);
        return r;
    }

    ModElem mod_mul_ring(const ModElem& f, const RingElem& a) const {
        check(f);
        ModElem r(q_, f.l(), f.u());
        for (int i = 0; i <= f.l(); ++i) r[i] = mul(f[i], a);
        return r;
    }

    // Product in R[z]; the result lives in R[z]_{f.l + g.l}.
    ModElem mod_mul(const ModElem& f, const ModElem& g) const {
        check(f);
        check(g);
        ModElem r(q_, f.l() + g.l(), f.u());
        for (int i = 0; i <= f.l(); ++i) {
            if (f[i].is_zero()) continue;
            for (int k = 0; k <= g.l(); ++k) {
                if (g[k].is_zero()) continue;
                r[i + k] = add(r[i + k], mul(f[i], g[k]));
            }
        }
        return r;
    }

    int deg_u(const ModElem& f) const { return leading_monomial(f).deg_u(q_, f.u()); }

    Monomial leading_monomial(const ModElem& f) const {
        check(f);
        std::optional<Monomial> best;
        for (int i = 0; i <= f.l(); ++i) {
            for (int j = 0; j < q_; ++j) {
                const XPoly& c = f.at(i, j);
                if (c.is_zero()) continue;
                const Monomial m{c.degree(), j, i};
                if (!best || monomial_greater(m, *best, q_, f.u())) best = m;
            }
        }
        if (!best) throw DomainError("leading monomial of the zero element");
        return *best;
    }

    Elem leading_coefficient(const ModElem& f) const {
        const Monomial m = leading_monomial(f);
        return f.at(m.i, m.j).lead();
    }

    BasisIndex lt_index(const ModElem& f) const {
        const Monomial m = leading_monomial(f);
        return BasisIndex{m.i, m.j};
    }

    // Lex-largest (i,j) with a nonzero entry.
    BasisIndex index(const ModElem& f) const {
        check(f);
        for (int i = f.l(); i >= 0; --i) {
            for (int j = q_ - 1; j >= 0; --j) {
                if (!f.at(i, j).is_zero()) return BasisIndex{i, j};
            }
        }
        throw DomainError("index of the zero element");
    }

    // f(phi), by Horner's rule in R.
    RingElem substitute(const ModElem& f, const RingElem& phi) const {
        check(f);
        check(phi);
        RingElem acc = zero();
        for (int i = f.l(); i >= 0; --i) acc = add(mul(acc, phi), f[i]);
        return acc;
    }

    // Coefficients c_0..c_{l} with f = sum_k c_k (z - h)^k, by repeated
    // synthetic division by the monic z - h.
    std::vector<RingElem> taylor_in_z(const ModElem& f, const RingElem& h) const {
        check(f);
        check(h);
        std::vector<RingElem> cur(static_cast<std::size_t>(f.l()) + 1);
        for (int i = 0; i <= f.l(); ++i) cur[sz(i)] = f[i];
        std::vector<RingElem> out;
        out.reserve(cur.size());
        while (!cur.empty()) {
            // cur = (z - h) * quot + rem
            const std::size_t n = cur.size();
            std::vector<RingElem> quot(n - 1);
            RingElem carry = zero();
            for (std::size_t t = n; t-- > 0;) {
                const RingElem val = add(cur[t], mul(carry, h));
                if (t == 0) {
                    out.push_back(val);
                } else {
                    quot[t - 1] = val;
                    carry = val;
                }
            }
            cur = std::move(quot);
        }
        return out;
    }

private:
    static std::size_t sz(int k) { return static_cast<std::size_t>(k); }

    void check(const RingElem& a) const {
        if (static_cast<int>(a.y.size()) != q_) {
            throw ParameterError("ring element built for a different q (" + std::to_string(a.y.size()) +
                                 " coordinates, expected " + std::to_string(q_) + ")");
        }
    }
    void check(const ModElem& f) const {
        if (f.q() != q_) throw ParameterError("module element built for a different q");
    }

    FieldPtr field_;
    int q_;
};

}  // namespace hermes
