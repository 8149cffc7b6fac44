#pragma once

// Hermitian codes C_u: evaluation of L(u P_inf) at the q^3 affine rational
// points of x^{q+1} = y^q + y, plus the interpolating functions h_i, h_v and
// the vanishing function eta = x^{q^2} - x.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hermes/errors.hpp"
#include "hermes/galois.hpp"
#include "hermes/hermitian.hpp"

namespace hermes {

struct Point {
    Elem x;
    Elem y;
    bool operator==(const Point&) const = default;
};

using Vec = std::vector<Elem>;

// Points ordered by x in canonical field order, then by y.
inline std::vector<Point> enumerate_points(const GaloisField& f) {
    const int q = f.q();
    std::vector<Point> pts;
    const auto elems = f.elements();
    for (Elem a : elems) {
        const Elem rhs = f.pow(a, q + 1);
        for (Elem b : elems) {
            if (f.add(f.pow(b, q), b) == rhs) pts.push_back(Point{a, b});
        }
    }
    return pts;
}

class HermitianCode {
public:
    HermitianCode(FieldPtr field, int u) : ring_(std::move(field)), u_(u) {
        const int q = ring_.q();
        n_ = q * q * q;
        if (u <= 0 || u >= n_) {
            throw ParameterError("u must satisfy 0 < u < n = " + std::to_string(n_) + ", got " + std::to_string(u));
        }
        genus_ = q * (q - 1) / 2;
        points_ = enumerate_points(ring_.field());
        if (static_cast<int>(points_.size()) != n_) throw InternalError("wrong number of rational points");
        // Pole orders q a + (q+1) b are distinct for 0 <= b < q, so sorting by
        // pole order is the same as walking weights upward.
        for (int w = 0; w <= u; ++w) {
            for (int b = 0; b < q; ++b) {
                const int rest = w - (q + 1) * b;
                if (rest >= 0 && rest % q == 0) basis_.push_back(Monomial{rest / q, b, 0});
            }
        }
    }

    static HermitianCode make(int q, int u) { return HermitianCode(GaloisField::make(q), u); }

    const HermitianRing& ring() const { return ring_; }
    const GaloisField& field() const { return ring_.field(); }
    int q() const { return ring_.q(); }
    int u() const { return u_; }
    int n() const { return n_; }
    int k() const { return static_cast<int>(basis_.size()); }
    int genus() const { return genus_; }
    const std::vector<Point>& points() const { return points_; }
    // x^r y^j of L(u P_inf) sorted by increasing pole order (Monomial::i unused).
    const std::vector<Monomial>& basis() const { return basis_; }

    // mu = sum_i w_i basis_i
    RingElem message_function(const Vec& message) const {
        if (static_cast<int>(message.size()) != k()) {
            throw ParameterError("message has length " + std::to_string(message.size()) + ", expected k=" +
                                 std::to_string(k()));
        }
        RingElem mu = ring_.zero();
        for (std::size_t t = 0; t < basis_.size(); ++t) {
            if (message[t].is_zero()) continue;
            mu = ring_.add(mu, ring_.monomial(message[t], basis_[t].r, basis_[t].j));
        }
        return mu;
    }

    Vec evaluate_all(const RingElem& a) const {
        Vec out;
        out.reserve(points_.size());
        for (const Point& p : points_) out.push_back(ring_.evaluate(a, p.x, p.y));
        return out;
    }

    Elem evaluate(const RingElem& a, const Point& p) const { return ring_.evaluate(a, p.x, p.y); }

    struct Encoded {
        Vec codeword;
        RingElem mu;
    };

    Encoded encode(const Vec& message) const {
        RingElem mu = message_function(message);
        Vec c = evaluate_all(mu);
        return Encoded{std::move(c), std::move(mu)};
    }

    // Evaluations of the basis functions at one point, the row of the generator matrix transposed.
    Vec basis_row(const Point& p) const {
        const GaloisField& f = field();
        Vec row;
        row.reserve(basis_.size());
        for (const Monomial& m : basis_) row.push_back(f.mul(f.pow(p.x, m.r), f.pow(p.y, m.j)));
        return row;
    }

    // h_i = -prod_{a != alpha_i} (x - a) * prod_{b != beta_i, b^q + b = alpha_i^{q+1}} (y - b),
    // with i counted from 1.
    RingElem h(int i) const {
        if (i < 1 || i > n_) throw ParameterError("point index " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
        const GaloisField& f = field();
        const PolyOps ops = ring_.px();
        const Point& p = points_[static_cast<std::size_t>(i - 1)];
        XPoly xs = XPoly::constant(f.neg(f.one()));
        for (Elem a : f.elements()) {
            if (a == p.x) continue;
            xs = ops.mul(xs, XPoly(std::vector<Elem>{f.neg(a), f.one()}));
        }
        RingElem ys = ring_.one();
        const Elem level = f.pow(p.x, q() + 1);
        for (Elem b : f.elements()) {
            if (b == p.y || f.add(f.pow(b, q()), b) != level) continue;
            ys = ring_.mul(ys, ring_.sub(ring_.y(), ring_.constant(b)));
        }
        return ring_.mul_x(ys, xs);
    }

    RingElem h_v(const Vec& v) const {
        check_length(v);
        RingElem acc = ring_.zero();
        for (int i = 1; i <= n_; ++i) {
            const Elem vi = v[static_cast<std::size_t>(i - 1)];
            if (vi.is_zero()) continue;
            acc = ring_.add(acc, ring_.scale(h(i), vi));
        }
        return acc;
    }

    // x^{q^2} - x
    XPoly eta_poly() const {
        const GaloisField& f = field();
        std::vector<Elem> c(static_cast<std::size_t>(q() * q()) + 1);
        c[1] = f.neg(f.one());
        c.back() = f.one();
        return XPoly(std::move(c));
    }
    RingElem eta() const { return ring_.from_x(eta_poly()); }

    void check_length(const Vec& v) const {
        if (static_cast<int>(v.size()) != n_) {
            throw ParameterError("vector has length " + std::to_string(v.size()) + ", expected n=" + std::to_string(n_));
        }
    }

private:
    HermitianRing ring_;
    int u_;
    int n_ = 0;
    int genus_ = 0;
    std::vector<Point> points_;
    std::vector<Monomial> basis_;
};

}  // namespace hermes
