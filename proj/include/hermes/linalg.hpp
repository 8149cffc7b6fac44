#pragma once

// Dense Gaussian elimination over GF(q^2).

#include <optional>
#include <utility>
#include <vector>

#include "hermes/galois.hpp"

namespace hermes {

using Matrix = std::vector<std::vector<Elem>>;

// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> invert(const GaloisField& f, Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Elem s = f.inv(a[col][col]);
        for (std::size_t k = 0; k < n; ++k) {
            a[col][k] = f.mul(a[col][k], s);
            inv[col][k] = f.mul(inv[col][k], s);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const Elem c = a[row][col];
            for (std::size_t k = 0; k < n; ++k) {
                a[row][k] = f.sub(a[row][k], f.mul(c, a[col][k]));
                inv[row][k] = f.sub(inv[row][k], f.mul(c, inv[col][k]));
            }
        }
    }
    return inv;
}

inline std::vector<Elem> mat_vec(const GaloisField& f, const Matrix& a, const std::vector<Elem>& x) {
    std::vector<Elem> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Elem acc = Elem::zero();
        for (std::size_t k = 0; k < x.size(); ++k) acc = f.add(acc, f.mul(a[i][k], x[k]));
        out[i] = acc;
    }
    return out;
}

// Incrementally built row echelon form; rows are reduced against the
// stored pivots as they arrive.
class EchelonBasis {
public:
    EchelonBasis(const GaloisField& f, std::size_t width) : f_(&f), width_(width) {}

    std::size_t rank() const { return rows_.size(); }

    // Remainder of v after elimination against the stored rows.
    std::vector<Elem> reduce(std::vector<Elem> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero()) continue;
            const Elem c = v[p];
            for (std::size_t k = p; k < width_; ++k) {
                if (!rows_[r][k].is_zero()) v[k] = f_->sub(v[k], f_->mul(c, rows_[r][k]));
            }
        }
        return v;
    }

    bool in_span(const std::vector<Elem>& v) const {
        const auto rem = reduce(v);
        for (Elem e : rem) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    // Adds v if independent of the stored rows; returns whether it was added.
    bool insert(std::vector<Elem> v) {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < width_ && v[p].is_zero()) ++p;
        if (p == width_) return false;
        const Elem s = f_->inv(v[p]);
        for (std::size_t k = p; k < width_; ++k) v[k] = f_->mul(v[k], s);
        // Keep earlier rows reduced at the new pivot so reduce() stays single-pass.
        for (auto& row : rows_) {
            if (row[p].is_zero()) continue;
            const Elem c = row[p];
            for (std::size_t k = p; k < width_; ++k) row[k] = f_->sub(row[k], f_->mul(c, v[k]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    const GaloisField* f_;
    std::size_t width_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hermes
