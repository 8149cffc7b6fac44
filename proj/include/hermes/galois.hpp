#pragma once

// Arithmetic in GF(q^2) for small prime powers q, by discrete logarithms.
//
// Nonzero elements are stored as their log to a fixed primitive element
// alpha; zero carries its own tag.  Multiplication is log addition, and
// addition goes through a Zech logarithm table, log(1 + alpha^k).
//
// The field is built as GF(p)[X]/(f) with deg f = 2e (q = p^e), where f is
// the first monic primitive polynomial in the enumeration order of
// `GaloisField::make`.  For q = 2 this is X^2 + X + 1, so alpha^2 = alpha + 1.

#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hermes/errors.hpp"

namespace hermes {

class Elem {
public:
    constexpr Elem() = default;

    static constexpr Elem zero() { return Elem{}; }
    static constexpr Elem from_log(int e) {
        Elem r;
        r.log_ = static_cast<std::int16_t>(e);
        return r;
    }

    constexpr bool is_zero() const { return log_ < 0; }
    constexpr int log() const { return log_; }

    // Canonical order: 0, alpha^0, alpha^1, ...
    constexpr auto operator<=>(const Elem&) const = default;

private:
    std::int16_t log_ = -1;
};

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

class GaloisField {
public:
    static constexpr int kMaxQ = 16;

    static FieldPtr make(int q) {
        int p = 0;
        int e = 0;
        if (!prime_power(q, p, e) || q > kMaxQ) {
            throw ParameterError("unsupported field size q=" + std::to_string(q) +
                                 " (need a prime power q <= " + std::to_string(kMaxQ) + ")");
        }
        return std::shared_ptr<const GaloisField>(new GaloisField(q, p, 2 * e));
    }

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int order() const { return order_; }
    int group_order() const { return order_ - 1; }
    // Coefficients of the defining polynomial over GF(p), lowest degree first (monic).
    const std::vector<int>& modulus() const { return modulus_; }

    Elem zero() const { return Elem::zero(); }
    Elem one() const { return Elem::from_log(0); }
    Elem alpha() const { return Elem::from_log(1 % group_order()); }

    Elem add(Elem a, Elem b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int k = mod_group(b.log() - a.log());
        const int z = zech_[static_cast<std::size_t>(k)];
        if (z < 0) return Elem::zero();
        return Elem::from_log(mod_group(a.log() + z));
    }

    Elem neg(Elem a) const {
        if (a.is_zero() || p_ == 2) return a;
        return Elem::from_log(mod_group(a.log() + group_order() / 2));
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a.is_zero() || b.is_zero()) return Elem::zero();
        return Elem::from_log(mod_group(a.log() + b.log()));
    }

    Elem inv(Elem a) const {
        if (a.is_zero()) throw DomainError("inverse of zero");
        return Elem::from_log(mod_group(-a.log()));
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, long long k) const {
        if (k == 0) return one();
        if (a.is_zero()) {
            if (k < 0) throw DomainError("negative power of zero");
            return a;
        }
        const long long n = group_order();
        long long r = (static_cast<long long>(a.log()) * (k % n)) % n;
        if (r < 0) r += n;
        return Elem::from_log(static_cast<int>(r));
    }

    // Image of the integer k under Z -> GF(p) -> F.
    Elem from_int(long long k) const {
        long long r = k % p_;
        if (r < 0) r += p_;
        return from_vector(static_cast<int>(r));
    }

    // All elements in canonical order.
    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(static_cast<std::size_t>(order_));
        out.push_back(Elem::zero());
        for (int e = 0; e < group_order(); ++e) out.push_back(Elem::from_log(e));
        return out;
    }

    // Position in canonical order, in [0, q^2).
    int index_of(Elem a) const { return a.log() + 1; }
    Elem element_at(int index) const {
        if (index < 0 || index >= order_) throw ParameterError("element index out of range");
        return index == 0 ? Elem::zero() : Elem::from_log(index - 1);
    }

    // Polynomial-basis coordinates packed base p (coefficient of X^t is digit t).
    int to_vector(Elem a) const { return a.is_zero() ? 0 : exp_[static_cast<std::size_t>(a.log())]; }
    Elem from_vector(int v) const {
        if (v < 0 || v >= order_) throw ParameterError("vector code out of range");
        const int l = log_[static_cast<std::size_t>(v)];
        return l < 0 ? Elem::zero() : Elem::from_log(l);
    }

    std::string token(Elem a) const {
        if (a.is_zero()) return "0";
        if (a.log() == 0) return "1";
        return "a^" + std::to_string(a.log());
    }

    Elem parse(std::string_view text) const {
        const auto first = text.find_first_not_of(" \t");
        const auto last = text.find_last_not_of(" \t");
        if (first == std::string_view::npos) throw ParameterError("empty field element token");
        const std::string_view s = text.substr(first, last - first + 1);
        if (s == "0") return Elem::zero();
        if (s == "1") return one();
        if (s == "a") return alpha();
        if (s.size() > 2 && s[0] == 'a' && s[1] == '^') {
            long long e = 0;
            const auto* b = s.data() + 2;
            const auto* end = s.data() + s.size();
            auto [ptr, ec] = std::from_chars(b, end, e);
            if (ec == std::errc{} && ptr == end && e >= 0) {
                return Elem::from_log(static_cast<int>(e % group_order()));
            }
        }
        throw ParameterError("malformed field element token '" + std::string(s) + "'");
    }

private:
    GaloisField(int q, int p, int degree) : q_(q), p_(p), degree_(degree) {
        order_ = 1;
        for (int t = 0; t < degree_; ++t) order_ *= p_;
        if (!find_primitive_modulus()) {
            throw InternalError("no primitive polynomial found for q=" + std::to_string(q));
        }
        zech_.assign(static_cast<std::size_t>(group_order()), -1);
        const int one_vec = 1;
        for (int k = 0; k < group_order(); ++k) {
            const int s = vec_add(exp_[static_cast<std::size_t>(k)], one_vec);
            zech_[static_cast<std::size_t>(k)] = log_[static_cast<std::size_t>(s)];
        }
    }

    static bool prime_power(int q, int& p, int& e) {
        if (q < 2) return false;
        p = 0;
        for (int d = 2; d <= q; ++d) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        e = 0;
        int r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        return r == 1;
    }

    int mod_group(int k) const {
        const int n = group_order();
        k %= n;
        return k < 0 ? k + n : k;
    }

    using Digits = std::array<int, 8>;

    Digits unpack(int v) const {
        Digits d{};
        for (int t = 0; t < degree_; ++t) {
            d[static_cast<std::size_t>(t)] = v % p_;
            v /= p_;
        }
        return d;
    }

    int pack(const Digits& d) const {
        int v = 0;
        for (int t = degree_ - 1; t >= 0; --t) v = v * p_ + d[static_cast<std::size_t>(t)];
        return v;
    }

    int vec_add(int a, int b) const {
        Digits da = unpack(a);
        const Digits db = unpack(b);
        for (int t = 0; t < degree_; ++t) {
            auto& x = da[static_cast<std::size_t>(t)];
            x = (x + db[static_cast<std::size_t>(t)]) % p_;
        }
        return pack(da);
    }

    // v * X mod f, where `low` holds the non-leading coefficients of monic f.
    int times_x(int v, const Digits& low) const {
        const Digits d = unpack(v);
        const int top = d[static_cast<std::size_t>(degree_ - 1)];
        Digits r{};
        for (int t = degree_ - 1; t > 0; --t) r[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(t - 1)];
        for (int t = 0; t < degree_; ++t) {
            auto& x = r[static_cast<std::size_t>(t)];
            x = ((x - top * low[static_cast<std::size_t>(t)]) % p_ + p_) % p_;
        }
        return pack(r);
    }

    // Candidates are visited with their low coefficients read as a base-p
    // integer counting up from 1; the first whose root X has order p^k - 1 wins.
    bool find_primitive_modulus() {
        const int n = order_ - 1;
        for (int c = 1; c < order_; ++c) {
            const Digits low = unpack(c);
            if (low[0] == 0) continue;
            std::vector<int> exp(static_cast<std::size_t>(n));
            std::vector<int> log(static_cast<std::size_t>(order_), -1);
            int v = 1;
            bool ok = true;
            for (int k = 0; k < n; ++k) {
                if (log[static_cast<std::size_t>(v)] >= 0) {
                    ok = false;
                    break;
                }
                exp[static_cast<std::size_t>(k)] = v;
                log[static_cast<std::size_t>(v)] = k;
                v = times_x(v, low);
            }
            if (!ok || v != 1) continue;
            exp_ = std::move(exp);
            log_ = std::move(log);
            modulus_.assign(low.begin(), low.begin() + degree_);
            modulus_.push_back(1);
            return true;
        }
        return false;
    }

    int q_;
    int p_;
    int degree_;
    int order_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_;   // log -> vector code
    std::vector<int> log_;   // vector code -> log, -1 for zero
    std::vector<int> zech_;  // k -> log(1 + alpha^k), -1 when the sum vanishes
};

}  // namespace hermes
