#ifndef UNRAM_POLY_HPP
#define UNRAM_POLY_HPP

#include <vector>

#include "unram/errors.hpp"

namespace unram {

/// Dense univariate polynomial arithmetic over a field policy K.  The policy
/// supplies the element type and field operations (fp_context for F_p with
/// big integers, small_gf for machine-word F_q).  Coefficient vectors are
/// stored constant term first and kept normalized: no leading zeros, the
/// zero polynomial is the empty vector.
template <class K>
struct poly_ops {
    using elem = typename K::elem;
    using fvec = std::vector<elem>;

    const K& F;

    explicit poly_ops(const K& field) : F(field) {}

    void normalize(fvec& a) const {
        while (!a.empty() && F.is_zero(a.back())) a.pop_back();
    }
    static int deg(const fvec& a) { return static_cast<int>(a.size()) - 1; }
    bool is_zero(const fvec& a) const { return a.empty(); }
    fvec zero() const { return {}; }
    fvec one() const { return {F.one()}; }
    fvec x() const { return {F.zero(), F.one()}; }
    fvec constant(const elem& c) const {
        fvec r{c};
        normalize(r);
        return r;
    }

    bool equal(const fvec& a, const fvec& b) const {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!F.is_zero(F.sub(a[i], b[i]))) return false;
        return true;
    }

    fvec add(const fvec& a, const fvec& b) const {
        fvec r(std::max(a.size(), b.size()), F.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.size()) r[i] = F.add(r[i], a[i]);
            if (i < b.size()) r[i] = F.add(r[i], b[i]);
        }
        normalize(r);
        return r;
    }

    fvec sub(const fvec& a, const fvec& b) const {
        fvec r(std::max(a.size(), b.size()), F.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.size()) r[i] = F.add(r[i], a[i]);
            if (i < b.size()) r[i] = F.sub(r[i], b[i]);
        }
        normalize(r);
        return r;
    }

    fvec mul(const fvec& a, const fvec& b) const {
        if (a.empty() || b.empty()) return {};
        fvec r(a.size() + b.size() - 1, F.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (F.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
        normalize(r);
        return r;
    }

    fvec scal(const fvec& a, const elem& c) const {
        fvec r = a;
        for (auto& v : r) v = F.mul(v, c);
        normalize(r);
        return r;
    }

    /// quotient and remainder; b must be nonzero
    void divrem(const fvec& a, const fvec& b, fvec& q, fvec& r) const {
        if (b.empty()) throw error("polynomial division by zero");
        r = a;
        q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, F.zero());
        elem lcinv = F.inv(b.back());
        while (r.size() >= b.size()) {
            elem c = F.mul(r.back(), lcinv);
            std::size_t shift = r.size() - b.size();
            if (!F.is_zero(c)) {
                q[shift] = c;
                for (std::size_t i = 0; i < b.size(); ++i)
                    r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
            }
            // leading coefficient is now exactly zero
            r.pop_back();
            while (!r.empty() && F.is_zero(r.back())) r.pop_back();
            if (r.size() < b.size()) break;
        }
        normalize(q);
    }

    fvec rem(const fvec& a, const fvec& b) const {
        fvec q, r;
        divrem(a, b, q, r);
        return r;
    }

    fvec make_monic(const fvec& a) const {
        if (a.empty()) return a;
        return scal(a, F.inv(a.back()));
    }

    /// monic gcd
    fvec gcd(fvec a, fvec b) const {
        while (!b.empty()) {
            fvec r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return make_monic(a);
    }

    fvec derivative(const fvec& a) const {
        if (a.size() <= 1) return {};
        fvec r(a.size() - 1);
        elem k = F.zero();
        for (std::size_t i = 1; i < a.size(); ++i) {
            k = F.add(k, F.one());
            r[i - 1] = F.mul(a[i], k);
        }
        normalize(r);
        return r;
    }

    elem eval(const fvec& a, const elem& x0) const {
        elem r = F.zero();
        for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x0), a[i]);
        return r;
    }

    /// base^e mod m, binary exponentiation
    fvec powmod(const fvec& base, Int e, const fvec& m) const {
        fvec r = one();
        fvec b = rem(base, m);
        while (e > 0) {
            if ((e & 1) != 0) r = rem(mul(r, b), m);
            e >>= 1;
            if (e > 0) b = rem(mul(b, b), m);
        }
        return r;
    }

    /// composition a(g) mod m
    fvec compose_mod(const fvec& a, const fvec& g, const fvec& m) const {
        fvec r = zero();
        for (std::size_t i = a.size(); i-- > 0;) {
            r = rem(mul(r, g), m);
            r = add(r, constant(a[i]));
        }
        return r;
    }

    /// canonical total order: degree, then the coefficient vector constant
    /// term first with elements compared as canonical representatives
    bool less(const fvec& a, const fvec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (F.less(a[i], b[i])) return true;
            if (F.less(b[i], a[i])) return false;
        }
        return false;
    }
};

}  // namespace unram

#endif
