#ifndef UNRAM_POLY_FACTOR_HPP
#define UNRAM_POLY_FACTOR_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "unram/poly.hpp"

namespace unram {

/// Default seed for the equal-degree splitting randomness.  It is recorded in
/// every factorization result so runs are reproducible bit for bit.
inline constexpr std::uint64_t default_factor_seed = 0x5eedf0f1u;

/// Full factorization machinery over any field policy: squarefree
/// decomposition (characteristic-aware), distinct-degree splitting, then
/// Cantor-Zassenhaus equal-degree splitting (quadratic-residue flavour for
/// odd q, trace-map flavour in characteristic 2).
template <class K>
struct poly_factorizer {
    using ops_t = poly_ops<K>;
    using fvec = typename ops_t::fvec;
    using elem = typename K::elem;

    ops_t P;
    std::mt19937_64 rng;

    explicit poly_factorizer(const K& field, std::uint64_t seed = default_factor_seed)
        : P(field), rng(seed) {}

    /// (factor, multiplicity) pairs, monic squarefree factors; input monic.
    std::vector<std::pair<fvec, int>> squarefree_decomposition(fvec f) const {
        std::vector<std::pair<fvec, int>> out;
        squarefree_rec(std::move(f), 1, out);
        return out;
    }

    /// distinct-degree: (product of irreducible factors of degree d, d);
    /// input monic squarefree.
    std::vector<std::pair<fvec, int>> distinct_degree(const fvec& f) const {
        std::vector<std::pair<fvec, int>> out;
        fvec h = P.x();  // x^{q^i} mod f, running
        fvec rest = f;
        int d = 0;
        Int q = P.F.field_order();
        while (ops_t::deg(rest) > 0) {
            ++d;
            if (2 * d > ops_t::deg(rest)) {
                out.emplace_back(rest, ops_t::deg(rest));
                break;
            }
            h = P.powmod(h, q, rest);
            fvec g = P.gcd(P.sub(h, P.x()), rest);
            if (ops_t::deg(g) > 0) {
                out.emplace_back(g, d);
                fvec qq, rr;
                P.divrem(rest, g, qq, rr);
                rest = qq;
                h = P.rem(h, rest);
            }
        }
        return out;
    }

    /// split a product of distinct irreducible factors, all of degree d
    std::vector<fvec> equal_degree(const fvec& f, int d) {
        std::vector<fvec> out;
        equal_degree_rec(f, d, out);
        std::sort(out.begin(), out.end(), [&](const fvec& a, const fvec& b) { return P.less(a, b); });
        return out;
    }

    /// unit * product of monic irreducible factors^multiplicity, factors in
    /// canonical order (degree, then coefficient list constant-first)
    struct factorization {
        elem unit;
        std::vector<std::pair<fvec, int>> factors;
    };

    factorization factor(fvec f) {
        if (P.is_zero(f)) throw zero_polynomial();
        factorization out;
        out.unit = f.back();
        f = P.make_monic(f);
        if (ops_t::deg(f) == 0) return out;
        for (auto& [sqf, mult] : squarefree_decomposition(f)) {
            for (auto& [prod, d] : distinct_degree(sqf)) {
                for (auto& irr : equal_degree(prod, d)) out.factors.emplace_back(irr, mult);
            }
        }
        std::sort(out.factors.begin(), out.factors.end(),
                  [&](const auto& a, const auto& b) { return P.less(a.first, b.first); });
        return out;
    }

    bool is_irreducible(const fvec& f0) {
        fvec f = P.make_monic(f0);
        int n = ops_t::deg(f);
        if (n <= 0) return false;
        if (n == 1) return true;
        Int q = P.F.field_order();
        // x^{q^n} = x mod f, and gcd(x^{q^{n/l}} - x, f) = 1 for prime l | n
        fvec xq = P.powmod(P.x(), q, f);
        std::vector<fvec> frob{xq};  // frob[i] = x^{q^{2^i}}... built by composition
        // iterate x -> x^q by modular composition n times is fine at our sizes
        fvec h = P.x();
        std::vector<fvec> powers(n + 1);
        for (int i = 1; i <= n; ++i) {
            h = P.compose_mod(h, xq, f);
            powers[i] = h;
        }
        if (!P.equal(powers[n], P.x())) return false;
        int m = n;
        for (int l = 2; l * l <= m; ++l) {
            if (m % l) continue;
            if (ops_t::deg(P.gcd(P.sub(powers[n / l], P.x()), f)) > 0) return false;
            while (m % l == 0) m /= l;
        }
        if (m > 1 && ops_t::deg(P.gcd(P.sub(powers[n / m], P.x()), f)) > 0) return false;
        return true;
    }

  private:
    void squarefree_rec(fvec f, int mult, std::vector<std::pair<fvec, int>>& out) const {
        fvec fp = P.derivative(f);
        if (P.is_zero(fp)) {
            // f = g(x^p): take p-th roots of the surviving coefficients
            pth_root_descend(std::move(f), mult, out);
            return;
        }
        fvec c = P.gcd(f, fp);
        fvec w;  // squarefree part
        {
            fvec q, r;
            P.divrem(f, c, q, r);
            w = q;
        }
        int i = 1;
        while (ops_t::deg(w) > 0) {
            fvec y = P.gcd(w, c);
            fvec fac;
            {
                fvec q, r;
                P.divrem(w, y, q, r);
                fac = q;
            }
            if (ops_t::deg(fac) > 0) out.emplace_back(fac, mult * i);
            w = y;
            {
                fvec q, r;
                P.divrem(c, y, q, r);
                c = q;
            }
            ++i;
        }
        if (ops_t::deg(c) > 0) pth_root_descend(std::move(c), mult, out);
    }

    void pth_root_descend(fvec f, int mult, std::vector<std::pair<fvec, int>>& out) const {
        if (ops_t::deg(f) == 0) return;
        Int p = P.F.characteristic();
        std::size_t step = static_cast<std::size_t>(p);
        fvec g((f.size() - 1) / step + 1, P.F.zero());
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i % step == 0)
                g[i / step] = P.F.pth_root(f[i]);
            else if (!P.F.is_zero(f[i]))
                throw error("squarefree decomposition: derivative zero but f not a p-th power");
        }
        squarefree_rec(std::move(g), mult * static_cast<int>(p), out);
    }

    fvec random_poly(int max_deg) {
        fvec r(max_deg + 1);
        for (auto& c : r) c = P.F.rand(rng);
        P.normalize(r);
        return r;
    }

    void equal_degree_rec(const fvec& f, int d, std::vector<fvec>& out) {
        int n = ops_t::deg(f);
        if (n == d) {
            out.push_back(P.make_monic(f));
            return;
        }
        Int q = P.F.field_order();
        fvec g;
        while (true) {
            fvec r = random_poly(n - 1);
            if (ops_t::deg(r) < 1) continue;
            g = P.gcd(r, f);
            if (ops_t::deg(g) > 0 && ops_t::deg(g) < n) break;
            fvec s;
            if (P.F.characteristic() != 2) {
                // r^{(q^d-1)/2} is ±1 on roughly half the factors
                Int e = (int_pow(q, static_cast<unsigned long>(d)) - 1) / 2;
                s = P.powmod(r, e, f);
                s = P.sub(s, P.one());
            } else {
                // trace map over F_2: sum of r^{2^i}, i < d * log2(q)
                unsigned long bits = 0;
                Int qq = q;
                while (qq > 1) {
                    qq >>= 1;
                    ++bits;
                }
                fvec t = P.rem(r, f);
                s = t;
                for (unsigned long i = 1; i < bits * static_cast<unsigned long>(d); ++i) {
                    t = P.rem(P.mul(t, t), f);
                    s = P.add(s, t);
                }
            }
            g = P.gcd(s, f);
            if (ops_t::deg(g) > 0 && ops_t::deg(g) < n) break;
        }
        fvec h, rr;
        P.divrem(f, g, h, rr);
        equal_degree_rec(g, d, out);
        equal_degree_rec(h, d, out);
    }
};

}  // namespace unram

#endif
