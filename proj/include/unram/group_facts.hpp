#ifndef UNRAM_GROUP_FACTS_HPP
#define UNRAM_GROUP_FACTS_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "unram/abelian.hpp"

namespace unram {

/// Alt(n) or PSL(n, q); the two families the tables cover.
struct simple_group_label {
    enum class family_t { alt, psl } family;
    int n = 0;
    Int q = 0;  // prime power, psl only

    static simple_group_label alt(int n) { return {family_t::alt, n, 0}; }
    static simple_group_label psl(int n, Int q) { return {family_t::psl, n, std::move(q)}; }

    std::string to_string() const {
        if (family == family_t::alt) return "A" + std::to_string(n);
        return "PSL(" + std::to_string(n) + "," + q.str() + ")";
    }
};

namespace detail {

inline bool is_prime_power(const Int& q, Int* p_out = nullptr) {
    if (q < 2) return false;
    auto f = factorize(q);
    if (f.size() != 1) return false;
    if (p_out) *p_out = f.begin()->first;
    return true;
}

}  // namespace detail

/// Schur multipliers by table: H_2(A_n) is C_2 for n = 5 or n > 7 and C_6
/// for n in {6, 7}; H_2(PSL_n(q)) is cyclic of order gcd(n, q-1) apart from
/// the five classical exceptions.
inline abelian_invariants schur_multiplier(const simple_group_label& g) {
    if (g.family == simple_group_label::family_t::alt) {
        if (g.n < 5) throw out_of_table("A_n needs n >= 5");
        if (g.n == 6 || g.n == 7) return {Int(6)};
        return {Int(2)};
    }
    if (g.n < 2) throw out_of_table("PSL_n needs n >= 2");
    if (!detail::is_prime_power(g.q)) throw out_of_table("q must be a prime power");
    if (g.n == 2 && g.q == 4) return {Int(2)};
    if (g.n == 2 && g.q == 9) return {Int(6)};
    if (g.n == 3 && g.q == 2) return {Int(2)};
    if (g.n == 3 && g.q == 4) return {Int(4), Int(12)};  // C3 x C4 x C4, order 48
    if (g.n == 4 && g.q == 2) return {Int(2)};
    Int d = gcd(Int(g.n), g.q - 1);
    if (d == 1) return {};
    return {d};
}

/// |GL_n(F_q)| = q^{n(n-1)/2} * prod_{i=1}^{n} (q^i - 1)
inline Int gl_order(int n, const Int& q) {
    if (n < 1) throw error("gl_order needs n >= 1");
    Int r = int_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) r *= int_pow(q, static_cast<unsigned long>(i)) - 1;
    return r;
}

inline bool is_primitive_prime_divisor(const Int& p, const Int& q, int n) {
    if (!is_probable_prime(p)) return false;
    if ((int_pow(q, static_cast<unsigned long>(n)) - 1) % p != 0) return false;
    for (int k = 1; k < n; ++k)
        if ((int_pow(q, static_cast<unsigned long>(k)) - 1) % p == 0) return false;
    return true;
}

/// Minimal n with C_m embedding into GL_n(F_q), gcd(m, q) = 1.  A faithful
/// semisimple representation needs, for each maximal prime power p^k || m, a
/// constituent whose character has full p-part; a constituent of character
/// order d costs ord_d(q) = lcm of the prime-power orders it covers.
/// Minimizing over the ways to bundle prime powers into constituents gives
/// the exact minimum (for prime-power m this is just the multiplicative
/// order, the Maschke bound the source arguments use).
inline int min_gl_dim_for_cyclic(const Int& m, const Int& q) {
    if (m < 2) throw error("min_gl_dim_for_cyclic needs m >= 2");
    if (gcd(m, q) != 1) throw not_coprime();
    std::vector<Int> ords;  // ord_{p^k}(q) per maximal prime power
    for (const auto& [p, e] : factorize(m)) ords.push_back(multiplicative_order(q, int_pow(p, e)));
    const std::size_t r = ords.size();
    // minimize sum over blocks of lcm(block) across set partitions
    long best = -1;
    std::vector<std::vector<std::size_t>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == r) {
            Int total = 0;
            for (const auto& blk : blocks) {
                Int l = 1;
                for (std::size_t idx : blk) l = lcm(l, ords[idx]);
                total += l;
            }
            long t = total.convert_to<long>();
            if (best < 0 || t < best) best = t;
            return;
        }
        for (auto& blk : blocks) {
            blk.push_back(i);
            rec(i + 1);
            blk.pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    return static_cast<int>(best);
}

/// f = multiplicative order of p mod n.  The attached rule: in the p-rank
/// theorem setting every r_a and n_a is a multiple of f, so a nontrivial
/// p-class group has rank at least f.
inline int p_rank_constraint(const Int& n, const Int& p) {
    if (!is_probable_prime(p)) throw not_prime(p.str());
    if (n < 2) throw error("p_rank_constraint needs n >= 2");
    if (n % p == 0) throw not_coprime();
    return multiplicative_order(p, n).convert_to<int>();
}

enum class taussky_conclusion { trivial_next, cyclic_next, no_info };

inline std::string to_string(taussky_conclusion c) {
    switch (c) {
        case taussky_conclusion::trivial_next: return "TrivialNext";
        case taussky_conclusion::cyclic_next: return "CyclicNext";
        case taussky_conclusion::no_info: return "NoInfo";
    }
    return "?";
}

/// Taussky: cyclic p-class group forces a trivial p-class group one level up
/// the p-class field tower; V_4 at p = 2 forces a cyclic one.
inline taussky_conclusion taussky_rule(const Int& p, const abelian_invariants& p_class_group) {
    for (const auto& d : p_class_group) {
        Int t = d;
        while (t % p == 0) t /= p;
        if (t != 1) throw error("invariants are not p-power divisors");
    }
    if (p_class_group.size() <= 1) return taussky_conclusion::trivial_next;
    if (p == 2 && p_class_group.size() == 2 && p_class_group[0] == 2 && p_class_group[1] == 2)
        return taussky_conclusion::cyclic_next;
    return taussky_conclusion::no_info;
}

}  // namespace unram

#endif
