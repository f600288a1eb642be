#ifndef UNRAM_PERM_HPP
#define UNRAM_PERM_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "unram/fields.hpp"

namespace unram {

/// permutation on {0, ..., k-1} as its image list
using permutation = std::vector<int>;

inline permutation perm_identity(int k) {
    permutation p(k);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline permutation perm_mul(const permutation& a, const permutation& b) {
    // (a*b)(x) = a(b(x))
    permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline permutation perm_from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
    permutation p = perm_identity(k);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

inline std::vector<int> cycle_type(const permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

inline long perm_order(const permutation& p) {
    long l = 1;
    for (int c : cycle_type(p)) l = std::lcm(l, static_cast<long>(c));
    return l;
}

inline bool cycle_type_is_even(const std::vector<int>& parts) {
    int even_parts = 0;
    for (int v : parts)
        if (v % 2 == 0) ++even_parts;
    return even_parts % 2 == 0;
}

/// all partitions of n, each sorted descending
inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxp) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxp); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

enum class perm_group_kind { alternating, symmetric };

/// Set of element orders of A_n or S_n: lcm over partitions of n, with the
/// parity filter for A_n.  Partition enumeration keeps n <= 20 instant.
inline std::set<long> perm_order_spectrum(perm_group_kind kind, int n) {
    if (n < 1 || n > 20) throw error("perm_order_spectrum supports 1 <= n <= 20");
    std::set<long> orders;
    for (const auto& part : partitions(n)) {
        if (kind == perm_group_kind::alternating && !cycle_type_is_even(part)) continue;
        long l = 1;
        for (int v : part) l = std::lcm(l, static_cast<long>(v));
        orders.insert(l);
    }
    return orders;
}

/// Does the S_n-class with this cycle type split into two A_n-classes?
/// Standard criterion: all parts odd and pairwise distinct.
inline bool an_class_splits(std::vector<int> parts, int n) {
    int sum = 0;
    for (int v : parts) sum += v;
    if (sum != n) throw error("cycle type is not a partition of n");
    if (!cycle_type_is_even(parts)) throw odd_permutation();
    std::sort(parts.begin(), parts.end());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 == 0) return false;
        if (i > 0 && parts[i] == parts[i - 1]) return false;
    }
    return true;
}

/// closure of a permutation group from generators
inline std::vector<permutation> perm_group_elements(const std::vector<permutation>& gens,
                                                    std::size_t cap = 1000000) {
    auto key = [](const permutation& p) {
        std::string s;
        s.reserve(p.size());
        for (int v : p) s.push_back(static_cast<char>(v));
        return s;
    };
    permutation id = perm_identity(static_cast<int>(gens.front().size()));
    std::unordered_set<std::string> seen{key(id)};
    std::vector<permutation> elements{id};
    std::vector<permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<permutation> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                permutation p = perm_mul(e, g);
                if (seen.insert(key(p)).second) {
                    if (elements.size() + 1 > cap) throw cap_exceeded(cap);
                    elements.push_back(p);
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }
    return elements;
}

/// The fixed internal library of comparison groups, as permutation models.
enum class model_group { a5, s5, a5_x_c2, psl_2_8 };

inline std::vector<permutation> model_generators(model_group g) {
    switch (g) {
        case model_group::a5:
            return {perm_from_cycles(5, {{0, 1, 2}}), perm_from_cycles(5, {{0, 1, 2, 3, 4}})};
        case model_group::s5:
            return {perm_from_cycles(5, {{0, 1}}), perm_from_cycles(5, {{0, 1, 2, 3, 4}})};
        case model_group::a5_x_c2:
            return {perm_from_cycles(7, {{0, 1, 2}}), perm_from_cycles(7, {{0, 1, 2, 3, 4}}),
                    perm_from_cycles(7, {{5, 6}})};
        case model_group::psl_2_8: {
            // action on the projective line over F_8: points 0..7 are field
            // elements, 8 is infinity; generated by z+1, z*t, 1/z
            small_gf f8(2, 3, {1, 1, 0});  // x^3 + x + 1
            const int inf = 8;
            permutation add1(9), mult(9), invz(9);
            for (int z = 0; z < 8; ++z) {
                add1[z] = static_cast<int>(f8.add(z, 1));
                mult[z] = static_cast<int>(f8.mul(z, 2));
                invz[z] = z == 0 ? inf : static_cast<int>(f8.inv(z));
            }
            add1[inf] = inf;
            mult[inf] = inf;
            invz[inf] = 0;
            return {add1, mult, invz};
        }
    }
    throw error("unknown model group");
}

}  // namespace unram

#endif
