#ifndef UNRAM_ABELIAN_HPP
#define UNRAM_ABELIAN_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "unram/integers.hpp"

namespace unram {

/// Invariant-factor list d_1 | d_2 | ... | d_k (ascending); empty = trivial
/// group.  This is the shape class groups and Schur multipliers are reported
/// in throughout.
using abelian_invariants = std::vector<Int>;

inline bool is_divisor_chain(const abelian_invariants& inv) {
    for (std::size_t i = 0; i + 1 < inv.size(); ++i)
        if (inv[i + 1] % inv[i] != 0) return false;
    return inv.empty() || inv.front() >= 2;
}

inline Int invariants_order(const abelian_invariants& inv) {
    Int n = 1;
    for (const auto& d : inv) n *= d;
    return n;
}

/// Reconstruct a finite abelian group from the multiset of its element
/// orders.  The multiset determines the group: for each prime p the counts
/// #{x : x^{p^k} = 1} = p^{sum_i min(k, a_i)} recover the partition (a_i) of
/// the p-Sylow subgroup.
inline abelian_invariants invariants_from_element_orders(const std::vector<Int>& orders) {
    const Int n = static_cast<Int>(orders.size());
    if (n == 1) return {};
    // partition per prime, stored largest exponent first
    std::map<Int, std::vector<int>> partitions;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        std::vector<Int> count_le;  // count_le[k] = #{x : ord(x) | p^k}
        count_le.push_back(1);
        for (int k = 1;; ++k) {
            Int pk = int_pow(p, k);
            Int c = 0;
            for (const auto& o : orders)
                if (pk % o == 0) ++c;
            count_le.push_back(c);
            if (c == count_le[k - 1]) break;  // Sylow exhausted
        }
        std::vector<int> part;  // part[j] = #{i : a_i >= j+1}
        for (std::size_t k = 1; k < count_le.size(); ++k) {
            Int ratio = count_le[k] / count_le[k - 1];
            int rk = 0;
            Int t = 1;
            while (t < ratio) {
                t *= p;
                ++rk;
            }
            if (t != ratio) throw error("element order multiset is not that of an abelian group");
            if (rk > 0) part.push_back(rk);
        }
        // part is now r_1 >= r_2 >= ... with r_k = #{i : a_i >= k}; transpose
        // back to the exponents a_i themselves.
        std::vector<int> exps;
        for (int i = 0; i < (part.empty() ? 0 : part[0]); ++i) {
            int a = 0;
            for (int rk : part)
                if (rk > i) ++a;
            exps.push_back(a);
        }
        std::sort(exps.rbegin(), exps.rend());
        partitions[p] = exps;
    }
    std::size_t chains = 0;
    for (auto& [p, exps] : partitions) chains = std::max(chains, exps.size());
    abelian_invariants inv(chains, Int(1));
    // align largest exponents onto the last invariant factor
    for (auto& [p, exps] : partitions) {
        for (std::size_t i = 0; i < exps.size(); ++i)
            inv[chains - 1 - i] *= int_pow(p, exps[i]);
    }
    if (invariants_order(inv) != n) throw error("invariant reconstruction mismatch");
    return inv;
}

inline std::string invariants_to_string(const abelian_invariants& inv) {
    if (inv.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (i) s += " x ";
        s += "C" + inv[i].str();
    }
    return s;
}

}  // namespace unram

#endif
