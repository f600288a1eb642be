#ifndef UNRAM_CERTIFY_RULES_HPP
#define UNRAM_CERTIFY_RULES_HPP

#include <algorithm>
#include <vector>

#include "unram/group_facts.hpp"

namespace unram::certify {

/// Abhyankar's lemma, in the shape the ramification steps use: the lower
/// ramification index cancels in the compositum when it divides the upper
/// one and the prime is tame.  Wild configurations must be handled as
/// trusted claims, so they raise instead of guessing.
inline bool abhyankar_unramified(const Int& e_upper, const Int& e_lower, const Int& p) {
    if (e_lower < 1 || e_upper < 1) throw error("ramification indices are positive");
    if (e_lower == 1) return true;
    if (p > 1 && e_lower % p == 0) throw wild_case();
    return e_upper % e_lower == 0;
}

/// Allowed central kernel sizes for an extension of a perfect group over a
/// class-number-one base: kernels are constrained to quotients of the Schur
/// multiplier (every divisor of its order occurs).  Without the class-number
/// hypothesis nothing is constrained.
struct stem_constraint {
    bool constrained;
    std::vector<Int> allowed_sizes;  // meaningful when constrained
};

inline stem_constraint stem_extension_rule(const abelian_invariants& schur, bool class_number_one) {
    if (!class_number_one) return {false, {}};
    return {true, divisors(invariants_order(schur))};
}

enum class base_group { a5, psl_2_8 };

inline Int base_group_order(base_group g) { return g == base_group::a5 ? 60 : 504; }

inline abelian_invariants base_group_schur(base_group g) {
    return g == base_group::a5 ? schur_multiplier(simple_group_label::alt(5))
                               : schur_multiplier(simple_group_label::psl(2, 8));
}

/// The elementary-abelian case split behind the class-group exclusions:
/// which ranks k can Gal(T'/M) = (C_p)^k have?  Faithful actions need
/// |G| | |GL_k(F_p)|, k >= 3 (no nonabelian simple subgroup of GL_2, and
/// GL_1 is abelian), and for PSL_2(F_8) the order-9 cyclic subgroup forces
/// k >= min_gl_dim(9, p); central kernels come from the stem-extension rule.
inline std::vector<int> elementary_rank_case_split(const Int& p, const Int& size_bound,
                                                   base_group base) {
    std::vector<int> ranks;
    const Int order = base_group_order(base);
    // central possibilities: kernel sizes dividing the Schur multiplier order
    for (const Int& s : stem_extension_rule(base_group_schur(base), true).allowed_sizes) {
        if (s == 1) continue;
        Int t = s;
        int k = 0;
        while (t % p == 0) {
            t /= p;
            ++k;
        }
        if (t == 1 && int_pow(p, k) <= size_bound) ranks.push_back(k);
    }
    // faithful possibilities
    for (int k = 1;; ++k) {
        if (int_pow(p, static_cast<unsigned long>(k)) > size_bound) break;
        if (k < 3) continue;  // GL_1 abelian; GL_2 has no nonabelian simple subgroup
        if (gl_order(k, p) % order != 0) continue;
        if (base == base_group::psl_2_8 && gcd(Int(9), p) == 1 &&
            k < min_gl_dim_for_cyclic(9, p))
            continue;
        ranks.push_back(k);
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return ranks;
}

}  // namespace unram::certify

#endif
