#ifndef UNRAM_CLASS_GROUP_HPP
#define UNRAM_CLASS_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "unram/abelian.hpp"
#include "unram/quadform.hpp"

namespace unram {

/// Class group data for a quadratic field.  For D > 0 the narrow group and
/// the fundamental-unit norm come along; the wide group is the quotient of
/// the narrow one by the class of the negated principal form.
struct class_group_structure {
    Int D;
    abelian_invariants invariants;          // the (wide) class group
    abelian_invariants narrow_invariants;   // D > 0 only; equals invariants for D < 0
    int unit_norm = 0;                      // D > 0 only: +1 or -1
    Int h() const { return invariants_order(invariants); }
};

enum class splitting_kind { split, inert, ramified };

inline std::string to_string(splitting_kind s) {
    switch (s) {
        case splitting_kind::split: return "split";
        case splitting_kind::inert: return "inert";
        case splitting_kind::ramified: return "ramified";
    }
    return "?";
}

/// Behaviour of p in the quadratic field of fundamental discriminant D, via
/// the Kronecker symbol.
inline splitting_kind prime_splitting(const Int& D, const Int& p) {
    if (!discriminant_is_fundamental(D)) throw not_fundamental();
    int k = kronecker(D, p);
    if (k == 0) return splitting_kind::ramified;
    return k == 1 ? splitting_kind::split : splitting_kind::inert;
}

namespace detail {

/// abelian group structure from a complete multiplication closure
template <class Elem, class MulFn>
abelian_invariants group_invariants(const std::vector<Elem>& elems, const Elem& id, MulFn mul) {
    std::map<Elem, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    std::vector<Int> orders;
    for (const auto& e : elems) {
        Elem cur = e;
        Int o = 1;
        while (!(cur == id)) {
            cur = mul(cur, e);
            ++o;
            if (o > Int(elems.size())) throw error("class composition left the enumerated set");
        }
        orders.push_back(o);
    }
    return invariants_from_element_orders(orders);
}

}  // namespace detail

/// Class group of an imaginary quadratic field by enumeration of reduced
/// forms and Gauss composition.
inline class_group_structure class_group_imaginary(const Int& D) {
    if (D >= 0 || !discriminant_is_fundamental(D)) throw not_fundamental();
    auto forms = reduced_imaginary_forms(D);
    quad_form id = reduce_imaginary(principal_form(D));
    auto mul = [&](const quad_form& x, const quad_form& y) { return reduce_imaginary(compose(x, y)); };
    class_group_structure out;
    out.D = D;
    out.invariants = detail::group_invariants(forms, id, mul);
    out.narrow_invariants = out.invariants;
    return out;
}

/// Continued-fraction period length of the quadratic irrational attached to
/// the fundamental discriminant D > 0: sqrt(D/4) when 4 | D, (1+sqrt(D))/2
/// otherwise.  The fundamental unit has norm -1 exactly when the period is
/// odd.
inline int cf_period_length(const Int& D) {
    Int N, P, Q;
    if (D % 4 == 0) {
        N = D / 4;
        P = 0;
        Q = 1;
    } else {
        N = D;
        P = 1;
        Q = 2;
    }
    Int s = isqrt(N);
    auto step = [&](Int& Pc, Int& Qc) {
        Int a = (Pc + s) / Qc;  // floor((P + sqrt(N)) / Q), Q > 0
        Pc = a * Qc - Pc;
        Qc = (N - Pc * Pc) / Qc;
    };
    std::map<std::pair<Int, Int>, int> seen;
    int idx = 0;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) return idx - it->second;
        seen[key] = idx;
        step(P, Q);
        ++idx;
        if (idx > 1000000) throw error("continued fraction failed to become periodic");
    }
}

/// Narrow class group via cycles of reduced indefinite forms (two forms are
/// equivalent iff they share a cycle), fundamental-unit norm via the
/// continued-fraction period parity, wide group as the quotient by the class
/// of the negated principal form.
inline class_group_structure class_group_real(const Int& D) {
    if (D <= 0 || !discriminant_is_fundamental(D)) throw not_fundamental();
    Int sD = isqrt(D);
    auto forms = reduced_indefinite_forms(D, sD);

    // partition into rho-cycles
    std::map<quad_form, int> cycle_of;
    std::vector<quad_form> reps;  // representative with a > 0 per cycle
    for (const auto& f : forms) {
        if (cycle_of.count(f)) continue;
        int id = static_cast<int>(reps.size());
        quad_form cur = f;
        quad_form best = f;
        while (true) {
            cycle_of[cur] = id;
            cur = rho_indefinite(cur, D, sD);
            if (cur == f) break;
            if (cur.a > 0 && (best.a <= 0 || cur < best)) best = cur;
        }
        if (best.a <= 0) throw error("cycle without positive leading coefficient");
        reps.push_back(best);
    }

    auto class_of = [&](const quad_form& f) { return cycle_of.at(reduce_indefinite(f, D, sD)); };
    auto mul = [&](int x, int y) { return class_of(compose(reps[x], reps[y])); };

    std::vector<int> classes(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) classes[i] = static_cast<int>(i);
    int principal = class_of(principal_form(D));

    class_group_structure out;
    out.D = D;
    out.narrow_invariants =
        detail::group_invariants(classes, principal, [&](int x, int y) { return mul(x, y); });

    // class of the negated principal form: trivial iff the fundamental unit
    // has norm -1, and the wide group is narrow / <tau>
    Int b0 = sD;
    while (((b0 - D) % 2) != 0 || ((b0 * b0 - D) % 4) != 0) --b0;
    quad_form neg_principal{-1, b0, (D - b0 * b0) / 4};
    int tau = class_of(neg_principal);

    if (tau == principal) {
        out.invariants = out.narrow_invariants;
    } else {
        // quotient by the order-2 subgroup {principal, tau}
        std::vector<int> rep_of(reps.size(), -1);
        std::vector<int> quot_elems;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            int ii = static_cast<int>(i);
            int partner = mul(ii, tau);
            if (rep_of[ii] >= 0) continue;
            rep_of[ii] = ii;
            rep_of[partner] = ii;
            quot_elems.push_back(ii);
        }
        auto qmul = [&](int x, int y) { return rep_of[mul(x, y)]; };
        out.invariants = detail::group_invariants(quot_elems, rep_of[principal],
                                                  [&](int x, int y) { return qmul(x, y); });
    }

    out.unit_norm = cf_period_length(D) % 2 == 1 ? -1 : +1;
    return out;
}

}  // namespace unram

#endif
