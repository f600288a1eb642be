#ifndef UNRAM_FINGERPRINT_HPP
#define UNRAM_FINGERPRINT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "unram/abelian.hpp"
#include "unram/matgroup.hpp"
#include "unram/perm.hpp"

namespace unram {

/// Index-based multiplication structure of a finite group given its full
/// element set.  Everything downstream (fingerprints, the backtracking
/// isomorphism search) works on this.
class group_table {
  public:
    template <class Elem, class Mul, class Key>
    group_table(const std::vector<Elem>& elems, Mul mul, Key key, std::size_t cap = 10000) {
        n_ = elems.size();
        if (n_ == 0) throw needs_closure();
        if (n_ > cap) throw cap_exceeded(cap);
        std::unordered_map<std::string, int> index;
        for (std::size_t i = 0; i < n_; ++i) index[key(elems[i])] = static_cast<int>(i);
        mul_.assign(n_ * n_, -1);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                auto it = index.find(key(mul(elems[i], elems[j])));
                if (it == index.end()) throw error("element set is not closed under products");
                mul_[i * n_ + j] = it->second;
            }
        finish();
    }

    std::size_t order() const { return n_; }
    int id() const { return id_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    long element_order(int a) const { return orders_[a]; }

  private:
    void finish() {
        // identity
        id_ = -1;
        for (std::size_t i = 0; i < n_; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < n_ && ok; ++j)
                if (mul(static_cast<int>(i), static_cast<int>(j)) != static_cast<int>(j)) ok = false;
            if (ok) {
                id_ = static_cast<int>(i);
                break;
            }
        }
        if (id_ < 0) throw error("no identity in element set");
        inv_.assign(n_, -1);
        orders_.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            int x = static_cast<int>(i);
            long o = 1;
            int cur = x;
            while (cur != id_) {
                if (mul(cur, x) == static_cast<int>(i) && cur != id_) {
                    // cur * x == x means cur == id; just iterate normally
                }
                cur = mul(cur, x);
                ++o;
                if (o > static_cast<long>(n_)) throw error("element order exceeds group order");
            }
            orders_[i] = o;
            // inverse: x^(o-1)
            int invx = id_;
            for (long k = 0; k < o - 1; ++k) invx = mul(invx, x);
            inv_[i] = invx;
        }
    }

    std::size_t n_ = 0;
    int id_ = -1;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<long> orders_;
};

inline group_table table_from_matrices(const std::vector<fq_matrix>& elems, std::size_t cap = 10000) {
    return group_table(
        elems, [](const fq_matrix& a, const fq_matrix& b) { return a.mul(b); },
        [](const fq_matrix& m) { return m.key(); }, cap);
}

inline group_table table_from_perms(const std::vector<permutation>& elems, std::size_t cap = 10000) {
    auto key = [](const permutation& p) {
        std::string s;
        for (int v : p) s.push_back(static_cast<char>(v));
        return s;
    };
    return group_table(
        elems, [](const permutation& a, const permutation& b) { return perm_mul(a, b); }, key, cap);
}

/// Isomorphism-grade invariants: order, centre, derived subgroup,
/// abelianization, element-order histogram, perfectness.
struct group_fingerprint {
    Int order;
    Int center_order;
    Int derived_order;
    bool derived_perfect = false;
    abelian_invariants abelianization;
    std::map<long, long> order_histogram;
    bool perfect = false;

    bool operator==(const group_fingerprint& o) const {
        return order == o.order && center_order == o.center_order && derived_order == o.derived_order &&
               abelianization == o.abelianization && order_histogram == o.order_histogram &&
               perfect == o.perfect && derived_perfect == o.derived_perfect;
    }
};

namespace detail {

inline std::vector<int> subgroup_closure(const group_table& t, std::vector<int> seed) {
    std::vector<char> in(t.order(), 0);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
            return true;
        }
        return false;
    };
    add(t.id());
    for (int s : seed) add(s);
    std::size_t head = 0;
    while (head < elems.size()) {
        int a = elems[head++];
        for (std::size_t k = 0; k < elems.size(); ++k) {
            int b = elems[k];
            if (add(t.mul(a, b))) {
            }
            if (add(t.mul(b, a))) {
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

inline std::vector<int> derived_subgroup(const group_table& t, const std::vector<int>& elems) {
    std::vector<int> comms;
    for (int a : elems)
        for (int b : elems) {
            int c = t.mul(t.mul(a, b), t.mul(t.inv(a), t.inv(b)));
            comms.push_back(c);
        }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(t, comms);
}

}  // namespace detail

inline group_fingerprint fingerprint(const group_table& t) {
    group_fingerprint fp;
    const std::size_t n = t.order();
    fp.order = Int(n);
    // centre
    long zc = 0;
    for (std::size_t a = 0; a < n; ++a) {
        bool central = true;
        for (std::size_t b = 0; b < n && central; ++b)
            if (t.mul(static_cast<int>(a), static_cast<int>(b)) !=
                t.mul(static_cast<int>(b), static_cast<int>(a)))
                central = false;
        if (central) ++zc;
    }
    fp.center_order = zc;
    // derived subgroup and its derived subgroup (for perfectness of G')
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto der = detail::derived_subgroup(t, all);
    fp.derived_order = Int(der.size());
    fp.perfect = der.size() == n;
    auto der2 = detail::derived_subgroup(t, der);
    fp.derived_perfect = der2.size() == der.size();
    // abelianization G/G': coset multiplication, invariants from the order
    // multiset
    {
        std::vector<int> coset_of(n, -1);
        std::vector<int> reps;
        std::vector<char> in_der(n, 0);
        for (int d : der) in_der[d] = 1;
        for (std::size_t x = 0; x < n; ++x) {
            if (coset_of[x] >= 0) continue;
            int c = static_cast<int>(reps.size());
            reps.push_back(static_cast<int>(x));
            for (int d : der) coset_of[t.mul(static_cast<int>(x), d)] = c;
        }
        std::size_t m = reps.size();
        std::vector<Int> orders;
        for (std::size_t i = 0; i < m; ++i) {
            int cur = coset_of[t.id()];
            long o = 0;
            int acc = t.id();
            do {
                acc = t.mul(acc, reps[i]);
                ++o;
            } while (coset_of[acc] != coset_of[t.id()]);
            (void)cur;
            orders.push_back(Int(o));
        }
        fp.abelianization = invariants_from_element_orders(orders);
    }
    // element order histogram
    for (std::size_t x = 0; x < n; ++x) ++fp.order_histogram[t.element_order(static_cast<int>(x))];
    return fp;
}

inline const group_fingerprint& model_fingerprint(model_group g) {
    static std::map<model_group, group_fingerprint> cache;
    auto it = cache.find(g);
    if (it == cache.end()) {
        auto elems = perm_group_elements(model_generators(g));
        it = cache.emplace(g, fingerprint(table_from_perms(elems))).first;
    }
    return it->second;
}

/// The A5 x C2 recognizer the proofs lean on: order 120, centre of order 2,
/// derived subgroup perfect of order 60, and the element-order histogram of
/// the permutation model.
inline bool is_a5_x_c2(const group_table& t) {
    if (t.order() != 120) return false;
    auto fp = fingerprint(t);
    const auto& model = model_fingerprint(model_group::a5_x_c2);
    return fp.center_order == 2 && fp.derived_order == 60 && fp.derived_perfect &&
           fp.order_histogram == model.order_histogram;
}

inline bool is_a5_x_c2(const std::vector<fq_matrix>& elements) {
    return is_a5_x_c2(table_from_matrices(elements));
}

/// Exhaustive isomorphism test by backtracking over generator images.
/// Intended for the fixed target list (order <= ~500); the fingerprint is
/// the cheap screen, this is the certifier.
inline bool are_isomorphic(const group_table& G, const group_table& H) {
    if (G.order() != H.order()) return false;
    const int n = static_cast<int>(G.order());
    // small generating set of G, greedily
    std::vector<int> gens;
    {
        std::vector<int> sub = detail::subgroup_closure(G, {});
        while (sub.size() < G.order()) {
            std::vector<char> in(n, 0);
            for (int s : sub) in[s] = 1;
            int pick = -1;
            long best = 0;
            for (int x = 0; x < n; ++x)
                if (!in[x] && G.element_order(x) > best) {
                    best = G.element_order(x);
                    pick = x;
                }
            gens.push_back(pick);
            sub = detail::subgroup_closure(G, gens);
        }
    }
    // candidate images by element order
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (int y = 0; y < n; ++y)
            if (H.element_order(y) == G.element_order(gens[i])) candidates[i].push_back(y);
        if (candidates[i].empty()) return false;
    }
    // depth-first over image tuples; verify by rebuilding the Cayley map
    std::vector<int> image(gens.size(), -1);
    auto extends = [&]() -> bool {
        // map id -> id, then close: every known pair (x, phi(x)) times a
        // generator must stay consistent
        std::vector<int> phi(n, -1);
        phi[G.id()] = H.id();
        std::vector<int> queue{G.id()};
        std::size_t head = 0;
        std::size_t mapped = 1;
        while (head < queue.size()) {
            int x = queue[head++];
            for (std::size_t k = 0; k < gens.size(); ++k) {
                int xg = G.mul(x, gens[k]);
                int yh = H.mul(phi[x], image[k]);
                if (phi[xg] < 0) {
                    phi[xg] = yh;
                    ++mapped;
                    queue.push_back(xg);
                } else if (phi[xg] != yh) {
                    return false;
                }
            }
        }
        if (mapped != static_cast<std::size_t>(n)) return false;  // images don't generate
        // injectivity on the mapped set
        std::vector<char> hit(n, 0);
        for (int v : phi) {
            if (v < 0 || hit[v]) return false;
            hit[v] = 1;
        }
        // full homomorphism check
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (phi[G.mul(a, b)] != H.mul(phi[a], phi[b])) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == gens.size()) return extends();
        for (int cand : candidates[depth]) {
            image[depth] = cand;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool is_isomorphic_to_model(const group_table& t, model_group g) {
    auto elems = perm_group_elements(model_generators(g));
    return are_isomorphic(t, table_from_perms(elems));
}

}  // namespace unram

#endif
