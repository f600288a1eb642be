#ifndef UNRAM_MATGROUP_HPP
#define UNRAM_MATGROUP_HPP

#include <atomic>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "unram/matrix.hpp"
#include "unram/poly_factor.hpp"

namespace unram {

/// A finitely generated subgroup of GL_n(F_q): the generators plus, once
/// closure has run, the full element set.  Immutable after closure.
struct matrix_group_handle {
    std::vector<fq_matrix> generators;
    std::vector<fq_matrix> elements;  // empty until closed
    std::size_t cap = 1000000;

    bool closed() const { return !elements.empty(); }
    Int order() const { return Int(elements.size()); }
};

/// Breadth-first product closure of the generated subgroup.  Default cap
/// 10^6: anything larger is linear-algebra territory (centralizer, module
/// decomposition), not enumeration.
inline matrix_group_handle group_closure(std::vector<fq_matrix> gens, std::size_t cap = 1000000) {
    if (gens.empty()) throw error("group_closure needs at least one generator");
    const int n = gens.front().n();
    for (const auto& g : gens) {
        if (g.n() != n || g.field()->q() != gens.front().field()->q())
            throw error("generators live in different matrix rings");
        if (!g.invertible()) throw error("generator is singular");
    }
    matrix_group_handle h;
    h.generators = gens;
    h.cap = cap;
    fq_matrix id = fq_matrix::identity(gens.front().field(), n);
    std::unordered_set<std::string> seen{id.key()};
    std::vector<fq_matrix> frontier{id};
    h.elements.push_back(id);
    while (!frontier.empty()) {
        std::vector<fq_matrix> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                fq_matrix p = e.mul(g);
                auto [it, fresh] = seen.insert(p.key());
                if (fresh) {
                    if (h.elements.size() + 1 > cap) throw cap_exceeded(cap);
                    h.elements.push_back(p);
                    next.push_back(std::move(p));
                }
            }
        }
        frontier = std::move(next);
    }
    return h;
}

/// Least k >= 1 with m^k = I, by factored-exponent descent on the minimal
/// polynomial: each irreducible factor of degree d contributes the order of
/// its root in F_{q^d}^*, repeated factors contribute the char-power part.
inline Int element_order(const fq_matrix& m) {
    if (!m.invertible()) throw error("element_order of a singular matrix");
    if (m.is_identity()) return 1;
    const small_gf& F = *m.field();
    poly_factorizer<small_gf> fac(F);
    poly_ops<small_gf> P(F);
    auto mp = m.min_poly();
    auto factored = fac.factor(mp);
    Int order = 1;
    int max_mult = 1;
    for (const auto& [h, mult] : factored.factors) {
        max_mult = std::max(max_mult, mult);
        int d = poly_ops<small_gf>::deg(h);
        if (d == 1 && F.is_zero(h[0])) throw error("element_order of a singular matrix");
        Int N = int_pow(F.field_order(), static_cast<unsigned long>(d)) - 1;
        // order of x in F_q[x]/(h): descend over the prime factorization
        Int k = N;
        for (const auto& [p, e] : factorize(N)) {
            (void)e;
            while (k % p == 0) {
                auto pw = P.powmod(P.x(), k / p, h);
                if (P.equal(pw, P.one()))
                    k /= p;
                else
                    break;
            }
        }
        order = lcm(order, k);
    }
    if (max_mult > 1) {
        Int p = F.characteristic();
        Int pe = 1;
        while (pe < max_mult) pe *= p;
        order *= pe;
    }
    return order;
}

/// Basis of {X : XA = AX for every generator A}, as matrices.
struct commutant_basis {
    std::vector<fq_matrix> basis;
    std::size_t dimension() const { return basis.size(); }
};

struct centralizer_result {
    commutant_basis commutant;
    Int unit_count;
    bool is_cyclic;
    fq_matrix cyclic_witness;  // an element whose order equals unit_count, when cyclic
};

namespace detail {

inline fq_matrix combine_basis(const std::vector<fq_matrix>& basis,
                               const std::vector<std::uint32_t>& coords) {
    const small_gf& F = *basis.front().field();
    int n = basis.front().n();
    fq_matrix r(basis.front().field(), n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!coords[k]) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r(i, j) = F.add(r(i, j), F.mul(coords[k], basis[k](i, j)));
    }
    return r;
}

}  // namespace detail

/// Commutant of the generators as the nullspace of the stacked linear system
/// XA - AX = 0, plus the structure of its unit group.  Units are counted by
/// enumeration when q^dim is small; otherwise the commutant must be a field
/// (the case the theory guarantees for irreducible cyclic groups), detected
/// through a generating element with irreducible minimal polynomial of full
/// degree.  Anything else raises enumeration_too_large.
inline centralizer_result centralizer(const std::vector<fq_matrix>& gens,
                                      std::uint64_t enumeration_cap = 10000000) {
    if (gens.empty()) throw error("centralizer needs at least one generator");
    const gf_ptr& Fp = gens.front().field();
    const small_gf& F = *Fp;
    const int n = gens.front().n();
    // unknowns: X_{ij}, row index (g, a, b) for equation (XA - AX)_{ab} = 0
    int nrows = static_cast<int>(gens.size()) * n * n;
    auto entry = [&](int row, int col) -> std::uint32_t {
        int g = row / (n * n);
        int a = (row / n) % n;
        int b = row % n;
        int i = col / n, j = col % n;
        const fq_matrix& A = gens[g];
        std::uint32_t v = 0;
        if (i == a) v = A(j, b);                       // X_{aj} A_{jb}
        if (j == b) v = F.sub(v, A(a, i));             // - A_{ai} X_{ib}
        return v;
    };
    auto kern = fq_matrix::kernel_of_rows(entry, nrows, n * n, F);
    centralizer_result out{{}, 0, false, fq_matrix(Fp, n)};
    for (auto& v : kern) {
        fq_matrix b(Fp, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) = v[static_cast<std::size_t>(i) * n + j];
        out.commutant.basis.push_back(std::move(b));
    }
    const std::size_t dim = out.commutant.basis.size();
    const auto& basis = out.commutant.basis;

    // field shortcut: if some small combination theta has an irreducible
    // minimal polynomial of degree dim, the commutant is F_q[theta], a field
    poly_factorizer<small_gf> fac(F);
    std::mt19937_64 rng(default_factor_seed);
    Int qdim = int_pow(F.field_order(), static_cast<unsigned long>(dim));
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<std::uint32_t> coords(dim);
        if (attempt < static_cast<int>(dim)) {
            coords[attempt] = 1;  // try plain basis elements first
        } else {
            for (auto& c : coords) c = F.rand(rng);
        }
        fq_matrix theta = detail::combine_basis(basis, coords);
        auto mp = theta.min_poly();
        if (poly_ops<small_gf>::deg(mp) == static_cast<int>(dim) && fac.is_irreducible(mp)) {
            out.unit_count = qdim - 1;
            // witness a generator of the cyclic unit group
            for (int t = 0; t < 200; ++t) {
                std::vector<std::uint32_t> c2(dim);
                for (auto& c : c2) c = F.rand(rng);
                fq_matrix u = detail::combine_basis(basis, c2);
                if (!u.invertible()) continue;
                if (element_order(u) == out.unit_count) {
                    out.is_cyclic = true;
                    out.cyclic_witness = u;
                    return out;
                }
            }
            // cyclic by field theory, but report honestly if no witness found
            out.is_cyclic = false;
            return out;
        }
    }

    if (qdim > enumeration_cap) throw enumeration_too_large(dim);

    // enumerate all q^dim combinations, count units, track the maximal order
    std::vector<std::uint32_t> coords(dim, 0);
    Int units = 0;
    Int max_order = 0;
    fq_matrix best(Fp, n);
    while (true) {
        fq_matrix x = detail::combine_basis(basis, coords);
        if (x.invertible()) {
            ++units;
            Int o = element_order(x);
            if (o > max_order) {
                max_order = o;
                best = x;
            }
        }
        // odometer over base-q digits
        std::size_t k = 0;
        std::uint64_t q = F.q();
        while (k < dim) {
            if (++coords[k] < q) break;
            coords[k] = 0;
            ++k;
        }
        if (k == dim) break;
    }
    out.unit_count = units;
    out.is_cyclic = (max_order == units);
    if (out.is_cyclic) out.cyclic_witness = best;
    return out;
}

/// True iff m | q^n - 1 and m divides no q^k - 1 with k < n: exactly the
/// condition for an order-m element to act irreducibly on (F_q)^n.
inline bool singer_order_condition(int n, const Int& q, const Int& m) {
    if (m < 2) return false;
    if ((int_pow(q, static_cast<unsigned long>(n)) - 1) % m != 0) return false;
    for (int k = 1; k < n; ++k)
        if ((int_pow(q, static_cast<unsigned long>(k)) - 1) % m == 0) return false;
    return true;
}

/// Order-m element of GL_n(F_q) acting irreducibly: the ((q^n-1)/m)-th power
/// of the companion matrix of a primitive degree-n polynomial.
inline fq_matrix singer_element(int n, const gf_ptr& field, const Int& m) {
    const small_gf& F = *field;
    Int qn1 = int_pow(F.field_order(), static_cast<unsigned long>(n)) - 1;
    if (!singer_order_condition(n, F.field_order(), m)) throw no_such_element();
    poly_factorizer<small_gf> fac(F);
    poly_ops<small_gf> P(F);
    auto qn1_factors = factorize(qn1);
    // walk monic polynomials x^n + c_{n-1} x^{n-1} + ... + c_0 in canonical
    // order until one is primitive
    std::vector<std::uint32_t> c(n, 0);
    std::uint64_t q = F.q();
    while (true) {
        // advance odometer (skip c_0 = 0: x | f means 0 is a root)
        std::size_t k = 0;
        while (k < static_cast<std::size_t>(n)) {
            if (++c[k] < q) break;
            c[k] = 0;
            ++k;
        }
        if (k == static_cast<std::size_t>(n)) throw no_such_element();  // exhausted (cannot happen)
        if (c[0] == 0) continue;
        std::vector<std::uint32_t> f(c.begin(), c.end());
        f.push_back(1);
        if (!fac.is_irreducible(f)) continue;
        // primitive: x has order q^n - 1 mod f
        bool primitive = true;
        for (const auto& [pr, e] : qn1_factors) {
            (void)e;
            if (P.equal(P.powmod(P.x(), qn1 / pr, f), P.one())) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        fq_matrix comp = fq_matrix::companion(field, c);
        fq_matrix g = comp.pow(qn1 / m);
        if (element_order(g) != m) throw error("singer construction: order check failed");
        return g;
    }
}

/// dim ker(m - I)
inline int fixed_space(const fq_matrix& m) {
    const small_gf& F = *m.field();
    fq_matrix d = m.add_scaled_identity(F.neg(1));
    return d.nullity();
}

/// Restriction of scalars GL_n(F_{q^d}) -> GL_{nd}(F_q) in the basis
/// 1, x, ..., x^{d-1} of the extension: each entry becomes the d x d matrix
/// of multiplication by it.  Multiplicative and order-preserving.
inline fq_matrix blowup_embedding(const fq_matrix& m) {
    const small_gf& E = *m.field();
    const std::uint32_t p = E.p();
    const std::uint32_t d = E.degree();
    if (d == 1) return m;
    gf_ptr base = std::make_shared<small_gf>(p);
    int n = m.n();
    fq_matrix out(base, n * static_cast<int>(d));
    // column j of the block = digits of entry * x^j
    for (int bi = 0; bi < n; ++bi)
        for (int bj = 0; bj < n; ++bj) {
            std::uint32_t a = m(bi, bj);
            std::uint32_t xj = 1;  // x^j as field element
            for (std::uint32_t j = 0; j < d; ++j) {
                std::uint32_t prod = E.mul(a, xj);
                for (std::uint32_t i = 0; i < d; ++i)
                    out(bi * d + i, bj * d + j) = E.digit(prod, i);
                xj = E.mul(xj, E.from_int(p));  // multiply by x
            }
        }
    return out;
}

/// Exact count of elements of multiplicative order k in GL_n(F_q), by a full
/// scan of the matrix space.  Guarded by a group-order cap; the scan space
/// is partitioned across threads with a deterministic sum.
inline Int count_elements_of_order(int n, const gf_ptr& field, const Int& k, Int cap = 30000000,
                                   unsigned threads = std::thread::hardware_concurrency()) {
    const small_gf& F = *field;
    // |GL_n(q)| = q^{n(n-1)/2} prod (q^i - 1)
    Int gl = 1;
    Int q = F.field_order();
    for (int i = 1; i <= n; ++i) gl *= int_pow(q, static_cast<unsigned long>(i)) - 1;
    gl *= int_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    if (gl > cap) throw scan_too_large();

    const std::uint64_t qq = F.q();
    const int cells = n * n;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= qq;

    auto divisors_of_k = factorize(k);
    if (threads == 0) threads = 1;
    std::vector<Int> partial(threads, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = total / threads + 1;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            std::uint64_t lo = t * chunk, hi = std::min(total, (t + 1) * chunk);
            Int count = 0;
            fq_matrix m(field, n);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                std::uint64_t v = idx;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        m(i, j) = static_cast<std::uint32_t>(v % qq);
                        v /= qq;
                    }
                fq_matrix pk = m.pow(k);
                if (!pk.is_identity()) continue;  // also rejects singular m
                bool exact = true;
                for (const auto& [pr, e] : divisors_of_k) {
                    (void)e;
                    if (m.pow(k / pr).is_identity()) {
                        exact = false;
                        break;
                    }
                }
                if (exact) ++count;
            }
            partial[t] = count;
        });
    }
    for (auto& th : pool) th.join();
    Int sum = 0;
    for (const auto& c : partial) sum += c;  // fixed order: deterministic
    return sum;
}

}  // namespace unram

#endif
