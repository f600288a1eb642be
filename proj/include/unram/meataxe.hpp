#ifndef UNRAM_MEATAXE_HPP
#define UNRAM_MEATAXE_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "unram/matgroup.hpp"

namespace unram {

/// Constituent dimensions of the natural module under the generated algebra.
struct module_decomposition {
    std::vector<int> constituent_dimensions;  // sorted ascending
    bool irreducible = false;
};

namespace detail {

/// spin up the smallest invariant subspace containing v; echelon row basis
inline std::vector<std::vector<std::uint32_t>> spin_up(const std::vector<fq_matrix>& gens,
                                                       const std::vector<std::uint32_t>& v,
                                                       const small_gf& F) {
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<int> leads;
    auto insert = [&](std::vector<std::uint32_t> w) -> bool {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (w[leads[k]]) {
                std::uint32_t f = F.mul(w[leads[k]], F.inv(basis[k][leads[k]]));
                for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.sub(w[j], F.mul(f, basis[k][j]));
            }
        }
        int lead = -1;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j]) {
                lead = static_cast<int>(j);
                break;
            }
        if (lead < 0) return false;
        basis.push_back(std::move(w));
        leads.push_back(lead);
        return true;
    };
    std::vector<std::vector<std::uint32_t>> frontier;
    if (insert(v)) frontier.push_back(v);
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                auto img = g.apply(w);
                if (insert(img)) next.push_back(std::move(img));
            }
        frontier = std::move(next);
    }
    return basis;
}

/// basis extension: P has the span of `rows` in its first k columns
inline std::pair<fq_matrix, fq_matrix> extend_basis(const std::vector<std::vector<std::uint32_t>>& rows,
                                                    const gf_ptr& field, int n) {
    std::vector<std::vector<std::uint32_t>> chosen = rows;
    std::vector<int> leads;
    for (const auto& r : rows) {
        for (int j = 0; j < n; ++j)
            if (r[j]) {
                leads.push_back(j);
                break;
            }
    }
    for (int j = 0; j < n && static_cast<int>(chosen.size()) < n; ++j) {
        if (std::find(leads.begin(), leads.end(), j) != leads.end()) continue;
        std::vector<std::uint32_t> e(n, 0);
        e[j] = 1;
        chosen.push_back(std::move(e));
        leads.push_back(j);
    }
    fq_matrix P(field, n);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i) P(i, c) = chosen[c][i];
    return {P, P.inverse()};
}

inline fq_matrix submatrix(const fq_matrix& A, int r0, int c0, int k) {
    fq_matrix out(A.field(), k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = A(r0 + i, c0 + j);
    return out;
}

/// deterministic "random" algebra element: short sums of short words
inline fq_matrix random_algebra_element(const std::vector<fq_matrix>& gens, std::mt19937_64& rng) {
    const gf_ptr& field = gens.front().field();
    const small_gf& F = *field;
    int n = gens.front().n();
    fq_matrix acc(field, n);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        fq_matrix w = fq_matrix::identity(field, n);
        int len = 1 + static_cast<int>(rng() % 3);
        for (int l = 0; l < len; ++l) w = w.mul(gens[rng() % gens.size()]);
        std::uint32_t c = F.rand(rng);
        if (F.is_zero(c)) c = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc(i, j) = F.add(acc(i, j), F.mul(c, w(i, j)));
    }
    return acc;
}

inline fq_matrix eval_poly_at(const std::vector<std::uint32_t>& h, const fq_matrix& theta) {
    fq_matrix acc(theta.field(), theta.n());
    for (std::size_t i = h.size(); i-- > 0;) {
        acc = acc.mul(theta);
        acc = acc.add_scaled_identity(h[i]);
    }
    return acc;
}

/// one MeatAxe round on a module given by its action matrices: either finds
/// a proper invariant subspace (returned as an echelon basis), proves the
/// module irreducible (empty return, *proved = true), or gives up for this
/// round.
inline std::optional<std::vector<std::vector<std::uint32_t>>> meataxe_round(
    const std::vector<fq_matrix>& action, const fq_matrix& theta, bool* proved,
    poly_factorizer<small_gf>& fac) {
    const small_gf& F = *theta.field();
    const int dim = theta.n();
    auto factored = fac.factor(theta.min_poly());
    for (const auto& [h, mult] : factored.factors) {
        (void)mult;
        fq_matrix htheta = eval_poly_at(h, theta);
        auto ker = htheta.kernel_basis();
        if (ker.empty()) continue;
        for (const auto& v : ker) {
            auto span = spin_up(action, v, F);
            if (static_cast<int>(span.size()) < dim) return span;
        }
        // Norton's criterion: when nullity(h(theta)) = deg h, one full spin
        // on each side proves irreducibility (the kernel spins are already
        // known to be full at this point)
        if (static_cast<int>(ker.size()) == poly_ops<small_gf>::deg(h)) {
            fq_matrix ht = htheta.transpose();
            auto kert = ht.kernel_basis();
            std::vector<fq_matrix> tact;
            tact.reserve(action.size());
            for (const auto& A : action) tact.push_back(A.transpose());
            auto tspan = spin_up(tact, kert.front(), F);
            if (static_cast<int>(tspan.size()) == dim) {
                *proved = true;
                return std::nullopt;
            }
            // a proper dual submodule exists; its annihilator is a proper
            // submodule, recover it as the kernel of the dual basis matrix
            std::vector<std::vector<std::uint32_t>> rows(tspan.begin(), tspan.end());
            auto perp = fq_matrix::kernel_of_rows(
                [&](int i, int j) { return rows[i][j]; }, static_cast<int>(rows.size()), dim, F);
            if (!perp.empty()) {
                auto span = spin_up(action, perp.front(), F);
                if (static_cast<int>(span.size()) < dim) return span;
            }
        }
    }
    return std::nullopt;
}

inline void decompose_rec(const std::vector<fq_matrix>& action, int budget, bool top,
                          module_decomposition& out, std::mt19937_64& rng,
                          poly_factorizer<small_gf>& fac) {
    const int dim = action.front().n();
    if (dim == 1) {
        out.constituent_dimensions.push_back(1);
        if (top) out.irreducible = true;
        return;
    }
    const gf_ptr& field = action.front().field();
    for (int attempt = 0; attempt < budget; ++attempt) {
        fq_matrix theta = attempt < static_cast<int>(action.size())
                              ? action[attempt]
                              : random_algebra_element(action, rng);
        bool proved = false;
        auto sub = meataxe_round(action, theta, &proved, fac);
        if (proved) {
            out.constituent_dimensions.push_back(dim);
            if (top) out.irreducible = true;
            return;
        }
        if (sub) {
            auto [P, Pinv] = extend_basis(*sub, field, dim);
            int k = static_cast<int>(sub->size());
            std::vector<fq_matrix> subact, quotact;
            for (const auto& A : action) {
                fq_matrix C = Pinv.mul(A).mul(P);
                subact.push_back(submatrix(C, 0, 0, k));
                quotact.push_back(submatrix(C, k, k, dim - k));
            }
            decompose_rec(subact, budget, false, out, rng, fac);
            decompose_rec(quotact, budget, false, out, rng, fac);
            return;
        }
    }
    throw inconclusive();
}

}  // namespace detail

/// Bounded MeatAxe: constituents of the natural module via minimal
/// polynomial factor kernels and spin-up.  `irreducible` is set only when
/// Norton's criterion certifies the full module; if the search budget runs
/// out the procedure raises `inconclusive` rather than ever answering wrong.
inline module_decomposition module_decompose(const std::vector<fq_matrix>& gens, int budget = 64) {
    if (gens.empty()) throw error("module_decompose needs at least one generator");
    if (gens.front().field()->degree() != 1)
        throw error("module_decompose supports prime fields; blow extension matrices up first");
    std::mt19937_64 rng(default_factor_seed);
    poly_factorizer<small_gf> fac(*gens.front().field());
    module_decomposition out;
    detail::decompose_rec(gens, budget, true, out, rng, fac);
    std::sort(out.constituent_dimensions.begin(), out.constituent_dimensions.end());
    return out;
}

}  // namespace unram

#endif
