#ifndef UNRAM_MATRIX_HPP
#define UNRAM_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "unram/fields.hpp"
#include "unram/poly.hpp"

namespace unram {

/// Square matrix over a small finite field, row-major, entries canonical.
class fq_matrix {
  public:
    fq_matrix() = default;
    fq_matrix(gf_ptr field, int n)
        : F_(std::move(field)), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
    fq_matrix(gf_ptr field, int n, std::vector<std::uint32_t> entries)
        : F_(std::move(field)), n_(n), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(n_) * n_) throw error("matrix entry count mismatch");
        for (auto& v : a_) v = F_->from_int(v);
    }

    static fq_matrix identity(gf_ptr field, int n) {
        fq_matrix m(field, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// companion matrix of a monic polynomial given by its non-leading
    /// coefficients, constant first
    static fq_matrix companion(gf_ptr field, const std::vector<std::uint32_t>& coeffs) {
        int n = static_cast<int>(coeffs.size());
        fq_matrix m(field, n);
        for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
        for (int i = 0; i < n; ++i) m(i, n - 1) = m.F_->neg(m.F_->from_int(coeffs[i]));
        return m;
    }

    const gf_ptr& field() const { return F_; }
    int n() const { return n_; }
    std::uint32_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::uint32_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<std::uint32_t>& entries() const { return a_; }

    bool operator==(const fq_matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    fq_matrix mul(const fq_matrix& o) const {
        const small_gf& F = *F_;
        fq_matrix r(F_, n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                std::uint32_t aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n_; ++j) {
                    std::uint32_t v = F.mul(aik, o(k, j));
                    if (v) r(i, j) = F.add(r(i, j), v);
                }
            }
        return r;
    }

    fq_matrix pow(Int e) const {
        fq_matrix r = identity(F_, n_);
        fq_matrix b = *this;
        if (e < 0) {
            b = b.inverse();
            e = -e;
        }
        while (e > 0) {
            if ((e & 1) != 0) r = r.mul(b);
            e >>= 1;
            if (e > 0) b = b.mul(b);
        }
        return r;
    }

    fq_matrix add_scaled_identity(std::uint32_t lambda) const {
        fq_matrix r = *this;
        for (int i = 0; i < n_; ++i) r(i, i) = F_->add(r(i, i), lambda);
        return r;
    }

    fq_matrix transpose() const {
        fq_matrix r(F_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    int rank() const {
        std::vector<std::vector<std::uint32_t>> rows(n_, std::vector<std::uint32_t>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
        return row_reduce(rows, *F_);
    }

    int nullity() const { return n_ - rank(); }

    bool invertible() const { return rank() == n_; }

    fq_matrix inverse() const {
        const small_gf& F = *F_;
        std::vector<std::vector<std::uint32_t>> w(n_, std::vector<std::uint32_t>(2 * n_, 0));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) w[i][j] = (*this)(i, j);
            w[i][n_ + i] = 1;
        }
        int r = 0;
        for (int c = 0; c < n_ && r < n_; ++c) {
            int piv = -1;
            for (int i = r; i < n_; ++i)
                if (w[i][c]) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw error("matrix is singular");
            std::swap(w[r], w[piv]);
            std::uint32_t inv = F.inv(w[r][c]);
            for (auto& v : w[r]) v = F.mul(v, inv);
            for (int i = 0; i < n_; ++i) {
                if (i == r || !w[i][c]) continue;
                std::uint32_t f = w[i][c];
                for (int j = c; j < 2 * n_; ++j) w[i][j] = F.sub(w[i][j], F.mul(f, w[r][j]));
            }
            ++r;
        }
        fq_matrix out(F_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out(i, j) = w[i][n_ + j];
        return out;
    }

    /// basis of the right kernel {v : Mv = 0}, vectors as length-n rows
    std::vector<std::vector<std::uint32_t>> kernel_basis() const {
        return kernel_of_rows([&](int i, int j) { return (*this)(i, j); }, n_, n_, *F_);
    }

    /// column vector image
    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
        const small_gf& F = *F_;
        std::vector<std::uint32_t> r(n_, 0);
        for (int i = 0; i < n_; ++i) {
            std::uint32_t s = 0;
            for (int j = 0; j < n_; ++j) s = F.add(s, F.mul((*this)(i, j), v[j]));
            r[i] = s;
        }
        return r;
    }

    /// minimal polynomial (monic, constant first) via Krylov subspaces
    std::vector<std::uint32_t> min_poly() const;

    /// compact hashable key
    std::string key() const {
        std::string s;
        s.reserve(a_.size() * (F_->q() <= 0xff ? 1 : 4));
        if (F_->q() <= 0xff) {
            for (auto v : a_) s.push_back(static_cast<char>(v));
        } else {
            for (auto v : a_)
                for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
        }
        return s;
    }

    /// generic row reduction; returns rank, reduces `rows` in place (rref)
    static int row_reduce(std::vector<std::vector<std::uint32_t>>& rows, const small_gf& F) {
        if (rows.empty()) return 0;
        int m = static_cast<int>(rows.size());
        int cols = static_cast<int>(rows[0].size());
        int r = 0;
        for (int c = 0; c < cols && r < m; ++c) {
            int piv = -1;
            for (int i = r; i < m; ++i)
                if (rows[i][c]) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[r], rows[piv]);
            std::uint32_t inv = F.inv(rows[r][c]);
            for (auto& v : rows[r]) v = F.mul(v, inv);
            for (int i = 0; i < m; ++i) {
                if (i == r || !rows[i][c]) continue;
                std::uint32_t f = rows[i][c];
                for (int j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
            }
            ++r;
        }
        return r;
    }

    template <class EntryFn>
    static std::vector<std::vector<std::uint32_t>> kernel_of_rows(EntryFn entry, int nrows, int ncols,
                                                                  const small_gf& F) {
        std::vector<std::vector<std::uint32_t>> rows(nrows, std::vector<std::uint32_t>(ncols));
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) rows[i][j] = entry(i, j);
        row_reduce(rows, F);
        // locate pivot columns
        std::vector<int> pivot_of_col(ncols, -1);
        int r = 0;
        for (int i = 0; i < nrows; ++i) {
            int c = -1;
            for (int j = 0; j < ncols; ++j)
                if (rows[i][j]) {
                    c = j;
                    break;
                }
            if (c < 0) break;
            pivot_of_col[c] = i;
            ++r;
        }
        std::vector<std::vector<std::uint32_t>> basis;
        for (int c = 0; c < ncols; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<std::uint32_t> v(ncols, 0);
            v[c] = 1;
            for (int j = 0; j < ncols; ++j) {
                int pi = pivot_of_col[j];
                if (pi >= 0) v[j] = F.neg(rows[pi][c]);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    gf_ptr F_;
    int n_ = 0;
    std::vector<std::uint32_t> a_;
};

inline std::vector<std::uint32_t> fq_matrix::min_poly() const {
    const small_gf& F = *F_;
    poly_ops<small_gf> P(F);
    std::vector<std::uint32_t> m{1};  // product of local minimal polynomials
    // accumulated row space of processed Krylov vectors, kept in echelon form
    std::vector<std::vector<std::uint32_t>> space;
    auto reduce_against = [&](std::vector<std::uint32_t> v) {
        for (const auto& row : space) {
            int lead = -1;
            for (int j = 0; j < n_; ++j)
                if (row[j]) {
                    lead = j;
                    break;
                }
            if (lead >= 0 && v[lead]) {
                std::uint32_t f = F.mul(v[lead], F.inv(row[lead]));
                for (int j = 0; j < n_; ++j) v[j] = F.sub(v[j], F.mul(f, row[j]));
            }
        }
        return v;
    };
    for (int start = 0; start < n_ && static_cast<int>(space.size()) < n_; ++start) {
        std::vector<std::uint32_t> v(n_, 0);
        v[start] = 1;
        std::vector<std::uint32_t> v_red = reduce_against(v);
        if (std::all_of(v_red.begin(), v_red.end(), [](std::uint32_t x) { return x == 0; }))
            continue;
        // Krylov chain for v against the whole processed space: records a
        // dependence m_v with m_v(A)v in the processed space, so lcm of the
        // m_v is the minimal polynomial.
        std::vector<std::vector<std::uint32_t>> chain;     // echelon rows
        std::vector<std::vector<std::uint32_t>> chain_coeff;  // poly coords of each row
        std::vector<std::uint32_t> cur = v;
        std::vector<std::uint32_t> curpoly{1};  // x^0
        while (true) {
            // reduce cur against space then chain, tracking coefficients
            std::vector<std::uint32_t> red = reduce_against(cur);
            std::vector<std::uint32_t> coeff = curpoly;
            for (std::size_t k = 0; k < chain.size(); ++k) {
                int lead = -1;
                for (int j = 0; j < n_; ++j)
                    if (chain[k][j]) {
                        lead = j;
                        break;
                    }
                if (lead >= 0 && red[lead]) {
                    std::uint32_t f = F.mul(red[lead], F.inv(chain[k][lead]));
                    for (int j = 0; j < n_; ++j) red[j] = F.sub(red[j], F.mul(f, chain[k][j]));
                    if (coeff.size() < chain_coeff[k].size()) coeff.resize(chain_coeff[k].size(), 0);
                    for (std::size_t j = 0; j < chain_coeff[k].size(); ++j)
                        coeff[j] = F.sub(coeff[j], F.mul(f, chain_coeff[k][j]));
                }
            }
            bool zero = std::all_of(red.begin(), red.end(), [](std::uint32_t x) { return x == 0; });
            if (zero) {
                P.normalize(coeff);
                auto local = P.make_monic(coeff);
                // m = lcm(m, local)
                auto g = P.gcd(m, local);
                std::vector<std::uint32_t> q, r;
                P.divrem(local, g, q, r);
                m = P.make_monic(P.mul(m, q));
                break;
            }
            chain.push_back(red);
            chain_coeff.push_back(coeff);
            cur = apply(cur);
            curpoly.insert(curpoly.begin(), 0);  // multiply by x
        }
        // fold the chain into the processed space; leads stay pairwise
        // distinct, so reduce_against keeps working row by row
        for (auto& row : chain) space.push_back(row);
    }
    return m;
}

}  // namespace unram

#endif
