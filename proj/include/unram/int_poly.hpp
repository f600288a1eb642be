#ifndef UNRAM_INT_POLY_HPP
#define UNRAM_INT_POLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "unram/fp_poly.hpp"

namespace unram {

/// Univariate polynomial with exact integer coefficients, constant term
/// first, normalized.
class int_polynomial {
  public:
    int_polynomial() = default;
    explicit int_polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Int& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Int operator()(const Int& x) const {
        Int r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    int_polynomial derivative() const {
        if (coeffs_.size() <= 1) return int_polynomial{};
        std::vector<Int> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Int(i);
        return int_polynomial(std::move(d));
    }

    fp_polynomial reduce_mod(const Int& p) const {
        return fp_polynomial(prime_field(p), coeffs_);
    }

    bool operator==(const int_polynomial& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<Int> coeffs_;
};

namespace detail {

inline int ip_deg(const std::vector<Int>& a) { return static_cast<int>(a.size()) - 1; }

inline void ip_norm(std::vector<Int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b, exact over Z
inline std::vector<Int> ip_prem(std::vector<Int> a, const std::vector<Int>& b) {
    const int da0 = ip_deg(a), db = ip_deg(b);
    const Int& lb = b.back();
    int steps = 0;
    int da = da0;
    while (da >= db && !a.empty()) {
        Int ca = a.back();
        std::vector<Int> next(a.size() - 1);
        for (int i = 0; i < static_cast<int>(a.size()) - 1; ++i) {
            Int v = a[i] * lb;
            int j = i - (da - db);
            if (j >= 0 && j < db) v -= ca * b[j];
            next[i] = v;
        }
        ++steps;
        a = std::move(next);
        ip_norm(a);
        da = ip_deg(a);
    }
    // early cancellation may shortcut degree steps; pad the lc(b) factors so
    // the result is exactly lc(b)^{da0-db+1} * a mod b
    for (; steps < da0 - db + 1; ++steps)
        for (auto& c : a) c *= lb;
    return a;
}

}  // namespace detail

/// Resultant of f and g over Z, exact, via the subresultant PRS.
inline Int resultant(const int_polynomial& f, const int_polynomial& g) {
    std::vector<Int> a = f.coeffs(), b = g.coeffs();
    if (a.empty() || b.empty()) return 0;
    int s = 1;
    Int gg = 1, h = 1;
    while (true) {
        int da = detail::ip_deg(a), db = detail::ip_deg(b);
        if (da < db) {
            std::swap(a, b);
            if (da % 2 == 1 && db % 2 == 1) s = -s;
            continue;
        }
        if (db == 0) {
            // res = b^da up to the accumulated normalization
            if (da == 0) return Int(s);  // both constants: empty Sylvester matrix
            Int num = 1;
            for (int i = 0; i < da; ++i) num *= b[0];
            // divide by h^{da-1}: exact by subresultant theory
            Int den = 1;
            for (int i = 0; i < da - 1; ++i) den *= h;
            return Int(s) * num / den;
        }
        int delta = da - db;
        std::vector<Int> r = detail::ip_prem(a, b);
        if (r.empty()) return 0;
        if (da % 2 == 1 && db % 2 == 1) s = -s;
        a = std::move(b);
        // b = r / (g * h^delta), exact
        Int den = gg;
        for (int i = 0; i < delta; ++i) den *= h;
        b = std::move(r);
        for (auto& c : b) c /= den;
        gg = a.back();
        // h = g^delta / h^{delta-1}
        Int hn = 1;
        for (int i = 0; i < delta; ++i) hn *= gg;
        Int hd = 1;
        for (int i = 0; i < delta - 1; ++i) hd *= h;
        h = hn / hd;
    }
}

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f), exact.
inline Int int_poly_discriminant(const int_polynomial& f) {
    if (f.degree() < 2) throw error("discriminant needs degree >= 2");
    Int r = resultant(f, f.derivative());
    int n = f.degree();
    Int d = r / f.leading();
    if ((Int(n) * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

/// Full canonical factorization of f mod p.  Deterministic: the equal-degree
/// splitting seed is fixed (and recorded in the result), and the canonical
/// sort removes any dependence on it.
inline fp_factorization factor_mod_p(const int_polynomial& f, const Int& p,
                                     std::uint64_t seed = default_factor_seed) {
    fp_polynomial fbar = f.reduce_mod(p);
    if (fbar.is_zero()) throw zero_polynomial();
    return factor_fp(fbar, seed);
}

/// Dedekind's criterion: true iff p does not divide the index
/// [O_K : Z[x]/(f)].  f must be monic (irreducibility over Q is assumed, not
/// checked here).
inline bool dedekind_index_test(const int_polynomial& f, const Int& p) {
    if (!f.is_monic()) throw error("dedekind test needs a monic polynomial");
    auto fac = factor_mod_p(f, p);
    fp_context K(p);
    poly_ops<fp_context> P(K);
    // g1 = product of the distinct irreducible factors, h1 = fbar / g1
    std::vector<Int> g1{Int(1)}, h1{Int(1)};
    for (const auto& [g, mult] : fac.factors) {
        g1 = P.mul(g1, g.coeffs());
        for (int i = 1; i < mult; ++i) h1 = P.mul(h1, g.coeffs());
    }
    // lift both to monic integer polynomials with coefficients in [0, p)
    int_polynomial G{std::vector<Int>(g1)};
    int_polynomial H{std::vector<Int>(h1)};
    // T = (G*H - f) / p over Z, exact since G*H = f mod p
    std::vector<Int> gh(std::max<std::size_t>(G.coeffs().size() + H.coeffs().size(), 1) - 1, Int(0));
    for (std::size_t i = 0; i < G.coeffs().size(); ++i)
        for (std::size_t j = 0; j < H.coeffs().size(); ++j) gh[i + j] += G.coeffs()[i] * H.coeffs()[j];
    std::vector<Int> T(std::max(gh.size(), f.coeffs().size()), Int(0));
    for (std::size_t i = 0; i < T.size(); ++i) {
        Int v = (i < gh.size() ? gh[i] : Int(0)) - (i < f.coeffs().size() ? f.coeffs()[i] : Int(0));
        if (v % p != 0) throw error("dedekind internal: g*h != f mod p");
        T[i] = v / p;
    }
    std::vector<Int> Tbar;
    Tbar.reserve(T.size());
    for (auto& c : T) Tbar.push_back(K.reduce(c));
    P.normalize(Tbar);
    auto d = P.gcd(P.gcd(Tbar, g1), h1);
    return poly_ops<fp_context>::deg(d) <= 0;
}

/// Multiset of (ramification index e, inertia degree f) pairs.
struct splitting_type {
    std::vector<std::pair<int, int>> pairs;  // sorted

    int degree_sum() const {
        int s = 0;
        for (auto& [e, f] : pairs) s += e * f;
        return s;
    }
    bool ramified() const {
        return std::any_of(pairs.begin(), pairs.end(), [](auto& p) { return p.first > 1; });
    }
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i) s += ",";
            s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
        }
        return s + "}";
    }
    bool operator==(const splitting_type& o) const { return pairs == o.pairs; }
};

/// Splitting type of p in Q[x]/(f), read off the mod-p factorization.  Only
/// valid when Z[x]/(f) is p-maximal, which is why the certificate format
/// demands an explicit Dedekind step first.
inline splitting_type splitting_type_at(const int_polynomial& f, const Int& p) {
    if (!dedekind_index_test(f, p)) throw not_maximal_at_p(p.str());
    auto fac = factor_mod_p(f, p);
    splitting_type st;
    for (const auto& [g, mult] : fac.factors) st.pairs.emplace_back(mult, g.degree());
    std::sort(st.pairs.begin(), st.pairs.end());
    return st;
}

}  // namespace unram

#endif
