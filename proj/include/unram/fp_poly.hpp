#ifndef UNRAM_FP_POLY_HPP
#define UNRAM_FP_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "unram/fields.hpp"
#include "unram/poly_factor.hpp"

namespace unram {

/// Polynomial over F_p, exact coefficients, normalized (empty = zero).
class fp_polynomial {
  public:
    fp_polynomial(prime_field field, std::vector<Int> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        fp_context K(field_.p());
        for (auto& c : coeffs_) c = K.reduce(c);
        poly_ops<fp_context>(K).normalize(coeffs_);
    }

    const prime_field& field() const { return field_; }
    const Int& p() const { return field_.p(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    bool operator==(const fp_polynomial& o) const {
        return p() == o.p() && coeffs_ == o.coeffs_;
    }

    /// plain mathematical rendering, descending powers: "x^2+3x+12"
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0)
                s += c.str();
            else {
                if (c != 1) s += c.str();
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

  private:
    prime_field field_;
    std::vector<Int> coeffs_;
};

/// Canonical factorization over F_p: unit * prod factors^mult with the
/// factors monic, pairwise distinct, sorted by (degree, coefficient list as
/// integers 0..p-1, constant term first).  `seed` records the equal-degree
/// splitting seed that produced it.
struct fp_factorization {
    Int p;
    Int unit;
    std::vector<std::pair<fp_polynomial, int>> factors;
    std::uint64_t seed = default_factor_seed;

    /// exactly the shape the display strings in the source material use:
    /// "(x+12)^2 (x+15)^2 (x^2+3x+12)", bare monomial factors unparenthesized
    std::string to_string() const {
        std::string s;
        if (unit != 1) s = unit.str();
        for (const auto& [f, mult] : factors) {
            if (!s.empty()) s += " ";
            bool bare = f.degree() == 1 && f.coeffs()[0] == 0;  // the factor "x"
            s += bare ? "x" : "(" + f.to_string() + ")";
            if (mult > 1) s += "^" + std::to_string(mult);
        }
        return s.empty() ? unit.str() : s;
    }

    fp_polynomial product() const {
        fp_context K(p);
        poly_ops<fp_context> P(K);
        std::vector<Int> acc{K.reduce(unit)};
        for (const auto& [f, mult] : factors)
            for (int i = 0; i < mult; ++i) acc = P.mul(acc, f.coeffs());
        return fp_polynomial(prime_field(p), acc);
    }
};

/// Canonical factorization of f over its field.  Squarefree decomposition,
/// then distinct-degree, then seeded equal-degree splitting; the canonical
/// sort makes the output independent of the seed.
inline fp_factorization factor_fp(const fp_polynomial& f, std::uint64_t seed = default_factor_seed) {
    if (f.is_zero()) throw zero_polynomial();
    fp_context K(f.p());
    poly_factorizer<fp_context> fac(K, seed);
    auto raw = fac.factor(f.coeffs());
    fp_factorization out;
    out.p = f.p();
    out.unit = raw.unit;
    out.seed = seed;
    for (auto& [g, mult] : raw.factors)
        out.factors.emplace_back(fp_polynomial(prime_field(f.p()), std::move(g)), mult);
    return out;
}

inline bool is_irreducible(const fp_polynomial& f) {
    if (f.is_zero()) throw zero_polynomial();
    fp_context K(f.p());
    poly_factorizer<fp_context> fac(K);
    return fac.is_irreducible(f.coeffs());
}

}  // namespace unram

#endif
