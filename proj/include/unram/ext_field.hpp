#ifndef UNRAM_EXT_FIELD_HPP
#define UNRAM_EXT_FIELD_HPP

#include <memory>
#include <utility>

#include "unram/fields.hpp"
#include "unram/fp_poly.hpp"

namespace unram {

/// F_{p^d} described by a monic irreducible modulus over F_p.  Arithmetic is
/// polynomial arithmetic mod (modulus, p); irreducibility is checked on
/// construction.
class ext_field {
  public:
    ext_field(prime_field base, fp_polynomial modulus)
        : base_(std::move(base)), modulus_(std::move(modulus)) {
        if (modulus_.p() != base_.p()) throw error("modulus lives over a different prime");
        if (modulus_.degree() < 1 || modulus_.coeffs().back() != 1)
            throw error("modulus must be monic of degree >= 1");
        if (!is_irreducible(modulus_)) throw not_irreducible();
    }

    const prime_field& base() const { return base_; }
    const fp_polynomial& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    Int order() const { return int_pow(base_.p(), static_cast<unsigned long>(degree())); }

    /// machine-word twin used by the matrix-group layer; requires small p^d
    gf_ptr to_small_gf() const {
        std::uint32_t p = static_cast<std::uint32_t>(base_.p());
        if (Int(p) != base_.p()) throw error("prime too large for small_gf");
        if (degree() == 1) return std::make_shared<small_gf>(p);
        std::vector<std::uint32_t> mod(degree());
        for (int i = 0; i < degree(); ++i)
            mod[i] = static_cast<std::uint32_t>(modulus_.coeffs()[i]);
        return std::make_shared<small_gf>(p, degree(), std::move(mod));
    }

  private:
    prime_field base_;
    fp_polynomial modulus_;
};

}  // namespace unram

#endif
