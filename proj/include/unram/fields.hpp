#ifndef UNRAM_FIELDS_HPP
#define UNRAM_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "unram/integers.hpp"

namespace unram {

/// F_p with arbitrary-precision p.  Primality is certified on construction
/// (deterministic Miller-Rabin witnesses below 3.4e14, fixed witness set
/// above).
class prime_field {
  public:
    explicit prime_field(Int p) : p_(std::move(p)) {
        if (!is_probable_prime(p_)) throw not_prime(p_.str());
    }
    const Int& p() const { return p_; }
    bool operator==(const prime_field& o) const { return p_ == o.p_; }

  private:
    Int p_;
};

/// Field policy over F_p with cpp_int elements.  This is the coefficient
/// domain of the public polynomial API; no machine-word shortcuts leak out.
struct fp_context {
    Int p;

    using elem = Int;

    explicit fp_context(Int prime) : p(std::move(prime)) {}
    explicit fp_context(const prime_field& f) : p(f.p()) {}

    Int characteristic() const { return p; }
    Int field_order() const { return p; }
    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem reduce(const Int& v) const {
        Int r = v % p;
        if (r < 0) r += p;
        return r;
    }
    bool is_zero(const elem& a) const { return a == 0; }
    elem add(const elem& a, const elem& b) const { return (a + b) % p; }
    elem sub(const elem& a, const elem& b) const { return reduce(a - b); }
    elem neg(const elem& a) const { return a == 0 ? a : p - a; }
    elem mul(const elem& a, const elem& b) const { return (a * b) % p; }
    elem inv(const elem& a) const {
        if (a == 0) throw error("division by zero in F_p");
        return powmod(a, p - 2, p);
    }
    /// Frobenius is the identity on the prime field, so p-th roots are free.
    elem pth_root(const elem& a) const { return a; }
    elem rand(std::mt19937_64& rng) const {
        // rejection-free enough: draw 64-bit blocks and reduce
        Int v = 0;
        std::size_t bits = boost::multiprecision::msb(p) + 1;
        for (std::size_t got = 0; got < bits + 64; got += 64) v = (v << 64) | Int(rng());
        return reduce(v);
    }
    bool less(const elem& a, const elem& b) const { return a < b; }
};

/// Small finite field F_q, q = p^d with q capped at machine scale: the
/// workhorse behind matrix-group computation.  Elements are encoded as
/// base-p digit strings packed into a uint32 (constant digit first), so the
/// canonical representative ordering is plain integer comparison.
class small_gf {
  public:
    using elem = std::uint32_t;

    /// Prime field.
    explicit small_gf(std::uint32_t p) : p_(p), d_(1), q_(p) {
        if (!is_probable_prime(Int(p))) throw not_prime(std::to_string(p));
    }

    /// Extension field F_{p^d} with a monic irreducible modulus given by its
    /// non-leading coefficients, constant first.  Irreducibility is the
    /// caller's responsibility at this level; ext_field validates it.
    small_gf(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus)
        : p_(p), d_(d), q_(1), modulus_(std::move(modulus)) {
        if (!is_probable_prime(Int(p))) throw not_prime(std::to_string(p));
        if (d_ < 1 || modulus_.size() != d_) throw error("bad extension modulus");
        for (std::uint32_t i = 0; i < d_; ++i) q_ *= p_;
        if (q_ > (1u << 26)) throw error("small_gf supports q up to 2^26 only");
        if (d_ > 1 && q_ <= 4096) build_mul_table();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Int characteristic() const { return Int(p_); }
    Int field_order() const { return Int(q_); }
    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(elem a) const { return a == 0; }
    bool less(elem a, elem b) const { return a < b; }

    elem from_int(std::uint64_t v) const { return static_cast<elem>(v % q_); }

    elem add(elem a, elem b) const {
        if (d_ == 1) return static_cast<elem>((std::uint64_t(a) + b) % p_);
        elem r = 0, mult = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            r += ((a % p_ + b % p_) % p_) * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return r;
    }
    elem neg(elem a) const {
        if (d_ == 1) return a == 0 ? 0 : p_ - a;
        elem r = 0, mult = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            std::uint32_t dig = a % p_;
            r += (dig == 0 ? 0 : p_ - dig) * mult;
            a /= p_;
            mult *= p_;
        }
        return r;
    }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }

    elem mul(elem a, elem b) const {
        if (d_ == 1) return static_cast<elem>((std::uint64_t(a) * b) % p_);
        if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
        return mul_generic(a, b);
    }

    elem pow(elem a, Int e) const {
        elem r = 1;
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    elem inv(elem a) const {
        if (a == 0) throw error("division by zero in F_q");
        return pow(a, Int(q_) - 2);
    }

    /// a^{1/p} = a^{q/p}; exact since Frobenius is an automorphism.
    elem pth_root(elem a) const { return pow(a, Int(q_) / p_); }

    elem rand(std::mt19937_64& rng) const { return static_cast<elem>(rng() % q_); }

    /// digit i = coefficient of x^i in the polynomial representative
    std::uint32_t digit(elem a, std::uint32_t i) const {
        for (std::uint32_t k = 0; k < i; ++k) a /= p_;
        return a % p_;
    }
    elem from_digits(const std::vector<std::uint32_t>& digs) const {
        elem r = 0, mult = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            r += (i < digs.size() ? digs[i] % p_ : 0) * mult;
            mult *= p_;
        }
        return r;
    }

  private:
    elem mul_generic(elem a, elem b) const {
        // schoolbook product of the digit vectors, reduced mod the modulus
        std::vector<std::uint32_t> prod(2 * d_ - 1, 0);
        std::vector<std::uint32_t> da(d_), db(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (std::uint32_t i = 0; i < d_; ++i)
            for (std::uint32_t j = 0; j < d_; ++j)
                prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
        for (std::uint32_t k = 2 * d_ - 2; k >= d_; --k) {
            std::uint32_t c = prod[k];
            if (c) {
                prod[k] = 0;
                for (std::uint32_t j = 0; j < d_; ++j) {
                    std::uint64_t sub = std::uint64_t(c) * modulus_[j] % p_;
                    prod[k - d_ + j] = (prod[k - d_ + j] + p_ - sub) % p_;
                }
            }
            if (k == d_) break;
        }
        elem r = 0, mult = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            r += prod[i] * mult;
            mult *= p_;
        }
        return r;
    }

    void build_mul_table() {
        mul_table_.assign(std::size_t(q_) * q_, 0);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = a; b < q_; ++b) {
                elem v = mul_generic(static_cast<elem>(a), static_cast<elem>(b));
                mul_table_[a * q_ + b] = v;
                mul_table_[b * q_ + a] = v;
            }
    }

    std::uint32_t p_, d_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<elem> mul_table_;
};

using gf_ptr = std::shared_ptr<const small_gf>;

}  // namespace unram

#endif
