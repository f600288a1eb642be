#ifndef UNRAM_ERRORS_HPP
#define UNRAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unram {

/// Base class for every error the toolkit raises on purpose.  Callers that
/// want to distinguish "the computation refused" from "the computation is
/// wrong" catch this instead of std::exception.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct zero_polynomial : error {
    zero_polynomial() : error("polynomial is zero modulo p") {}
};

struct not_prime : error {
    explicit not_prime(const std::string& v) : error("not a prime: " + v) {}
};

struct not_irreducible : error {
    not_irreducible() : error("modulus polynomial is not irreducible") {}
};

struct not_maximal_at_p : error {
    explicit not_maximal_at_p(const std::string& p)
        : error("Z[x]/(f) is not maximal at p = " + p +
                "; the splitting type must be supplied as a trusted claim") {}
};

struct cap_exceeded : error {
    explicit cap_exceeded(std::size_t cap)
        : error("group closure exceeded cap " + std::to_string(cap)) {}
};

struct order_cap_exceeded : error {
    order_cap_exceeded() : error("element order computation exceeded its cap") {}
};

struct enumeration_too_large : error {
    explicit enumeration_too_large(std::size_t dim)
        : error("commutant of dimension " + std::to_string(dim) +
                " is too large to enumerate and is not a field"),
          dimension(dim) {}
    std::size_t dimension;
};

struct inconclusive : error {
    inconclusive() : error("module decomposition search budget exhausted") {}
};

struct no_such_element : error {
    no_such_element() : error("no Singer element with the requested order") {}
};

struct scan_too_large : error {
    scan_too_large() : error("full group scan larger than the configured cap") {}
};

struct needs_closure : error {
    needs_closure() : error("operation needs the full element set; run group_closure first") {}
};

struct odd_permutation : error {
    odd_permutation() : error("cycle type describes an odd permutation") {}
};

struct out_of_table : error {
    explicit out_of_table(const std::string& what) : error("outside table range: " + what) {}
};

struct not_coprime : error {
    not_coprime() : error("arguments are not coprime") {}
};

struct square_input : error {
    square_input() : error("input is a perfect square; no quadratic field") {}
};

struct not_fundamental : error {
    not_fundamental() : error("discriminant is not fundamental") {}
};

struct missing_constant : error {
    explicit missing_constant(const std::string& what)
        : error("bound table row is missing a constant: " + what) {}
};

struct no_applicable_entry : error {
    no_applicable_entry() : error("no recorded asymptotic bound entry applies") {}
};

struct wild_case : error {
    wild_case() : error("wild ramification: Abhyankar's lemma does not apply") {}
};

struct parse_error : error {
    parse_error(std::size_t line, const std::string& what)
        : error("parse error at line " + std::to_string(line) + ": " + what) {}
};

struct validation_error : error {
    explicit validation_error(const std::string& what) : error("invalid certificate: " + what) {}
};

}  // namespace unram

#endif
