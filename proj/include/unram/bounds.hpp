#ifndef UNRAM_BOUNDS_HPP
#define UNRAM_BOUNDS_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unram/reals.hpp"

namespace unram {

/// One row of the GRH discriminant-bound table: d_K > A^{r1} B^{2 r2}
/// e^{f - E} for fields with the given analytic parameter b.  A and B are
/// lower estimates; E is rounded up from the closed form, by at most 0.01.
struct bound_table_entry {
    Real b;
    std::optional<Real> A;  // totally real constant
    std::optional<Real> B;  // complex-place constant
    Real E;
    std::string source;
};

/// Recorded lower bound B(n, r1, r2) for the root discriminant of any field
/// with at least this degree and the same signature family; monotone
/// nondecreasing in n along each family.
struct asymptotic_bound {
    Int n;
    Int r1, r2;
    Real bound;
    std::string source;

    bool totally_real() const { return r2 == 0; }
    bool totally_imaginary() const { return r1 == 0; }
};

/// |d|^{1/n} at full working precision (>= 30 significant digits).
inline Real root_discriminant(const Int& abs_disc, const Int& n) {
    if (abs_disc < 1 || n < 1) throw error("root_discriminant needs |d| >= 1, n >= 1");
    return pow(to_real(abs_disc), Real(1) / to_real(n));
}

/// rd transfer along a tower: unramified at all finite places means
/// equality, otherwise only monotonicity.  Returns the rd of the extension.
inline Real tower_root_discriminant(const Real& rd_base, bool unramified) {
    if (!unramified) throw error("tower rd equality needs an unramified extension");
    return rd_base;
}

/// E(b) = 8 pi^2 b ((e^{b/2} + e^{-b/2}) / (pi^2 + b^2))^2, the true value
/// the table's E column rounds up from.
inline Real martinet_E(const Real& b) {
    if (b <= 0) throw error("martinet_E needs b > 0");
    Real pi = real_pi();
    Real num = exp(b / 2) + exp(-b / 2);
    Real den = pi * pi + b * b;
    Real ratio = num / den;
    return 8 * pi * pi * b * ratio * ratio;
}

/// G(x) = (1 - x/2) cos(pi x / 2) + (1/pi) sin(pi x / 2) on [0, 2], zero
/// beyond; the even weight of the explicit formula under GRH.
inline Real weight_G(const Real& x) {
    if (x < 0) throw error("weight_G is used on x >= 0");
    if (x >= 2) return Real(0);
    Real pi = real_pi();
    return (1 - x / 2) * cos(pi * x / 2) + sin(pi * x / 2) / pi;
}

inline Real weight_F(const Real& x, const Real& b) { return weight_G(x / b); }

/// (norm N(p), count) pairs of the prime ideals fed into the f-series.
struct local_prime_data {
    struct entry {
        Int norm;
        Int count;
    };
    std::vector<entry> entries;
};

/// Truncated prime-ideal sum f >= 2 sum_p sum_{m<=m_max} log N / N^{m/2} *
/// F(m log N).  Every term is nonnegative, so any truncation is a valid
/// lower bound for the full series.
inline Real f_series(const local_prime_data& local, const Real& b, int m_max = 100) {
    if (b <= 0) throw error("f_series needs b > 0");
    Real total = 0;
    for (const auto& e : local.entries) {
        if (e.norm < 2 || e.count < 1) throw error("local data needs norms >= 2 and counts >= 1");
        Real logN = log(to_real(e.norm));
        Real sum = 0;
        for (int m = 1; m <= m_max; ++m) {
            Real w = weight_F(m * logN, b);
            if (w == 0 && to_real(m) * logN > 2 * b) break;  // G vanishes from here on
            sum += logN / pow(to_real(e.norm), Real(m) / 2) * w;
        }
        total += 2 * to_real(e.count) * sum;
    }
    return total;
}

/// (A^{r1} B^{2 r2} e^{f - E})^{1/n}: the GRH lower bound for the root
/// discriminant given the table row.  Fails loudly when the row lacks the
/// constant the signature needs.
inline Real grh_rd_lower_bound(const Int& n, const Int& r1, const Int& r2,
                               const bound_table_entry& entry, const Real& f) {
    if (r1 + 2 * r2 != n) throw error("signature does not match the degree");
    Real log_bound = f - entry.E;
    if (r1 > 0) {
        if (!entry.A) throw missing_constant("A at b = " + format_real(entry.b, 6));
        log_bound += to_real(r1) * log(*entry.A);
    }
    if (r2 > 0) {
        if (!entry.B) throw missing_constant("B at b = " + format_real(entry.b, 6));
        log_bound += 2 * to_real(r2) * log(*entry.B);
    }
    return exp(log_bound / to_real(n));
}

/// Degree bound: if rd < bound(n_e, ...) for a recorded entry in the right
/// signature family, monotonicity forces [K_ur : Q] < n_e, so
/// [K_ur : M] < n_e / [M : Q].  Picks the applicable entry with the smallest
/// n_e (the strongest bound).
struct degree_bound_result {
    asymptotic_bound entry;
    Rational bound;  // n_e / base_degree
};

inline degree_bound_result degree_bound(const Real& rd, const std::vector<asymptotic_bound>& asym,
                                        const Int& base_degree, bool totally_real,
                                        const Real& margin = Real("1e-3")) {
    const asymptotic_bound* best = nullptr;
    for (const auto& e : asym) {
        if (totally_real != e.totally_real()) continue;
        if (rd + margin >= e.bound) continue;  // entry does not dominate this rd
        if (!best || e.n < best->n) best = &e;
    }
    if (!best) throw no_applicable_entry();
    return {*best, Rational(best->n, base_degree)};
}

/// Yamamura-style check: an unramified normal L/K of degree m with trivial
/// class group pins K_ur once rd_K clears a recorded bound at or above the
/// threshold degree 60 m n_K.  True iff some recorded entry of the matching
/// family has n_e >= 60 m n_K and bound > rd_K.
inline bool yamamura_check(const Real& rd_K, const Int& m, const Int& n_K, const Int& r1,
                           const Int& r2, const std::vector<asymptotic_bound>& asym,
                           const Real& margin = Real("1e-3")) {
    Int target_n = 60 * m * n_K;
    bool want_real = (r2 == 0);
    (void)r1;
    bool found_family = false;
    for (const auto& e : asym) {
        if (want_real != e.totally_real()) continue;
        found_family = true;
        if (e.n >= target_n && rd_K + margin < e.bound) return true;
    }
    if (!found_family) throw no_applicable_entry();
    return false;
}

// ---------------------------------------------------------------------------
// plain-text table files
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_table_line(const std::string& line) {
    std::vector<std::string> cols;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            continue;
        }
        if (!quoted && (ch == ' ' || ch == '\t')) {
            if (!cur.empty()) cols.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) cols.push_back(std::move(cur));
    return cols;
}

}  // namespace detail

/// columns: b  A  B  E  "source";  absent constants written as "-"
inline std::vector<bound_table_entry> load_bound_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open bound table: " + path);
    std::vector<bound_table_entry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto cols = detail::split_table_line(line);
        if (cols.size() < 5) throw parse_error(lineno, "expected: b A B E source");
        bound_table_entry e;
        e.b = parse_real(cols[0]);
        if (cols[1] != "-") e.A = parse_real(cols[1]);
        if (cols[2] != "-") e.B = parse_real(cols[2]);
        e.E = parse_real(cols[3]);
        e.source = cols[4];
        out.push_back(std::move(e));
    }
    return out;
}

/// columns: n  r1  r2  bound  "source"
inline std::vector<asymptotic_bound> load_asymptotic_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open asymptotic table: " + path);
    std::vector<asymptotic_bound> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto cols = detail::split_table_line(line);
        if (cols.size() < 5) throw parse_error(lineno, "expected: n r1 r2 bound source");
        asymptotic_bound e;
        e.n = Int(cols[0]);
        e.r1 = Int(cols[1]);
        e.r2 = Int(cols[2]);
        e.bound = parse_real(cols[3]);
        e.source = cols[4];
        out.push_back(std::move(e));
    }
    return out;
}

inline const bound_table_entry& find_bound_row(const std::vector<bound_table_entry>& table,
                                               const Real& b) {
    for (const auto& e : table)
        if (abs(e.b - b) < Real("1e-9")) return e;
    throw missing_constant("no table row with b = " + format_real(b, 6));
}

}  // namespace unram

#endif
