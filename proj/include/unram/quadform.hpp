#ifndef UNRAM_QUADFORM_HPP
#define UNRAM_QUADFORM_HPP

#include <tuple>
#include <vector>

#include "unram/integers.hpp"

namespace unram {

/// Discriminant of a quadratic field, with the fundamentality predicate.
struct quad_discriminant {
    Int D;
    bool fundamental;
};

inline bool discriminant_is_fundamental(const Int& D) {
    if (D == 0 || D == 1) return false;
    Int r = ((D % 4) + 4) % 4;
    if (r == 1) {
        Int k = squarefree_kernel(D);
        return k == D;
    }
    if (r != 0) return false;
    Int m = D / 4;
    Int rm = ((m % 4) + 4) % 4;
    return squarefree_kernel(m) == m && (rm == 2 || rm == 3);
}

/// Discriminant of Q(sqrt(d)) for a nonsquare integer d.
inline quad_discriminant fundamental_discriminant(const Int& d) {
    if (d == 0 || is_square(d)) throw square_input();
    Int m = squarefree_kernel(d);
    Int D = (((m % 4) + 4) % 4 == 1) ? m : 4 * m;
    return {D, true};
}

/// Primitive integral binary quadratic form a x^2 + b xy + c y^2.
struct quad_form {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    bool primitive() const { return gcd(gcd(a, b), c) == 1; }
    bool operator==(const quad_form& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const quad_form& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
    std::string to_string() const { return "(" + a.str() + "," + b.str() + "," + c.str() + ")"; }
};

/// principal form of discriminant D
inline quad_form principal_form(const Int& D) {
    Int b = ((D % 2) + 2) % 2;  // 0 or 1 matching D mod 4
    return {1, b, (b * b - D) / 4};
}

// ---------------------------------------------------------------------------
// imaginary (definite) reduction
// ---------------------------------------------------------------------------

/// reduce a positive definite form: -a < b <= a <= c, b >= 0 if a == c
inline quad_form reduce_imaginary(quad_form f) {
    while (true) {
        // normalize b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            Int twoa = 2 * f.a;
            Int r = ((f.b % twoa) + twoa) % twoa;  // in [0, 2a)
            if (r > f.a) r -= twoa;                 // in (-a, a]
            Int t = (r - f.b) / twoa;
            f.c += t * (f.b + f.a * t);
            f.b = r;
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

/// every primitive reduced form of a fundamental discriminant D < 0
inline std::vector<quad_form> reduced_imaginary_forms(const Int& D) {
    std::vector<quad_form> out;
    for (Int b = ((D % 2) + 2) % 2; 3 * b * b <= -D; b += 2) {
        Int ac4 = b * b - D;
        if (ac4 % 4 != 0) continue;
        Int ac = ac4 / 4;
        for (Int a = b > 0 ? b : 1; a * a <= ac; ++a) {
            if (a == 0 || ac % a != 0) continue;
            Int c = ac / a;
            if (gcd(gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
            if (b > 0 && a != b && a != c) out.push_back({a, -b, c});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// indefinite (real) reduction and cycles
// ---------------------------------------------------------------------------

/// reduced indefinite form: 0 < b < sqrt(D) and |sqrt(D) - 2|a|| < b
inline bool is_reduced_indefinite(const quad_form& f, const Int& D, const Int& sD) {
    if (f.b <= 0 || f.b > sD) return false;
    Int t = 2 * abs(f.a) - f.b;
    if (t >= 0 && t * t >= D) return false;
    Int u = 2 * abs(f.a) + f.b;
    return u * u > D;
}

/// the cycle step: (a,b,c) -> (c, b', (b'^2-D)/(4c)) with b' = -b mod 2|c|
/// landing in the reduction window
inline quad_form rho_indefinite(const quad_form& f, const Int& D, const Int& sD) {
    Int ac = abs(f.c);
    Int twoc = 2 * ac;
    Int t = ((-f.b % twoc) + twoc) % twoc;
    Int bp;
    if (ac > sD) {
        // window (-|c|, |c|]
        bp = t > ac ? t - twoc : t;
    } else {
        // window (sqrt(D) - 2|c|, sqrt(D)): integers in [sD+1-2|c|, sD]
        Int lo = sD + 1 - twoc;
        Int k = (lo - t + twoc - 1) / twoc;  // ceil((lo - t) / 2|c|)
        if (lo > t)
            bp = t + k * twoc;
        else {
            // t may already exceed the window top
            bp = t;
            while (bp > sD) bp -= twoc;
            while (bp < lo) bp += twoc;
        }
    }
    Int cp = (bp * bp - D) / (4 * f.c);
    return {f.c, bp, cp};
}

inline quad_form reduce_indefinite(quad_form f, const Int& D, const Int& sD) {
    int guard = 0;
    while (!is_reduced_indefinite(f, D, sD)) {
        f = rho_indefinite(f, D, sD);
        if (++guard > 100000) throw error("indefinite reduction failed to terminate");
    }
    return f;
}

/// all primitive reduced indefinite forms of discriminant D > 0 (nonsquare)
inline std::vector<quad_form> reduced_indefinite_forms(const Int& D, const Int& sD) {
    std::vector<quad_form> out;
    for (Int b = 1; b <= sD; ++b) {
        if (((D - b * b) % 2) != 0) continue;
        Int prod4 = b * b - D;  // = 4ac < 0
        if (prod4 % 4 != 0) continue;
        Int prod = prod4 / 4;
        Int bound = (sD + b) / 2 + 1;  // |a| <= (sqrt(D)+b)/2 for reduced forms
        for (Int a = 1; a <= bound; ++a) {
            if (prod % a != 0) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Int aa = sign ? -a : a;
                Int c = prod / aa;
                quad_form f{aa, b, c};
                if (!is_reduced_indefinite(f, D, sD)) continue;
                if (!f.primitive()) continue;
                out.push_back(f);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// composition
// ---------------------------------------------------------------------------

namespace detail {

/// extended gcd: returns (g, u, v) with u*x + v*y = g, g >= 0
inline std::tuple<Int, Int, Int> extgcd(const Int& x, const Int& y) {
    if (y == 0) return {x >= 0 ? x : -x, x >= 0 ? 1 : -1, 0};
    Int q = x / y, r = x % y;
    if (r < 0) {
        r += abs(y);
        q = (x - r) / y;
    }
    auto [g, u, v] = extgcd(y, r);
    return {g, v, u - q * v};
}

}  // namespace detail

/// Gauss composition.  Both inputs must have positive leading coefficient
/// (every class, definite or indefinite, has such a representative); the
/// result is unreduced and has positive leading coefficient.
inline quad_form compose(const quad_form& f1_in, const quad_form& f2_in) {
    quad_form f1 = f1_in, f2 = f2_in;
    if (f1.a <= 0 || f2.a <= 0) throw error("compose expects positive leading coefficients");
    if (f1.a > f2.a) std::swap(f1, f2);
    Int s = (f1.b + f2.b) / 2;
    Int n = f2.b - s;
    Int y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        auto [g, u, v] = detail::extgcd(f2.a, f1.a);
        (void)v;
        y1 = u;
        d = g;
    }
    Int x2, y2, d1;
    if (s % d == 0) {
        x2 = 0;
        y2 = -1;
        d1 = d;
    } else {
        auto [g, u, v] = detail::extgcd(s, d);
        x2 = u;
        y2 = -v;
        d1 = g;
    }
    Int v1 = f1.a / d1;
    Int v2 = f2.a / d1;
    Int r = (y1 * y2 * n - x2 * f2.c) % v1;
    if (r < 0) r += v1;
    Int a3 = v1 * v2;
    Int b3 = f2.b + 2 * v2 * r;
    Int c3 = (f2.c * d1 + r * (f2.b + v2 * r)) / v1;
    return {a3, b3, c3};
}

}  // namespace unram

#endif
