#ifndef UNRAM_REALS_HPP
#define UNRAM_REALS_HPP

#include <iomanip>
#include <sstream>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "unram/integers.hpp"

namespace unram {

/// All analytic evaluation runs in 50-decimal-digit binary floating point;
/// acceptance comparisons happen at far coarser tolerances.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real real_pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const Int& n) { return Real(n); }

inline Real parse_real(const std::string& s) { return Real(s); }

/// Deterministic decimal rendering used in reports (value equality implies
/// byte equality).
inline std::string format_real(const Real& x, int digits = 15) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

}  // namespace unram

#endif
