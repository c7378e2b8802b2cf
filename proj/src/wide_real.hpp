#pragma once

// Extended-precision scalar used by the series routes whose summands cancel
// heavily (e.g. n = 1 near xi = pi, where |terms| ~ e^{2R} * |result|).

#include <cmath>

#if defined(DIHEDRAL_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace dihedral::detail {

#if defined(DIHEDRAL_HAVE_QUADMATH)
using wide_real = __float128;

inline wide_real xexp(wide_real x) { return expq(x); }
inline wide_real xlog(wide_real x) { return logq(x); }
inline wide_real xabs(wide_real x) { return fabsq(x); }
inline wide_real xsqrt(wide_real x) { return sqrtq(x); }
inline wide_real xcos(wide_real x) { return cosq(x); }
inline wide_real xlgamma(wide_real x) { return lgammaq(x); }
#else
using wide_real = long double;
#endif

inline double xexp(double x) { return std::exp(x); }
inline double xlog(double x) { return std::log(x); }
inline double xabs(double x) { return std::fabs(x); }
inline double xsqrt(double x) { return std::sqrt(x); }
inline double xcos(double x) { return std::cos(x); }

inline long double xexp(long double x) { return std::exp(x); }
inline long double xlog(long double x) { return std::log(x); }
inline long double xabs(long double x) { return std::fabs(x); }
inline long double xsqrt(long double x) { return std::sqrt(x); }
inline long double xcos(long double x) { return std::cos(x); }
inline long double xlgamma(long double x) { return std::lgamma(x); }

}  // namespace dihedral::detail

namespace dihedral::detail {

#if defined(DIHEDRAL_HAVE_QUADMATH)
inline constexpr double kWideEpsilon = 1.9259299443872359e-34;
inline const wide_real kWidePi = M_PIq;
#else
inline constexpr long double kWidePi = 3.141592653589793238462643383279502884L;
inline constexpr double kWideEpsilon = 1.0842021724855044e-19;
#endif

}  // namespace dihedral::detail
