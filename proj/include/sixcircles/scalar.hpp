#pragma once

// Numeric tower: an exact rational profile and binary floating point at a
// handful of compiled mantissa widths.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <type_traits>

#include "sixcircles/errors.hpp"

namespace sixcircles {

namespace bmp = boost::multiprecision;

/// Arbitrary precision rational. Error-free on rational inputs.
using Exact = bmp::number<bmp::cpp_rational_backend, bmp::et_off>;
using BigInt = bmp::cpp_int;

template <unsigned Bits>
using BinFloat = bmp::number<bmp::cpp_bin_float<Bits, bmp::digit_base_2>, bmp::et_off>;

using F53 = double;
using F113 = BinFloat<113>;
using F150 = BinFloat<150>;
using F300 = BinFloat<300>;

/// Widths with a compiled scalar type, in ascending order.
inline constexpr int kSupportedWidths[] = {53, 113, 150, 300};

template <class T>
concept Approx = std::numeric_limits<T>::is_specialized && !std::numeric_limits<T>::is_exact &&
                 std::numeric_limits<T>::radix == 2;

template <class T>
concept Field = Approx<T> || std::same_as<T, Exact>;

/// Mantissa width in bits (including the hidden bit).
template <Approx T>
constexpr int width_of() {
  return std::numeric_limits<T>::digits;
}

namespace math {

template <class T>
T abs(const T& x) {
  using std::abs;
  return abs(x);
}

template <Approx T>
T sqrt(const T& x) {
  using std::sqrt;
  return sqrt(x);
}

template <Approx T>
T sin(const T& x) {
  using std::sin;
  return sin(x);
}

template <Approx T>
T cos(const T& x) {
  using std::cos;
  return cos(x);
}

template <Approx T>
T tan(const T& x) {
  using std::tan;
  return tan(x);
}

template <Approx T>
T atan2(const T& y, const T& x) {
  using std::atan2;
  return atan2(y, x);
}

template <Approx T>
T ldexp(const T& x, int e) {
  using std::ldexp;
  return ldexp(x, e);
}

template <Approx T>
T pi() {
  return boost::math::constants::pi<T>();
}

/// 2^k in the working type.
template <Approx T>
T pow2(int k) {
  return ldexp(T(1), k);
}

/// Unit roundoff-scale tolerance 2^(offset - w) for the width of T.
template <Approx T>
T width_tolerance(int offset) {
  return pow2<T>(offset - width_of<T>());
}

template <class T>
double to_double(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return static_cast<double>(x);
  }
}

}  // namespace math

/// Correctly rounded (nearest, ties to even) conversion of a rational to
/// width T. Subnormal results are not handled; values of interest here are
/// far from the exponent limits.
template <Approx T>
T round_to(const Exact& q) {
  if (q == 0) return T(0);
  const bool negative = q < 0;
  BigInt num = bmp::numerator(q);
  BigInt den = bmp::denominator(q);
  if (negative) num = -num;

  constexpr int w = width_of<T>();
  // The quotient num * 2^shift / den has w + 1 or w + 2 bits for this
  // shift; bump once below if it came out short.
  const long num_bits = static_cast<long>(bmp::msb(num)) + 1;
  const long den_bits = static_cast<long>(bmp::msb(den)) + 1;
  long shift = (w + 1) - (num_bits - den_bits);
  auto quotient_with = [&](long s, BigInt& rem) {
    BigInt n = num;
    BigInt d = den;
    if (s >= 0) {
      n <<= static_cast<unsigned>(s);
    } else {
      d <<= static_cast<unsigned>(-s);
    }
    BigInt qt;
    bmp::divide_qr(n, d, qt, rem);
    return qt;
  };
  BigInt rem;
  BigInt quot = quotient_with(shift, rem);
  if (static_cast<long>(bmp::msb(quot)) + 1 < w + 2) {
    ++shift;
    quot = quotient_with(shift, rem);
  }
  const bool sticky = rem != 0;
  const unsigned low = static_cast<unsigned>(quot & 3);
  BigInt hi = quot >> 2;
  const bool hi_odd = (hi & 1) != 0;
  if (low > 2 || (low == 2 && (sticky || hi_odd))) ++hi;

  T result;
  if constexpr (std::is_same_v<T, double>) {
    result = static_cast<double>(static_cast<std::uint64_t>(hi));
  } else {
    result = T(hi);
  }
  result = math::ldexp(result, static_cast<int>(2 - shift));
  return negative ? -result : result;
}

/// Exact rational value of a finite binary float.
template <Approx T>
Exact to_exact(const T& x) {
  using std::frexp;
  if (x == 0) return Exact(0);
  int e = 0;
  T m = frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  constexpr int w = width_of<T>();
  m = math::ldexp(m, w);  // integral
  BigInt mant;
  if constexpr (std::is_same_v<T, double>) {
    mant = BigInt(static_cast<std::int64_t>(m));
  } else {
    mant = m.template convert_to<BigInt>();
  }
  const int exp2 = e - w;
  Exact r(mant);
  if (exp2 >= 0) {
    r *= Exact(BigInt(1) << exp2);
  } else {
    r /= Exact(BigInt(1) << -exp2);
  }
  return r;
}

/// Convert between profiles. Rational sources round correctly; float sources
/// go through the exact value.
template <Field To, Field From>
To convert(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, Exact>) {
    return to_exact(x);
  } else if constexpr (std::is_same_v<From, Exact>) {
    return round_to<To>(x);
  } else {
    return round_to<To>(to_exact(x));
  }
}

/// Dyadic rational m * 2^-e, exactly representable at every supported width
/// when |m| < 2^53.
struct Dyadic {
  std::int64_t mantissa = 0;
  int exponent = 0;

  template <Field T>
  T as() const {
    if constexpr (std::is_same_v<T, Exact>) {
      return Exact(mantissa) / Exact(BigInt(1) << exponent);
    } else {
      return math::ldexp(T(mantissa), -exponent);
    }
  }
};

template <class T>
std::string to_string(const T& x, int digits = 17) {
  if constexpr (std::is_same_v<T, double>) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
  } else {
    return x.str(digits);
  }
}

/// Invoke fn with a default-constructed value of the scalar type for width w.
/// Throws PrecisionUnsupported for widths without a compiled type.
template <class Fn>
decltype(auto) with_width(int w, Fn&& fn) {
  switch (w) {
    case 53:
      return fn(F53{});
    case 113:
      return fn(F113{});
    case 150:
      return fn(F150{});
    case 300:
      return fn(F300{});
    default:
      throw PrecisionUnsupported(w);
  }
}

}  // namespace sixcircles
