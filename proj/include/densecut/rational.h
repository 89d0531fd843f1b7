#ifndef DENSECUT_RATIONAL_H_
#define DENSECUT_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace densecut {

// Exact rational arithmetic for every ratio objective, schedule and LP entry.
using Rational = mpq_class;

// Accepts "p/q", integers and finite decimals ("0.25" -> 1/4).
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);

std::int64_t FloorToInt(const Rational& value);
std::int64_t CeilToInt(const Rational& value);

inline double ToDouble(const Rational& value) { return value.get_d(); }

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace densecut

#endif  // DENSECUT_RATIONAL_H_
