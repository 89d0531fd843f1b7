#include "densecut/rational.h"

#include <cctype>
#include <stdexcept>

namespace densecut {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) throw std::invalid_argument("malformed integer");
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(text.substr(0, slash));
    mpz_class den = ParseInteger(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !AllDigits(frac)) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed decimal");
    mpz_class w = whole.empty() ? mpz_class(0) : ParseInteger(whole);
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(w * scale + f, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(ParseInteger(text));
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::int64_t FloorToInt(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("rational floor exceeds int64");
  return q.get_si();
}

std::int64_t CeilToInt(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("rational ceil exceeds int64");
  return q.get_si();
}

}  // namespace densecut
