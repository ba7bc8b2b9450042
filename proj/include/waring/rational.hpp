#pragma once

// Exact rational and integer scalars backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace waring {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a configurable work budget runs out.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto begin = s.find_first_not_of(" \t");
  auto end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) throw Error("empty rational literal");
  s = s.substr(begin, end - begin + 1);
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error("malformed rational literal '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q{BigInt(num), d};
  q.canonicalize();
  return q;
}

/// Lowest-terms text: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// t^e for a (possibly negative) integer exponent; t must be nonzero if e < 0.
inline Rational pow_int(const Rational& t, long e) {
  if (e < 0) {
    if (t == 0) throw Error("negative power of zero");
    Rational inv = 1 / t;
    return pow_int(inv, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), t.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), t.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r{num, den};
  r.canonicalize();
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace waring
