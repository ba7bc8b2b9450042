#pragma once

// Shared helpers for the tests: seeded random inputs and small independent
// reference implementations.

#include <waring/waring.hpp>

#include <map>
#include <random>
#include <set>
#include <vector>

namespace testing_support {

using namespace waring;

inline Rational random_rational(std::mt19937& rng, int range = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline ExponentVec random_exponent(std::mt19937& rng, std::size_t nvars, unsigned max_power) {
  std::uniform_int_distribution<unsigned> d(0, max_power);
  std::vector<std::uint32_t> e(nvars);
  for (auto& v : e) v = d(rng);
  return ExponentVec(e);
}

inline MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, std::size_t max_terms, unsigned max_power) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  MultiPoly p(nvars);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) p.add_term(random_exponent(rng, nvars, max_power), random_rational(rng));
  return p;
}

inline MultiPoly random_univariate(std::mt19937& rng, unsigned degree) {
  MultiPoly p(1);
  for (unsigned k = 0; k < degree; ++k) p.add_term(ExponentVec{k}, random_rational(rng, 5, 3));
  Rational lead = 0;
  while (lead == 0) lead = random_rational(rng, 5, 3);
  p.add_term(ExponentVec{degree}, lead);
  return p;
}

/// Double loop over term lists, accumulating into a plain ordered map.
inline std::map<std::vector<std::uint32_t>, Rational> naive_product(const MultiPoly& p, const MultiPoly& q) {
  std::map<std::vector<std::uint32_t>, Rational> acc;
  for (const auto& [e1, c1] : p)
    for (const auto& [e2, c2] : q) {
      std::vector<std::uint32_t> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      acc[e] += c1 * c2;
    }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  return acc;
}

inline std::map<std::vector<std::uint32_t>, Rational> as_plain_map(const MultiPoly& p) {
  std::map<std::vector<std::uint32_t>, Rational> out;
  for (const auto& [e, c] : p) out[std::vector<std::uint32_t>(e.begin(), e.end())] = c;
  return out;
}

/// Fraction-free Bareiss determinant on an integer-scaled copy.
inline Rational bareiss_determinant(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt scale = 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l = 1;
    for (const auto& c : a[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) {
      Rational v = a[r][c] * Rational(l);
      m[r][c] = v.get_num();
    }
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[s], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    prev = m[k][k];
  }
  Rational det(m[n - 1][n - 1] * sign);
  return det / Rational(scale);
}

/// Solution of a square invertible system by Cramer's rule over Bareiss determinants.
inline std::vector<Rational> cramer_solve(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const Rational d = bareiss_determinant(a);
  std::vector<Rational> x(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    auto m = a;
    for (std::size_t r = 0; r < a.size(); ++r) m[r][c] = b[r];
    x[c] = bareiss_determinant(m) / d;
  }
  return x;
}

/// Standard monomials of degree d by brute force over all exponent vectors.
inline long brute_standard_count(const std::vector<ExponentVec>& gens, std::size_t nvars, std::uint32_t d) {
  long count = 0;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool in = false;
    for (const auto& g : gens)
      if (g.divides(m)) in = true;
    if (!in) ++count;
  }
  return count;
}

inline std::set<ProjPoint> projective_set(const std::vector<ProjPoint>& pts) {
  std::set<ProjPoint> s;
  for (const auto& p : pts) s.insert(projective_key(p));
  return s;
}

inline ProjPoint rational_point(std::initializer_list<long> v) {
  ProjPoint p;
  for (long x : v) p.emplace_back(x);
  return p;
}

}  // namespace testing_support
