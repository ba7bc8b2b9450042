#pragma once

// The zero set V(J_a(t)): signed powers of t on the all-odd part, extended to
// even exponents by splitting on whether an even-exponent coordinate vanishes.

#include <waring/generators.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <span>
#include <vector>

namespace waring {

using ProjPoint = std::vector<Rational>;

struct ApolarPointSet {
  std::vector<ProjPoint> points;
  ExponentSeq a;
  Rational t;

  std::size_t size() const { return points.size(); }
};

/// ½(∏(a_i+1) − ∏(a_i−1)).
inline BigInt count_formula(std::span<const unsigned> a) {
  BigInt plus = 1, minus = 1;
  for (unsigned v : a) {
    if (v < 1) throw Error("exponents must be positive");
    plus *= v + 1;
    minus *= v - 1;
  }
  return (plus - minus) / 2;
}

inline BigInt count_formula(const ExponentSeq& a) { return count_formula(a.values()); }

/// Representative scaled so the last nonzero coordinate is 1; equal keys
/// mean equal projective points.
inline ProjPoint projective_key(const ProjPoint& p) {
  auto it = std::find_if(p.rbegin(), p.rend(), [](const Rational& c) { return c != 0; });
  if (it == p.rend()) throw Error("the zero vector is not a projective point");
  const Rational s = *it;
  ProjPoint k;
  k.reserve(p.size());
  for (const auto& c : p) k.push_back(c / s);
  return k;
}

inline std::size_t distinct_projective_count(const std::vector<ProjPoint>& pts) {
  std::set<ProjPoint> keys;
  for (const auto& p : pts) keys.insert(projective_key(p));
  return keys.size();
}

namespace detail {

inline void check_t(const Rational& t, bool allow_unit) {
  if (t == 0) throw Error("parameter t must be nonzero");
  if (!allow_unit && abs(t) == 1) throw Error("parameter t must not be 1 or -1");
}

// Flips the sign if needed so the last nonzero coordinate is positive.
inline void normalize_sign(ProjPoint& p) {
  auto it = std::find_if(p.rbegin(), p.rend(), [](const Rational& c) { return c != 0; });
  if (it != p.rend() && *it < 0)
    for (auto& c : p) c = -c;
}

inline std::vector<ProjPoint> odd_points(std::span<const unsigned> a, const Rational& t) {
  std::vector<ProjPoint> out;
  const std::size_t len = a.size();
  if (len == 0) return out;
  for (unsigned v : a)
    if (v % 2 == 0) throw Error("base point set needs an all-odd exponent sequence");
  std::vector<long> lower(len), width(len);
  for (std::size_t i = 0; i < len; ++i) {
    lower[i] = -static_cast<long>(a[i] / 4);
    width[i] = static_cast<long>((a[i] + 2) / 4) - lower[i] + 1;
  }
  // Offsets from the lower bounds, last coordinate varying fastest; keep
  // those with at least one offset equal to zero.
  std::vector<long> off(len, 0);
  const std::size_t nsigns = std::size_t{1} << (len - 1);
  while (true) {
    if (std::find(off.begin(), off.end(), 0) != off.end()) {
      ProjPoint base(len);
      for (std::size_t i = 0; i < len; ++i) base[i] = pow_int(t, lower[i] + off[i]);
      for (std::size_t s = 0; s < nsigns; ++s) {
        ProjPoint p = base;
        for (std::size_t i = 0; i + 1 < len; ++i)
          if ((s >> (len - 2 - i)) & 1u) p[i] = -p[i];
        normalize_sign(p);
        out.push_back(std::move(p));
      }
    }
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++off[k] < width[k]) break;
      off[k] = 0;
      if (k == 0) return out;
    }
  }
}

inline std::vector<ProjPoint> enumerate(std::vector<unsigned> a, const Rational& t) {
  if (a.empty()) return {};
  std::size_t last_even = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] % 2 == 0) last_even = i;
  if (last_even == a.size()) return odd_points(a, t);
  const std::size_t l = last_even;

  std::vector<unsigned> dropped = a;
  dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(l));
  std::vector<ProjPoint> out;
  for (auto& p : enumerate(dropped, t)) {
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(l), Rational(0));
    normalize_sign(p);
    out.push_back(std::move(p));
  }
  std::vector<unsigned> lowered = a;
  --lowered[l];
  for (auto& p : enumerate(lowered, t)) out.push_back(std::move(p));
  return out;
}

}  // namespace detail

/// Points [±t^{b_0} : ... : t^{b_n}] with -⌊a_i/4⌋ <= b_i <= ⌊(a_i+2)/4⌋, at
/// least one b_i at its lower bound, under every sign change of the first n
/// coordinates.
inline std::vector<ProjPoint> base_odd_points(std::span<const unsigned> aodd, const Rational& t) {
  detail::check_t(t, false);
  return detail::odd_points(aodd, t);
}

/// V(J_a(t)) for any positive a. Recurses on the last even exponent a_l: the
/// points with x_l = 0 come from a with slot l removed, the rest from a - e_l.
inline ApolarPointSet enumerate_points(const ExponentSeq& a, const Rational& t) {
  detail::check_t(t, false);
  return {detail::enumerate(std::vector<unsigned>(a.values().begin(), a.values().end()), t), a, t};
}

/// Same enumeration without the t != ±1 guard; points may then coincide.
inline ApolarPointSet enumerate_points_unchecked(const ExponentSeq& a, const Rational& t) {
  detail::check_t(t, true);
  return {detail::enumerate(std::vector<unsigned>(a.values().begin(), a.values().end()), t), a, t};
}

/// Enumeration over a raw (possibly empty) exponent list.
inline std::vector<ProjPoint> enumerate_points_raw(std::span<const unsigned> a, const Rational& t) {
  detail::check_t(t, false);
  for (unsigned v : a)
    if (v < 1) throw Error("exponents must be positive");
  return detail::enumerate(std::vector<unsigned>(a.begin(), a.end()), t);
}

}  // namespace waring
