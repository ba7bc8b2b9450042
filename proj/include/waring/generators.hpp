#pragma once

// Hyperbolic binary forms F_{i,j}, the generators G_{i,j} and the ideal
// J_a(t) they span, all inside the apolar ideal of X^a.

#include <waring/poly.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace waring {

/// Positive exponents (a_0, ..., a_n), n >= 1, with the permutation sorting
/// them into descending order.
class ExponentSeq {
 public:
  ExponentSeq() = default;
  explicit ExponentSeq(std::vector<unsigned> a) : a_(std::move(a)) {
    if (a_.size() < 2) throw Error("an exponent sequence needs at least two entries");
    for (unsigned v : a_)
      if (v < 1) throw Error("exponents must be positive");
    perm_.resize(a_.size());
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    std::stable_sort(perm_.begin(), perm_.end(), [&](std::size_t x, std::size_t y) { return a_[x] > a_[y]; });
  }
  ExponentSeq(std::initializer_list<unsigned> a) : ExponentSeq(std::vector<unsigned>(a)) {}

  std::size_t size() const { return a_.size(); }
  /// Index of the last variable.
  std::size_t n() const { return a_.size() - 1; }
  unsigned operator[](std::size_t i) const { return a_[i]; }
  std::span<const unsigned> values() const { return a_; }
  unsigned degree() const { return std::accumulate(a_.begin(), a_.end(), 0u); }

  /// perm()[k] is the original index of the k-th largest exponent.
  const std::vector<std::size_t>& perm() const { return perm_; }
  bool is_descending() const { return std::is_sorted(a_.rbegin(), a_.rend()); }
  ExponentSeq sorted_descending() const {
    std::vector<unsigned> s;
    for (std::size_t k : perm_) s.push_back(a_[k]);
    return ExponentSeq(std::move(s));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
    return s;
  }

  bool operator==(const ExponentSeq& o) const { return a_ == o.a_; }

 private:
  std::vector<unsigned> a_;
  std::vector<std::size_t> perm_;
};

/// ε(p): 1 for even p, 0 for odd.
constexpr unsigned parity_flag(unsigned p) { return p % 2 == 0 ? 1u : 0u; }

/// a' with a'_i = a_i - ε(a_i), together with the flags ε(a_i).
struct OddizedSeq {
  std::vector<unsigned> aprime;
  std::vector<unsigned> eps;

  explicit OddizedSeq(std::span<const unsigned> a) {
    for (unsigned v : a) {
      eps.push_back(parity_flag(v));
      aprime.push_back(v - parity_flag(v));
    }
  }
};

/// Inclusive range of k in the product defining F_{i,j} for odd a_i, a_j.
inline std::pair<long, long> factor_range(unsigned ai, unsigned aj) {
  const long lo = -static_cast<long>(ai / 4) - static_cast<long>((aj + 2) / 4);
  const long hi = static_cast<long>((ai + 2) / 4) + static_cast<long>(aj / 4);
  return {lo, hi};
}

/// F_{i,j}(t) = prod_k (x_i^2 - t^{2k} x_j^2) over an all-odd sequence.
inline MultiPoly build_F(std::span<const unsigned> aodd, std::size_t i, std::size_t j, const Rational& t) {
  if (t == 0) throw Error("parameter t must be nonzero");
  if (i >= j || j >= aodd.size()) throw Error("build_F needs indices i < j <= n");
  for (unsigned v : aodd)
    if (v % 2 == 0) throw Error("build_F needs an all-odd exponent sequence");
  const std::size_t nv = aodd.size();
  const auto [lo, hi] = factor_range(aodd[i], aodd[j]);
  const Rational t2 = t * t;
  MultiPoly f = MultiPoly::constant(nv, 1);
  for (long k = lo; k <= hi; ++k) {
    MultiPoly factor(nv);
    factor.add_term(ExponentVec::unit(nv, i, 2), 1);
    factor.add_term(ExponentVec::unit(nv, j, 2), -pow_int(t2, k));
    f = f * factor;
  }
  return f;
}

/// G_{i,j}(t) = x_i^{ε(a_i)} x_j^{ε(a_j)} F_{i,j}^{a'}(t).
inline MultiPoly build_G(const ExponentSeq& a, std::size_t i, std::size_t j, const Rational& t) {
  if (i >= j || j >= a.size()) throw Error("build_G needs indices i < j <= n");
  OddizedSeq odd(a.values());
  MultiPoly f = build_F(odd.aprime, i, j, t);
  ExponentVec shift(a.size());
  shift.set(i, odd.eps[i]);
  shift.set(j, odd.eps[j]);
  return f.mul_term(shift, 1);
}

struct GeneratorSet {
  std::map<std::pair<std::size_t, std::size_t>, MultiPoly> gens;
  Rational t;

  std::vector<MultiPoly> list() const {
    std::vector<MultiPoly> out;
    for (const auto& [ij, g] : gens) out.push_back(g);
    return out;
  }
};

struct GeneratorOptions {
  /// Scale each generator by the lcm of its coefficient denominators.
  bool clear_denominators = false;
};

inline MultiPoly clear_denominators(const MultiPoly& p) {
  BigInt l = 1;
  for (const auto& [e, c] : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return p * Rational(l);
}

/// J_a(t): one generator G_{i,j} per pair i < j.
inline GeneratorSet build_J(const ExponentSeq& a, const Rational& t, GeneratorOptions opts = {}) {
  if (t == 0) throw Error("parameter t must be nonzero");
  GeneratorSet out;
  out.t = t;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      MultiPoly g = build_G(a, i, j, t);
      out.gens.emplace(std::make_pair(i, j), opts.clear_denominators ? clear_denominators(g) : g);
    }
  return out;
}

/// True iff p lies in (x_0^{a_0+1}, ..., x_n^{a_n+1}), the apolar ideal of X^a.
inline bool apolar_membership(const MultiPoly& p, const ExponentSeq& a) {
  if (p.nvars() != a.size()) throw Error("polynomial and exponent sequence disagree on variables");
  for (const auto& [e, c] : p) {
    bool hit = false;
    for (std::size_t i = 0; i < a.size() && !hit; ++i) hit = e[i] >= a[i] + 1;
    if (!hit) return false;
  }
  return true;
}

}  // namespace waring
