#pragma once

// Exponent vectors and the graded reverse lexicographic order.

#include <waring/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

namespace waring {

class ExponentVec {
 public:
  using value_type = std::uint32_t;

  ExponentVec() = default;
  explicit ExponentVec(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVec(std::initializer_list<value_type> init) : e_(init) { recount(); }
  explicit ExponentVec(std::vector<value_type> e) : e_(std::move(e)) { recount(); }

  static ExponentVec unit(std::size_t nvars, std::size_t var, value_type power = 1) {
    ExponentVec v(nvars);
    v.e_[var] = power;
    v.degree_ = power;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  std::uint64_t degree() const { return degree_; }
  value_type operator[](std::size_t i) const { return e_[i]; }
  std::span<const value_type> values() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  void set(std::size_t i, value_type v) {
    degree_ = degree_ - e_[i] + v;
    e_[i] = v;
  }

  bool is_constant() const { return degree_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const ExponentVec& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  ExponentVec operator+(const ExponentVec& other) const {
    check_same(other);
    ExponentVec r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
    r.degree_ = degree_ + other.degree_;
    return r;
  }

  /// Requires other | *this.
  ExponentVec operator-(const ExponentVec& other) const {
    check_same(other);
    ExponentVec r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (other.e_[i] > e_[i]) throw Error("monomial quotient is not a monomial");
      r.e_[i] -= other.e_[i];
    }
    r.degree_ = degree_ - other.degree_;
    return r;
  }

  ExponentVec lcm(const ExponentVec& other) const {
    check_same(other);
    ExponentVec r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
    r.recount();
    return r;
  }

  bool coprime(const ExponentVec& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  /// Same monomial with one variable slot inserted (exponent `power`) at `pos`.
  ExponentVec insert_var(std::size_t pos, value_type power = 0) const {
    std::vector<value_type> e(e_);
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(pos), power);
    return ExponentVec(std::move(e));
  }

  bool operator==(const ExponentVec& other) const { return e_ == other.e_; }

  void check_same(const ExponentVec& other) const {
    if (e_.size() != other.e_.size()) throw Error("exponent vectors of different length");
  }

 private:
  void recount() { degree_ = std::accumulate(e_.begin(), e_.end(), std::uint64_t{0}); }

  std::vector<value_type> e_;
  std::uint64_t degree_ = 0;
};

/// Grevlex: total degree first, then the last differing variable with the
/// smaller exponent wins.
inline std::strong_ordering grevlex_cmp(const ExponentVec& u, const ExponentVec& v) {
  u.check_same(v);
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  return std::strong_ordering::equal;
}

/// Orders maps so that iteration runs from the grevlex-largest monomial down.
struct GrevlexDescending {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return grevlex_cmp(a, b) == std::strong_ordering::greater;
  }
};

/// All exponent vectors of total degree d in nvars variables, grevlex-descending.
inline std::vector<ExponentVec> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<ExponentVec> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  // Enumerate compositions recursively.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

}  // namespace waring
