#pragma once

// Exact linear algebra over Q: dense matrices, rank, determinants and linear
// solves. Large solves go through a multi-modular route whose answer is
// verified exactly before it is returned.

#include <waring/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace waring {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Copy without column `skip`.
  RationalMatrix without_column(std::size_t skip) const {
    RationalMatrix m(rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0, k = 0; c < cols_; ++c)
        if (c != skip) m(r, k++) = (*this)(r, c);
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

inline Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(piv, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

namespace detail {

// Multiplies each row by the lcm of its denominators.
inline std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& a, std::span<const Rational> rhs = {}) {
  std::vector<std::vector<BigInt>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (const auto& q : a.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    if (!rhs.empty()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[r].get_den_mpz_t());
    auto& row = out[r];
    row.reserve(a.cols() + (rhs.empty() ? 0 : 1));
    for (const auto& q : a.row(r)) row.emplace_back(q.get_num() * (l / q.get_den()));
    if (!rhs.empty()) row.emplace_back(rhs[r].get_num() * (l / rhs[r].get_den()));
  }
  return out;
}

}  // namespace detail

/// Rank by fraction-free (Bareiss) elimination on integer-scaled rows.
inline std::size_t rank(const RationalMatrix& a) {
  auto m = detail::integer_rows(a);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// A x = rhs.
struct LinearSolve {
  std::vector<Rational> solution;  // empty when inconsistent
  std::vector<std::size_t> pivots;
  bool consistent = false;
  std::size_t rank = 0;
};

/// Exact Gaussian elimination over Q. Pivot columns are chosen greedily left
/// to right; non-pivot unknowns are set to 0.
inline LinearSolve solve_by_elimination(const RationalMatrix& a, std::span<const Rational> rhs) {
  if (rhs.size() != a.rows()) throw Error("right-hand side has wrong length");
  const std::size_t rows = a.rows(), cols = a.cols();
  RationalMatrix m(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
    m(r, cols) = rhs[r];
  }
  LinearSolve out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Any nonzero entry works as pivot; the smallest keeps entries short.
    std::size_t piv = rows;
    std::size_t best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      std::size_t size = mpz_sizeinbase(m(i, c).get_num_mpz_t(), 2) + mpz_sizeinbase(m(i, c).get_den_mpz_t(), 2);
      if (piv == rows || size < best) {
        piv = i;
        best = size;
      }
    }
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t k = c; k <= cols; ++k)
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (m(i, cols) != 0) return out;
  out.consistent = true;
  out.solution.assign(cols, Rational(0));
  for (std::size_t k = r; k-- > 0;) {
    std::size_t c = out.pivots[k];
    Rational v = m(k, cols);
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m(k, j) != 0 && out.solution[j] != 0) v -= m(k, j) * out.solution[j];
    out.solution[c] = v / m(k, c);
  }
  return out;
}

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

struct ModularEchelon {
  std::vector<std::size_t> pivots;
  bool consistent = false;
  std::vector<u64> solution;  // on all columns, non-pivots zero
};

inline ModularEchelon modular_solve(const std::vector<std::vector<BigInt>>& aug, std::size_t cols, u64 p) {
  const std::size_t rows = aug.size();
  std::vector<std::vector<u64>> m(rows, std::vector<u64>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c <= cols; ++c) m[r][c] = mpz_fdiv_ui(aug[r][c].get_mpz_t(), p);
  ModularEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    u64 inv = invmod(m[r][c], p);
    for (std::size_t k = c; k <= cols; ++k) m[r][k] = mulmod(m[r][k], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k) {
        if (m[r][k] == 0) continue;
        m[i][k] = (m[i][k] + p - mulmod(f, m[r][k], p)) % p;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return out;
  out.consistent = true;
  out.solution.assign(cols, 0);
  for (std::size_t k = 0; k < r; ++k) out.solution[out.pivots[k]] = m[k][cols];
  return out;
}

// Smallest |num|, den with num/den = u (mod m) and both below sqrt(m/2).
inline std::optional<Rational> rational_reconstruct(const BigInt& u, const BigInt& m) {
  BigInt bound;
  BigInt half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  BigInt r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

inline bool check_solution(const RationalMatrix& a, std::span<const Rational> rhs, std::span<const Rational> x) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (x[c] != 0 && a(r, c) != 0) s += a(r, c) * x[c];
    if (s != rhs[r]) return false;
  }
  return true;
}

}  // namespace detail

/// Same contract as solve_by_elimination, computed modulo a sequence of
/// 62-bit primes with CRT and rational reconstruction. A consistent result is
/// always checked exactly against A x = rhs before it is returned.
inline LinearSolve solve_multimodular(const RationalMatrix& a, std::span<const Rational> rhs,
                                      std::size_t max_primes = 4096) {
  using detail::u64;
  if (rhs.size() != a.rows()) throw Error("right-hand side has wrong length");
  const std::size_t cols = a.cols();
  const auto aug = detail::integer_rows(a, rhs);

  BigInt next_prime_seed = BigInt(1) << 62;
  auto next_prime = [&] {
    mpz_nextprime(next_prime_seed.get_mpz_t(), next_prime_seed.get_mpz_t());
    return static_cast<u64>(next_prime_seed.get_ui());
  };

  std::vector<std::size_t> best_pivots;
  bool have_best = false;
  std::size_t inconsistent_votes = 0;
  std::vector<BigInt> residues(cols);
  BigInt modulus = 1;
  std::size_t agreeing = 0;

  auto better = [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  };

  for (std::size_t used = 0; used < max_primes; ++used) {
    const u64 p = next_prime();
    auto ech = detail::modular_solve(aug, cols, p);
    if (!have_best || better(ech.pivots, best_pivots)) {
      best_pivots = ech.pivots;
      have_best = true;
      inconsistent_votes = 0;
      agreeing = 0;
      modulus = 1;
      std::fill(residues.begin(), residues.end(), BigInt(0));
    } else if (ech.pivots != best_pivots) {
      continue;  // unlucky prime
    }
    if (!ech.consistent) {
      if (++inconsistent_votes >= 3) {
        LinearSolve out;
        out.pivots = best_pivots;
        out.rank = best_pivots.size();
        return out;
      }
      continue;
    }
    // CRT merge.
    BigInt pz;
    mpz_set_ui(pz.get_mpz_t(), p);
    BigInt inv;
    BigInt mod_p = modulus % pz;
    mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      BigInt rp;
      mpz_set_ui(rp.get_mpz_t(), ech.solution[c]);
      BigInt delta = (rp - residues[c] % pz) * inv;
      delta %= pz;
      if (delta < 0) delta += pz;
      residues[c] += modulus * delta;
    }
    modulus *= pz;
    ++agreeing;
    if (agreeing < 2) continue;
    std::vector<Rational> x(cols);
    bool ok = true;
    for (std::size_t c = 0; c < cols && ok; ++c) {
      if (residues[c] == 0) continue;
      auto q = detail::rational_reconstruct(residues[c], modulus);
      if (!q) ok = false;
      else x[c] = *q;
    }
    if (!ok) continue;
    if (!detail::check_solution(a, rhs, x)) continue;
    LinearSolve out;
    out.pivots = best_pivots;
    out.rank = best_pivots.size();
    out.consistent = true;
    out.solution = std::move(x);
    return out;
  }
  throw BudgetExhausted("multi-modular solve did not converge");
}

/// Dispatches on size: direct elimination for small systems, the
/// multi-modular route otherwise. Both return the same particular solution.
inline LinearSolve solve_linear(const RationalMatrix& a, std::span<const Rational> rhs) {
  if (a.rows() * a.cols() <= 4096) return solve_by_elimination(a, rhs);
  return solve_multimodular(a, rhs);
}

}  // namespace waring
