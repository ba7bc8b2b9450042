#pragma once

// Waring decompositions of X^a over Q: one d-th power of a linear form per
// apolar point, weights from an exact linear solve.

#include <waring/apolar_points.hpp>
#include <waring/linalg.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace waring {

/// Multinomial coefficient d! / (α_0! ... α_n!) with d = |α|.
inline BigInt multinomial(const ExponentVec& alpha) {
  BigInt out = 1;
  unsigned long run = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    run += alpha[i];
    out *= binomial(run, alpha[i]);
  }
  return out;
}

/// (c_0 X_0 + ... + c_n X_n)^d, expanded.
inline MultiPoly expand_power(std::span<const Rational> linform, unsigned d) {
  const std::size_t nv = linform.size();
  if (nv == 0) throw Error("linear form with no variables");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < nv; ++i)
    if (linform[i] != 0) support.push_back(i);
  MultiPoly out(nv);
  if (support.empty()) {
    if (d == 0) out.add_term(ExponentVec(nv), 1);
    return out;
  }
  std::vector<std::vector<Rational>> pw(nv);
  for (std::size_t i : support) {
    pw[i].resize(d + 1);
    pw[i][0] = 1;
    for (unsigned k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * linform[i];
  }
  for (const auto& sub : monomials_of_degree(support.size(), d)) {
    ExponentVec e(nv);
    Rational c = 1;
    for (std::size_t k = 0; k < support.size(); ++k) {
      e.set(support[k], sub[k]);
      c *= pw[support[k]][sub[k]];
    }
    out.add_term(e, c * Rational(multinomial(sub)));
  }
  return out;
}

/// Coefficient matrix of Σ λ_p (p·X)^d = X^a in the basis of degree-d
/// monomials, rows in grevlex-descending order.
struct LinearSystem {
  RationalMatrix matrix;
  std::vector<Rational> rhs;
  std::vector<ExponentVec> rows;
  std::size_t target_row = 0;
};

inline LinearSystem assemble_system(const ExponentSeq& a, const std::vector<ProjPoint>& pts) {
  const std::size_t nv = a.size();
  const unsigned d = a.degree();
  for (const auto& p : pts)
    if (p.size() != nv) throw Error("point dimension does not match the exponent sequence");
  LinearSystem sys;
  sys.rows = monomials_of_degree(nv, d);
  sys.matrix = RationalMatrix(sys.rows.size(), pts.size());
  sys.rhs.assign(sys.rows.size(), Rational(0));
  ExponentVec target(std::vector<std::uint32_t>(a.values().begin(), a.values().end()));

  std::vector<Rational> weight(sys.rows.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    weight[r] = Rational(multinomial(sys.rows[r]));
    if (sys.rows[r] == target) {
      sys.target_row = r;
      sys.rhs[r] = 1;
    }
  }
  std::vector<std::vector<Rational>> pw(nv, std::vector<Rational>(d + 1));
  for (std::size_t c = 0; c < pts.size(); ++c) {
    for (std::size_t i = 0; i < nv; ++i) {
      pw[i][0] = 1;
      for (unsigned k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * pts[c][i];
    }
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      Rational v = weight[r];
      for (std::size_t i = 0; i < nv && v != 0; ++i) v *= pw[i][sys.rows[r][i]];
      sys.matrix(r, c) = v;
    }
  }
  return sys;
}

/// The particular solution with free unknowns set to zero, or nullopt when
/// the system is inconsistent. `rank_out` receives the coefficient rank.
inline std::optional<std::vector<Rational>> solve_rational_system(const LinearSystem& sys,
                                                                  std::size_t* rank_out = nullptr) {
  LinearSolve s = solve_linear(sys.matrix, sys.rhs);
  if (rank_out) *rank_out = s.rank;
  if (!s.consistent) return std::nullopt;
  return s.solution;
}

struct WaringTerm {
  Rational lambda;
  ProjPoint point;
};

struct WaringDecomposition {
  ExponentSeq a;
  Rational t;
  std::vector<WaringTerm> terms;
  std::size_t system_rank = 0;
  bool verified = false;

  unsigned degree() const { return a.degree(); }
  std::size_t nonzero_terms() const {
    return static_cast<std::size_t>(
        std::count_if(terms.begin(), terms.end(), [](const WaringTerm& w) { return w.lambda != 0; }));
  }
};

/// Σ λ_i (p_i·X)^d.
inline MultiPoly decomposition_sum(const ExponentSeq& a, const std::vector<WaringTerm>& terms) {
  MultiPoly sum(a.size());
  for (const auto& w : terms) {
    if (w.point.size() != a.size()) throw Error("point dimension does not match the exponent sequence");
    if (w.lambda == 0) continue;
    MultiPoly p = expand_power(w.point, a.degree());
    p *= w.lambda;
    sum += p;
  }
  return sum;
}

/// Expands every power and compares with X^a coefficient by coefficient.
inline bool verify_decomposition(const WaringDecomposition& dec) {
  ExponentVec target(std::vector<std::uint32_t>(dec.a.values().begin(), dec.a.values().end()));
  return decomposition_sum(dec.a, dec.terms) == MultiPoly::monomial(target);
}

/// Parameters tried when none is given, or after the given one fails:
/// 2, 3, 5, 7, then p/q for q = 2, 3, ... and 1 <= p <= 4q coprime to q.
inline std::vector<Rational> t_schedule(std::size_t count, std::optional<Rational> hint = std::nullopt) {
  std::vector<Rational> out;
  auto push = [&](const Rational& t) {
    if (out.size() >= count || t == 0 || abs(t) == 1) return;
    if (std::find(out.begin(), out.end(), t) != out.end()) return;
    out.push_back(t);
  };
  if (hint) push(*hint);
  for (long p : {2, 3, 5, 7}) push(Rational(p));
  for (unsigned long q = 2; out.size() < count; ++q)
    for (unsigned long p = 1; p <= 4 * q && out.size() < count; ++p)
      if (std::gcd(p, q) == 1) push(make_rational(static_cast<long>(p), static_cast<long>(q)));
  return out;
}

struct DecomposeOptions {
  std::size_t max_attempts = 8;
  /// Drop terms whose weight is zero.
  bool prune = false;
  /// Called before each attempt with the parameter being tried.
  std::function<void(const Rational&)> on_attempt;
};

/// Decomposition of X^a of size ½(∏(a_i+1)−∏(a_i−1)), trying `t_hint` first
/// and then the default schedule. Throws if every attempt fails.
inline WaringDecomposition decompose_monomial(const ExponentSeq& a, std::optional<Rational> t_hint = std::nullopt,
                                              DecomposeOptions opts = {}) {
  if (t_hint && (*t_hint == 0 || abs(*t_hint) == 1))
    throw Error("parameter t must not be 0, 1 or -1");
  std::string tried;
  for (const Rational& t : t_schedule(opts.max_attempts, t_hint)) {
    if (opts.on_attempt) opts.on_attempt(t);
    tried += (tried.empty() ? "" : ", ") + to_string(t);
    ApolarPointSet pts = enumerate_points(a, t);
    if (distinct_projective_count(pts.points) != pts.size()) continue;
    LinearSystem sys = assemble_system(a, pts.points);
    std::size_t rank = 0;
    auto lambdas = solve_rational_system(sys, &rank);
    if (!lambdas) continue;
    WaringDecomposition dec{a, t, {}, rank, false};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (opts.prune && (*lambdas)[i] == 0) continue;
      dec.terms.push_back({(*lambdas)[i], pts.points[i]});
    }
    if (!verify_decomposition(dec)) continue;
    dec.verified = true;
    return dec;
  }
  throw Error("no decomposition found for a = (" + a.to_string() + "); tried t = " + tried);
}

}  // namespace waring
