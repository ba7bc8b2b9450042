#pragma once

// Monomial ideals M_a indexed by a dilated simplex, their degrees, the
// recursive description of in(J_a), Hilbert functions and the end-to-end
// validation of the point set.

#include <waring/apolar_points.hpp>
#include <waring/groebner.hpp>
#include <waring/linalg.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace waring {

using LatticePoint = std::vector<unsigned>;

/// Δ^{n-1}(λ): non-negative integer vectors of length `dim` summing to λ.
struct LatticeSimplex {
  unsigned lambda = 0;
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
};

inline LatticeSimplex lattice_simplex(std::size_t dim, unsigned lambda) {
  if (dim == 0) throw Error("simplex dimension must be positive");
  LatticeSimplex s{lambda, dim, {}};
  for (const auto& e : monomials_of_degree(dim, lambda)) s.points.emplace_back(e.begin(), e.end());
  return s;
}

namespace detail {

inline void require_descending(std::span<const unsigned> a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] < a[i]) throw Error("exponent sequence must be descending");
}

inline void require_odd_last(std::span<const unsigned> a) {
  if (a.empty() || a.back() % 2 == 0) throw Error("last exponent must be odd");
}

}  // namespace detail

/// β(a, i) of length n: β_k = 0 if i_k = 0, else a_k - 1 - 2(i_0+...+i_{k-1}) + 2 i_k.
inline ExponentVec beta_map(std::span<const unsigned> a, std::span<const unsigned> i) {
  detail::require_descending(a);
  detail::require_odd_last(a);
  const std::size_t n = a.size() - 1;
  const unsigned lambda = (a.back() + 1) / 2;
  if (i.size() != n) throw Error("lattice point has wrong length");
  unsigned sum = 0;
  for (unsigned v : i) sum += v;
  if (sum != lambda) throw Error("lattice point is not on the simplex");
  ExponentVec out(n);
  long prefix = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (i[k] != 0) out.set(k, static_cast<std::uint32_t>(static_cast<long>(a[k]) - 1 - 2 * prefix + 2 * i[k]));
    prefix += i[k];
  }
  return out;
}

inline ExponentVec beta_map(const ExponentSeq& a, std::span<const unsigned> i) { return beta_map(a.values(), i); }

/// Monomial ideal kept as its minimal generators, sorted grevlex-descending.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, const std::vector<ExponentVec>& gens) : nvars_(nvars) {
    for (const auto& g : gens)
      if (g.size() != nvars) throw Error("generator has wrong number of variables");
    std::vector<ExponentVec> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), [](const ExponentVec& x, const ExponentVec& y) {
      return x.degree() < y.degree() || (x.degree() == y.degree() && GrevlexDescending{}(x, y));
    });
    for (const auto& g : sorted) {
      bool redundant = false;
      for (const auto& h : gens_)
        if (h.divides(g)) redundant = true;
      if (!redundant) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), GrevlexDescending{});
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVec>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool contains(const ExponentVec& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  MonomialIdeal with(const ExponentVec& m) const {
    auto g = gens_;
    g.push_back(m);
    return MonomialIdeal(nvars_, g);
  }

  bool operator==(const MonomialIdeal& o) const { return nvars_ == o.nvars_ && gens_ == o.gens_; }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(format_monomial(g));
    return out;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<ExponentVec> gens_;
};

namespace detail {

inline MonomialIdeal build_M_raw(std::span<const unsigned> a) {
  require_descending(a);
  require_odd_last(a);
  const std::size_t n = a.size() - 1;
  if (n == 0) throw Error("build_M needs at least two exponents");
  const auto simplex = lattice_simplex(n, (a.back() + 1) / 2);
  std::vector<ExponentVec> gens;
  for (const auto& i : simplex.points) gens.push_back(beta_map(a, i).insert_var(n));
  return MonomialIdeal(n + 1, gens);
}

// Works on a descending raw sequence; a single entry gives the zero ideal.
inline MonomialIdeal recursive_initial_raw(std::span<const unsigned> a) {
  const std::size_t len = a.size();
  if (len == 1) return MonomialIdeal(1, {});
  if (a.back() % 2 == 1) return build_M_raw(a);
  std::vector<ExponentVec> gens;
  const MonomialIdeal head = recursive_initial_raw(a.first(len - 1));
  for (const auto& g : head.gens()) gens.push_back(g.insert_var(len - 1));
  std::vector<unsigned> lowered(a.begin(), a.end());
  --lowered.back();
  const MonomialIdeal tail = build_M_raw(lowered);
  for (const auto& g : tail.gens()) gens.push_back(g + ExponentVec::unit(len, len - 1));
  return MonomialIdeal(len, gens);
}

// Degree-d monomials outside the ideal.
inline BigInt count_standard(const MonomialIdeal& m, std::uint32_t d) {
  BigInt count = 0;
  const std::size_t nv = m.nvars();
  std::vector<std::uint32_t> e(nv, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nv) {
      e[i] = left;
      if (!m.contains(ExponentVec(e))) ++count;
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nv == 0) return d == 0 ? 1 : 0;
  rec(rec, 0, d);
  return count;
}

}  // namespace detail

/// M_a = (x^{β(a,i)} : i ∈ Δ^{n-1}(λ_a)) with λ_a = (a_n+1)/2.
inline MonomialIdeal build_M(const ExponentSeq& a) { return detail::build_M_raw(a.values()); }

/// Degree of the quotient by a monomial ideal whose Hilbert polynomial is
/// constant. When no generator involves the last variable this is the number
/// of standard monomials in the others; otherwise the Hilbert function is
/// evaluated past the point where it agrees with the Hilbert polynomial.
inline BigInt staircase_degree(const MonomialIdeal& m) {
  const std::size_t nv = m.nvars();
  if (nv == 0) throw Error("staircase_degree of an ideal with no variables");
  std::vector<std::uint32_t> pure(nv, 0), top(nv, 0);
  bool uses_last = false;
  for (const auto& g : m.gens()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      top[i] = std::max(top[i], g[i]);
      if (g[i]) {
        ++support;
        var = i;
      }
    }
    if (support == 1 && (pure[var] == 0 || g[var] < pure[var])) pure[var] = g[var];
    if (g[nv - 1] != 0) uses_last = true;
  }
  const bool boxed = std::all_of(pure.begin(), pure.end() - 1, [](std::uint32_t p) { return p > 0; });
  if (!uses_last && boxed) {
    // Count monomials of the box ∏ [0, pure_i) in x_0..x_{n-1} outside M.
    BigInt count = 0;
    std::vector<std::uint32_t> e(nv, 0);
    while (true) {
      if (!m.contains(ExponentVec(e))) ++count;
      std::size_t k = nv - 1;
      while (k > 0) {
        --k;
        if (++e[k] < pure[k]) break;
        e[k] = 0;
        if (k == 0) return count;
      }
      if (nv == 1) return count;
    }
  }
  // Past Σ max exponents the Hilbert function is polynomial of degree < nv;
  // nv + 1 equal consecutive values force it to be constant.
  std::uint32_t start = 0;
  for (auto v : top) start += v;
  const BigInt value = detail::count_standard(m, start);
  for (std::uint32_t d = start + 1; d <= start + nv + 1; ++d)
    if (detail::count_standard(m, d) != value) throw Error("Hilbert function fails to stabilize");
  return value;
}

/// in(J_a) described recursively: M_a for odd a_n, otherwise
/// in(J_{(a_0..a_{n-1})}) together with x_n·M_{a-e_n}. Non-descending input is
/// sorted first and the result is expressed in the sorted variable order.
inline MonomialIdeal recursive_initial_ideal(const ExponentSeq& a) {
  const ExponentSeq s = a.sorted_descending();
  return detail::recursive_initial_raw(s.values());
}

struct HilbertOptions {
  /// Largest coefficient matrix (rows × columns) allowed per degree.
  std::size_t max_entries = 4'000'000;
};

/// dim_k (T/I)_d.
inline BigInt hilbert_function_at(const std::vector<MultiPoly>& gens, std::uint32_t d, HilbertOptions opts = {}) {
  if (gens.empty()) throw Error("hilbert_function_at needs at least one generator");
  const std::size_t nv = gens.front().nvars();
  bool monomial = true;
  std::vector<ExponentVec> lead;
  for (const auto& g : gens) {
    g.check_same(gens.front());
    if (!g.is_zero() && !g.is_homogeneous()) throw Error("generators must be homogeneous");
    if (g.is_zero()) continue;
    if (g.size() != 1) monomial = false;
    lead.push_back(g.leading_monomial());
  }
  const BigInt total = binomial(d + nv - 1, nv - 1);
  if (lead.empty()) return total;
  if (monomial) return detail::count_standard(MonomialIdeal(nv, lead), d);

  const auto cols = monomials_of_degree(nv, d);
  std::map<ExponentVec, std::size_t, GrevlexDescending> col_of;
  for (std::size_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);
  std::vector<std::pair<const MultiPoly*, ExponentVec>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || static_cast<std::uint32_t>(g.total_degree()) > d) continue;
    for (const auto& m : monomials_of_degree(nv, d - static_cast<std::uint32_t>(g.total_degree())))
      rows.emplace_back(&g, m);
  }
  if (rows.size() * cols.size() > opts.max_entries)
    throw BudgetExhausted("Hilbert function matrix in degree " + std::to_string(d) + " exceeds the budget");
  RationalMatrix mat(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [e, c] : *rows[r].first) mat(r, col_of.at(e + rows[r].second)) = c;
  return total - static_cast<long>(rank(mat));
}

struct HilbertTable {
  std::map<std::uint32_t, BigInt> values;
  std::optional<BigInt> stable_value;
  std::uint32_t stable_from = 0;
};

/// Scans d upward from `start` until n+2 consecutive degrees (n+1 variables)
/// give the same value, which is then reported as the stable value.
inline HilbertTable hilbert_scan(const std::vector<MultiPoly>& gens, std::uint32_t start, std::uint32_t max_degree,
                                 HilbertOptions opts = {}) {
  if (gens.empty()) throw Error("hilbert_scan needs at least one generator");
  const std::size_t window = gens.front().nvars() + 1;
  HilbertTable table;
  std::size_t run = 0;
  for (std::uint32_t d = start; d <= max_degree; ++d) {
    BigInt v = hilbert_function_at(gens, d, opts);
    run = (!table.values.empty() && table.values.rbegin()->second == v) ? run + 1 : 1;
    table.values.emplace(d, v);
    if (run == window) {
      table.stable_value = v;
      table.stable_from = d + 1 - static_cast<std::uint32_t>(window);
      return table;
    }
  }
  throw Error("Hilbert function did not stabilize by degree " + std::to_string(max_degree));
}

/// Leading-monomial ideal of J_a(t) next to the recursive prediction.
struct InitialIdealCheck {
  MonomialIdeal computed;
  MonomialIdeal expected;
  bool ideals_match = false;
  BigInt degree;
  BigInt count;
  std::size_t pairs_reduced = 0;

  bool pass() const { return ideals_match && degree == count; }
};

inline InitialIdealCheck check_initial_ideal(const ExponentSeq& a, const Rational& t, GroebnerOptions gopts = {}) {
  const ExponentSeq s = a.sorted_descending();
  GroebnerStats stats;
  const auto basis = buchberger_basis(build_J(s, t).list(), MonomialOrder::grevlex, gopts, &stats);
  InitialIdealCheck out;
  out.computed = MonomialIdeal(s.size(), leading_monomials(basis));
  out.expected = recursive_initial_ideal(s);
  out.ideals_match = out.computed == out.expected;
  out.degree = staircase_degree(out.expected);
  out.count = count_formula(s);
  out.pairs_reduced = stats.pairs_reduced;
  return out;
}

struct ValidationOptions {
  bool run_groebner = true;
  GroebnerOptions groebner;
  HilbertOptions hilbert;
};

struct ValidationReport {
  ExponentSeq a;
  Rational t;

  std::size_t points_enumerated = 0;
  std::size_t points_distinct = 0;
  BigInt expected_count;
  bool step_count = false;

  bool step_vanish = false;
  bool step_apolar = false;

  bool groebner_ran = false;
  bool groebner_budget_exhausted = false;
  bool budget_exhausted = false;
  std::optional<bool> step_initial_ideal;
  std::vector<std::string> initial_ideal;
  std::vector<std::string> predicted_initial_ideal;

  std::optional<BigInt> hilbert_stable_value;
  std::uint32_t hilbert_stable_from = 0;
  bool step_hilbert = false;
  std::string hilbert_error;

  std::map<std::string, double> timing_ms;

  bool pass() const {
    return step_count && step_vanish && step_apolar && step_initial_ideal.value_or(!groebner_ran && !budget_exhausted) &&
           step_hilbert;
  }
  /// First failing step (1-5), or 0 when all pass.
  int first_failure() const {
    if (!step_count) return 1;
    if (!step_vanish) return 2;
    if (!step_apolar) return 3;
    if (budget_exhausted || (step_initial_ideal && !*step_initial_ideal)) return 4;
    if (!step_hilbert) return 5;
    return 0;
  }
};

/// Runs the five checks: point count, vanishing of the generators on the
/// points, apolarity of the generators, the Gröbner initial ideal against the
/// recursive description, and Hilbert-function stabilization at |points|.
/// t = ±1 is accepted so that degenerate parameters can be reported on.
inline ValidationReport validate_theorem_pipeline(const ExponentSeq& a, const Rational& t, ValidationOptions opts = {}) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point s) {
    return std::chrono::duration<double, std::milli>(clock::now() - s).count();
  };
  ValidationReport rep;
  rep.a = a;
  rep.t = t;

  auto start = clock::now();
  const ApolarPointSet pts = enumerate_points_unchecked(a, t);
  rep.points_enumerated = pts.size();
  rep.points_distinct = distinct_projective_count(pts.points);
  rep.expected_count = count_formula(a);
  rep.step_count = rep.points_distinct == pts.size() && BigInt(static_cast<unsigned long>(pts.size())) == rep.expected_count;
  rep.timing_ms["points"] = ms_since(start);

  start = clock::now();
  const auto gens = build_J(a, t).list();
  rep.step_vanish = true;
  for (const auto& g : gens)
    for (const auto& p : pts.points)
      if (g.evaluate(p) != 0) rep.step_vanish = false;
  rep.timing_ms["vanish"] = ms_since(start);

  start = clock::now();
  rep.step_apolar = std::all_of(gens.begin(), gens.end(), [&](const MultiPoly& g) { return apolar_membership(g, a); });
  rep.timing_ms["apolar"] = ms_since(start);

  if (opts.run_groebner) {
    start = clock::now();
    rep.groebner_ran = true;
    try {
      const auto chk = check_initial_ideal(a, t, opts.groebner);
      rep.step_initial_ideal = chk.ideals_match;
      rep.initial_ideal = chk.computed.to_strings();
      rep.predicted_initial_ideal = chk.expected.to_strings();
    } catch (const BudgetExhausted&) {
      rep.groebner_budget_exhausted = true;
      rep.budget_exhausted = true;
    }
    rep.timing_ms["groebner"] = ms_since(start);
  }

  start = clock::now();
  try {
    std::uint32_t top = 0;
    for (const auto& g : gens) top = std::max(top, static_cast<std::uint32_t>(g.total_degree()));
    const auto table = hilbert_scan(gens, top, top + static_cast<std::uint32_t>(pts.size()) + 2 * a.size(), opts.hilbert);
    rep.hilbert_stable_value = table.stable_value;
    rep.hilbert_stable_from = table.stable_from;
    rep.step_hilbert = *table.stable_value == BigInt(static_cast<unsigned long>(rep.points_distinct));
  } catch (const BudgetExhausted& e) {
    rep.budget_exhausted = true;
    rep.hilbert_error = e.what();
  } catch (const Error& e) {
    rep.hilbert_error = e.what();
  }
  rep.timing_ms["hilbert"] = ms_since(start);
  return rep;
}

}  // namespace waring
