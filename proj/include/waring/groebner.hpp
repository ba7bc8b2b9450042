#pragma once

// Multivariate division and a Buchberger engine under grevlex.

#include <waring/poly.hpp>

#include <algorithm>
#include <cstddef>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace waring {

enum class MonomialOrder { grevlex };

struct DivisionResult {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

/// Division with remainder. Divisors are tried in the given order; no term of
/// the remainder is divisible by any divisor's leading monomial.
inline DivisionResult poly_reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors,
                                  MonomialOrder = MonomialOrder::grevlex) {
  DivisionResult out;
  out.remainder = MultiPoly(p.nvars());
  for (const auto& d : divisors) {
    p.check_same(d);
    if (d.is_zero()) throw Error("division by the zero polynomial");
    out.quotients.emplace_back(p.nvars());
  }
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    const ExponentVec lm = rest.leading_monomial();
    const Rational lc = rest.leading_coefficient();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& d = divisors[i];
      if (!d.leading_monomial().divides(lm)) continue;
      ExponentVec m = lm - d.leading_monomial();
      Rational c = lc / d.leading_coefficient();
      out.quotients[i].add_term(m, c);
      rest.sub_mul_term(m, c, d);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(lm, lc);
      rest.add_term(lm, -lc);
    }
  }
  return out;
}

/// Remainder only; cheaper than poly_reduce when quotients are not needed.
inline MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  MultiPoly rem(p.nvars());
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    const ExponentVec lm = rest.leading_monomial();
    const Rational lc = rest.leading_coefficient();
    const MultiPoly* hit = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lm)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      rest.sub_mul_term(lm - hit->leading_monomial(), lc / hit->leading_coefficient(), *hit);
    } else {
      rem.add_term(lm, lc);
      rest.add_term(lm, -lc);
    }
  }
  return rem;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const ExponentVec l = f.leading_monomial().lcm(g.leading_monomial());
  MultiPoly s = f.mul_term(l - f.leading_monomial(), Rational(1 / f.leading_coefficient()));
  s.sub_mul_term(l - g.leading_monomial(), Rational(1 / g.leading_coefficient()), g);
  return s;
}

struct GroebnerOptions {
  /// Maximum number of S-pair reductions before giving up.
  std::size_t budget = 200000;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
};

namespace detail {

// Removes redundant elements and fully interreduces; result is monic and
// sorted by leading monomial (grevlex-ascending).
inline std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> g) {
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  std::vector<MultiPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& lead = minimal[i];
    MultiPoly tail = lead;
    tail.add_term(lead.leading_monomial(), -lead.leading_coefficient());
    MultiPoly r = MultiPoly::monomial(lead.leading_monomial());
    r += normal_form(tail, others);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return GrevlexDescending{}(b.leading_monomial(), a.leading_monomial());
  });
  return reduced;
}

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `gens`. Pairs are taken
/// in normal-strategy order (smallest lcm first) and filtered by Buchberger's
/// coprime and chain criteria.
inline std::vector<MultiPoly> buchberger_basis(const std::vector<MultiPoly>& gens,
                                               MonomialOrder = MonomialOrder::grevlex,
                                               GroebnerOptions opts = {},
                                               GroebnerStats* stats = nullptr) {
  if (gens.empty()) throw Error("buchberger_basis needs at least one generator");
  std::vector<MultiPoly> basis;
  for (const auto& g : gens) {
    g.check_same(gens.front());
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return {};

  struct Pair {
    ExponentVec lcm;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    auto c = grevlex_cmp(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending_index;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Pair p{basis[i].leading_monomial().lcm(basis[j].leading_monomial()), i, j};
      pending.insert(p);
      pending_index.emplace(i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  GroebnerStats local;
  while (!pending.empty()) {
    Pair p = *pending.begin();
    pending.erase(pending.begin());
    pending_index.erase({p.i, p.j});
    const auto& li = basis[p.i].leading_monomial();
    const auto& lj = basis[p.j].leading_monomial();
    if (li.coprime(lj)) {
      ++local.pairs_skipped;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending_index.count(key(p.i, k)) && !pending_index.count(key(p.j, k))) chain = true;
    }
    if (chain) {
      ++local.pairs_skipped;
      continue;
    }
    if (local.pairs_reduced >= opts.budget)
      throw BudgetExhausted("Groebner budget exhausted after " + std::to_string(local.pairs_reduced) +
                            " S-pair reductions");
    ++local.pairs_reduced;
    MultiPoly r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  if (stats) *stats = local;
  return detail::reduce_basis(std::move(basis));
}

inline std::vector<ExponentVec> leading_monomials(const std::vector<MultiPoly>& basis) {
  std::vector<ExponentVec> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.leading_monomial());
  return out;
}

}  // namespace waring
