#pragma once

// Closed-form upper bounds on the real Waring rank of X^a.

#include <waring/apolar_points.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace waring {

/// ½(∏(a_i+1) − ∏(a_i−1)); the size of the decompositions built here.
inline BigInt ub_hm(const ExponentSeq& a) { return count_formula(a); }

/// ∏_{i<n} (a_i + a_n) with a sorted descending.
inline BigInt ub_ckov(const ExponentSeq& a) {
  const ExponentSeq s = a.sorted_descending();
  const unsigned low = s[s.n()];
  BigInt out = 1;
  for (std::size_t i = 0; i < s.n(); ++i) out *= s[i] + low;
  return out;
}

/// 2·⌈C(n+d, n)/(n+1)⌉ with d = Σ a_i.
inline BigInt ub_bt(const ExponentSeq& a) {
  const unsigned long n = a.n();
  const BigInt c = binomial(n + a.degree(), n);
  BigInt q;
  mpz_cdiv_q_ui(q.get_mpz_t(), c.get_mpz_t(), n + 1);
  return 2 * q;
}

struct BoundsRow {
  ExponentSeq a;
  BigInt ub_bt;
  BigInt ub_ckov;
  BigInt ub_hm;
};

inline std::vector<BoundsRow> bounds_table(const std::vector<ExponentSeq>& seqs) {
  std::vector<BoundsRow> rows;
  rows.reserve(seqs.size());
  for (const auto& a : seqs) rows.push_back({a, ub_bt(a), ub_ckov(a), ub_hm(a)});
  return rows;
}

inline std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << "exponents,UB_BT,UB_CKOV,UB_HM\n";
  for (const auto& r : rows)
    out << '"' << r.a.to_string() << "\"," << r.ub_bt << ',' << r.ub_ckov << ',' << r.ub_hm << '\n';
  return out.str();
}

/// The eight sequences compared in the reference table, in its row order.
inline std::vector<ExponentSeq> reference_table_sequences() {
  return {ExponentSeq{3, 3, 3},       ExponentSeq{4, 3, 3},       ExponentSeq{4, 4, 3},
          ExponentSeq{4, 4, 4},       ExponentSeq{5, 5, 5, 5},    ExponentSeq{7, 7, 7, 7, 7},
          ExponentSeq{10, 9, 8, 7, 6, 5, 4}, ExponentSeq{7, 7, 7, 7, 7, 7, 7}};
}

}  // namespace waring
