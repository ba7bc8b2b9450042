#pragma once

// Subresultant combinations u·f + v·g of two univariate polynomials whose
// coefficients are maximal minors of a Sylvester submatrix.

#include <waring/linalg.hpp>
#include <waring/poly.hpp>

namespace waring {

struct SubresultantPair {
  MultiPoly u;  // degree <= m - i
  MultiPoly v;  // degree <= n - i
  MultiPoly h;  // u·f + v·g, degree <= i - 1
};

namespace detail {

inline std::vector<Rational> dense_coefficients(const MultiPoly& p, std::size_t degree) {
  // Highest degree first.
  std::vector<Rational> out(degree + 1);
  for (const auto& [e, c] : p) out[degree - e[0]] = c;
  return out;
}

}  // namespace detail

/// The (n+m-i+1) x (n+m-2i+2) Sylvester submatrix: m-i+1 shifted copies of
/// f's coefficients followed by n-i+1 shifted copies of g's.
inline RationalMatrix sylvester_submatrix(const MultiPoly& f, const MultiPoly& g, std::size_t i) {
  const std::size_t n = static_cast<std::size_t>(f.total_degree());
  const std::size_t m = static_cast<std::size_t>(g.total_degree());
  const auto fc = detail::dense_coefficients(f, n);
  const auto gc = detail::dense_coefficients(g, m);
  RationalMatrix mat(n + m - i + 1, n + m - 2 * i + 2);
  for (std::size_t j = 0; j <= m - i; ++j)
    for (std::size_t k = 0; k <= n; ++k) mat(j + k, j) = fc[k];
  for (std::size_t j = 0; j <= n - i; ++j)
    for (std::size_t k = 0; k <= m; ++k) mat(j + k, m - i + 1 + j) = gc[k];
  return mat;
}

/// For deg f = n >= deg g = m >= i >= 1, returns u, v with deg u <= m-i,
/// deg v <= n-i and h = u·f + v·g of degree <= i-1, every coefficient taken
/// from a determinant of the Sylvester submatrix.
inline SubresultantPair subresultant_pair(const MultiPoly& f, const MultiPoly& g, long i) {
  if (f.nvars() != 1 || g.nvars() != 1) throw Error("subresultant_pair needs univariate polynomials");
  if (f.is_zero() || g.is_zero()) throw Error("subresultant_pair of a zero polynomial");
  const long n = f.total_degree(), m = g.total_degree();
  if (n < m) throw Error("subresultant_pair needs deg f >= deg g");
  if (i < 1 || i > m) throw Error("subresultant index out of range");
  const auto ui = static_cast<std::size_t>(i);
  const RationalMatrix full = sylvester_submatrix(f, g, ui);
  const std::size_t top = static_cast<std::size_t>(n + m - 2 * i + 1);  // rows of the kernel block
  const std::size_t width = top + 1;

  RationalMatrix kernel_block(top, width);
  for (std::size_t r = 0; r < top; ++r)
    for (std::size_t c = 0; c < width; ++c) kernel_block(r, c) = full(r, c);

  auto signed_minor = [&](std::size_t col) {
    Rational d = determinant(kernel_block.without_column(col));
    return col % 2 == 0 ? d : Rational(-d);
  };

  SubresultantPair out{MultiPoly(1), MultiPoly(1), MultiPoly(1)};
  const std::size_t u_len = static_cast<std::size_t>(m - i + 1);
  const std::size_t v_len = static_cast<std::size_t>(n - i + 1);
  for (std::size_t j = 0; j < u_len; ++j)
    out.u.add_term(ExponentVec{static_cast<std::uint32_t>(u_len - 1 - j)}, signed_minor(j));
  for (std::size_t j = 0; j < v_len; ++j)
    out.v.add_term(ExponentVec{static_cast<std::uint32_t>(v_len - 1 - j)}, signed_minor(u_len + j));

  const Rational sign = (top % 2 == 0) ? Rational(1) : Rational(-1);
  for (std::size_t k = 0; k < ui; ++k) {
    RationalMatrix sq(width, width);
    for (std::size_t r = 0; r < top; ++r)
      for (std::size_t c = 0; c < width; ++c) sq(r, c) = kernel_block(r, c);
    for (std::size_t c = 0; c < width; ++c) sq(top, c) = full(top + k, c);
    out.h.add_term(ExponentVec{static_cast<std::uint32_t>(ui - 1 - k)}, sign * determinant(std::move(sq)));
  }
  return out;
}

}  // namespace waring
