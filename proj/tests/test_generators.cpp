#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace waring;
using namespace testing_support;

namespace {

MultiPoly P(const std::string& s, std::size_t nv) { return parse_poly(s, nv); }

// (x_i^2 - c x_j^2) in nv variables.
MultiPoly factor(std::size_t nv, std::size_t i, std::size_t j, const Rational& c) {
  MultiPoly f(nv);
  f.add_term(ExponentVec::unit(nv, i, 2), 1);
  f.add_term(ExponentVec::unit(nv, j, 2), -c);
  return f;
}

// Elementary symmetric polynomial e_d of the values.
Rational elementary(const std::vector<Rational>& v, std::size_t d) {
  std::vector<Rational> e(d + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : v)
    for (std::size_t k = d; k >= 1; --k) e[k] += e[k - 1] * x;
  return e[d];
}

}  // namespace

TEST_CASE("exponent sequences", "[generators]") {
  ExponentSeq a{3, 5, 4};
  CHECK(a.n() == 2);
  CHECK(a.degree() == 12);
  CHECK(a.perm() == std::vector<std::size_t>{1, 2, 0});
  CHECK(a.sorted_descending() == ExponentSeq{5, 4, 3});
  CHECK_FALSE(a.is_descending());
  CHECK_THROWS_AS(ExponentSeq{3}, Error);
  CHECK_THROWS_AS((ExponentSeq{3, 0}), Error);
  OddizedSeq odd(ExponentSeq{5, 4, 3}.values());
  CHECK(odd.aprime == std::vector<unsigned>{5, 3, 3});
  CHECK(odd.eps == std::vector<unsigned>{0, 1, 0});
}

TEST_CASE("F for small sequences", "[generators]") {
  const std::vector<unsigned> a33{3, 3};
  CHECK(to_string(build_F(a33, 0, 1, 2)) == "x0^6-21/4*x0^4*x1^2+21/4*x0^2*x1^4-x1^6");
  for (const Rational& t : {Rational(2), make_rational(-7, 3), Rational(1)})
    CHECK(build_F(std::vector<unsigned>{1, 1}, 0, 1, t) == P("x0^2-x1^2", 2));

  const std::vector<unsigned> a53{5, 3};
  const auto [lo, hi] = factor_range(5, 3);
  CHECK(lo == -2);
  CHECK(hi == 1);
  MultiPoly expected = factor(2, 0, 1, make_rational(1, 16)) * factor(2, 0, 1, make_rational(1, 4)) *
                       factor(2, 0, 1, 1) * factor(2, 0, 1, 4);
  CHECK(build_F(a53, 0, 1, 2) == expected);

  CHECK_THROWS_AS(build_F(a33, 0, 1, 0), Error);
  CHECK_THROWS_AS(build_F(std::vector<unsigned>{4, 3}, 0, 1, 2), Error);
  CHECK_THROWS_AS(build_F(a33, 1, 0, 2), Error);
}

TEST_CASE("G for the worked examples", "[generators]") {
  const Rational t = 3;
  const auto t2 = t * t;
  // a = (5,4,3), (0,1): x1 * prod over t^{2k}, k = -2..1.
  MultiPoly g = P("x1", 3) * factor(3, 0, 1, 1 / (t2 * t2)) * factor(3, 0, 1, 1 / t2) * factor(3, 0, 1, 1) *
                factor(3, 0, 1, t2);
  CHECK(build_G(ExponentSeq{5, 4, 3}, 0, 1, t) == g);

  g = P("x0*x1", 3) * factor(3, 0, 1, 1 / t2) * factor(3, 0, 1, 1) * factor(3, 0, 1, t2);
  CHECK(build_G(ExponentSeq{4, 4, 4}, 0, 1, t) == g);

  CHECK(build_G(ExponentSeq{2, 2}, 0, 1, make_rational(5, 2)) == P("x0^3*x1-x0*x1^3", 2));
  CHECK_THROWS_AS(build_G(ExponentSeq{2, 2}, 0, 1, 0), Error);
}

TEST_CASE("J for the worked examples", "[generators]") {
  const auto J = build_J(ExponentSeq{3, 3, 3}, 2);
  REQUIRE(J.gens.size() == 3);
  CHECK(to_string(J.gens.at({0, 1})) == "x0^6-21/4*x0^4*x1^2+21/4*x0^2*x1^4-x1^6");
  CHECK(to_string(J.gens.at({0, 2})) == "x0^6-21/4*x0^4*x2^2+21/4*x0^2*x2^4-x2^6");
  CHECK(to_string(J.gens.at({1, 2})) == "x1^6-21/4*x1^4*x2^2+21/4*x1^2*x2^4-x2^6");

  CHECK(build_J(ExponentSeq{7, 2}, 2).gens.size() == 1);

  const ExponentSeq a{5, 4, 3};
  const auto J543 = build_J(a, 2);
  REQUIRE(J543.gens.size() == 3);
  for (const auto& [ij, g] : J543.gens) {
    CHECK(g == build_G(a, ij.first, ij.second, 2));
    CHECK(g.total_degree() == static_cast<long>(a[ij.first] + a[ij.second]));
  }

  GeneratorOptions clear;
  clear.clear_denominators = true;
  for (const auto& [ij, g] : build_J(ExponentSeq{3, 3, 3}, 2, clear).gens)
    for (const auto& [e, c] : g) CHECK(c.get_den() == 1);
}

TEST_CASE("apolar membership", "[generators]") {
  const ExponentSeq a{5, 4, 3};
  CHECK(apolar_membership(build_G(a, 0, 1, 2), a));
  CHECK_FALSE(apolar_membership(P("x0*x1*x2", 3), ExponentSeq{2, 2, 2}));
  CHECK(apolar_membership(MultiPoly(3), a));
  CHECK(apolar_membership(P("x0^6+x1^5*x2", 3), a));
  CHECK_FALSE(apolar_membership(P("x0^6+x1^4*x2^3", 3), a));
  CHECK_THROWS_AS(apolar_membership(P("x0", 2), a), Error);
}

TEST_CASE("generators are apolar, homogeneous and even in t", "[generators][property]") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<unsigned> len(2, 5), entry(1, 9);
  const std::vector<Rational> ts{Rational(2), Rational(3), make_rational(1, 2)};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<unsigned> v(len(rng));
    for (auto& x : v) x = entry(rng);
    const ExponentSeq a(v);
    for (const auto& t : ts) {
      const auto J = build_J(a, t);
      CHECK(J.gens.size() == a.size() * (a.size() - 1) / 2);
      for (const auto& [ij, g] : J.gens) {
        CHECK(apolar_membership(g, a));
        CHECK(g.is_homogeneous());
        CHECK(g.total_degree() == static_cast<long>(a[ij.first] + a[ij.second]));
        CHECK(g == build_G(a, ij.first, ij.second, -t));
      }
    }
  }
}

TEST_CASE("F has distinct roots and elementary-symmetric coefficients", "[generators][property]") {
  for (unsigned ai = 1; ai <= 9; ai += 2)
    for (unsigned aj = 1; aj <= 9; aj += 2)
      for (const Rational& t : {Rational(2), make_rational(2, 3), Rational(-5)}) {
        const std::vector<unsigned> a{ai, aj};
        const auto [lo, hi] = factor_range(ai, aj);
        std::vector<Rational> roots;
        for (long k = lo; k <= hi; ++k) roots.push_back(pow_int(t * t, k));
        CHECK(std::set<Rational>(roots.begin(), roots.end()).size() == roots.size());
        CHECK(2 * roots.size() == ai + aj);

        const auto f = build_F(a, 0, 1, t);
        const unsigned half = (ai + aj) / 2;
        for (unsigned d = 0; d <= half; ++d) {
          const Rational expected = (d % 2 == 0 ? 1 : -1) * elementary(roots, d);
          CHECK(f.coefficient(ExponentVec{ai + aj - 2 * d, 2 * d}) == expected);
        }
        CHECK(f.size() <= half + 1);
      }
}

TEST_CASE("J is equivariant under swapping variables", "[generators][property]") {
  // Swapping two entries of a swaps the corresponding variables in J, up to scalars.
  const ExponentSeq a{5, 2, 4}, b{4, 2, 5};
  const auto Ja = build_J(a, 3), Jb = build_J(b, 3);
  auto swap02 = [](const MultiPoly& p) {
    MultiPoly q(3);
    for (const auto& [e, c] : p) q.add_term(ExponentVec{e[2], e[1], e[0]}, c);
    return q;
  };
  auto proportional = [](const MultiPoly& p, const MultiPoly& q) {
    if (p.size() != q.size() || p.size() == 0) return false;
    const Rational r = q.begin()->second / p.begin()->second;
    return p * MultiPoly::constant(p.nvars(), r) == q;
  };
  CHECK(proportional(swap02(Ja.gens.at({0, 2})), Jb.gens.at({0, 2})));
  CHECK(proportional(swap02(Ja.gens.at({0, 1})), Jb.gens.at({1, 2})));
  CHECK(proportional(swap02(Ja.gens.at({1, 2})), Jb.gens.at({0, 1})));
}
