#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <waring/monomial.hpp>
#include <waring/rational.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace waring {

class MultiPoly {
 public:
  using TermMap = std::map<ExponentVec, Rational, GrevlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(ExponentVec(nvars), c);
    return p;
  }

  static MultiPoly monomial(const ExponentVec& e, const Rational& c = 1) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t var) {
    return monomial(ExponentVec::unit(nvars, var));
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Adds c·x^e, dropping the entry if it cancels.
  void add_term(const ExponentVec& e, const Rational& c) {
    if (e.size() != nvars_) throw Error("term has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const ExponentVec& leading_monomial() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    require_nonzero();
    return terms_.begin()->second;
  }

  /// Maximum total degree over terms; -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.degree()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_)
      if (e.degree() != d) return false;
    return true;
  }

  MultiPoly& operator+=(const MultiPoly& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(MultiPoly p, const Rational& s) { return p *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly p) { return p *= s; }
  MultiPoly operator-() const { return *this * Rational(-1); }

  /// c·x^m·(*this).
  MultiPoly mul_term(const ExponentVec& m, const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    // Multiplying by a monomial preserves grevlex order, so hint at the end.
    for (const auto& [e, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, coeff * c);
    return r;
  }

  /// this -= c·x^m·q, in place.
  void sub_mul_term(const ExponentVec& m, const Rational& c, const MultiPoly& q) {
    for (const auto& [e, coeff] : q.terms_) add_term(e + m, -(coeff * c));
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw Error("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
        if (e[i] != 0) v *= pow_int(point[i], e[i]);
      sum += v;
    }
    return sum;
  }

  /// Scales so the leading coefficient is 1.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coefficient());
  }

  bool operator==(const MultiPoly& q) const { return nvars_ == q.nvars_ && terms_ == q.terms_; }

  void check_same(const MultiPoly& q) const {
    if (nvars_ != q.nvars_) throw Error("polynomials over different numbers of variables");
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline MultiPoly poly_product(const MultiPoly& p, const MultiPoly& q) {
  p.check_same(q);
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : q) r += p.mul_term(e, c);
  return r;
}

inline MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return poly_product(p, q); }

inline MultiPoly poly_pow(const MultiPoly& p, unsigned k) {
  MultiPoly r = MultiPoly::constant(p.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

// ---------------------------------------------------------------------------
// Text format: terms such as -21/4*x0^4*x1^2 joined by + and -.

inline std::string format_monomial(const ExponentVec& e, char var = 'x') {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string to_string(const MultiPoly& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (e.is_constant()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += format_monomial(e, var);
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::optional<std::size_t> nvars, char var)
      : s_(text), nvars_(nvars), var_(var) {}

  MultiPoly parse() {
    struct RawTerm {
      Rational coeff;
      std::vector<std::pair<std::size_t, std::uint32_t>> factors;
    };
    std::vector<RawTerm> raw;
    skip_ws();
    if (eof()) fail("empty polynomial");
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RawTerm term{Rational(sign), {}};
      bool have_factor = false;
      while (true) {
        skip_ws();
        if (eof()) break;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          term.coeff *= number();
        } else if (peek() == var_ || peek() == std::toupper(static_cast<unsigned char>(var_))) {
          get();
          std::size_t idx = static_cast<std::size_t>(integer("variable index"));
          std::uint32_t power = 1;
          skip_ws();
          if (!eof() && peek() == '^') {
            get();
            skip_ws();
            power = static_cast<std::uint32_t>(integer("exponent"));
          }
          term.factors.emplace_back(idx, power);
        } else {
          fail(std::string("unexpected character '") + peek() + "'");
        }
        have_factor = true;
        skip_ws();
        if (!eof() && peek() == '*') {
          get();
          continue;
        }
        break;
      }
      if (!have_factor) fail("dangling sign");
      raw.push_back(std::move(term));
      skip_ws();
    }
    std::size_t n = 0;
    for (const auto& t : raw)
      for (const auto& [idx, pw] : t.factors) n = std::max(n, idx + 1);
    if (nvars_) {
      if (n > *nvars_) fail("variable index out of range");
      n = *nvars_;
    }
    MultiPoly p(n);
    for (const auto& t : raw) {
      ExponentVec e(n);
      for (const auto& [idx, pw] : t.factors) e.set(idx, e[idx] + pw);
      p.add_term(e, t.coeff);
    }
    return p;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  unsigned long integer(const char* what) {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }
  Rational number() {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!eof() && peek() == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den_start == pos_) fail("expected denominator");
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> nvars_;
  char var_;
};

}  // namespace detail

/// Parses the text format. Without `nvars`, the variable count is one more
/// than the largest index used.
inline MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars = std::nullopt,
                            char var = 'x') {
  return detail::PolyParser(text, nvars, var).parse();
}

}  // namespace waring
