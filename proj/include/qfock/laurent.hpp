#pragma once

// Exact Laurent polynomials in Z[q, q^-1].

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfock {

using Integer = boost::multiprecision::cpp_int;

/// Raised when an operation that must be exact (division, splitting) is not.
class ArithmeticError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class LaurentPoly {
public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c) { // NOLINT: implicit from integer constants
    if (c != 0) terms_.emplace_back(0, Integer(c));
  }
  LaurentPoly(const Integer& c) { // NOLINT
    if (c != 0) terms_.emplace_back(0, c);
  }

  /// c * q^e
  static LaurentPoly monomial(int e, const Integer& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }
  static LaurentPoly q(int e = 1) { return monomial(e); }

  /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e)
        p.terms_.back().second += c;
      else
        p.terms_.emplace_back(e, std::move(c));
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  explicit operator bool() const { return !terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int min_degree() const {
    if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
    return terms_.front().first;
  }
  int max_degree() const {
    if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
    return terms_.back().first;
  }

  Integer coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
  }

  bool is_constant(const Integer& c) const {
    if (c == 0) return terms_.empty();
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == c;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    terms_ = merge(terms_, o.terms_, false);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    terms_ = merge(terms_, o.terms_, true);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
    std::map<int, Integer> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentPoly r;
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// c * q^shift * this
  LaurentPoly scaled(int shift, const Integer& c = 1) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
      t.first += shift;
      t.second *= c;
    }
    return r;
  }

  /// Exact division; throws ArithmeticError if the divisor does not divide.
  LaurentPoly exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw ArithmeticError("division by zero polynomial");
    LaurentPoly rem = *this;
    std::vector<Term> quot;
    const auto& lead = d.terms_.back();
    while (!rem.is_zero()) {
      // a nonzero multiple of d spans at least as many degrees as d
      if (rem.max_degree() - rem.min_degree() < d.max_degree() - d.min_degree())
        throw ArithmeticError("non-exact Laurent division");
      const auto& top = rem.terms_.back();
      Integer qc = top.second / lead.second;
      if (qc * lead.second != top.second) throw ArithmeticError("non-exact Laurent division");
      int qe = top.first - lead.first;
      quot.emplace_back(qe, qc);
      rem -= d.scaled(qe, qc);
    }
    return from_terms(std::move(quot));
  }

  /// Evaluates at an integer value of q (q must be +-1 when negative exponents occur).
  Integer eval(long value) const {
    Integer acc = 0;
    for (const auto& [e, c] : terms_) {
      if (e < 0 && value != 1 && value != -1)
        throw ArithmeticError("cannot evaluate negative powers at this value");
      Integer p = 1;
      for (int i = 0; i < std::abs(e); ++i) p *= value;
      acc += c * p;
    }
    return acc;
  }

  /// Constant coefficient, i.e. the value at q = 0 when no negative powers occur.
  Integer at_zero() const {
    if (!terms_.empty() && terms_.front().first < 0)
      throw ArithmeticError("polynomial has negative powers; q = 0 undefined");
    return coeff(0);
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [e, c] : terms_) {
      h ^= std::hash<int>{}(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
      h ^= std::hash<std::string>{}(c.str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string to_string() const;

private:
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, negate_b ? Integer(-b[j].second) : b[j].second);
        ++j;
      } else {
        Integer c = negate_b ? Integer(a[i].second - b[j].second)
                             : Integer(a[i].second + b[j].second);
        if (c != 0) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

/// The semi-linear conjugation q -> q^-1.
inline LaurentPoly bar(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> t;
  t.reserve(p.terms().size());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) t.emplace_back(-it->first, it->second);
  return LaurentPoly::from_terms(std::move(t));
}

/// Substitutes q -> -q^-1.
inline LaurentPoly dual_substitute(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> t;
  for (const auto& [e, c] : p.terms()) t.emplace_back(-e, (e % 2 != 0) ? Integer(-c) : c);
  return LaurentPoly::from_terms(std::move(t));
}

enum class RivKind { Odd, Even };

/// (q^{2m+1} + q^{-2m-1}) / (q + q^-1) for Odd, (q^{2m} - q^{-2m}) / (q + q^-1) for Even.
inline LaurentPoly riv_coefficient(RivKind kind, int m) {
  const LaurentPoly qq = LaurentPoly::q(1) + LaurentPoly::q(-1);
  if (kind == RivKind::Odd) {
    if (m < 0) throw std::invalid_argument("riv_coefficient: odd kind needs m >= 0");
    return (LaurentPoly::q(2 * m + 1) + LaurentPoly::q(-2 * m - 1)).exact_div(qq);
  }
  if (m < 1) throw std::invalid_argument("riv_coefficient: even kind needs m >= 1");
  return (LaurentPoly::q(2 * m) - LaurentPoly::q(-2 * m)).exact_div(qq);
}

enum class Sign { Plus, Minus };

/// Returns the unique g with r = g - bar(g), supported on positive exponents
/// (Plus) or negative exponents (Minus). Requires bar(r) = -r.
inline LaurentPoly gauss_split(const LaurentPoly& r, Sign sign) {
  if (bar(r) != -r) throw ArithmeticError("gauss_split: input is not bar-antisymmetric: " + r.to_string());
  std::vector<LaurentPoly::Term> t;
  for (const auto& [e, c] : r.terms())
    if ((sign == Sign::Plus && e > 0) || (sign == Sign::Minus && e < 0)) t.emplace_back(e, c);
  return LaurentPoly::from_terms(std::move(t));
}

inline std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// Parses the format produced by to_string (terms like 3*q^-2, -q, 5).
inline LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<LaurentPoly::Term> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer c = 1;
    bool has_num = i > start;
    if (has_num) c = Integer(s.substr(start, i - start));
    int e = 0;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) throw std::invalid_argument("bad exponent in '" + text + "'");
        e = std::stoi(s.substr(es, i - es));
      }
    } else if (!has_num) {
      throw std::invalid_argument("cannot parse polynomial '" + text + "'");
    }
    terms.emplace_back(e, sign * c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qfock

template <>
struct std::hash<qfock::LaurentPoly> {
  std::size_t operator()(const qfock::LaurentPoly& p) const noexcept { return p.hash(); }
};
