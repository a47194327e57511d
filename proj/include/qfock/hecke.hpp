#pragma once

// Extended affine Weyl group of type A in window notation, the affine Hecke
// algebra with its Kazhdan-Lusztig bases C and C', and the expression of the
// transition matrices through parabolic KL polynomials.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfock/combinatorics.hpp"
#include "qfock/laurent.hpp"

namespace qfock {

/// Element x = (sigma, c) of W ⋉ Z^r acting on Z^r from the right by
/// (h.x)_i = h_{sigma(i)} + n c_i. It is stored as the window
/// (f(1), ..., f(r)) of the affine permutation f(i + rj) = sigma(i) + r(c_i + j);
/// x -> f is a homomorphism, so products are compositions.
class AffineWeylElement {
public:
  AffineWeylElement() = default;
  explicit AffineWeylElement(std::vector<int> window) : w_(std::move(window)) {
    const int r = rank();
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      const int i = pos_mod(v - 1, r);
      if (seen[i]) throw std::invalid_argument("window is not an affine permutation");
      seen[i] = true;
    }
  }

  static AffineWeylElement identity(int r) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    std::vector<int> w(r);
    std::iota(w.begin(), w.end(), 1);
    return AffineWeylElement(std::move(w));
  }
  /// s_i for 0 <= i < r (s_0 swaps r and r + 1). Needs r >= 2.
  static AffineWeylElement reflection(int r, int i) {
    if (r < 2 || i < 0 || i >= r) throw std::invalid_argument("no simple reflection s_" + std::to_string(i));
    AffineWeylElement x = identity(r);
    if (i == 0) {
      x.w_[0] = 0;
      x.w_[r - 1] = r + 1;
    } else {
      std::swap(x.w_[i - 1], x.w_[i]);
    }
    return x;
  }
  /// epsilon_i (1-based): translation of the i-th coordinate.
  static AffineWeylElement translation(int r, int i) {
    if (i < 1 || i > r) throw std::invalid_argument("translation index out of range");
    AffineWeylElement x = identity(r);
    x.w_[i - 1] += r;
    return x;
  }
  /// pi = epsilon_1 s_1 ... s_{r-1}, the shift by one.
  static AffineWeylElement pi(int r, int power = 1) {
    AffineWeylElement x = identity(r);
    for (int& v : x.w_) v += power;
    return x;
  }
  /// Element with the given finite permutation (1-based images) and translation part.
  static AffineWeylElement from_parts(const std::vector<int>& sigma, const std::vector<int>& c) {
    if (sigma.size() != c.size()) throw std::invalid_argument("sigma and c differ in length");
    const int r = static_cast<int>(sigma.size());
    std::vector<int> w(r);
    for (int i = 0; i < r; ++i) w[i] = sigma[i] + r * c[i];
    return AffineWeylElement(std::move(w));
  }

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }

  /// f(j) for any integer j.
  int operator()(int j) const {
    const int r = rank();
    const int i = pos_mod(j - 1, r);
    return w_[i] + (j - 1 - i);
  }

  friend AffineWeylElement operator*(const AffineWeylElement& x, const AffineWeylElement& y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<int> w(y.w_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = x(y.w_[i]);
    return AffineWeylElement(std::move(w));
  }

  AffineWeylElement inverse() const {
    const int r = rank();
    std::vector<int> w(r);
    for (int i = 1; i <= r; ++i) {
      const int v = w_[i - 1];
      const int base = pos_mod(v - 1, r) + 1;
      w[base - 1] = i + (base - v);
    }
    return AffineWeylElement(std::move(w));
  }

  /// Coxeter length: sum over i < j <= r of |floor((f(j) - f(i)) / r)|.
  int length() const {
    const int r = rank();
    int len = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) len += std::abs(floor_div(w_[j] - w_[i], r));
    return len;
  }

  /// Power of pi: x = (element of the Coxeter part) * pi^k.
  int pi_power() const {
    const int r = rank();
    long sum = 0;
    for (int v : w_) sum += v;
    return static_cast<int>((sum - static_cast<long>(r) * (r + 1) / 2) / r);
  }

  /// Finite permutation sigma (1-based) and translation c with f(i) = sigma(i) + r c_i.
  std::vector<int> sigma() const {
    std::vector<int> s(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) s[i] = pos_mod(w_[i] - 1, rank()) + 1;
    return s;
  }
  std::vector<int> translation_part() const {
    std::vector<int> c(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) c[i] = floor_div(w_[i] - 1, rank());
    return c;
  }

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement&, const AffineWeylElement&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
    return s + "]";
  }

private:
  std::vector<int> w_;
};

/// h . x with (h.x)_i = h_{sigma(i)} + n c_i.
inline std::vector<int> right_action(const std::vector<int>& h, const AffineWeylElement& x, int n) {
  if (static_cast<int>(h.size()) != x.rank()) throw std::invalid_argument("right_action: rank mismatch");
  const auto sigma = x.sigma();
  const auto c = x.translation_part();
  std::vector<int> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = h[sigma[i] - 1] + n * c[i];
  return out;
}

/// Simple reflections s with l(s x) < l(x).
inline std::vector<int> left_descents(const AffineWeylElement& x) {
  std::vector<int> out;
  if (x.rank() < 2) return out;
  const int len = x.length();
  for (int i = 0; i < x.rank(); ++i)
    if ((AffineWeylElement::reflection(x.rank(), i) * x).length() < len) out.push_back(i);
  return out;
}

/// Reduced expression x = s_{i_1} ... s_{i_k} pi^p: returns (i_1..i_k, p).
inline std::pair<std::vector<int>, int> reduced_word(AffineWeylElement x) {
  std::vector<int> word;
  while (x.length() > 0) {
    const int i = left_descents(x).front();
    word.push_back(i);
    x = AffineWeylElement::reflection(x.rank(), i) * x;
  }
  return {word, x.pi_power()};
}

/// Finite-support element sum c_x T_x.
class HeckeElement {
public:
  using Map = std::map<AffineWeylElement, LaurentPoly>;

  HeckeElement() = default;
  static HeckeElement basis(const AffineWeylElement& x, const LaurentPoly& c = 1) {
    HeckeElement h;
    h.add(x, c);
    return h;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const AffineWeylElement& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }
  void add(const AffineWeylElement& x, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const HeckeElement& h, const LaurentPoly& c = 1) {
    if (c.is_zero()) return;
    for (const auto& [x, v] : h.terms_) add(x, c * v);
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    a.add(b);
    return a;
  }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
    a.add(b, -1);
    return a;
  }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [x, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")T" + x.to_string();
    }
    return s;
  }

private:
  Map terms_;
};

/// T_{s_i} * h.
inline HeckeElement left_mul_reflection(int i, const HeckeElement& h) {
  HeckeElement out;
  const LaurentPoly diff = LaurentPoly::q(-1) - LaurentPoly::q(1);
  for (const auto& [x, c] : h.terms()) {
    const AffineWeylElement sx = AffineWeylElement::reflection(x.rank(), i) * x;
    out.add(sx, c);
    if (sx.length() < x.length()) out.add(x, c * diff);
  }
  return out;
}

inline HeckeElement left_mul_pi(int power, const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [x, c] : h.terms()) out.add(AffineWeylElement::pi(x.rank(), power) * x, c);
  return out;
}

inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [x, c] : a.terms()) {
    const auto [word, p] = reduced_word(x);
    HeckeElement acc = left_mul_pi(p, b);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_mul_reflection(*it, acc);
    out.add(acc, c);
  }
  return out;
}

/// The ring involution with bar(q) = q^-1 and bar(T_x) = T_{x^-1}^-1.
/// On generators bar(T_s) = T_s + q - q^-1 and bar(T_pi) = T_pi.
inline HeckeElement hecke_bar(const HeckeElement& h) {
  HeckeElement out;
  const LaurentPoly shift = LaurentPoly::q(1) - LaurentPoly::q(-1);
  for (const auto& [x, c] : h.terms()) {
    const auto [word, p] = reduced_word(x);
    HeckeElement acc = HeckeElement::basis(AffineWeylElement::pi(x.rank(), p));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      HeckeElement next = left_mul_reflection(*it, acc);
      next.add(acc, shift);
      acc = std::move(next);
    }
    out.add(acc, bar(c));
  }
  return out;
}

enum class KLVariant { C, CPrime };

/// Requested KL element is longer than the configured bound.
class LengthBoundError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Memoized Kazhdan-Lusztig bases of one rank.
///
/// C'_x = T_x mod qZ[q]{T_y} and C_x = T_x mod q^-1 Z[q^-1]{T_y}, both
/// bar-invariant. For l(x) > 0 pick a left descent s, form C'_s C'_{sx}
/// (resp. C_s C_{sx}) and cancel the offending coefficients from the top
/// length down with bar-invariant multiples of lower basis elements.
class KazhdanLusztig {
public:
  static constexpr int kDefaultLengthBound = 20;

  explicit KazhdanLusztig(int rank, int length_bound = kDefaultLengthBound) : rank_(rank), bound_(length_bound) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
  }
  int rank() const { return rank_; }
  int length_bound() const { return bound_; }

  const HeckeElement& basis(const AffineWeylElement& x, KLVariant v) {
    if (x.rank() != rank_) throw std::invalid_argument("KazhdanLusztig: rank mismatch");
    auto& memo = v == KLVariant::CPrime ? prime_ : plain_;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    if (x.length() > bound_)
      throw LengthBoundError("KL element " + x.to_string() + " has length " + std::to_string(x.length()) +
                             " above the bound " + std::to_string(bound_));
    HeckeElement result = compute(x, v);
    return memo.emplace(x, std::move(result)).first->second;
  }

  /// P^+_{y,x} (coefficient of T_y in C'_x) or P^-_{y,x} (in C_x).
  LaurentPoly polynomial(const AffineWeylElement& y, const AffineWeylElement& x, KLVariant v) {
    return basis(x, v).coeff(y);
  }

  std::size_t cached() const { return prime_.size() + plain_.size(); }

private:
  HeckeElement compute(const AffineWeylElement& x, KLVariant v) {
    if (x.length() == 0) return HeckeElement::basis(x);
    const int s = left_descents(x).front();
    const AffineWeylElement sx = AffineWeylElement::reflection(rank_, s) * x;
    const LaurentPoly shift = v == KLVariant::CPrime ? LaurentPoly::q(1) : -LaurentPoly::q(-1);
    const HeckeElement& lower = basis(sx, v);
    HeckeElement h = left_mul_reflection(s, lower);
    h.add(lower, shift);
    // cancel from the longest offending term down
    for (;;) {
      const AffineWeylElement* worst = nullptr;
      int worst_len = -1;
      for (const auto& [z, c] : h.terms()) {
        if (z == x || acceptable(c, v)) continue;
        const int len = z.length();
        if (len > worst_len) {
          worst_len = len;
          worst = &z;
        }
      }
      if (!worst) break;
      const AffineWeylElement z = *worst;
      const LaurentPoly m = symmetric_part(h.coeff(z), v);
      h.add(basis(z, v), -m);
    }
    if (h.coeff(x) != LaurentPoly(1)) throw std::logic_error("KL recursion lost its leading term");
    return h;
  }

  static bool acceptable(const LaurentPoly& c, KLVariant v) {
    if (c.is_zero()) return true;
    return v == KLVariant::CPrime ? c.min_degree() > 0 : c.max_degree() < 0;
  }
  /// Bar-invariant m with c - m in qZ[q] (C') or q^-1 Z[q^-1] (C).
  static LaurentPoly symmetric_part(const LaurentPoly& c, KLVariant v) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [e, x] : c.terms()) {
      const bool take = v == KLVariant::CPrime ? e <= 0 : e >= 0;
      if (!take) continue;
      terms.emplace_back(e, x);
      if (e != 0) terms.emplace_back(-e, x);
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

  int rank_;
  int bound_;
  std::map<AffineWeylElement, HeckeElement> prime_;
  std::map<AffineWeylElement, HeckeElement> plain_;
};

/// Data attached to a semi-infinite sequence k of degree r.
struct KLIndexData {
  std::vector<int> a;  // non-decreasing, entries in 1..n
  std::vector<int> b;  // non-increasing, entries in 1..l
  std::vector<int> h;  // (k^(l), ..., k^(1))
  AffineWeylElement x;
};

/// Stabilizer of a vector in the finite symmetric group, as elements of rank r.
inline std::vector<AffineWeylElement> stabilizer(const std::vector<int>& v) {
  const int r = static_cast<int>(v.size());
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<AffineWeylElement> out;
  do {
    bool fixes = true;
    for (int i = 0; i < r && fixes; ++i) fixes = v[perm[i] - 1] == v[i];
    if (fixes) out.push_back(AffineWeylElement(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline AffineWeylElement longest_element(const std::vector<int>& v) {
  AffineWeylElement best = AffineWeylElement::identity(static_cast<int>(v.size()));
  for (const auto& w : stabilizer(v))
    if (w.length() > best.length()) best = w;
  return best;
}

/// a(k), b(k), h and the minimal-length x with a(k).x = h, for the prefix of
/// length r = |lambda| of the sequence k_i = lambda_i + s - i + 1.
inline KLIndexData kl_index_data(const ChargedPartition& cp, const Ambient& amb) {
  const int r = cp.lambda.size();
  if (r == 0) throw std::invalid_argument("kl_index_data: the empty partition has degree 0");
  const auto k = beta_sequence(cp, static_cast<std::size_t>(r));
  KLIndexData d;
  std::vector<std::vector<int>> comp(amb.l);
  for (int x : k) {
    const IndexTriple t = decompose_index(x, amb);
    d.a.push_back(t.a);
    d.b.push_back(t.b);
    comp[t.b - 1].push_back(t.a - amb.n * t.m);
  }
  std::sort(d.a.begin(), d.a.end());
  std::sort(d.b.rbegin(), d.b.rend());
  for (int b = amb.l; b >= 1; --b) {
    auto& c = comp[b - 1];
    std::sort(c.rbegin(), c.rend());
    d.h.insert(d.h.end(), c.begin(), c.end());
  }
  // some x with a.x = h: position i takes the residue class of h_i
  std::vector<int> sigma(r), c(r);
  std::vector<bool> used(r, false);
  for (int i = 0; i < r; ++i) {
    const int res = pos_mod(d.h[i] - 1, amb.n) + 1;
    int j = 0;
    while (j < r && (used[j] || d.a[j] != res)) ++j;
    if (j == r) throw std::logic_error("kl_index_data: h is not in the orbit of a");
    used[j] = true;
    sigma[i] = j + 1;
    c[i] = (d.h[i] - res) / amb.n;
  }
  AffineWeylElement x = AffineWeylElement::from_parts(sigma, c);
  // minimal representative of the coset W_a x
  AffineWeylElement best = x;
  for (const auto& w : stabilizer(d.a)) {
    const AffineWeylElement y = w * x;
    if (y.length() < best.length()) best = y;
  }
  d.x = best;
  return d;
}

/// D^{+/-}_{k,l} for the sequences of (lambda, s) and (mu, s):
///   minus: sum over sigma in W_a of q^{-l(sigma)} P^-_{sigma x(l), x(k)}
///   plus:  sum over sigma in W_b of (-q)^{l(sigma)} P^+_{w_a x(l) w_b sigma, w_a x(k) w_b}
inline LaurentPoly d_via_kl(const ChargedPartition& lambda, const ChargedPartition& mu, const Ambient& amb, Sign sign,
                            KazhdanLusztig& kl) {
  if (lambda.charge != mu.charge) throw std::invalid_argument("d_via_kl: charges differ");
  if (lambda.lambda.size() != mu.lambda.size()) return {};
  if (lambda.lambda.size() == 0) return 1;
  const KLIndexData dk = kl_index_data(lambda, amb);
  const KLIndexData dl = kl_index_data(mu, amb);
  if (dk.a != dl.a || dk.b != dl.b) return {};
  LaurentPoly out;
  if (sign == Sign::Minus) {
    for (const auto& s : stabilizer(dk.a))
      out += LaurentPoly::q(-s.length()) * kl.polynomial(s * dl.x, dk.x, KLVariant::C);
  } else {
    const AffineWeylElement wa = longest_element(dk.a);
    const AffineWeylElement wb = longest_element(dk.b);
    const AffineWeylElement top = wa * dk.x * wb;
    for (const auto& s : stabilizer(dk.b)) {
      const int len = s.length();
      const LaurentPoly c = LaurentPoly::monomial(len, len % 2 == 0 ? 1 : -1);
      out += c * kl.polynomial(wa * dl.x * wb * s, top, KLVariant::CPrime);
    }
  }
  return out;
}

}  // namespace qfock
