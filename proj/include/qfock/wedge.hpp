#pragma once

// Finite q-wedge monomials and their straightening into ordered
// (strictly decreasing) monomials.

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfock/combinatorics.hpp"
#include "qfock/laurent.hpp"

namespace qfock {

/// Raised when a rewrite budget runs out; ordered monomials form a basis, so
/// this always indicates a defect.
class InternalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Indices = std::vector<int>;

inline bool is_ordered(std::span<const int> k) {
  for (std::size_t i = 1; i < k.size(); ++i)
    if (k[i - 1] <= k[i]) return false;
  return true;
}

/// Sparse combination of wedge monomials of a common length.
class WedgeVector {
public:
  using Map = std::map<Indices, LaurentPoly>;

  WedgeVector() = default;
  static WedgeVector unit(Indices k) {
    WedgeVector v;
    v.terms_.emplace(std::move(k), LaurentPoly(1));
    return v;
  }

  void add(const Indices& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const WedgeVector& v, const LaurentPoly& c = 1) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : v.terms_) add(k, c * x);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const Indices& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }
  friend bool operator==(const WedgeVector&, const WedgeVector&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*u[";
      for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
      s += "]";
    }
    return s;
  }

private:
  Map terms_;
};

/// One term c * (u_first ^ u_second) of a straightened pair.
struct PairTerm {
  LaurentPoly coeff;
  int first;
  int second;
};

/// Rewrites u_{k1} ^ u_{k2} (k1 <= k2) as a combination of ordered pairs.
/// Equal indices give the empty combination.
inline std::vector<PairTerm> straighten_pair(int k1, int k2, const Ambient& amb) {
  if (k1 > k2) throw std::invalid_argument("straighten_pair: pair is already ordered");
  std::vector<PairTerm> out;
  if (k1 == k2) return out;
  const int nl = amb.period();
  const IndexTriple t1 = decompose_index(k1, amb);
  const IndexTriple t2 = decompose_index(k2, amb);
  const int alpha = pos_mod(t2.a - t1.a, nl);
  const int beta = pos_mod(amb.n * (t2.b - t1.b), nl);
  const LaurentPoly q1 = LaurentPoly::q(1);

  // sum over m >= start of coeff(m) u_{hi - nl m} ^ u_{lo + nl m}, while ordered
  auto series = [&](int hi, int lo, int start, const LaurentPoly& outer, auto&& coeff) {
    for (int m = start;; ++m) {
      const int x = hi - nl * m;
      const int y = lo + nl * m;
      if (x <= y) break;
      out.push_back({outer * coeff(m), x, y});
    }
  };

  if (alpha == 0 && beta == 0) {
    out.push_back({LaurentPoly(-1), k2, k1});
  } else if (alpha > 0 && beta == 0) {
    out.push_back({-LaurentPoly::q(-1), k2, k1});
    const LaurentPoly outer = LaurentPoly::q(-2) - 1;
    series(k2 - alpha, k1 + alpha, 0, outer, [](int m) { return LaurentPoly::q(-2 * m); });
    series(k2, k1, 1, -outer, [](int m) { return LaurentPoly::q(-2 * m + 1); });
  } else if (alpha == 0 && beta > 0) {
    out.push_back({-q1, k2, k1});
    const LaurentPoly outer = LaurentPoly::q(2) - 1;
    series(k2 - beta, k1 + beta, 0, outer, [](int m) { return LaurentPoly::q(2 * m); });
    series(k2, k1, 1, -outer, [](int m) { return LaurentPoly::q(2 * m - 1); });
  } else {
    out.push_back({LaurentPoly(-1), k2, k1});
    const LaurentPoly outer = q1 - LaurentPoly::q(-1);
    auto odd = [](int m) { return riv_coefficient(RivKind::Odd, m); };
    auto even = [](int m) { return riv_coefficient(RivKind::Even, m); };
    series(k2 - beta, k1 + beta, 0, outer, odd);
    series(k2 - alpha, k1 + alpha, 0, -outer, odd);
    series(k2 + nl - alpha - beta, k1 - nl + alpha + beta, 1, outer, even);
    series(k2, k1, 1, -outer, even);
  }
  // merge repeated monomials (the four Riv series can hit the same pair)
  std::vector<PairTerm> merged;
  for (auto& t : out) {
    bool found = false;
    for (auto& u : merged)
      if (u.first == t.first && u.second == t.second) {
        u.coeff += t.coeff;
        found = true;
        break;
      }
    if (!found) merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const PairTerm& t) { return t.coeff.is_zero(); });
  return merged;
}

inline WedgeVector straighten_pair_vector(int k1, int k2, const Ambient& amb) {
  WedgeVector v;
  for (const auto& t : straighten_pair(k1, k2, amb)) v.add({t.first, t.second}, t.coeff);
  return v;
}

struct IndicesHash {
  std::size_t operator()(const Indices& k) const noexcept {
    std::size_t h = k.size();
    for (int x : k) h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(static_cast<unsigned>(x));
    return h;
  }
};

/// Memoized normal-form engine for one ambient space.
///
/// Monomials are straightened right to left: the normal form of
/// u_{k_1} ^ w is obtained by inserting k_1 into each ordered monomial of the
/// normal form of w. Insertions are cached by the full index sequence. The
/// cache is shared between threads; entries are immutable once published.
class Straightener {
public:
  static constexpr std::size_t kDefaultFuel = 10'000'000;

  explicit Straightener(Ambient amb, std::size_t fuel = kDefaultFuel) : amb_(amb), fuel_(fuel) {}

  const Ambient& ambient() const { return amb_; }
  std::size_t cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }
  std::size_t fuel() const { return fuel_; }

  /// Normal form of a single (possibly disordered) monomial.
  WedgeVector normal_form(std::span<const int> k) const {
    Budget budget{fuel_};
    return normal_form_impl(k, budget);
  }

  /// Linear extension to a combination of monomials.
  WedgeVector normal_form(const WedgeVector& v) const {
    WedgeVector out;
    Budget budget{fuel_};
    for (const auto& [k, c] : v.terms()) out.add(normal_form_impl(k, budget), c);
    return out;
  }

private:
  struct Budget {
    std::size_t remaining;
    void spend() {
      if (remaining == 0) throw InternalError("straightening exceeded its rewrite budget");
      --remaining;
    }
  };
  using Entry = std::shared_ptr<const WedgeVector>;

  WedgeVector normal_form_impl(std::span<const int> k, Budget& budget) const {
    if (k.empty()) return WedgeVector::unit({});
    if (is_ordered(k)) return WedgeVector::unit(Indices(k.begin(), k.end()));
    WedgeVector acc = WedgeVector::unit({k.back()});
    for (std::size_t i = k.size() - 1; i-- > 0;) {
      WedgeVector next;
      for (const auto& [w, c] : acc.terms()) next.add(*insert(k[i], w, budget), c);
      acc = std::move(next);
    }
    return acc;
  }

  /// Normal form of u_k ^ (ordered monomial w).
  Entry insert(int k, const Indices& w, Budget& budget) const {
    if (w.empty() || k > w.front()) {
      Indices key;
      key.reserve(w.size() + 1);
      key.push_back(k);
      key.insert(key.end(), w.begin(), w.end());
      return std::make_shared<const WedgeVector>(WedgeVector::unit(std::move(key)));
    }
    Indices key;
    key.reserve(w.size() + 1);
    key.push_back(k);
    key.insert(key.end(), w.begin(), w.end());
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    budget.spend();
    WedgeVector result;
    const Indices rest(w.begin() + 1, w.end());
    for (const auto& t : straighten_pair(k, w.front(), amb_)) {
      Entry inner = insert(t.second, rest, budget);
      for (const auto& [z, c2] : inner->terms()) {
        Entry outer = insert(t.first, z, budget);
        result.add(*outer, t.coeff * c2);
      }
    }
    auto entry = std::make_shared<const WedgeVector>(std::move(result));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(std::move(key), entry);
    return it->second;
  }

  Ambient amb_;
  std::size_t fuel_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Indices, Entry, IndicesHash> cache_;
};

}  // namespace qfock
