#pragma once

// Semi-infinite q-wedges labelled by charged partitions, the signed natural
// basis, the combinatorial Chevalley action, the coproduct action on wedges
// (an independent route to the same operators) and the Heisenberg operators.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfock/combinatorics.hpp"
#include "qfock/laurent.hpp"
#include "qfock/wedge.hpp"

namespace qfock {

/// Element of the charge-s semi-infinite wedge, expanded over the ordered
/// monomials |lambda, s>.
class FockVector {
public:
  using Map = std::map<Partition, LaurentPoly>;

  FockVector() = default;
  FockVector(Ambient amb, int charge) : amb_(amb), charge_(charge) {}

  static FockVector monomial(Ambient amb, const ChargedPartition& cp, const LaurentPoly& c = 1) {
    FockVector v(amb, cp.charge);
    v.add(cp.lambda, c);
    return v;
  }

  const Ambient& ambient() const { return amb_; }
  int charge() const { return charge_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }

  void add(const Partition& p, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const FockVector& v, const LaurentPoly& c = 1) {
    if (v.is_zero() || c.is_zero()) return;
    check_compatible(v);
    for (const auto& [p, x] : v.terms_) add(p, c * x);
  }

  FockVector operator-() const {
    FockVector r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) {
    a.add(b);
    return a;
  }
  friend FockVector operator-(FockVector a, const FockVector& b) {
    a.add(b, -1);
    return a;
  }
  friend FockVector operator*(const LaurentPoly& c, const FockVector& v) {
    FockVector r(v.amb_, v.charge_);
    r.add(v, c);
    return r;
  }

  /// Equal as vectors; zero vectors compare equal regardless of charge.
  friend bool operator==(const FockVector& a, const FockVector& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.amb_ == b.amb_ && a.charge_ == b.charge_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")|" + p.to_string() + "," + std::to_string(charge_) + ">";
    }
    return s;
  }

private:
  void check_compatible(const FockVector& v) const {
    if (!(v.amb_ == amb_) || v.charge_ != charge_)
      throw std::invalid_argument("Fock vectors live in different spaces");
  }

  Ambient amb_;
  int charge_ = 0;
  Map terms_;
};

inline FockVector bar_coefficients(const FockVector& v) {
  FockVector r(v.ambient(), v.charge());
  for (const auto& [p, c] : v.terms()) r.add(p, bar(c));
  return r;
}

/// Maps a combination of ordered length-N monomials, each followed by the
/// vacuum tail u_{s-N} ^ u_{s-N-1} ^ ..., to the semi-infinite basis. Terms
/// reaching into the tail are re-straightened with extra tail factors.
inline FockVector attach_tail(const WedgeVector& prefix, int charge, const Straightener& st,
                              int max_extensions = 32) {
  const Ambient& amb = st.ambient();
  FockVector out(amb, charge);
  WedgeVector pending = prefix;
  for (int round = 0; !pending.is_zero(); ++round) {
    if (round > max_extensions) throw InternalError("attach_tail: tail interaction did not settle");
    WedgeVector overflow;
    for (const auto& [k, c] : pending.terms()) {
      if (!is_ordered(k)) throw std::logic_error("attach_tail expects ordered monomials");
      const int len = static_cast<int>(k.size());
      const int cut = charge - len;
      if (k.empty() || k.back() > cut) {
        out.add(from_beta_sequence(k, charge).lambda, c);
      } else {
        Indices ext = k;
        for (int j = 0; j < amb.period(); ++j) ext.push_back(cut - j);
        overflow.add(ext, c);
      }
    }
    pending = st.normal_form(overflow);
  }
  return out;
}

/// t-weight of a single u_k: exponent of q in t_i(u_k).
inline int index_weight(int k, int i, Factor side, const Ambient& amb) {
  const IndexTriple t = decompose_index(k, amb);
  const int mod = side == Factor::First ? amb.n : amb.l;
  const int x = side == Factor::First ? t.a : t.b;
  return (pos_mod(i - x, mod) == 0 ? 1 : 0) - (pos_mod(i + 1 - x, mod) == 0 ? 1 : 0);
}

/// Exponent of q in t_i(|m)) for the vacuum tail |m) = u_m ^ u_{m-1} ^ ...
/// Period boundaries carry q^{level * delta(i = 0)}; the partial period
/// above the nearest boundary contributes its single-index weights.
inline int tail_weight(int m, int i, Factor side, const Ambient& amb) {
  const int nl = amb.period();
  const int base = nl * floor_div(m, nl);
  const int level = side == Factor::First ? amb.l : amb.n;
  int w = i == 0 ? level : 0;
  for (int k = base + 1; k <= m; ++k) w += index_weight(k, i, side, amb);
  return w;
}

/// Target of a single-index operator on u_k, when it acts at all.
struct IndexMove {
  bool valid = false;
  int target = 0;
};

/// f_i on u_k. First factor: v_a -> v_{a+1} (z^-1 when wrapping).
/// Second factor: v_b -> v_{b+1} likewise.
inline IndexMove lower_index(int k, int i, Factor side, const Ambient& amb) {
  IndexTriple t = decompose_index(k, amb);
  if (side == Factor::First) {
    if (pos_mod(i - t.a, amb.n) != 0) return {};
    if (t.a < amb.n) return {true, k + 1};
    return {true, compose_index({1, t.b, t.m - 1}, amb)};
  }
  if (pos_mod(i - t.b, amb.l) != 0) return {};
  if (t.b < amb.l) return {true, k + amb.n};
  return {true, compose_index({t.a, 1, t.m - 1}, amb)};
}

/// e_i on u_k.
inline IndexMove raise_index(int k, int i, Factor side, const Ambient& amb) {
  IndexTriple t = decompose_index(k, amb);
  if (side == Factor::First) {
    if (pos_mod(i + 1 - t.a, amb.n) != 0) return {};
    if (t.a > 1) return {true, k - 1};
    return {true, compose_index({amb.n, t.b, t.m + 1}, amb)};
  }
  if (pos_mod(i + 1 - t.b, amb.l) != 0) return {};
  if (t.b > 1) return {true, k - amb.n};
  return {true, compose_index({t.a, amb.l, t.m + 1}, amb)};
}

/// Which quantum group acts: U_q(sl_n) (N, first factor) or U_q(sl_l) (L, second factor).
enum class Side { N, L };

inline Factor acting_factor(Side side) { return side == Side::N ? Factor::First : Factor::Second; }

struct Generator {
  enum class Kind { E, F, T };
  Kind kind = Kind::F;
  int index = 0;

  /// Parses "f:0", "e:1", "t:0".
  static Generator parse(const std::string& text) {
    if (text.size() < 3 || text[1] != ':') throw std::invalid_argument("generator must look like f:0");
    Generator g;
    switch (text[0]) {
      case 'e': case 'E': g.kind = Kind::E; break;
      case 'f': case 'F': g.kind = Kind::F; break;
      case 't': case 'T': g.kind = Kind::T; break;
      default: throw std::invalid_argument("unknown generator kind '" + text.substr(0, 1) + "'");
    }
    g.index = std::stoi(text.substr(2));
    return g;
  }
  std::string to_string() const {
    const char c = kind == Kind::E ? 'e' : kind == Kind::F ? 'f' : 't';
    return std::string(1, c) + ":" + std::to_string(index);
  }
};

/// Signed natural basis vector phi(lambda, s) = (-1)^Phi |lambda, s>.
inline FockVector phi(const ChargedPartition& cp, const Ambient& amb) {
  return FockVector::monomial(amb, cp, LaurentPoly(phi_sign(cp, amb)));
}
inline FockVector phi(const Multipartition& mp, const Ambient& amb) { return phi(iota_l_inv(mp, amb), amb); }

/// Coordinates of v in the phi basis, keyed by partition.
inline FockVector::Map phi_coordinates(const FockVector& v) {
  FockVector::Map out;
  for (const auto& [p, c] : v.terms()) out.emplace(p, phi_sign({p, v.charge()}, v.ambient()) == 1 ? c : -c);
  return out;
}
inline FockVector from_phi_coordinates(const FockVector::Map& coords, Ambient amb, int charge) {
  FockVector v(amb, charge);
  for (const auto& [p, c] : coords) v.add(p, phi_sign({p, charge}, amb) == 1 ? c : -c);
  return v;
}

namespace detail {

/// Combinatorial action on one labelled multipartition. Returns pairs
/// (result multipartition, q-exponent).
inline std::vector<std::pair<Multipartition, int>> node_action(const Generator& g, const Multipartition& mp,
                                                                int modulus, bool inverted) {
  std::vector<std::pair<Multipartition, int>> out;
  const int r = pos_mod(g.index, modulus);
  switch (g.kind) {
    case Generator::Kind::T:
      out.emplace_back(mp, colour_count(mp, modulus, r));
      break;
    case Generator::Kind::F:
      for (const Node& nd : addable_nodes(mp, modulus, r)) {
        const NodeStatistics st = node_statistics(mp, modulus, nd);
        out.emplace_back(add_node(mp, nd), inverted ? -st.above : st.above);
      }
      break;
    case Generator::Kind::E:
      for (const Node& nd : removable_nodes(mp, modulus, r)) {
        Multipartition smaller = remove_node(mp, nd);
        const NodeStatistics st = node_statistics(smaller, modulus, nd);
        out.emplace_back(std::move(smaller), inverted ? st.below : -st.below);
      }
      break;
  }
  return out;
}

}  // namespace detail

/// Chevalley generators acting through node combinatorics.
///
/// N side: U_q(sl_n) on the l-multipartition labels with colours mod n, in
/// the phi basis. L side: U_q(sl_l) on the n-multipartition labels with
/// colours mod l, in the basis signed by the first-factor Phi, with q
/// inverted in the f and e statistics.
inline FockVector chevalley_action(const Generator& g, Side side, const FockVector& v) {
  const Ambient& amb = v.ambient();
  const int modulus = side == Side::N ? amb.n : amb.l;
  if (g.index < 0 || g.index >= modulus) throw std::invalid_argument("generator index out of range");
  const Factor label_factor = side == Side::N ? Factor::Second : Factor::First;
  FockVector out(amb, v.charge());
  std::vector<int> charges;
  bool have_charges = false;
  for (const auto& [p, c] : v.terms()) {
    const ChargedPartition cp{p, v.charge()};
    const Multipartition mp = split(cp, amb, label_factor);
    if (!have_charges) {
      charges = mp.charges;
      have_charges = true;
    } else if (charges != mp.charges) {
      throw std::invalid_argument("chevalley_action: vector spans several Fock components");
    }
    const int sign_in = phi_sign(cp, amb, label_factor);
    for (const auto& [res, e] : detail::node_action(g, mp, modulus, side == Side::L)) {
      const ChargedPartition target = join(res, amb, label_factor);
      const int sign = sign_in * phi_sign(target, amb, label_factor);
      out.add(target.lambda, c.scaled(e, sign));
    }
  }
  return out;
}

/// Prefix length used by the wedge-level operators when none is given:
/// covers every part of the input plus one full period.
inline std::size_t default_truncation(const FockVector& v) {
  std::size_t len = 0;
  for (const auto& [p, c] : v.terms()) len = std::max(len, static_cast<std::size_t>(p.size()));
  return len + static_cast<std::size_t>(v.ambient().period());
}

/// Generators acting through the iterated coproduct on the first `trunc`
/// factors of each monomial, followed by straightening and the tail rule.
inline FockVector wedge_action_oracle(const Generator& g, Side side, const FockVector& v, const Straightener& st,
                                      std::size_t trunc = 0) {
  const Ambient& amb = v.ambient();
  if (!(st.ambient() == amb)) throw std::invalid_argument("straightener ambient mismatch");
  const int modulus = side == Side::N ? amb.n : amb.l;
  if (g.index < 0 || g.index >= modulus) throw std::invalid_argument("generator index out of range");
  if (trunc == 0) trunc = default_truncation(v);
  const Factor f = acting_factor(side);
  // the second factor's coproduct uses t^-1 where the first uses t
  const int tsign = side == Side::N ? 1 : -1;
  const int s = v.charge();
  WedgeVector acc;
  for (const auto& [p, c] : v.terms()) {
    if (p.length() > trunc) throw std::invalid_argument("truncation shorter than a partition");
    const Indices k = beta_sequence({p, s}, trunc);
    const int tail = tail_weight(s - static_cast<int>(trunc), g.index, f, amb);
    std::vector<int> w(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) w[j] = index_weight(k[j], g.index, f, amb);
    switch (g.kind) {
      case Generator::Kind::T: {
        int e = tail;
        for (int x : w) e += x;
        acc.add(k, c.scaled(e));
        break;
      }
      case Generator::Kind::F: {
        int before = 0;
        for (std::size_t j = 0; j < k.size(); ++j) {
          const IndexMove mv = lower_index(k[j], g.index, f, amb);
          if (mv.valid) {
            Indices kk = k;
            kk[j] = mv.target;
            acc.add(st.normal_form(kk), c.scaled(tsign * before));
          }
          before += w[j];
        }
        break;
      }
      case Generator::Kind::E: {
        int after = tail;
        for (int x : w) after += x;
        for (std::size_t j = 0; j < k.size(); ++j) {
          after -= w[j];
          const IndexMove mv = raise_index(k[j], g.index, f, amb);
          if (mv.valid) {
            Indices kk = k;
            kk[j] = mv.target;
            acc.add(st.normal_form(kk), c.scaled(-tsign * after));
          }
        }
        break;
      }
    }
  }
  return attach_tail(acc, s, st);
}

/// B_m: shifts one factor at a time by -nl*m over the first `trunc` factors.
inline FockVector heisenberg_B(int m, const FockVector& v, const Straightener& st, std::size_t trunc = 0) {
  if (m == 0) throw std::invalid_argument("heisenberg_B: m must be nonzero");
  const Ambient& amb = v.ambient();
  if (trunc == 0) trunc = default_truncation(v) + static_cast<std::size_t>(amb.period() * std::abs(m));
  WedgeVector acc;
  for (const auto& [p, c] : v.terms()) {
    const Indices k = beta_sequence({p, v.charge()}, trunc);
    for (std::size_t j = 0; j < k.size(); ++j) {
      Indices kk = k;
      kk[j] -= amb.period() * m;
      acc.add(st.normal_form(kk), c);
    }
  }
  return attach_tail(acc, v.charge(), st);
}

/// Coefficients of Lambda_0 .. Lambda_{c-1}.
struct WeylWeight {
  std::vector<int> coefficients;
  int level() const {
    int s = 0;
    for (int x : coefficients) s += x;
    return s;
  }
  friend bool operator==(const WeylWeight&, const WeylWeight&) = default;
};

/// Weight of |lambda_c, s_c> under the algebra whose Fock components are
/// indexed by s_c: (level + s_c - s_1) Lambda_0 + sum_i (s_i - s_{i+1}) Lambda_i.
/// The level is the dimension of the other factor (l for U_q(sl_n)).
inline WeylWeight weight(const std::vector<int>& charges, int level) {
  const std::size_t c = charges.size();
  if (c == 0) throw std::invalid_argument("weight: empty charge vector");
  WeylWeight w;
  w.coefficients.push_back(level + charges[c - 1] - charges[0]);
  for (std::size_t i = 0; i + 1 < c; ++i) w.coefficients.push_back(charges[i] - charges[i + 1]);
  return w;
}

/// Weight of a basis vector under the given side's algebra.
inline WeylWeight weight(const ChargedPartition& cp, Side side, const Ambient& amb) {
  // U_q(sl_n) weight spaces are indexed by the n-component charges and vice versa
  if (side == Side::N) return weight(iota_n(cp, amb).charges, amb.l);
  return weight(iota_l(cp, amb).charges, amb.n);
}

}  // namespace qfock
