#pragma once

// Partitions, charged (multi)partitions, the index labelings of the
// semi-infinite wedge, dominance, the sign exponent of the natural basis,
// node combinatorics and the cylindrical (FLOTW) predicate.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfock {

inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline int pos_mod(int a, int b) { return a - b * floor_div(a, b); }

/// Dimensions (n, l) of the two tensor factors of V_{n,l}.
struct Ambient {
  int n = 2;
  int l = 2;

  Ambient() = default;
  Ambient(int n_, int l_) : n(n_), l(l_) {
    if (n < 2 || l < 2) throw std::invalid_argument("ambient dimensions must satisfy n, l >= 2");
  }
  int period() const { return n * l; }
  /// The same wedge space with the roles of the two factors exchanged.
  Ambient swapped() const { return Ambient(l, n); }
  friend bool operator==(const Ambient&, const Ambient&) = default;
  friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

/// k = a + n(b - 1) - n l m with a in [1, n], b in [1, l].
struct IndexTriple {
  int a = 1;
  int b = 1;
  int m = 0;
  friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

inline IndexTriple decompose_index(int k, const Ambient& amb) {
  const int nl = amb.period();
  const int m = -floor_div(k - 1, nl);
  const int rest = k + nl * m - 1;  // in [0, nl)
  return {rest % amb.n + 1, rest / amb.n + 1, m};
}

inline int compose_index(const IndexTriple& t, const Ambient& amb) {
  return t.a + amb.n * (t.b - 1) - amb.period() * t.m;
}

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// i-th part, 1-based; zero beyond the length.
  int operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty())
      for (int j = 1; j <= parts_[0]; ++j) {
        int cnt = 0;
        for (int p : parts_) cnt += p >= j;
        c.push_back(cnt);
      }
    return Partition(std::move(c));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "(2,1,1)" or "()"
  std::string to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
  }
  /// Exponential notation: (3,2^2,1), with the empty
  /// partition rendered as the empty-set symbol.
  std::string to_exponent_string() const {
    if (parts_.empty()) return "∅";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (i) os << ",";
      os << parts_[i];
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
    os << ")";
    return os.str();
  }

private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// All partitions of d in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

/// True iff mu <= lam in dominance order; false when sizes differ.
inline bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size()) return false;
  int sm = 0, sl = 0;
  const std::size_t len = std::max(mu.length(), lam.length());
  for (std::size_t i = 1; i <= len; ++i) {
    sm += mu[i];
    sl += lam[i];
    if (sm > sl) return false;
  }
  return true;
}

struct ChargedPartition {
  Partition lambda;
  int charge = 0;
  friend bool operator==(const ChargedPartition&, const ChargedPartition&) = default;
  friend auto operator<=>(const ChargedPartition&, const ChargedPartition&) = default;
};

/// A tuple of partitions with one charge per component.
struct Multipartition {
  std::vector<Partition> components;
  std::vector<int> charges;

  Multipartition() = default;
  Multipartition(std::vector<Partition> comps, std::vector<int> ch)
      : components(std::move(comps)), charges(std::move(ch)) {
    if (components.size() != charges.size())
      throw std::invalid_argument("multipartition: component and charge counts differ");
  }
  static Multipartition empty(std::vector<int> charges) {
    std::vector<Partition> comps(charges.size());
    return Multipartition(std::move(comps), std::move(charges));
  }

  std::size_t width() const { return components.size(); }
  int size() const {
    int s = 0;
    for (const auto& p : components) s += p.size();
    return s;
  }
  int total_charge() const { return std::accumulate(charges.begin(), charges.end(), 0); }

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

  /// "((1),∅)" in exponential notation.
  std::string label() const {
    std::string s = "(";
    for (std::size_t b = 0; b < components.size(); ++b) s += (b ? "," : "") + components[b].to_exponent_string();
    return s + ")";
  }
  /// CLI syntax "2,1|1" (empty components are empty strings).
  std::string to_cli() const {
    std::string s;
    for (std::size_t b = 0; b < components.size(); ++b) {
      if (b) s += "|";
      const auto& p = components[b].parts();
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    }
    return s;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Multipartition& m) {
  os << m.label() << " s=(";
  for (std::size_t i = 0; i < m.charges.size(); ++i) os << (i ? "," : "") << m.charges[i];
  return os << ")";
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline Partition parse_partition(const std::string& text) {
  if (text.empty() || text == "-" || text == "0" || text == "∅") return {};
  return Partition(parse_int_list(text));
}

/// Parses "2,1|1" into components ((2,1),(1)).
inline std::vector<Partition> parse_components(const std::string& text) {
  std::vector<Partition> out;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    out.push_back(parse_partition(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

/// k_i = lambda_i + s - i + 1 for i = 1..r.
inline std::vector<int> beta_sequence(const ChargedPartition& cp, std::size_t r) {
  if (r < cp.lambda.length()) throw std::invalid_argument("beta_sequence: length shorter than the partition");
  std::vector<int> k(r);
  for (std::size_t i = 1; i <= r; ++i) k[i - 1] = cp.lambda[i] + cp.charge - static_cast<int>(i) + 1;
  return k;
}

/// Inverse of beta_sequence for a strictly decreasing prefix followed by the vacuum tail.
inline ChargedPartition from_beta_sequence(const std::vector<int>& k, int charge) {
  std::vector<int> parts;
  for (std::size_t i = 1; i <= k.size(); ++i) {
    int p = k[i - 1] - charge + static_cast<int>(i) - 1;
    if (i > 1 && k[i - 1] >= k[i - 2]) throw std::invalid_argument("from_beta_sequence: not strictly decreasing");
    if (p < 0) throw std::invalid_argument("from_beta_sequence: prefix falls below the vacuum tail");
    parts.push_back(p);
  }
  return {Partition(std::move(parts)), charge};
}

/// Smallest prefix length r >= min_len whose cut point s - r is a multiple of the period.
inline std::size_t aligned_length(int charge, std::size_t min_len, const Ambient& amb) {
  const int nl = amb.period();
  std::size_t r = min_len;
  r += static_cast<std::size_t>(pos_mod(charge - static_cast<int>(r), nl));
  return r;
}

/// Which tensor factor indexes the components of a labeling.
/// Second: l components (grouping by b), First: n components (grouping by a).
enum class Factor { First, Second };

namespace detail {

inline Multipartition split_labels(const ChargedPartition& cp, const Ambient& amb, Factor f) {
  const std::size_t r = aligned_length(cp.charge, cp.lambda.length(), amb);
  const int cut = cp.charge - static_cast<int>(r);  // multiple of nl
  const int width = f == Factor::Second ? amb.l : amb.n;
  const int comp_cut = cut / width;
  std::vector<std::vector<int>> seqs(width);
  for (int k : beta_sequence(cp, r)) {
    IndexTriple t = decompose_index(k, amb);
    if (f == Factor::Second)
      seqs[t.b - 1].push_back(t.a - amb.n * t.m);
    else
      seqs[t.a - 1].push_back(t.b - amb.l * t.m);
  }
  Multipartition mp;
  for (auto& seq : seqs) {
    std::sort(seq.rbegin(), seq.rend());
    const int sb = static_cast<int>(seq.size()) + comp_cut;
    mp.charges.push_back(sb);
    mp.components.push_back(from_beta_sequence(seq, sb).lambda);
  }
  return mp;
}

inline ChargedPartition join_labels(const Multipartition& mp, const Ambient& amb, Factor f) {
  const int width = f == Factor::Second ? amb.l : amb.n;
  const int other = f == Factor::Second ? amb.n : amb.l;
  if (static_cast<int>(mp.width()) != width)
    throw std::invalid_argument("multipartition has " + std::to_string(mp.width()) + " components, expected " +
                                std::to_string(width));
  // choose a component cut other*t below every excitation
  int lowest = 0;
  bool first = true;
  for (std::size_t c = 0; c < mp.width(); ++c) {
    int v = mp.charges[c] - static_cast<int>(mp.components[c].length());
    lowest = first ? v : std::min(lowest, v);
    first = false;
  }
  const int t = floor_div(lowest, other);
  const int comp_cut = other * t;
  std::vector<int> ks;
  for (std::size_t c = 0; c < mp.width(); ++c) {
    const int count = mp.charges[c] - comp_cut;
    for (int i = 1; i <= count; ++i) {
      const int x = mp.components[c][i] + mp.charges[c] - i + 1;
      const int x_mod = pos_mod(x - 1, other) + 1;
      const int m = (x_mod - x) / other;
      IndexTriple tr = f == Factor::Second ? IndexTriple{x_mod, static_cast<int>(c) + 1, m}
                                           : IndexTriple{static_cast<int>(c) + 1, x_mod, m};
      ks.push_back(compose_index(tr, amb));
    }
  }
  std::sort(ks.rbegin(), ks.rend());
  return from_beta_sequence(ks, mp.total_charge());
}

}  // namespace detail

/// (lambda, s) -> (lambda_l, s_l): components indexed by the second factor.
inline Multipartition iota_l(const ChargedPartition& cp, const Ambient& amb) {
  return detail::split_labels(cp, amb, Factor::Second);
}
/// (lambda, s) -> (lambda_n, s_n): components indexed by the first factor.
inline Multipartition iota_n(const ChargedPartition& cp, const Ambient& amb) {
  return detail::split_labels(cp, amb, Factor::First);
}
inline ChargedPartition iota_l_inv(const Multipartition& mp, const Ambient& amb) {
  return detail::join_labels(mp, amb, Factor::Second);
}
inline ChargedPartition iota_n_inv(const Multipartition& mp, const Ambient& amb) {
  return detail::join_labels(mp, amb, Factor::First);
}
/// Checked variant: the component charges must add up to the given global charge.
inline ChargedPartition iota_l_inv(const Multipartition& mp, int charge, const Ambient& amb) {
  if (mp.total_charge() != charge) throw std::invalid_argument("component charges do not sum to the global charge");
  return iota_l_inv(mp, amb);
}
inline ChargedPartition iota_n_inv(const Multipartition& mp, int charge, const Ambient& amb) {
  if (mp.total_charge() != charge) throw std::invalid_argument("component charges do not sum to the global charge");
  return iota_n_inv(mp, amb);
}

inline Multipartition split(const ChargedPartition& cp, const Ambient& amb, Factor f) {
  return detail::split_labels(cp, amb, f);
}
inline ChargedPartition join(const Multipartition& mp, const Ambient& amb, Factor f) {
  return detail::join_labels(mp, amb, f);
}

/// Phi exponent computed on an explicit prefix length r. The result is
/// independent of r once both prefixes end on a period boundary past every
/// excitation; phi_exponent picks such an r. Pairs are compared by the index
/// coordinate of the chosen factor (b for Second, a for First).
inline int phi_exponent_at(const ChargedPartition& cp, std::size_t r, const Ambient& amb,
                           Factor f = Factor::Second) {
  const Multipartition mp = split(cp, amb, f);
  const ChargedPartition vac = join(Multipartition::empty(mp.charges), amb, f);
  const auto k = beta_sequence(cp, r);
  const auto k0 = beta_sequence(vac, r);
  auto coord = [&](int x) {
    const IndexTriple t = decompose_index(x, amb);
    return f == Factor::Second ? t.b : t.a;
  };
  int phi = 0;
  for (std::size_t j = 0; j < r; ++j) {
    const int cj = coord(k[j]);
    const int c0j = coord(k0[j]);
    for (std::size_t i = 0; i < j; ++i) {
      phi += coord(k[i]) < cj;
      phi -= coord(k0[i]) < c0j;
    }
  }
  return phi;
}

inline int phi_exponent(const ChargedPartition& cp, const Ambient& amb, Factor f = Factor::Second) {
  const Multipartition mp = split(cp, amb, f);
  const ChargedPartition vac = join(Multipartition::empty(mp.charges), amb, f);
  const std::size_t len = std::max(cp.lambda.length(), vac.lambda.length());
  return phi_exponent_at(cp, aligned_length(cp.charge, len, amb), amb, f);
}

/// (-1)^Phi
inline int phi_sign(const ChargedPartition& cp, const Ambient& amb, Factor f = Factor::Second) {
  return phi_exponent(cp, amb, f) % 2 == 0 ? 1 : -1;
}
inline int phi_sign(const Multipartition& mp, const Ambient& amb) { return phi_sign(iota_l_inv(mp, amb), amb); }

/// A box (row, col) of component b; content d = s_b + col - row.
struct Node {
  int content = 0;
  int component = 1;  // 1-based
  int row = 1;
  int col = 1;

  int colour(int modulus) const { return pos_mod(content, modulus); }
  /// Total order: by content, then by component.
  friend bool operator<(const Node& x, const Node& y) {
    return x.content < y.content || (x.content == y.content && x.component < y.component);
  }
  friend bool operator==(const Node& x, const Node& y) { return x.content == y.content && x.component == y.component; }
};

inline std::vector<Node> addable_nodes(const Multipartition& mp, int modulus, int colour) {
  std::vector<Node> out;
  for (std::size_t b = 0; b < mp.width(); ++b) {
    const Partition& p = mp.components[b];
    for (std::size_t i = 1; i <= p.length() + 1; ++i) {
      if (i > 1 && p[i - 1] == p[i]) continue;
      Node nd{mp.charges[b] + p[i] + 1 - static_cast<int>(i), static_cast<int>(b) + 1, static_cast<int>(i), p[i] + 1};
      if (nd.colour(modulus) == colour) out.push_back(nd);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Node> removable_nodes(const Multipartition& mp, int modulus, int colour) {
  std::vector<Node> out;
  for (std::size_t b = 0; b < mp.width(); ++b) {
    const Partition& p = mp.components[b];
    for (std::size_t i = 1; i <= p.length(); ++i) {
      if (p[i] == p[i + 1]) continue;
      Node nd{mp.charges[b] + p[i] - static_cast<int>(i), static_cast<int>(b) + 1, static_cast<int>(i), p[i]};
      if (nd.colour(modulus) == colour) out.push_back(nd);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Multipartition add_node(Multipartition mp, const Node& nd) {
  auto parts = mp.components[nd.component - 1].parts();
  if (nd.row == static_cast<int>(parts.size()) + 1)
    parts.push_back(1);
  else
    ++parts[nd.row - 1];
  mp.components[nd.component - 1] = Partition(std::move(parts));
  return mp;
}

inline Multipartition remove_node(Multipartition mp, const Node& nd) {
  auto parts = mp.components[nd.component - 1].parts();
  --parts[nd.row - 1];
  mp.components[nd.component - 1] = Partition(std::move(parts));
  return mp;
}

struct NodeStatistics {
  int below = 0;  // N^<: addable minus removable nodes of the same colour before the node
  int above = 0;  // N^>: the same count after the node
  int total = 0;  // N: addable minus removable of the colour overall
};

/// Statistics of the node `nd` relative to the multipartition `mp` (the
/// smaller of the two multipartitions differing by nd).
inline NodeStatistics node_statistics(const Multipartition& mp, int modulus, const Node& nd) {
  const int r = nd.colour(modulus);
  NodeStatistics st;
  for (const Node& x : addable_nodes(mp, modulus, r)) {
    if (x < nd) ++st.below;
    if (nd < x) ++st.above;
    ++st.total;
  }
  for (const Node& x : removable_nodes(mp, modulus, r)) {
    if (x < nd) --st.below;
    if (nd < x) --st.above;
    --st.total;
  }
  return st;
}

inline int colour_count(const Multipartition& mp, int modulus, int colour) {
  return static_cast<int>(addable_nodes(mp, modulus, colour).size()) -
         static_cast<int>(removable_nodes(mp, modulus, colour).size());
}

/// FLOTW membership for charges n > s_1 >= ... >= s_l >= 0.
inline bool is_cylindrical(const Multipartition& mp, int n) {
  const std::size_t l = mp.width();
  if (l == 0) throw std::invalid_argument("is_cylindrical: no components");
  for (std::size_t b = 0; b < l; ++b) {
    if (mp.charges[b] < 0 || mp.charges[b] >= n || (b > 0 && mp.charges[b] > mp.charges[b - 1]))
      throw std::invalid_argument("is_cylindrical: charges must satisfy n > s_1 >= ... >= s_l >= 0");
  }
  const auto& lam = mp.components;
  const auto& s = mp.charges;
  int maxlen = 0;
  for (const auto& p : lam) maxlen = std::max(maxlen, static_cast<int>(p.length()));
  for (std::size_t b = 0; b + 1 < l; ++b) {
    const int shift = s[b] - s[b + 1];
    for (int i = 1; i <= maxlen + 1; ++i)
      if (lam[b + 1][i] < lam[b][i + shift]) return false;
  }
  {
    const int shift = n + s[l - 1] - s[0];
    for (int i = 1; i <= maxlen + 1; ++i)
      if (lam[0][i] < lam[l - 1][i + shift]) return false;
  }
  std::map<int, std::set<int>> ends;  // row length -> colours of right ends
  for (std::size_t b = 0; b < l; ++b)
    for (std::size_t i = 1; i <= lam[b].length(); ++i) {
      const int k = lam[b][i];
      ends[k].insert(pos_mod(s[b] + k - static_cast<int>(i), n));
    }
  for (const auto& [k, cols] : ends)
    if (static_cast<int>(cols.size()) >= n) return false;
  return true;
}

/// All multipartitions with `width` components and total size d, in a fixed order.
inline std::vector<std::vector<Partition>> multipartitions_of(int d, std::size_t width) {
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur(width);
  std::function<void(std::size_t, int)> rec = [&](std::size_t b, int rest) {
    if (b + 1 == width) {
      for (const auto& p : partitions_of(rest)) {
        cur[b] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = rest; k >= 0; --k)
      for (const auto& p : partitions_of(k)) {
        cur[b] = p;
        rec(b + 1, rest - k);
      }
  };
  if (width == 0) return out;
  rec(0, d);
  return out;
}

}  // namespace qfock

template <>
struct std::hash<qfock::Partition> {
  std::size_t operator()(const qfock::Partition& p) const noexcept {
    std::size_t h = 0;
    for (int x : p.parts()) h = h * 1000003u ^ std::hash<int>{}(x);
    return h;
  }
};
