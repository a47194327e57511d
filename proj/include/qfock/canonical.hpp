#pragma once

// Canonical bases G^+ / G^- and their transition matrices to the signed
// natural basis, obtained from the bar matrices by unitriangular recursion.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/combinatorics.hpp"
#include "qfock/fock.hpp"
#include "qfock/involution.hpp"
#include "qfock/laurent.hpp"

namespace qfock {

inline const char* sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }
inline Sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return Sign::Plus;
  if (s == "minus" || s == "-") return Sign::Minus;
  throw std::invalid_argument("sign must be plus or minus");
}

/// G(lambda_i) = sum_j entries[i][j] phi(lambda_j) over one block.
struct TransitionMatrix {
  Sign sign = Sign::Plus;
  Ambient ambient;
  int charge = 0;
  int degree = 0;
  std::vector<int> component;
  std::vector<Partition> labels;
  std::vector<std::vector<LaurentPoly>> entries;

  std::size_t dim() const { return labels.size(); }
  std::size_t index_of(const Partition& p) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == p) return i;
    throw std::out_of_range("partition " + p.to_string() + " not in block");
  }
  const LaurentPoly& at(const Partition& lam, const Partition& mu) const { return entries[index_of(lam)][index_of(mu)]; }
  Multipartition multipartition(std::size_t i, Factor f = Factor::Second) const {
    return split({labels[i], charge}, ambient, f);
  }
};

/// Order in which block columns are resolved: any sequence in which every
/// partition comes after all partitions strictly dominating it.
inline bool is_dominance_compatible(const std::vector<Partition>& order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] != order[j] && dominance_leq(order[i], order[j])) return false;
  return true;
}

/// Solves D = bar(D) A row by row. `order` lists block indices in a
/// dominance-compatible sequence (defaults to the label order, which is
/// decreasing lexicographic).
inline TransitionMatrix canonical_block(const BarMatrix& A, Sign sign,
                                        std::optional<std::vector<std::size_t>> order = {}) {
  const std::size_t dim = A.dim();
  std::vector<std::size_t> seq(dim);
  std::iota(seq.begin(), seq.end(), 0);
  if (order) {
    seq = *order;
    std::vector<std::size_t> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < dim; ++i)
      if (sorted.size() != dim || sorted[i] != i) throw std::invalid_argument("canonical_block: order is not a permutation");
    std::vector<Partition> labs;
    for (std::size_t i : seq) labs.push_back(A.labels[i]);
    if (!is_dominance_compatible(labs)) throw std::invalid_argument("canonical_block: order does not extend dominance");
  }
  std::vector<std::size_t> rank(dim);
  for (std::size_t p = 0; p < dim; ++p) rank[seq[p]] = p;

  TransitionMatrix D;
  D.sign = sign;
  D.ambient = A.ambient;
  D.charge = A.charge;
  D.degree = A.degree;
  D.component = A.component;
  D.labels = A.labels;
  D.entries.assign(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t lam = 0; lam < dim; ++lam) {
    auto& row = D.entries[lam];
    row[lam] = 1;
    for (std::size_t p = rank[lam] + 1; p < dim; ++p) {
      const std::size_t nu = seq[p];
      LaurentPoly defect;
      for (std::size_t pm = rank[lam]; pm < p; ++pm) {
        const std::size_t mu = seq[pm];
        if (row[mu].is_zero() || A.entries[mu][nu].is_zero()) continue;
        defect += bar(row[mu]) * A.entries[mu][nu];
      }
      try {
        row[nu] = gauss_split(defect, sign);
      } catch (const ArithmeticError& e) {
        throw InternalError("canonical_block: defect at " + A.labels[lam].to_string() + " / " +
                            A.labels[nu].to_string() + " is not antisymmetric: " + defect.to_string());
      }
    }
  }
  return D;
}

/// Canonical basis vector as an element of the Fock space (monomial basis).
inline FockVector g_vector(const TransitionMatrix& D, std::size_t i) {
  FockVector::Map coords;
  for (std::size_t j = 0; j < D.dim(); ++j)
    if (!D.entries[i][j].is_zero()) coords.emplace(D.labels[j], D.entries[i][j]);
  return from_phi_coordinates(coords, D.ambient, D.charge);
}

/// Convenience: builds the bar block and solves it.
inline TransitionMatrix transition_block(const Straightener& st, int charge, int d, Sign sign,
                                         const std::vector<int>& component = {}) {
  return canonical_block(bar_matrix_block(st, charge, d, component), sign);
}

/// G(lambda, s) for one charged partition.
inline FockVector g_vector(const ChargedPartition& cp, Sign sign, const Straightener& st) {
  const Multipartition mp = iota_l(cp, st.ambient());
  const TransitionMatrix D = transition_block(st, cp.charge, cp.lambda.size(), sign, mp.charges);
  return g_vector(D, D.index_of(cp.lambda));
}

/// Sub-block on the given labels (a subset of the block's labels, kept in
/// block order). Works for BarMatrix and TransitionMatrix alike.
template <class Block>
Block restrict_block(const Block& blk, const std::vector<Partition>& keep) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < blk.labels.size(); ++i)
    if (std::find(keep.begin(), keep.end(), blk.labels[i]) != keep.end()) idx.push_back(i);
  if (idx.size() != keep.size()) throw std::invalid_argument("restrict_block: label not in block");
  Block out = blk;
  out.labels.clear();
  out.entries.assign(idx.size(), std::vector<LaurentPoly>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    out.labels.push_back(blk.labels[idx[a]]);
    for (std::size_t b = 0; b < idx.size(); ++b) out.entries[a][b] = blk.entries[idx[a]][idx[b]];
  }
  return out;
}

/// Partitions lambda with iota_l(lambda, s) = (lambda_l, charges), |lambda_l| = size,
/// grouped by |lambda| (ascending), each group in decreasing lexicographic order.
inline std::map<int, std::vector<Partition>> labels_by_degree(const Ambient& amb, const std::vector<int>& charges,
                                                               int size) {
  if (static_cast<int>(charges.size()) != amb.l) throw std::invalid_argument("need one charge per l-component");
  if (size < 0) throw std::invalid_argument("size must be non-negative");
  std::map<int, std::vector<Partition>> out;
  for (auto& comps : multipartitions_of(size, charges.size())) {
    const ChargedPartition cp = iota_l_inv(Multipartition(comps, charges), amb);
    out[cp.lambda.size()].push_back(cp.lambda);
  }
  for (auto& [d, v] : out) std::sort(v.rbegin(), v.rend());
  return out;
}

/// The matrices for all multipartitions of one size in the component s_l,
/// one block per |lambda|. The solve runs on the full degree block; entries
/// linking the returned labels to other labels of that block must vanish.
inline std::vector<TransitionMatrix> multipartition_blocks(const Straightener& st, const std::vector<int>& charges,
                                                           int size, Sign sign) {
  const Ambient& amb = st.ambient();
  const int s = std::accumulate(charges.begin(), charges.end(), 0);
  std::vector<TransitionMatrix> out;
  for (const auto& [d, labs] : labels_by_degree(amb, charges, size)) {
    const TransitionMatrix full = transition_block(st, s, d, sign, charges);
    for (std::size_t i = 0; i < full.dim(); ++i)
      for (std::size_t j = 0; j < full.dim(); ++j) {
        const bool in_i = std::find(labs.begin(), labs.end(), full.labels[i]) != labs.end();
        const bool in_j = std::find(labs.begin(), labs.end(), full.labels[j]) != labs.end();
        if (in_i != in_j && !full.entries[i][j].is_zero())
          throw InternalError("block of size " + std::to_string(size) + " couples to " + full.labels[j].to_string());
      }
    out.push_back(restrict_block(full, labs));
  }
  return out;
}

inline std::vector<BarMatrix> multipartition_bar_blocks(const Straightener& st, const std::vector<int>& charges,
                                                        int size) {
  const Ambient& amb = st.ambient();
  const int s = std::accumulate(charges.begin(), charges.end(), 0);
  std::vector<BarMatrix> out;
  for (const auto& [d, labs] : labels_by_degree(amb, charges, size))
    out.push_back(restrict_block(bar_matrix_block(st, s, d, charges), labs));
  return out;
}

/// Transition-matrix entries keyed by labels of the chosen factor.
using LabelledEntries = std::map<std::pair<Multipartition, Multipartition>, LaurentPoly>;

inline LabelledEntries labelled_entries(const TransitionMatrix& D, Factor f) {
  LabelledEntries out;
  for (std::size_t i = 0; i < D.dim(); ++i)
    for (std::size_t j = 0; j < D.dim(); ++j)
      if (!D.entries[i][j].is_zero()) out[{D.multipartition(i, f), D.multipartition(j, f)}] = D.entries[i][j];
  return out;
}

struct DualityReport {
  std::size_t compared = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

namespace detail {

/// Compares X^{(l,n)}_{lam_l,mu_l}(q) with sub(X^{(n,l)}_{lam_l,mu_l}(q)) over all
/// degree blocks d <= max_degree of the (n,l) space. In the swapped space the
/// l-multipartitions are the first-factor labels. `nl` and `ln` map a degree
/// to the full (unfiltered) block of that degree.
template <class BlockNL, class BlockLN>
void compare_swapped(const Ambient& amb, int charge, int max_degree, BlockNL&& nl, BlockLN&& ln,
                     const std::string& what, DualityReport& rep) {
  const Ambient swapped = amb.swapped();
  for (int d = 0; d <= max_degree; ++d) {
    const auto X = nl(d);
    std::vector<Partition> images;
    for (const auto& p : X.labels)
      images.push_back(join(split({p, charge}, amb, Factor::Second), swapped, Factor::First).lambda);
    std::map<int, decltype(ln(0))> partner;
    for (const auto& p : images)
      if (!partner.count(p.size())) partner.emplace(p.size(), ln(p.size()));
    for (std::size_t i = 0; i < X.labels.size(); ++i)
      for (std::size_t j = 0; j < X.labels.size(); ++j) {
        LaurentPoly lhs;
        if (images[i].size() == images[j].size()) {
          const auto& Y = partner.at(images[i].size());
          lhs = Y.entries[Y.index_of(images[i])][Y.index_of(images[j])];
        }
        const LaurentPoly rhs = dual_substitute(X.entries[i][j]);
        ++rep.compared;
        if (lhs != rhs)
          rep.mismatches.push_back(what + " at " + split({X.labels[i], charge}, amb, Factor::Second).label() + "," +
                                   split({X.labels[j], charge}, amb, Factor::Second).label() + ": swapped " +
                                   lhs.to_string() + " vs substituted " + rhs.to_string());
      }
  }
}

}  // namespace detail

/// A^{(l,n)}(q) = A^{(n,l)}(-q^-1) on l-multipartition labels.
inline DualityReport bar_duality_check(const Straightener& st_nl, const Straightener& st_ln, int charge,
                                       int max_degree) {
  const Ambient amb = st_nl.ambient();
  if (!(st_ln.ambient() == amb.swapped())) throw std::invalid_argument("duality check: second space must be swapped");
  DualityReport rep;
  detail::compare_swapped(
      amb, charge, max_degree, [&](int d) { return bar_matrix_block(st_nl, charge, d); },
      [&](int d) { return bar_matrix_block(st_ln, charge, d); }, "A", rep);
  return rep;
}

/// +-D^{(l,n)}(q) = -+D^{(n,l)}(-q^-1) on l-multipartition labels, both signs.
inline DualityReport duality_check(const Straightener& st_nl, const Straightener& st_ln, int charge, int max_degree) {
  const Ambient amb = st_nl.ambient();
  if (!(st_ln.ambient() == amb.swapped())) throw std::invalid_argument("duality check: second space must be swapped");
  DualityReport rep;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const Sign other = sign == Sign::Plus ? Sign::Minus : Sign::Plus;
    detail::compare_swapped(
        amb, charge, max_degree, [&](int d) { return transition_block(st_nl, charge, d, sign); },
        [&](int d) { return transition_block(st_ln, charge, d, other); },
        std::string(sign_name(other)) + "D(l,n) vs " + sign_name(sign) + "D(n,l)", rep);
  }
  return rep;
}

/// Cylindrical multipartitions of size <= max_size for charges s_l, each
/// with its canonical vector G^+.
struct CrystalElement {
  Multipartition label;
  FockVector g;
};

inline std::vector<CrystalElement> crystal_subset(const Straightener& st, const std::vector<int>& charges, int max_size) {
  const Ambient& amb = st.ambient();
  if (static_cast<int>(charges.size()) != amb.l) throw std::invalid_argument("crystal_subset: need l charges");
  std::vector<CrystalElement> out;
  std::map<int, TransitionMatrix> blocks;  // by degree
  for (int size = 0; size <= max_size; ++size)
    for (auto& comps : multipartitions_of(size, charges.size())) {
      Multipartition mp(comps, charges);
      if (!is_cylindrical(mp, amb.n)) continue;
      const ChargedPartition cp = iota_l_inv(mp, amb);
      const int d = cp.lambda.size();
      auto it = blocks.find(d);
      if (it == blocks.end())
        it = blocks.emplace(d, transition_block(st, cp.charge, d, Sign::Plus, charges)).first;
      out.push_back({mp, g_vector(it->second, it->second.index_of(cp.lambda))});
    }
  return out;
}

}  // namespace qfock
