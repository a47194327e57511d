#pragma once

// The bar involution on semi-infinite q-wedges and its matrices in the
// signed natural basis.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/combinatorics.hpp"
#include "qfock/fock.hpp"
#include "qfock/laurent.hpp"
#include "qfock/wedge.hpp"

namespace qfock {

/// C_r(u) = sum over i < j <= r of [b_i = b_j] - [a_i = a_j].
inline int c_statistic(std::span<const int> k, std::size_t r, const Ambient& amb) {
  if (r > k.size()) throw std::invalid_argument("c_statistic: prefix longer than the monomial");
  int c = 0;
  for (std::size_t j = 0; j < r; ++j) {
    const IndexTriple tj = decompose_index(k[j], amb);
    for (std::size_t i = 0; i < j; ++i) {
      const IndexTriple ti = decompose_index(k[i], amb);
      c += (ti.b == tj.b) - (ti.a == tj.a);
    }
  }
  return c;
}

/// bar(|lambda, s>) computed by reversing the first r factors; r defaults to
/// |lambda|, the smallest admissible value.
inline FockVector bar_monomial(const ChargedPartition& cp, const Straightener& st, std::optional<std::size_t> r = {}) {
  const Ambient& amb = st.ambient();
  const std::size_t len = r.value_or(static_cast<std::size_t>(cp.lambda.size()));
  if (len < static_cast<std::size_t>(cp.lambda.size()))
    throw std::invalid_argument("bar_monomial: r must be at least the degree");
  if (len == 0) return FockVector::monomial(amb, cp);
  Indices k = beta_sequence(cp, len);
  const int c = c_statistic(k, len, amb);
  const bool odd = (len * (len - 1) / 2) % 2 == 1;
  std::reverse(k.begin(), k.end());
  WedgeVector w;
  w.add(k, LaurentPoly::monomial(c, odd ? -1 : 1));
  return attach_tail(st.normal_form(w), cp.charge, st);
}

/// The semi-linear bar involution.
inline FockVector bar_fock(const FockVector& v, const Straightener& st) {
  FockVector out(v.ambient(), v.charge());
  for (const auto& [p, c] : v.terms()) out.add(bar_monomial({p, v.charge()}, st), bar(c));
  return out;
}

/// Square block of A(q) over partitions of one degree in one Fock component,
/// in the signed natural basis: bar(phi(lambda)) = sum_mu A[lambda][mu] phi(mu).
struct BarMatrix {
  Ambient ambient;
  int charge = 0;
  int degree = 0;
  std::vector<int> component;  // l-component charges shared by every label (empty: unfiltered)
  std::vector<Partition> labels;
  std::vector<std::vector<LaurentPoly>> entries;

  std::size_t dim() const { return labels.size(); }
  std::size_t index_of(const Partition& p) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == p) return i;
    throw std::out_of_range("partition " + p.to_string() + " not in block");
  }
};

/// Partitions of d in charge s, restricted to one l-component when given,
/// in decreasing lexicographic order (a linear extension of dominance).
inline std::vector<Partition> block_labels(const Ambient& amb, int charge, int d,
                                           const std::vector<int>& component) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(d)) {
    if (!component.empty() && iota_l({p, charge}, amb).charges != component) continue;
    out.push_back(std::move(p));
  }
  return out;
}

inline BarMatrix bar_matrix_block(const Straightener& st, int charge, int d, const std::vector<int>& component = {}) {
  if (d < 0) throw std::invalid_argument("bar_matrix_block: negative degree");
  if (!component.empty()) {
    if (static_cast<int>(component.size()) != st.ambient().l)
      throw std::invalid_argument("component filter needs one charge per l-component");
    int sum = 0;
    for (int x : component) sum += x;
    if (sum != charge) throw std::invalid_argument("component charges do not sum to the global charge");
  }
  BarMatrix A;
  A.ambient = st.ambient();
  A.charge = charge;
  A.degree = d;
  A.component = component;
  A.labels = block_labels(A.ambient, charge, d, component);
  const std::size_t dim = A.labels.size();
  A.entries.assign(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const FockVector row = bar_fock(phi({A.labels[i], charge}, A.ambient), st);
    const auto coords = phi_coordinates(row);
    for (const auto& [p, c] : coords) {
      std::size_t j = dim;
      for (std::size_t t = 0; t < dim; ++t)
        if (A.labels[t] == p) j = t;
      if (j == dim)
        throw InternalError("bar of phi" + A.labels[i].to_string() + " leaves its block via " + p.to_string());
      A.entries[i][j] = c;
    }
  }
  return A;
}

}  // namespace qfock
