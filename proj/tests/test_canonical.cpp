#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qfock;

namespace {

const Ambient A22(2, 2);
const LaurentPoly q = LaurentPoly::q(1);

const std::vector<std::pair<int, int>> kShapes = {{2, 2}, {2, 3}, {3, 2}};

Multipartition mp2(std::vector<Partition> c) { return Multipartition(std::move(c), {0, 0}); }

/// Entry D(lam, mu) from the multipartition blocks of size |lam_l|.
LaurentPoly entry(const Straightener& st, const Multipartition& lam, const Multipartition& mu) {
  const ChargedPartition a = iota_l_inv(lam, st.ambient()), b = iota_l_inv(mu, st.ambient());
  for (const auto& D : multipartition_blocks(st, lam.charges, lam.size(), Sign::Plus))
    if (D.degree == a.lambda.size()) return D.at(a.lambda, b.lambda);
  throw std::logic_error("no block");
}

TEST(Canonical, DegreeZero) {
  Straightener st(A22);
  const auto D = transition_block(st, 0, 0, Sign::Plus);
  ASSERT_EQ(D.dim(), 1u);
  EXPECT_EQ(D.entries[0][0], LaurentPoly(1));
  const auto vac = Multipartition::empty({0, 0});
  EXPECT_EQ(g_vector(iota_l_inv(vac, A22), Sign::Plus, st), phi(vac, A22));
}

TEST(Canonical, TableSizeOne) {
  Straightener st(A22);
  const auto G = g_vector(iota_l_inv(mp2({{}, {1}}), A22), Sign::Plus, st);
  EXPECT_EQ(G, phi(mp2({{}, {1}}), A22) + q * phi(mp2({{1}, {}}), A22));
  EXPECT_EQ(g_vector(iota_l_inv(mp2({{1}, {}}), A22), Sign::Plus, st), phi(mp2({{1}, {}}), A22));
}

TEST(Canonical, TableSizeTwoColumn) {
  Straightener st(A22);
  const Multipartition lam = mp2({{}, {2}});
  const std::vector<std::pair<Multipartition, LaurentPoly>> column = {
      {mp2({{}, {2}}), 1}, {mp2({{}, {1, 1}}), q}, {mp2({{2}, {}}), q}, {mp2({{1, 1}, {}}), q * q}};
  for (const auto& [mu, c] : column) EXPECT_EQ(entry(st, lam, mu), c) << mu.label();
  EXPECT_EQ(iota_l_inv(lam, A22).lambda.size(), 4);
}

TEST(Canonical, TableSizeFourEntries) {
  Straightener st(A22);
  EXPECT_EQ(entry(st, mp2({{4}, {}}), mp2({{2, 1}, {1}})), LaurentPoly::monomial(2, 2));
  EXPECT_EQ(entry(st, mp2({{1}, {2, 1}}), mp2({{1, 1}, {1, 1}})), q + LaurentPoly::q(3));
}

TEST(Canonical, LinearExtensionDoesNotMatter) {
  for (auto [n, l] : kShapes) {
    Straightener st(Ambient(n, l));
    for (int d = 4; d <= 6; ++d) {
      const BarMatrix A = bar_matrix_block(st, 0, d);
      std::vector<std::size_t> order(A.dim());
      std::iota(order.begin(), order.end(), 0);
      // increasing lexicographic order of conjugates also extends dominance
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return A.labels[a].conjugate().parts() < A.labels[b].conjugate().parts();
      });
      for (Sign sign : {Sign::Plus, Sign::Minus})
        EXPECT_EQ(canonical_block(A, sign, order).entries, canonical_block(A, sign).entries);
    }
  }
}

TEST(Canonical, RejectsOrderAgainstDominance) {
  Straightener st(A22);
  const BarMatrix A = bar_matrix_block(st, 0, 3);
  std::vector<std::size_t> order(A.dim());
  std::iota(order.rbegin(), order.rend(), 0);
  EXPECT_THROW(canonical_block(A, Sign::Plus, order), std::invalid_argument);
  EXPECT_THROW(canonical_block(A, Sign::Plus, std::vector<std::size_t>{0, 0, 1}), std::invalid_argument);
}

TEST(Canonical, TriangularCongruentAndBarInvariant) {
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    Straightener st(amb);
    for (int s : {0, 1})
      for (int d = 0; d <= 5; ++d)
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
          const auto D = transition_block(st, s, d, sign);
          for (std::size_t i = 0; i < D.dim(); ++i) {
            EXPECT_EQ(D.entries[i][i], LaurentPoly(1));
            for (std::size_t j = 0; j < D.dim(); ++j) {
              const auto& e = D.entries[i][j];
              if (i == j || e.is_zero()) continue;
              EXPECT_TRUE(dominance_leq(D.labels[j], D.labels[i]));
              if (sign == Sign::Plus)
                EXPECT_GT(e.min_degree(), 0);
              else
                EXPECT_LT(e.max_degree(), 0);
            }
            if (d <= 4) {
              const FockVector G = g_vector(D, i);
              EXPECT_EQ(bar_fock(G, st), G);
            }
          }
          if (sign == Sign::Plus)
            for (std::size_t i = 0; i < D.dim(); ++i)
              for (std::size_t j = 0; j < D.dim(); ++j) EXPECT_EQ(D.entries[i][j].at_zero(), i == j ? 1 : 0);
        }
  }
}

TEST(Canonical, Duality) {
  for (int s : {0, 1}) {
    Straightener s22(A22), s23(Ambient(2, 3)), s32(Ambient(3, 2));
    for (const auto& [a, b] : {std::pair{&s22, &s22}, {&s23, &s32}, {&s32, &s23}}) {
      const auto rep = duality_check(*a, *b, s, 4);
      EXPECT_TRUE(rep.ok()) << (rep.mismatches.empty() ? "" : rep.mismatches.front());
      EXPECT_GT(rep.compared, 0u);
    }
  }
}

TEST(Canonical, GFromVacuumByF0) {
  Straightener st(A22);
  const auto vac = FockVector::monomial(A22, {Partition{}, 0});
  const auto f0 = chevalley_action(Generator::parse("f:0"), Side::N, vac);
  EXPECT_EQ(g_vector(iota_l_inv(mp2({{}, {1}}), A22), Sign::Plus, st), f0);
  EXPECT_EQ(bar_fock(f0, st), f0);
}

TEST(Canonical, MultipartitionBlocksMatchDegrees) {
  Straightener st(A22);
  for (int size = 0; size <= 4; ++size) {
    std::size_t total = 0;
    for (const auto& D : multipartition_blocks(st, {0, 0}, size, Sign::Plus)) {
      total += D.dim();
      for (std::size_t i = 0; i < D.dim(); ++i) {
        EXPECT_EQ(D.multipartition(i).size(), size);
        EXPECT_EQ(D.multipartition(i).charges, (std::vector<int>{0, 0}));
        EXPECT_EQ(D.labels[i].size(), D.degree);
      }
    }
    EXPECT_EQ(total, multipartitions_of(size, 2).size());
  }
}

TEST(Canonical, CrystalMembership) {
  Straightener st(A22);
  const auto c = crystal_subset(st, {0, 0}, 2);
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(c.front().label, Multipartition::empty({0, 0}));
  std::vector<Multipartition> expect;
  for (int d = 0; d <= 2; ++d)
    for (const auto& comps : multipartitions_of(d, 2))
      if (is_cylindrical(Multipartition(comps, {0, 0}), 2)) expect.emplace_back(comps, std::vector<int>{0, 0});
  ASSERT_EQ(c.size(), expect.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c[i].label, expect[i]);
    EXPECT_EQ(c[i].g, g_vector(iota_l_inv(expect[i], A22), Sign::Plus, st));
  }
  EXPECT_THROW(crystal_subset(st, {0}, 1), std::invalid_argument);
}

}  // namespace
