#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qfock;

namespace {

const Ambient A22(2, 2);
const LaurentPoly q = LaurentPoly::q(1);

const std::vector<std::pair<int, int>> kShapes = {{2, 2}, {2, 3}, {3, 2}};

Generator gen(char kind, int i) { return Generator::parse(std::string(1, kind) + ":" + std::to_string(i)); }

FockVector vacuum(const Ambient& amb, int s = 0) { return FockVector::monomial(amb, {Partition{}, s}); }

FockVector phi2(std::vector<Partition> c) { return phi(Multipartition(std::move(c), {0, 0}), A22); }

int modulus(Side side, const Ambient& amb) { return side == Side::N ? amb.n : amb.l; }

// labels the acting side's nodes live on: iota_l for N, iota_n for L
Factor label_factor(Side side) { return side == Side::N ? Factor::Second : Factor::First; }

TEST(Fock, PhiExamples) {
  EXPECT_EQ(phi(Multipartition::empty({0, 0}), A22), vacuum(A22));
  EXPECT_EQ(phi2({{1}, {}}), FockVector::monomial(A22, {Partition{1, 1, 1}, 0}));
  const FockVector v = FockVector::monomial(A22, {Partition{2, 1}, 0}, q + 3);
  EXPECT_EQ(from_phi_coordinates(phi_coordinates(v), A22, 0), v);
}

TEST(Fock, ChevalleyExamples) {
  const FockVector vac = vacuum(A22);
  EXPECT_EQ(chevalley_action(gen('f', 0), Side::N, vac), q * phi2({{1}, {}}) + phi2({{}, {1}}));
  EXPECT_EQ(chevalley_action(gen('e', 0), Side::N, phi2({{}, {1}})), LaurentPoly::q(-1) * vac);
  EXPECT_EQ(chevalley_action(gen('t', 0), Side::N, vac), LaurentPoly::q(2) * vac);
  EXPECT_TRUE(chevalley_action(gen('f', 1), Side::N, vac).is_zero());
  EXPECT_TRUE(chevalley_action(gen('e', 0), Side::N, vac).is_zero());
  EXPECT_THROW(chevalley_action(gen('f', 2), Side::N, vac), std::invalid_argument);
}

TEST(Fock, OracleAgreesOnSmallVectors) {
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    Straightener st(amb);
    for (int s : {0, 1})
      for (int d = 0; d <= 3; ++d)
        for (const auto& p : partitions_of(d)) {
          const FockVector v = phi({p, s}, amb);
          for (Side side : {Side::N, Side::L})
            for (char k : {'f', 'e', 't'})
              for (int i = 0; i < modulus(side, amb); ++i)
                EXPECT_EQ(chevalley_action(gen(k, i), side, v), wedge_action_oracle(gen(k, i), side, v, st))
                    << n << l << " " << p << " " << k << i;
        }
  }
}

TEST(Fock, OracleStableUnderLongerTruncation) {
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    Straightener st(amb);
    for (int d = 0; d <= 3; ++d)
      for (const auto& p : partitions_of(d)) {
        const FockVector v = phi({p, 1}, amb);
        const std::size_t r = default_truncation(v);
        for (Side side : {Side::N, Side::L})
          for (char k : {'f', 'e', 't'})
            for (int i = 0; i < modulus(side, amb); ++i)
              EXPECT_EQ(wedge_action_oracle(gen(k, i), side, v, st, r),
                        wedge_action_oracle(gen(k, i), side, v, st, r + amb.period()));
      }
  }
}

TEST(Fock, ComponentStabilityAndNodeCount) {
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    for (int d = 0; d <= 4; ++d)
      for (const auto& p : partitions_of(d))
        for (Side side : {Side::N, Side::L}) {
          const ChargedPartition cp{p, 0};
          const Factor lab = label_factor(side);
          const Multipartition in = split(cp, amb, lab);
          for (char k : {'f', 'e'})
            for (int i = 0; i < modulus(side, amb); ++i) {
              const FockVector image = chevalley_action(gen(k, i), side, phi(cp, amb));
              for (const auto& [mu, c] : image.terms()) {
                const Multipartition out = split({mu, 0}, amb, lab);
                EXPECT_EQ(out.charges, in.charges);
                EXPECT_EQ(out.size(), in.size() + (k == 'f' ? 1 : -1));
              }
            }
        }
  }
}

// t_i f_j t_i^-1 = q^{-a_ij} f_j and [e_i, f_j] = delta_ij [N_i] on basis vectors.
TEST(Fock, DefiningRelationsOnBasisVectors) {
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    for (int d = 0; d <= 4; ++d)
      for (const auto& p : partitions_of(d))
        for (Side side : {Side::N, Side::L}) {
          const int c = modulus(side, amb);
          const FockVector v = phi({p, 0}, amb);
          std::vector<int> N(c);
          for (int i = 0; i < c; ++i) {
            const FockVector tv = chevalley_action(gen('t', i), side, v);
            N[i] = tv.terms().begin()->second.min_degree() - v.terms().begin()->second.min_degree();
            ASSERT_EQ(tv, LaurentPoly::q(N[i]) * v);
          }
          for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) {
              const FockVector fv = chevalley_action(gen('f', j), side, v);
              EXPECT_EQ(chevalley_action(gen('t', i), side, fv), LaurentPoly::q(N[i] - oracle::cartan(i, j, c)) * fv);
              const FockVector comm = chevalley_action(gen('e', i), side, fv) -
                                      chevalley_action(gen('f', j), side, chevalley_action(gen('e', i), side, v));
              EXPECT_EQ(comm, i == j ? oracle::qint(N[i]) * v : FockVector(amb, 0)) << p << " " << i << j;
            }
        }
  }
}

TEST(Fock, EFOnVacuumIsQuantumInteger) {
  const FockVector vac = vacuum(A22);
  const FockVector x = chevalley_action(gen('e', 0), Side::N, chevalley_action(gen('f', 0), Side::N, vac));
  EXPECT_EQ(x, (q + LaurentPoly::q(-1)) * vac);
}

TEST(Fock, WeightExamples) {
  EXPECT_EQ(weight({0, 0}, 2).coefficients, (std::vector<int>{2, 0}));
  EXPECT_EQ(weight({1, 0}, 2).coefficients, (std::vector<int>{1, 1}));
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    for (int s = -2; s <= 2; ++s)
      for (int d = 0; d <= 4; ++d)
        for (const auto& p : partitions_of(d)) {
          EXPECT_EQ(weight({p, s}, Side::N, amb).level(), l);
          EXPECT_EQ(weight({p, s}, Side::L, amb).level(), n);
        }
  }
}

// The t_i eigenvalue of phi(lambda) is the component's vacuum weight minus
// the simple roots of the added nodes, paired with alpha_i^vee.
TEST(Fock, TEigenvaluesMatchWeights) {
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    for (int s = -1; s <= 1; ++s)
      for (int d = 0; d <= 5; ++d)
        for (const auto& p : partitions_of(d))
          for (Side side : {Side::N, Side::L}) {
            const int c = modulus(side, amb);
            const Factor lab = label_factor(side);
            const Multipartition mp = split({p, s}, amb, lab);
            const ChargedPartition vac = join(Multipartition::empty(mp.charges), amb, lab);
            const WeylWeight w = weight(vac, side, amb);
            std::vector<int> nodes(c, 0);
            for (std::size_t b = 0; b < mp.width(); ++b)
              for (std::size_t i = 1; i <= mp.components[b].length(); ++i)
                for (int j = 1; j <= mp.components[b][i]; ++j) ++nodes[pos_mod(mp.charges[b] + j - static_cast<int>(i), c)];
            for (int i = 0; i < c; ++i) {
              int expect = w.coefficients[i];
              for (int r = 0; r < c; ++r) expect -= nodes[r] * oracle::cartan(i, r, c);
              const FockVector v = FockVector::monomial(amb, {p, s});
              EXPECT_EQ(chevalley_action(gen('t', i), side, v), LaurentPoly::q(expect) * v);
            }
          }
  }
}

TEST(Fock, HeisenbergStableAndCommuting) {
  for (auto [n, l] : kShapes) {
    const Ambient amb(n, l);
    Straightener st(amb);
    std::optional<LaurentPoly> scalar;
    for (int d = 0; d <= 3; ++d)
      for (const auto& p : partitions_of(d)) {
        const FockVector v = phi({p, 0}, amb);
        for (int m : {1, -1}) {
          const std::size_t r = default_truncation(v) + amb.period();
          EXPECT_EQ(heisenberg_B(m, v, st, r), heisenberg_B(m, v, st, r + amb.period()));
          for (Side side : {Side::N, Side::L})
            for (char k : {'f', 'e'})
              for (int i = 0; i < modulus(side, amb); ++i)
                EXPECT_EQ(chevalley_action(gen(k, i), side, heisenberg_B(m, v, st)),
                          heisenberg_B(m, chevalley_action(gen(k, i), side, v), st));
        }
        // [B_1, B_-1] acts by one nonzero scalar
        const FockVector comm =
            heisenberg_B(1, heisenberg_B(-1, v, st), st) - heisenberg_B(-1, heisenberg_B(1, v, st), st);
        ASSERT_EQ(comm.size(), 1u);
        const LaurentPoly g = comm.coeff(p) * LaurentPoly(phi_sign({p, 0}, amb));
        if (!scalar) scalar = g;
        EXPECT_EQ(g, *scalar);
        EXPECT_FALSE(g.is_zero());
      }
  }
}

TEST(Fock, HeisenbergVacuumExample) {
  Straightener st(A22);
  const FockVector v = heisenberg_B(-1, vacuum(A22), st);
  EXPECT_FALSE(v.is_zero());
  for (const auto& [p, c] : v.terms()) EXPECT_EQ(p.size(), 4);
  EXPECT_TRUE(heisenberg_B(1, vacuum(A22), st).is_zero());
  EXPECT_THROW(heisenberg_B(0, vacuum(A22), st), std::invalid_argument);
}

TEST(Fock, GeneratorParsing) {
  EXPECT_EQ(Generator::parse("t:3").to_string(), "t:3");
  EXPECT_THROW(Generator::parse("x:1"), std::invalid_argument);
  EXPECT_THROW(Generator::parse("f1"), std::invalid_argument);
}

}  // namespace
