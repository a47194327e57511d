#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"

using namespace qfock;

namespace {

const Ambient A22(2, 2);
const LaurentPoly q = LaurentPoly::q(1);
const LaurentPoly qi = LaurentPoly::q(-1);

WedgeVector pair_vector(int k1, int k2) { return straighten_pair_vector(k1, k2, A22); }

WedgeVector mono(Indices k, const LaurentPoly& c) {
  WedgeVector v;
  v.add(k, c);
  return v;
}

TEST(Wedge, PairExamples) {
  EXPECT_TRUE(pair_vector(1, 1).is_zero());
  EXPECT_EQ(pair_vector(1, 2), mono({2, 1}, -qi));
  EXPECT_EQ(pair_vector(1, 3), mono({3, 1}, -q));
  WedgeVector expect = mono({6, 1}, -qi);
  expect.add({5, 2}, LaurentPoly::q(-2) - 1);
  EXPECT_EQ(pair_vector(1, 6), expect);
  EXPECT_THROW(straighten_pair(2, 1, A22), std::invalid_argument);
}

TEST(Wedge, NormalFormExamples) {
  Straightener st(A22);
  EXPECT_EQ(st.normal_form(std::vector<int>{3, 1, -2}), mono({3, 1, -2}, 1));
  EXPECT_EQ(st.normal_form(std::vector<int>{1, 2}), mono({2, 1}, -qi));
  EXPECT_EQ(st.normal_form(std::vector<int>{-1, 1}), mono({1, -1}, -q));
  EXPECT_TRUE(st.normal_form(std::vector<int>{2, 0, 2}).is_zero());
}

TEST(Wedge, QEqualsOneGivesPlainAntisymmetry) {
  for (auto [n, l] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Ambient amb(n, l);
    for (int k1 = -12; k1 <= 12; ++k1)
      for (int k2 = k1 + 1; k2 <= k1 + 3 * n * l; ++k2) {
        std::map<std::pair<int, int>, Integer> at_one;
        for (const auto& t : straighten_pair(k1, k2, amb)) {
          EXPECT_GT(t.first, t.second);
          EXPECT_EQ(t.first + t.second, k1 + k2);
          at_one[{t.first, t.second}] += oracle::eval_at(t.coeff, 1);
        }
        for (const auto& [key, c] : at_one) EXPECT_EQ(c, (key == std::pair{k2, k1}) ? -1 : 0) << k1 << "," << k2;
      }
  }
}

TEST(Wedge, ConfinementAndSum) {
  std::mt19937 rng(5);
  for (auto [n, l] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    Straightener st(Ambient(n, l));
    std::uniform_int_distribution<int> idx(-6, 6), len(2, 5);
    for (int it = 0; it < 150; ++it) {
      Indices k(len(rng));
      for (int& x : k) x = idx(rng);
      const auto [lo, hi] = std::minmax_element(k.begin(), k.end());
      const int sum = std::accumulate(k.begin(), k.end(), 0);
      const WedgeVector nf = st.normal_form(k);
      for (const auto& [m, c] : nf.terms()) {
        EXPECT_TRUE(is_ordered(m));
        EXPECT_EQ(std::accumulate(m.begin(), m.end(), 0), sum);
        for (int x : m) {
          EXPECT_GE(x, *lo);
          EXPECT_LE(x, *hi);
        }
      }
    }
  }
}

// Rewriting any disordered adjacent pair, not only the one the engine picks,
// and renormalizing gives the same vector.
TEST(Wedge, NormalFormIsIndependentOfRewriteOrder) {
  Straightener st(A22);
  std::vector<Indices> all;
  for (int r = 2; r <= 4; ++r) {
    Indices k(r, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == r) {
        all.push_back(k);
        return;
      }
      for (int x = -3; x <= 4; ++x) {
        k[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::mt19937 rng(9);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(1500);
  for (const auto& k : all) {
    const WedgeVector ref = st.normal_form(k);
    for (std::size_t j = 0; j + 1 < k.size(); ++j) {
      if (k[j] > k[j + 1]) continue;
      WedgeVector rewritten;
      for (const auto& t : straighten_pair(k[j], k[j + 1], A22)) {
        Indices kk = k;
        kk[j] = t.first;
        kk[j + 1] = t.second;
        rewritten.add(kk, t.coeff);
      }
      EXPECT_EQ(st.normal_form(rewritten), ref);
    }
  }
}

TEST(Wedge, NormalFormIsIdempotent) {
  Straightener st(Ambient(2, 3));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> idx(-5, 5);
  for (int it = 0; it < 100; ++it) {
    Indices k(4);
    for (int& x : k) x = idx(rng);
    const auto v = st.normal_form(k);
    EXPECT_EQ(st.normal_form(v), v);
  }
}

TEST(Wedge, FuelExhaustionIsReported) {
  Straightener st(A22, 3);
  EXPECT_THROW(st.normal_form(std::vector<int>{-3, -1, 1, 3, 5}), InternalError);
}

}  // namespace
