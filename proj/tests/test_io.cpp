#include <gtest/gtest.h>

#include <fstream>

#include "oracles.hpp"

using namespace qfock;

namespace {

const Ambient A22(2, 2);
const LaurentPoly q = LaurentPoly::q(1);

TEST(Io, LaurentJsonRoundTrip) {
  const LaurentPoly p = LaurentPoly::monomial(-1, 2) + LaurentPoly::q(3);
  EXPECT_EQ(to_json(p).dump(), R"({"-1":2,"3":1})");
  EXPECT_EQ(laurent_from_json(to_json(p)), p);
  LaurentPoly big = 1;
  for (int i = 0; i < 30; ++i) big = big * (q + 1000000);
  EXPECT_EQ(laurent_from_json(Json::parse(to_json(big).dump())), big);
  EXPECT_EQ(to_json(LaurentPoly{}).dump(), "{}");
  EXPECT_THROW(laurent_from_json(Json::array()), std::invalid_argument);
}

TEST(Io, MatrixJsonCarriesLabelsAndColumns) {
  Straightener st(A22);
  const auto D = transition_block(st, 0, 3, Sign::Plus, {0, 0});
  const Json j = to_json(D);
  ASSERT_EQ(j.at("labels").size(), 2u);
  EXPECT_EQ(j.at("labels")[0].at("partition"), Json::parse("[3]"));
  EXPECT_EQ(j.at("labels")[0].at("multipartition"), "|1");
  EXPECT_EQ(j.at("labels")[1].at("multipartition"), "1|");
  // the column of (3) lists its expansion: 1 on itself, q on (1^3)
  EXPECT_EQ(laurent_from_json(j.at("columns")[0][1]), q);
  EXPECT_EQ(laurent_from_json(j.at("columns")[1][0]), LaurentPoly{});
  EXPECT_EQ(j.at("sign"), "plus");
}

TEST(Io, JsonOutputIsStable) {
  Straightener st1(A22), st2(A22);
  EXPECT_EQ(to_json(transition_block(st1, 0, 5, Sign::Minus)).dump(),
            to_json(transition_block(st2, 0, 5, Sign::Minus)).dump());
}

TEST(Io, TsvLayout) {
  Straightener st(A22);
  const auto D = multipartition_blocks(st, {0, 0}, 1, Sign::Plus).at(0);
  EXPECT_EQ(to_tsv(D),
            "partition\tmultipartition\t(3)\t(1,1,1)\n"
            "(3)\t(∅,(1))\t1\t0\n"
            "(1,1,1)\t((1),∅)\tq\t1\n");
}

TEST(Io, LatexUsesDotsForZero) {
  Straightener st(A22);
  const auto D = multipartition_blocks(st, {0, 0}, 1, Sign::Plus).at(0);
  const std::string tex = to_latex(D);
  EXPECT_NE(tex.find("\\cdot"), std::string::npos);
  EXPECT_NE(tex.find("\\begin{array}"), std::string::npos);
  EXPECT_EQ(latex_poly(LaurentPoly{}), "\\cdot");
  EXPECT_EQ(latex_poly(q + LaurentPoly::q(3)), "{q^{3}} + q");
  EXPECT_EQ(latex_poly(LaurentPoly::monomial(2, 2)), "2\\,{q^{2}}");
}

TEST(Io, FixtureParsing) {
  const Json doc = Json::parse(R"({"n":2,"l":2,"charges":[0,0],"sign":"plus","blocks":[
    {"multipartition_size":1,"labels":[{"partition":"3","multipartition":"-|1"},{"partition":"1,1,1","multipartition":"1|-"}],
     "rows":[["1","."],["q","1"]]}]})");
  const FixtureSet fs = parse_fixtures(doc);
  ASSERT_EQ(fs.blocks.size(), 1u);
  EXPECT_EQ(fs.blocks[0].rows[1][0], q);
  EXPECT_TRUE(fs.blocks[0].rows[0][1].is_zero());
  Straightener st(A22);
  EXPECT_TRUE(verify_fixtures(fs, st).empty());

  Json bad = doc;
  bad["blocks"][0]["rows"][1][0] = "q^2";
  const auto problems = verify_fixtures(parse_fixtures(bad), st);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("table says q^2"), std::string::npos);

  Json ragged = doc;
  ragged["blocks"][0]["rows"][1] = Json::parse(R"(["q"])");
  EXPECT_THROW(parse_fixtures(ragged), std::invalid_argument);
}

TEST(Io, ShippedFixturesLoad) {
  const FixtureSet fs = load_fixtures(std::filesystem::path(QFOCK_DATA_DIR) / "appendix.json");
  EXPECT_EQ(fs.ambient, A22);
  EXPECT_EQ(fs.charges, (std::vector<int>{0, 0}));
  std::map<int, int> per_size;
  for (const auto& b : fs.blocks) ++per_size[b.multipartition_size];
  EXPECT_EQ(per_size, (std::map<int, int>{{1, 1}, {2, 2}, {3, 2}, {4, 2}}));
}

TEST(Io, BlockCacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / ("qfock-cache-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  Straightener st(A22);
  const BlockCache cache(dir);
  const BarMatrix fresh = bar_matrix_block(st, 0, 6, {0, 0});
  const BarMatrix first = cache.bar_block(st, 0, 6, {0, 0});
  EXPECT_EQ(first.entries, fresh.entries);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
  EXPECT_EQ(files, 1u);
  EXPECT_EQ(cache.bar_block(st, 0, 6, {0, 0}).entries, fresh.entries);
  // a damaged entry is ignored and rewritten
  for (const auto& e : std::filesystem::directory_iterator(dir)) std::ofstream(e.path()) << "{not json";
  EXPECT_EQ(cache.bar_block(st, 0, 6, {0, 0}).entries, fresh.entries);
  EXPECT_EQ(cache.bar_block(st, 0, 6, {0, 0}).entries, fresh.entries);
  std::filesystem::remove_all(dir);
  EXPECT_FALSE(BlockCache(std::nullopt).enabled());
}

}  // namespace
