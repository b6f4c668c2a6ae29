#include <gtest/gtest.h>

#include "bruhat_taquin.hpp"

using namespace bruhat_taquin;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

template <class T>
T round_trip(const T& x) {
  return parse_json_as<T>(json(x).dump());
}

GrowthDiagram paper_diagram() { return fill_growth(parse_chain(P("2143"), "2_4@1"), parse_chain(P("4123"), "1_2 2_3", 2)); }

}  // namespace

TEST(Json, Scalars) {
  EXPECT_EQ(json(P("2413")), "2413");
  EXPECT_EQ(json(Transposition(1, 4)), "1_4");
  EXPECT_EQ(json(Partition({4, 3, 1})).dump(), "[4,3,1]");
  EXPECT_EQ(json(Rule::J8p), "J8'");
  EXPECT_EQ(round_trip(Rule::J6p), Rule::J6p);
  EXPECT_EQ(round_trip(P("31524")), P("31524"));
}

TEST(Json, Chain) {
  const ChainWord c = parse_chain(P("2143"), "2_4@1 1_2@2 2_3@2");
  EXPECT_EQ(json(c).dump(), R"({"base":"2143","steps":[{"k":1,"t":"2_4"},{"k":2,"t":"1_2"},{"k":2,"t":"2_3"}]})");
  EXPECT_EQ(round_trip(c), c);
  EXPECT_THROW(parse_json_as<ChainWord>(R"({"base":"2143","steps":[{"k":3,"t":"2_4"}]})"), Error);
}

TEST(Json, Tableaux) {
  const Tableau t(SkewShape(Partition({4, 4, 2, 1}), Partition({2, 1})), {{0, 0, 1, 4}, {0, 3, 7, 8}, {2, 6}, {5}});
  EXPECT_EQ(round_trip(t), t);
  const Tableau s = Tableau::straight({{1, 3}, {2}});
  EXPECT_EQ(parse_json_as<Tableau>(R"({"shape":[2,1],"rows":[[1,3],[2]]})"), s);
  const TranspositionTableau tt({{Transposition(1, 2), Transposition(3, 4)}, {Transposition(2, 5)}});
  EXPECT_EQ(json(tt).dump(), R"([["1_2","3_4"],["2_5"]])");
  EXPECT_EQ(round_trip(tt), tt);
}

TEST(Json, PolynomialAndExpansion) {
  SchubertOracle o;
  const Polynomial p = o.schubert_polynomial(P("1432"));
  EXPECT_EQ(round_trip(p), p);
  const SchubertExpansion e = o.structure_constants(P("132"), P("132"));
  EXPECT_EQ(round_trip(e), e);
  EXPECT_EQ(expansion_as_object(e).dump(), R"({"1423":1,"231":1})");
  EXPECT_EQ(json(o.schubert_polynomial(P("213"), 2)).dump(), R"({"nvars":1,"terms":[{"coeff":1,"exponent":[1]}]})");
}

TEST(Json, GrowthDiagram) {
  const GrowthDiagram d = paper_diagram();
  const json j = d;
  EXPECT_EQ(j.at("k"), 2);
  EXPECT_EQ(j.at("l_seq").dump(), "[1]");
  EXPECT_EQ(j.at("fired").dump(), R"([["J8"],["J2"]])");
  EXPECT_EQ(round_trip(d), d);
  json legacy = j;
  legacy.erase("h_cols");
  EXPECT_EQ(parse_json_as<GrowthDiagram>(legacy.dump()), d);
  json broken = j;
  broken["grid"][1][0] = "2143";
  EXPECT_THROW(parse_json_as<GrowthDiagram>(broken.dump()), Error);
}

TEST(Json, ParseErrors) {
  try {
    parse_json_as<ChainWord>("{not json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  EXPECT_THROW(parse_json_as<Permutation>(R"("2213")"), Error);
  EXPECT_THROW(parse_json_as<Partition>("[1,2]"), Error);
  EXPECT_THROW(parse_json_as<Transposition>("17"), Error);
}

TEST(Render, Ascii) {
  EXPECT_EQ(render_ascii(paper_diagram()),
            "4123 --1_2--> 4213 --2_3--> 4312\n"
            " ^             ^             ^\n"
            "2_4           2_4           3_4\n"
            " |             |             |\n"
            "2143 --1_4--> 2413 --2_3--> 3412\n");
}

TEST(Render, Tikz) {
  const std::string s = render_tikz(paper_diagram());
  EXPECT_NE(s.find("\\node{4123}\\arrow{e,t}{1_2}"), std::string::npos) << s;
  EXPECT_NE(s.find("\\node{2143}\\arrow{n,l}{2_4}\\arrow{e,b}{1_4}"), std::string::npos) << s;
  EXPECT_NE(s.find("\\node{3412}\\arrow{n,r}{3_4}"), std::string::npos) << s;
  EXPECT_EQ(s.rfind("\\end{diagram}\n"), s.size() - 14);
}

TEST(Render, Tableau) {
  const TranspositionTableau tt({{Transposition(1, 2), Transposition(3, 10)}, {Transposition(2, 5)}});
  EXPECT_EQ(render_tableau(tt), "1_2  3_10\n2_5\n");
}
