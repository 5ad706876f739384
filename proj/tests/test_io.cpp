#include <gtest/gtest.h>

#include "twell/builtins.hpp"
#include "twell/io.hpp"
#include "twell/sections.hpp"

using namespace twell;
using twell::io::json;

namespace {

template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(IO, GroupDocuments) {
  const auto a = io::group_from_json(json::parse(R"({"type":"named","name":"D4"})"), "x");
  EXPECT_EQ(a.order(), 8);
  const auto b =
      io::group_from_json(json::parse(R"({"type":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]})"), "x");
  EXPECT_EQ(b.order(), 6);
  const auto c = io::group_from_json(io::group_to_json(b), "x");
  EXPECT_EQ(c.order(), 6);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) EXPECT_EQ(c.mul(x, y), b.mul(x, y));
  EXPECT_THROW(io::group_from_json(json::parse(R"({"type":"table","table":[[0,1],[1,1]]})"), "x"), InputError);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"type":"named"})"), "x"), InputError);
}

TEST(IO, GSetAndHom) {
  const auto S3 = named_group("S3");
  const auto X = io::gset_from_json(S3, json::parse(R"({"size":3,"action":[[0,1,2],[1,0,2],[1,2,0],[0,2,1],[2,0,1],[2,1,0]]})"), "x");
  EXPECT_EQ(X.size, 3);
  EXPECT_THROW(io::gset_from_json(S3, json::parse(R"({"size":2,"action":[[0,1],[1,0],[1,0],[0,1],[1,0],[0,1]]})"), "x"),
               InputError);
}

TEST(IO, CochainRoundTrip) {
  const auto a = cyclic_3cocycle(4, 3);
  const auto text = io::cochain_to_csv(a);
  EXPECT_EQ(io::cochain_from_csv<3>(a.group(), text, "mem"), a);
}

TEST(IO, CochainErrorsCarryLocation) {
  const auto G = named_group("Z/3");
  EXPECT_NE(error_of([&] { io::cochain_from_csv<2>(G, "1,1,1,3\n0,2,1,3\n", "t.csv"); }).find("t.csv:2"),
            std::string::npos);
  EXPECT_NE(error_of([&] { io::cochain_from_csv<2>(G, "1,1,1,3\n1,1,2,3\n", "t.csv"); }).find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of([&] { io::cochain_from_csv<2>(G, "1,5,1,3\n", "t.csv"); }).find("out of range"),
            std::string::npos);
  EXPECT_NE(error_of([&] { io::cochain_from_csv<2>(G, "1,1,1\n", "t.csv"); }).find("columns"), std::string::npos);
  // comments and a header are skipped
  const auto c = io::cochain_from_csv<2>(G, "# note\ni,j,num,den\n1,2,1,3\n", "t.csv");
  EXPECT_EQ(c(1, 2), Phase(1, 3));
}

TEST(IO, SectionRoundTrip) {
  const auto S3 = named_group("S3");
  EquivariantSection s(Geometry::Torus, S3);
  for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = Complex(0.25 * i, -0.5);
  const auto back = io::section_from_csv(S3, Geometry::Torus, io::section_to_csv(s), "mem");
  EXPECT_LT(max_difference(s, back), 1e-12);
  EXPECT_THROW(io::section_from_csv(S3, Geometry::Torus, "1,2,1,0\n", "mem"), InputError);  // not commuting
}

TEST(IO, CohomologyDocument) {
  const auto Z2 = named_group("Z/2");
  const auto d = io::load_cohomology(Z2, TWELL_SAMPLES "/z2_circle.json");
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(ktheory_dim(Z2, d, Cochain2(Z2), Parity::Even).dimension, 3);
  EXPECT_EQ(ktheory_dim(Z2, d, Cochain2(Z2), Parity::Odd).dimension, 0);

  const auto torus = json::parse(R"({"geometry":"torus","components":[
    {"label":"0,0","entries":[{"degree":0,"dim":1,"character":[[1,0],[1,0]]}]},
    {"label":["0","1"],"entries":[{"degree":0,"dim":1,"phases":[[0,1],[0,1]]}]},
    {"label":"1,0","entries":[{"degree":0,"dim":1,"phases":[[0,1],[0,1]]}]},
    {"label":"1,1","entries":[{"degree":0,"dim":1,"phases":[[0,1],[0,1]]}]}]})");
  const auto t = io::cohomology_from_json(Z2, torus, "mem");
  EXPECT_EQ(ell_rank(Z2, t, Cochain3(Z2), 0).total.dimension, 4);
  EXPECT_EQ(ell_rank(Z2, t, cyclic_3cocycle(2, 1), 0).total.dimension,
            static_cast<int>(regular_pair_orbits(Z2, cyclic_3cocycle(2, 1)).size()));

  auto missing = torus;
  missing["components"].erase(3);
  EXPECT_NE(error_of([&] { io::cohomology_from_json(Z2, missing, "mem"); }).find("missing"), std::string::npos);
}

TEST(IO, MissingFile) { EXPECT_THROW(io::read_file("/nonexistent/x.json"), InputError); }
