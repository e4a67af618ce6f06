#include <gtest/gtest.h>

#include "orbitforge/error.hpp"
#include "orbitforge/json_io.hpp"

using namespace orbitforge;

TEST(Json, Scalars) {
  EXPECT_EQ(to_json(rat(-3, 4)).get<std::string>(), "-3/4");
  EXPECT_EQ(rat_from_json(Json("5/10")), rat(1, 2));
  EXPECT_EQ(rat_from_json(Json(7)), Rat(7));
  EXPECT_THROW(rat_from_json(Json(true)), PreconditionError);
}

TEST(Json, MatrixRoundTrip) {
  const QMat m{{1, rat(2, 3)}, {0, -5}};
  EXPECT_EQ(qmat_from_json(to_json(m)), m);
  EXPECT_EQ(qmat_from_json(Json::parse("[[1,0],[\"1/2\",1]]")), (QMat{{1, 0}, {rat(1, 2), 1}}));
  EXPECT_THROW(qmat_from_json(Json::parse("[[1,0],[1]]")), PreconditionError);
}

TEST(Json, Labels) {
  std::vector<std::pair<Rat, Partition>> pairs{{Rat(1), Partition({2, 2})}};
  const ClassLabel l = make_label(pairs);
  EXPECT_EQ(to_json(l).dump(), "[[\"1\",[2,2]]]");
  EXPECT_EQ(class_label_from_json(to_json(l)), l);
  const LeviSpec levi({2, 1});
  EXPECT_EQ(mclass_from_text(levi, "trivial"), trivial_class(levi));
  EXPECT_EQ(mclass_from_text(levi, "regular"), regular_unipotent_class(levi));
  const MClassLabel c = mclass_from_text(levi, "[[[1,[1,1]]],[[2,[1]]]]");
  EXPECT_EQ(c.per_block[1].pairs.front().first, Rat(2));
  EXPECT_THROW(mclass_from_text(levi, "[[[1,[2]]]]"), PreconditionError);
  EXPECT_THROW(mclass_from_text(levi, "bogus"), PreconditionError);
}

TEST(Json, Models) {
  EXPECT_EQ(model_from_json(Json::parse("{\"catalog\":\"point\"}")).coord_dim, 0u);
  EXPECT_EQ(model_from_json(Json::parse("{\"catalog\":\"regular-g2\",\"n\":4}")).coord_dim, 3u);
  // Torus of GL_2 on the line, written out.
  const AffineActionModel m = model_from_json(Json::parse(R"({
    "coord_dim": 1,
    "generators": [[[1,0],[0,0]], [[0,0],[0,1]]],
    "vector_fields": [[[[-1,[1]]]], [[[1,[1]]]]]
  })"));
  EXPECT_EQ(m.vector_fields(0, 0), Rat(-1) * MPoly::variable(1, 0));
  EXPECT_THROW(model_from_json(Json::parse(R"({
    "coord_dim": 1,
    "generators": [[[1,0],[0,0]], [[0,0],[0,1]]],
    "vector_fields": [[[[1,[2]]]], [[[1,[1]]]]]
  })")),
               PreconditionError);
  EXPECT_THROW(model_from_json(Json::parse("{\"catalog\":\"nope\"}")), PreconditionError);
}

TEST(Json, BatchSchema) {
  BatchReport r;
  const Json j = to_json(r);
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_TRUE(j.at("cases").is_array());
}
