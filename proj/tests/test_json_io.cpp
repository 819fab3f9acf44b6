/**
 * @file tests/test_json_io.cpp
 * @copyright Apache License 2.0
 */
#include <gtest/gtest.h>

#include "ssst/json_io.hpp"

using namespace ssst;
using namespace ssst::json_io;

TEST(JsonIo, Instance) {
  EXPECT_EQ(parse_instance(R"({"machines":2,"jobs":[1,1,3]})"), make_instance(2, {1, 1, 3}));
  EXPECT_EQ(to_json(make_instance(2, {1, 1, 3})), R"({"machines":2,"jobs":[1,1,3]})");
  EXPECT_THROW(parse_instance(R"({"machines":2,"jobs":[1,1,3],"extra":1})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"machines":2})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"machines":2,"jobs":[1,-1]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"machines":2,"jobs":[1,1.5]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"machines":2,"jobs":[1,0]})"), InvalidInstance);
  EXPECT_THROW(parse_instance(R"({"machines":1,"jobs":[1]})"), InvalidInstance);
  EXPECT_THROW(parse_instance(R"([1,2])"), ParseError);
  EXPECT_THROW(parse_instance("{\"machines\":2,\n\"jobs\":[1,"), ParseError);
}

TEST(JsonIo, ErrorsNameTheField) {
  try {
    parse_instance(R"({"machines":2,"jobs":[1,"x"]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("jobs[1]"), std::string::npos) << e.what();
  }
  try {
    parse_instance("{\"machines\":2,\n\"jobs\":[1,}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(JsonIo, Certificate) {
  const auto cert = parse_certificate(R"({"assignment":[1,1,2],"makespan":3})");
  EXPECT_EQ(cert, (Certificate{{1, 1, 2}, 3}));
  EXPECT_EQ(to_json(cert), R"({"assignment":[1,1,2],"makespan":3})");
  EXPECT_THROW(parse_certificate(R"({"assignment":[1,1,2]})"), ParseError);
  EXPECT_THROW(parse_certificate(R"({"assignment":[1,1,2],"makespan":3,"x":0})"), ParseError);
  EXPECT_THROW(parse_certificate(R"({"assignment":[1,99999999999],"makespan":3})"), ParseError);
}

TEST(JsonIo, PartitionAndMultiUser) {
  const auto pp = parse_partition(R"({"weights":[2,3,5,4]})");
  EXPECT_EQ(pp.total_weight(), 14u);
  EXPECT_EQ(to_json(pp), R"({"weights":[2,3,5,4]})");
  EXPECT_THROW(parse_partition(R"({"weights":[2,0]})"), ZeroWeight);

  const auto mu = parse_mumpsp(R"({"machines":2,"users":[[1,1,3],[2]]})");
  EXPECT_EQ(mu, MumpspInstance(2, {{1, 1, 3}, {2}}));
  EXPECT_EQ(to_json(mu), R"({"machines":2,"users":[[1,1,3],[2]]})");
  EXPECT_THROW(parse_mumpsp(R"({"machines":2,"users":[1,2]})"), ParseError);

  const auto ordered = parse_ordered_schedule(R"({"machines":[[[1,1],[1,2]],[[1,3]]]})");
  ASSERT_EQ(ordered.machines.size(), 2u);
  EXPECT_EQ(ordered.machines[0], (std::vector<JobRef>{{1, 1}, {1, 2}}));
  EXPECT_THROW(parse_ordered_schedule(R"({"machines":[[[1,1,1]]]})"), ParseError);
}

TEST(JsonIo, SolveResult) {
  SolveResult r;
  r.best_schedule = Schedule{1, 1, 2};
  r.optimum = 3;
  r.leaves_explored = 8;
  r.nodes_pruned = 0;
  EXPECT_EQ(to_json(r), R"({"optimum":3,"assignment":[1,1,2],"leaves_explored":8,"nodes_pruned":0})");
  r.leaves_explored = BigInt(1) << 70;
  EXPECT_NE(to_json(r).find("\"1180591620717411303424\""), std::string::npos);
}
