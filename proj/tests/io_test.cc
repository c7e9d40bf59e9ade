// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "cyclomat/errors.h"
#include "cyclomat/families.h"
#include "cyclomat/harness.h"
#include "cyclomat/io.h"

namespace cyclomat {
namespace {

TEST(IoTest, MatroidFilesRoundTripForEveryRepresentation) {
  std::vector<MatroidFile> files;
  files.push_back(ToMatroidFile(Uniform(2, 4)));
  files.push_back({"spike", 8, *Spike(4).source});
  files.push_back({"wheel", 8, *Wheel(4).source});
  files.push_back({"triangle", 3, CircuitsRep{3, {{0, 1, 2}}}});
  for (const auto& f : files) {
    const Json j = ToJson(f);
    const MatroidFile back = MatroidFileFromJson(Json::parse(j.dump()));
    EXPECT_EQ(back.name, f.name);
    EXPECT_EQ(back.Build(), f.Build());
    EXPECT_EQ(ToJson(back), j);
  }
}

TEST(IoTest, AcceptsFlatMatrix) {
  const Json j = Json::parse(R"({"name": "u24", "n": 4, "repr": {"kind": "linear",
      "p": 5, "rows": 2, "matrix": [1, 0, 1, 1, 0, 1, 1, 2]}})");
  EXPECT_EQ(MatroidFileFromJson(j).Build(), Uniform(2, 4));
}

TEST(IoTest, RejectsMalformedDocuments) {
  EXPECT_THROW(MatroidFileFromJson(Json::parse(R"({"n": 3})")), InvalidInput);
  EXPECT_THROW(MatroidFileFromJson(Json::parse(
                   R"({"n": 3, "repr": {"kind": "matrix"}})")),
               InvalidInput);
  EXPECT_THROW(MatroidFileFromJson(Json::parse(
                   R"({"n": 4, "repr": {"kind": "graph", "vertices": 2, "edges": [[0, 1]]}})")),
               InvalidInput);
  EXPECT_THROW(MatroidFileFromJson(Json::parse(
                   R"({"n": 2, "repr": {"kind": "bases", "bases": "x"}})")),
               InvalidInput);
  EXPECT_THROW(ReadJsonFile("/nonexistent/file.json"), InvalidInput);
}

TEST(IoTest, OrderingFiles) {
  const OrderingFile f{CyclicOrdering({0, 2, 1, 3}), 2, Parity::kEven};
  const OrderingFile back = OrderingFileFromJson(ToJson(f));
  EXPECT_EQ(back.ordering, f.ordering);
  EXPECT_EQ(back.t, 2);
  EXPECT_EQ(back.parity, Parity::kEven);
  EXPECT_THROW(OrderingFileFromJson(Json::parse(R"({"ordering": [0, 0]})")),
               InvalidInput);
  EXPECT_THROW(OrderingFileFromJson(Json::parse(R"({"ordering": [0, 1], "parity": "x"})")),
               InvalidInput);
}

TEST(IoTest, ReportRoundTrip) {
  const VerificationReport rep = RunSuite({"basics", {FamilyKind::kSpike}, 3, 4});
  const VerificationReport back = ReportFromJson(Json::parse(ToJson(rep).dump()));
  EXPECT_EQ(back.suite, rep.suite);
  EXPECT_EQ(back.records, rep.records);
  const Json j = ToJson(rep);
  for (const char* key : {"suite", "instances_run", "passes", "failures", "rows",
                          "wall_time_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(IoTest, TextTableHasOneRowPerRecord) {
  const VerificationReport rep = RunSuite({"basics", {FamilyKind::kWheel}, 3, 3});
  const std::string text = EmitReport(rep, OutputFormat::kText);
  int lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, rep.instances_run() + 3);
  EXPECT_NE(text.find("wheel(3)"), std::string::npos);
}

TEST(IoTest, FaultyRunEmitsWitnesses) {
  SuiteSpec spec{"basics", {FamilyKind::kSpike}, 4, 4};
  spec.drop_basis = 0;
  const Json j = Json::parse(EmitReport(RunSuite(spec), OutputFormat::kJson));
  ASSERT_FALSE(j["failures"].empty());
  bool witnessed = false;
  for (const auto& f : j["failures"]) witnessed |= !f["witness"].empty();
  EXPECT_TRUE(witnessed);
}

TEST(IoTest, FlowerAndTraceJson) {
  const auto b = Spike(5);
  const Json flower = ToJson(ClassifyFlower(
      b.matroid, MakeFlower(b.ordering, Concatenation{0, {2, 2, 2, 2, 2}}, 3)));
  EXPECT_EQ(flower["verdict"], "anemone");
  const Json trace = ToJson(Inflate(b.matroid, b.ordering, 4));
  EXPECT_EQ(trace["t_out"], 6);
  EXPECT_EQ(trace["parity_out"], "even");
  EXPECT_EQ(MatroidFileFromJson(trace["output"]).Build().rank(), 5);
}

}  // namespace
}  // namespace cyclomat
