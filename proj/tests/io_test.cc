// Copyright 2026 The qinstr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qinstr/io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "qinstr/error.h"
#include "qinstr/randgen.h"
#include "test_util.h"

namespace qinstr::io {
namespace {

using qinstr::testing::DemoEnsemble;
using qinstr::testing::ProjectiveZ;

std::string WriteTemp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("qinstr_io_" + name);
  std::ofstream(path) << body;
  return path.string();
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

TEST(Matrix, RoundTripIsExact) {
  ComplexMatrix m = RandomState(3, 2, 5).matrix();
  Json j = Json::parse(MatrixToJson(m).dump());
  EXPECT_EQ(MaxAbsDiff(MatrixFromJson(j), m), 0.0);
  EXPECT_EQ(MatrixToJson(qinstr::testing::PauliX()).dump(), "[[[0.0,0.0],[1.0,0.0]],[[1.0,0.0],[0.0,0.0]]]");
}

TEST(Matrix, Malformed) {
  EXPECT_EQ(CodeOf([] { MatrixFromJson(Json::parse("[]")); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { MatrixFromJson(Json::parse("[[[1,0]],[[1,0],[0,0]]]")); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { MatrixFromJson(Json::parse("[[1,0]]")); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { MatrixFromJson(Json::parse("[[[\"a\",0]]]")); }), ErrorCode::kParse);
}

TEST(Instrument, RoundTrip) {
  Instrument instr = RandomInstrument(3, 2, 2, 4);
  Instrument back = InstrumentFromJson(Json::parse(InstrumentToJson(instr).dump()));
  EXPECT_EQ(back.labels(), instr.labels());
  for (std::size_t w = 0; w < instr.size(); ++w) {
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_EQ(MaxAbsDiff(back.outcomes()[w].kraus[k], instr.outcomes()[w].kraus[k]), 0.0);
    }
  }
  EXPECT_EQ(DetectKind(InstrumentToJson(instr)), FileKind::kInstrument);
}

TEST(Instrument, Errors) {
  EXPECT_EQ(CodeOf([] { InstrumentFromJson(Json::parse(R"({"outcomes": []})")); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { InstrumentFromJson(Json::parse(R"({"dim": 2, "outcomes": []})")); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              InstrumentFromJson(Json::parse(R"({"dim": 2, "outcomes": [{"label": "x", "kraus": [[[[1,0]]]]}]})"));
            }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] {
              InstrumentFromJson(Json::parse(
                  R"({"dim": 1, "outcomes": [{"label": "x", "kraus": [[[[1,0]]]]}, {"label": "x", "kraus": [[[[0,0]]]]}]})"));
            }),
            ErrorCode::kInvalidState);
}

TEST(Ensemble, RoundTrip) {
  Ensemble ens = DemoEnsemble();
  Json j = EnsembleToJson(ens);
  EXPECT_EQ(DetectKind(j), FileKind::kEnsemble);
  Ensemble back = EnsembleFromJson(Json::parse(j.dump()));
  EXPECT_EQ(back.letters(), ens.letters());
  EXPECT_EQ(back.priors().probs(), ens.priors().probs());
  for (std::size_t a = 0; a < ens.size(); ++a) {
    EXPECT_EQ(MaxAbsDiff(back.states()[a].matrix(), ens.states()[a].matrix()), 0.0);
  }
}

TEST(Ensemble, InvalidState) {
  const char* not_psd = R"({"dim": 2, "letters": [
      {"label": "a", "prob": 1.0, "state": [[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]}]})";
  EXPECT_EQ(CodeOf([&] { EnsembleFromJson(Json::parse(not_psd)); }), ErrorCode::kNotPsd);
  const char* bad_sum = R"({"dim": 1, "letters": [{"label": "a", "prob": 0.5, "state": [[[1,0]]]}]})";
  EXPECT_EQ(CodeOf([&] { EnsembleFromJson(Json::parse(bad_sum)); }), ErrorCode::kInvalidState);
}

TEST(State, RoundTripAndKind) {
  DensityMatrix rho = RandomState(2, 2, 1);
  Json j = StateToJson(rho);
  EXPECT_EQ(DetectKind(j), FileKind::kState);
  EXPECT_EQ(MaxAbsDiff(StateFromJson(j).matrix(), rho.matrix()), 0.0);
  EXPECT_EQ(CodeOf([] { DetectKind(Json::parse("[1]")); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { DetectKind(Json::parse(R"({"x": 1})")); }), ErrorCode::kParse);
}

TEST(Files, ReadAndParseErrors) {
  std::string good = WriteTemp("good.json", InstrumentToJson(ProjectiveZ()).dump());
  EXPECT_EQ(DetectKind(ReadJsonFile(good)), FileKind::kInstrument);
  std::string bad = WriteTemp("bad.json", "{\"dim\": 2,");
  EXPECT_EQ(CodeOf([&] { ReadJsonFile(bad); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ReadJsonFile("/nonexistent/qinstr.json"); }), ErrorCode::kParse);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST(Reports, ExtendedRealsAndFields) {
  EXPECT_EQ(ExtendedRealToJson(ExtendedReal::Infinity()), "+inf");
  EXPECT_EQ(ExtendedRealToJson(-1.0 * ExtendedReal::Infinity()), "-inf");
  EXPECT_EQ(ExtendedRealToJson(0.25), 0.25);

  InequalityReport r = CompareGreaterEqual("x", ExtendedReal::Infinity(), 1.0, 1e-9, Units::kBits);
  Json j = ToJson(r);
  EXPECT_EQ(j["name"], "x");
  EXPECT_EQ(j["lhs"], "+inf");
  EXPECT_EQ(j["gap"], "+inf");
  EXPECT_EQ(j["satisfied"], true);
  EXPECT_EQ(j["units"], "bits");
  for (const char* key : {"rhs", "tolerance"}) EXPECT_TRUE(j.contains(key));

  Json chain = ToJson(HolevoChain(DemoEnsemble(), ProjectiveZ()));
  EXPECT_EQ(chain["name"], "holevo");
  EXPECT_EQ(chain["terms"].size(), 3u);
  EXPECT_EQ(chain["links"].size(), 2u);
  EXPECT_EQ(chain["satisfied"], true);

  Json v = ToJson(Validate(ProjectiveZ()));
  EXPECT_EQ(v["ok"], true);
  EXPECT_TRUE(v["violations"].empty());
}

TEST(Reports, SerializationIsDeterministic) {
  Ensemble ens = RandomEnsemble(3, 3, false, 17);
  Instrument instr = RandomInstrument(3, 3, 2, 17);
  EXPECT_EQ(ToJson(ScutaruChain(ens, instr)).dump(), ToJson(ScutaruChain(ens, instr)).dump());
  EXPECT_EQ(EnsembleToJson(RandomEnsemble(3, 3, false, 17)).dump(), EnsembleToJson(ens).dump());
}

}  // namespace
}  // namespace qinstr::io
