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

#include <fstream>
#include <sstream>

#include "qinstr/error.h"

namespace qinstr::io {

namespace {

[[noreturn]] void ParseFail(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) ParseFail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int DimField(const Json& j) {
  const Json& d = Field(j, "dim");
  if (!d.is_number_integer() || d.get<int>() <= 0) ParseFail("'dim' must be a positive integer");
  return d.get<int>();
}

std::string LabelField(const Json& j) {
  const Json& l = Field(j, "label");
  if (!l.is_string()) ParseFail("'label' must be a string");
  return l.get<std::string>();
}

void RequireSize(const ComplexMatrix& m, int dim, const std::string& what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, what + " is not " + std::to_string(dim) + "x" +
                                                   std::to_string(dim));
  }
}

}  // namespace

std::string ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ParseFail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ReadJsonFile(const std::string& path) {
  std::string bytes = ReadFileBytes(path);
  try {
    return Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    ParseFail("'" + path + "': " + e.what());
  }
}

FileKind DetectKind(const Json& j) {
  if (!j.is_object()) ParseFail("top-level value must be an object");
  if (j.contains("outcomes")) return FileKind::kInstrument;
  if (j.contains("letters")) return FileKind::kEnsemble;
  if (j.contains("state")) return FileKind::kState;
  ParseFail("object is neither an instrument, an ensemble nor a state");
}

Json MatrixToJson(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix MatrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) ParseFail("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) ParseFail("matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) ParseFail("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& e = j[i][k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        ParseFail("matrix entries must be [re, im] number pairs");
      }
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json InstrumentToJson(const Instrument& instr) {
  Json outcomes = Json::array();
  for (const auto& o : instr.outcomes()) {
    Json kraus = Json::array();
    for (const auto& v : o.kraus) kraus.push_back(MatrixToJson(v));
    outcomes.push_back({{"label", o.label}, {"kraus", std::move(kraus)}});
  }
  return {{"dim", instr.dim()}, {"outcomes", std::move(outcomes)}};
}

Instrument InstrumentFromJson(const Json& j) {
  const int dim = DimField(j);
  const Json& arr = Field(j, "outcomes");
  if (!arr.is_array() || arr.empty()) ParseFail("'outcomes' must be a nonempty array");
  std::vector<Outcome> outcomes;
  for (const Json& o : arr) {
    Outcome out{LabelField(o), {}};
    const Json& kraus = Field(o, "kraus");
    if (!kraus.is_array() || kraus.empty()) ParseFail("'kraus' must be a nonempty array");
    for (const Json& v : kraus) {
      out.kraus.push_back(MatrixFromJson(v));
      RequireSize(out.kraus.back(), dim, "Kraus operator of outcome '" + out.label + "'");
    }
    outcomes.push_back(std::move(out));
  }
  return Instrument(dim, std::move(outcomes));
}

Json EnsembleToJson(const Ensemble& ens) {
  Json letters = Json::array();
  for (std::size_t a = 0; a < ens.size(); ++a) {
    letters.push_back({{"label", ens.letters()[a]},
                       {"prob", ens.priors()[a]},
                       {"state", MatrixToJson(ens.states()[a].matrix())}});
  }
  return {{"dim", ens.dim()}, {"letters", std::move(letters)}};
}

Ensemble EnsembleFromJson(const Json& j) {
  const int dim = DimField(j);
  const Json& arr = Field(j, "letters");
  if (!arr.is_array() || arr.empty()) ParseFail("'letters' must be a nonempty array");
  std::vector<std::string> labels;
  std::vector<double> probs;
  std::vector<DensityMatrix> states;
  for (const Json& l : arr) {
    labels.push_back(LabelField(l));
    const Json& p = Field(l, "prob");
    if (!p.is_number()) ParseFail("'prob' must be a number");
    probs.push_back(p.get<double>());
    ComplexMatrix m = MatrixFromJson(Field(l, "state"));
    RequireSize(m, dim, "state of letter '" + labels.back() + "'");
    states.emplace_back(m);
  }
  return Ensemble(ClassicalDensity(std::move(labels), std::move(probs)), std::move(states));
}

Json StateToJson(const DensityMatrix& rho) {
  return {{"dim", rho.dim()}, {"state", MatrixToJson(rho.matrix())}};
}

DensityMatrix StateFromJson(const Json& j) {
  const int dim = DimField(j);
  ComplexMatrix m = MatrixFromJson(Field(j, "state"));
  RequireSize(m, dim, "state");
  return DensityMatrix(m);
}

Json GeneratorConfigToJson(const GeneratorConfig& c) {
  return {{"seed", c.seed},
          {"dim", c.dim},
          {"num_outcomes", c.num_outcomes},
          {"kraus_per_outcome", c.kraus_per_outcome},
          {"num_letters", c.num_letters},
          {"pure_letters", c.pure_letters}};
}

Json ExtendedRealToJson(ExtendedReal x) {
  if (x.is_pos_inf()) return "+inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

Json ToJson(const InequalityReport& r) {
  return {{"name", r.name},
          {"lhs", ExtendedRealToJson(r.lhs)},
          {"rhs", ExtendedRealToJson(r.rhs)},
          {"gap", ExtendedRealToJson(r.gap)},
          {"satisfied", r.satisfied},
          {"support_review", r.support_review},
          {"tolerance", r.tolerance},
          {"units", std::string(UnitsName(r.units))}};
}

Json ToJson(const IdentityResidual& r) {
  return {{"name", r.name},
          {"residual", ExtendedRealToJson(r.residual)},
          {"tolerance", r.tolerance},
          {"ok", r.ok()}};
}

Json ToJson(const BoundChainReport& r) {
  auto quantities = [](const std::vector<NamedQuantity>& qs) {
    Json arr = Json::array();
    for (const auto& q : qs) arr.push_back({{"name", q.name}, {"value", ExtendedRealToJson(q.value)}});
    return arr;
  };
  Json links = Json::array();
  for (const auto& l : r.links) links.push_back(ToJson(l));
  Json extra = Json::array();
  for (const auto& l : r.extra) extra.push_back(ToJson(l));
  return {{"name", r.name},
          {"units", std::string(UnitsName(r.units))},
          {"terms", quantities(r.terms)},
          {"links", std::move(links)},
          {"extra", std::move(extra)},
          {"auxiliary", quantities(r.auxiliary)},
          {"satisfied", r.satisfied()}};
}

Json ToJson(const OzawaReport& r) {
  return {{"trials", r.trials},
          {"seed", r.seed},
          {"units", std::string(UnitsName(r.units))},
          {"tolerance", r.tolerance},
          {"pure_preserving", r.pure_preserving},
          {"max_posterior_impurity", r.max_posterior_impurity},
          {"min_info_gain_over_mixed_trials", r.min_info_gain},
          {"implication_holds", r.implication_holds}};
}

Json ToJson(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"kind", v.kind},
                          {"outcome", v.outcome},
                          {"magnitude", v.magnitude},
                          {"message", v.message}});
  }
  return {{"ok", r.ok}, {"max_deviation", r.max_deviation}, {"violations", std::move(violations)}};
}

}  // namespace qinstr::io
