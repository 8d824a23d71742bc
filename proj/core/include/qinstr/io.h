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

// JSON encodings of matrices, states, instruments, ensembles and reports.
//
// A matrix is a row-major nested array of [re, im] pairs. Files:
//   instrument: {"dim": n, "outcomes": [{"label": str, "kraus": [matrix, ...]}, ...]}
//   ensemble:   {"dim": n, "letters": [{"label": str, "prob": real, "state": matrix}, ...]}
//   state:      {"dim": n, "state": matrix}
// Extra top-level keys (for example "generator") are ignored on input.
// Extended reals are numbers, or the strings "+inf" / "-inf".

#ifndef QINSTR_IO_H_
#define QINSTR_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "qinstr/bounds.h"
#include "qinstr/ensemble.h"
#include "qinstr/instrument.h"
#include "qinstr/randgen.h"
#include "qinstr/states.h"

namespace qinstr::io {

using Json = nlohmann::ordered_json;

enum class FileKind { kInstrument, kEnsemble, kState };

// Raises kParse on unreadable files or malformed JSON.
Json ReadJsonFile(const std::string& path);
std::string ReadFileBytes(const std::string& path);
// Raises kParse when none of the schemas matches.
FileKind DetectKind(const Json& j);

Json MatrixToJson(const ComplexMatrix& m);
ComplexMatrix MatrixFromJson(const Json& j);

Json InstrumentToJson(const Instrument& instr);
// Shape checks only; call Validate for normalization.
Instrument InstrumentFromJson(const Json& j);

Json EnsembleToJson(const Ensemble& ens);
Ensemble EnsembleFromJson(const Json& j);

Json StateToJson(const DensityMatrix& rho);
DensityMatrix StateFromJson(const Json& j);

Json GeneratorConfigToJson(const GeneratorConfig& config);

Json ExtendedRealToJson(ExtendedReal x);
Json ToJson(const InequalityReport& r);
Json ToJson(const BoundChainReport& r);
Json ToJson(const IdentityResidual& r);
Json ToJson(const OzawaReport& r);
Json ToJson(const ValidationReport& r);

}  // namespace qinstr::io

#endif  // QINSTR_IO_H_
