// Copyright 2026 The mebasis Authors
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
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mebasis/check_report.hpp"
#include "mebasis/clifford.hpp"
#include "mebasis/det_criterion.hpp"
#include "mebasis/entangled.hpp"
#include "mebasis/factorization.hpp"
#include "mebasis/latin.hpp"

namespace mebasis::io {

using Json = nlohmann::json;

/// Malformed or invariant-violating input file.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// MatrixFile: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
Json matrixToJson(const ComplexMatrix &m);
ComplexMatrix matrixFromJson(const Json &j);

// BasisFile: {"dim": d, "operators": [MatrixFile, ...]} with d^2 operators.
Json basisToJson(const UnitaryBasis &basis);
UnitaryBasis basisFromJson(const Json &j);

// Latin square file: {"order": d, "table": [[...], ...]}.
Json latinToJson(const LatinSquare &square);
IntTable latinTableFromJson(const Json &j);

// Generator list: {"matrices": [MatrixFile, ...]}.
std::vector<ComplexMatrix> matrixListFromJson(const Json &j);

Json reportToJson(const CheckReport &report);
Json factorizationToJson(const FactorizationResult &result);
Json cliffordToJson(const CliffordReport &report);
Json detCriterionToJson(const DetCriterionResult &result);

/// Pretty-printed with a trailing newline. Object keys are emitted in sorted
/// order and doubles in shortest round-trip form, so equal values give equal
/// bytes.
std::string dump(const Json &j);

Json readJsonFile(const std::string &path);
void writeTextFile(const std::string &path, const std::string &text);

} // namespace mebasis::io
