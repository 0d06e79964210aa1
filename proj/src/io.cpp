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
#include "mebasis/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mebasis::io {

namespace {

int requireInt(const Json &j, const char *key, const char *what) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw FormatError(std::string(what) + ": field '" + key + "' must be an integer");
    return j.at(key).get<int>();
}

double finiteNumber(const Json &j, const char *what) {
    if (!j.is_number())
        throw FormatError(std::string(what) + ": entries must be numbers");
    const double x = j.get<double>();
    if (!std::isfinite(x))
        throw FormatError(std::string(what) + ": entries must be finite");
    return x;
}

} // namespace

Json matrixToJson(const ComplexMatrix &m) {
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            data.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrixFromJson(const Json &j) {
    const int rows = requireInt(j, "rows", "MatrixFile");
    const int cols = requireInt(j, "cols", "MatrixFile");
    if (rows < 1 || cols < 1)
        throw FormatError("MatrixFile: rows and cols must be positive");
    if (!j.contains("data") || !j.at("data").is_array())
        throw FormatError("MatrixFile: field 'data' must be an array");
    const Json &data = j.at("data");
    if (data.size() != static_cast<std::size_t>(rows) * cols)
        throw FormatError("MatrixFile: data length must equal rows * cols (got " + std::to_string(data.size()) + ", want " +
                          std::to_string(rows * cols) + ")");
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Json &entry = data.at(static_cast<std::size_t>(i) * cols + k);
            if (!entry.is_array() || entry.size() != 2)
                throw FormatError("MatrixFile: each entry must be a [re, im] pair");
            m(i, k) = Complex(finiteNumber(entry[0], "MatrixFile"), finiteNumber(entry[1], "MatrixFile"));
        }
    return m;
}

Json basisToJson(const UnitaryBasis &basis) {
    Json ops = Json::array();
    for (const auto &x : basis.ops)
        ops.push_back(matrixToJson(x));
    return Json{{"dim", basis.dim}, {"operators", std::move(ops)}};
}

UnitaryBasis basisFromJson(const Json &j) {
    const int d = requireInt(j, "dim", "BasisFile");
    if (d < 1)
        throw FormatError("BasisFile: dim must be positive");
    if (!j.contains("operators") || !j.at("operators").is_array())
        throw FormatError("BasisFile: field 'operators' must be an array");
    const Json &ops = j.at("operators");
    if (ops.size() != static_cast<std::size_t>(d) * d)
        throw FormatError("BasisFile: operator count must equal dim^2 (got " + std::to_string(ops.size()) + ", want " +
                          std::to_string(d * d) + ")");
    UnitaryBasis basis{d, {}};
    for (const Json &op : ops) {
        ComplexMatrix x = matrixFromJson(op);
        if (x.rows() != d || x.cols() != d)
            throw FormatError("BasisFile: each operator must be square of size dim");
        basis.ops.push_back(std::move(x));
    }
    return basis;
}

Json latinToJson(const LatinSquare &square) { return Json{{"order", square.order()}, {"table", square.table()}}; }

IntTable latinTableFromJson(const Json &j) {
    const int d = requireInt(j, "order", "LatinFile");
    if (!j.contains("table") || !j.at("table").is_array())
        throw FormatError("LatinFile: field 'table' must be an array of rows");
    IntTable table;
    for (const Json &row : j.at("table")) {
        if (!row.is_array())
            throw FormatError("LatinFile: each row must be an array");
        std::vector<int> r;
        for (const Json &x : row) {
            if (!x.is_number_integer())
                throw FormatError("LatinFile: entries must be integers");
            r.push_back(x.get<int>());
        }
        table.push_back(std::move(r));
    }
    if (static_cast<int>(table.size()) != d)
        throw FormatError("LatinFile: table must have 'order' rows");
    return table;
}

std::vector<ComplexMatrix> matrixListFromJson(const Json &j) {
    if (!j.is_object() || !j.contains("matrices") || !j.at("matrices").is_array())
        throw FormatError("MatrixList: field 'matrices' must be an array");
    std::vector<ComplexMatrix> out;
    for (const Json &m : j.at("matrices"))
        out.push_back(matrixFromJson(m));
    if (out.empty())
        throw FormatError("MatrixList: at least one matrix required");
    return out;
}

Json reportToJson(const CheckReport &report) {
    Json witnesses = Json::array();
    for (const Witness &w : report.witnesses()) {
        Json inputs = Json::array();
        for (const auto &m : w.inputs)
            inputs.push_back(matrixToJson(m));
        witnesses.push_back(
            Json{{"trial", w.trial}, {"violation", w.violation}, {"label", w.label}, {"inputs", std::move(inputs)}});
    }
    return Json{{"name", report.name()},
                {"trials", report.trials()},
                {"maxViolation", report.maxViolation()},
                {"threshold", report.threshold()},
                {"passed", report.passed()},
                {"verdict", toString(report.verdict())},
                {"witnesses", std::move(witnesses)}};
}

Json factorizationToJson(const FactorizationResult &result) {
    Json j{{"kind", toString(result.kind)},
           {"residual", result.residual},
           {"schmidtCoefficients", std::vector<double>(result.schmidtCoefficients.data(),
                                                       result.schmidtCoefficients.data() +
                                                           result.schmidtCoefficients.size())}};
    if (result.factors) {
        j["u1"] = matrixToJson(result.factors->first);
        j["u2"] = matrixToJson(result.factors->second);
    }
    return j;
}

Json cliffordToJson(const CliffordReport &report) {
    Json j{{"relations", reportToJson(report.relations)},
           {"generators", report.generators},
           {"dimension", report.dimension},
           {"dimensionMatches", report.dimensionMatches},
           {"passed", report.passed()}};
    j["predictedDimension"] = report.predictedDimension ? Json(*report.predictedDimension) : Json(nullptr);
    return j;
}

Json detCriterionToJson(const DetCriterionResult &result) {
    return Json{{"verdict", toString(result.verdict)},
                {"determinant", Json::array({result.determinant.real(), result.determinant.imag()})},
                {"maxImaginary", result.maxImaginary},
                {"factorization", factorizationToJson(result.factorization)},
                {"consistent", result.consistent}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json readJsonFile(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void writeTextFile(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw FormatError("write to '" + path + "' failed");
}

} // namespace mebasis::io
