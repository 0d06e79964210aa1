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
#include "mebasis/clifford.hpp"

#include <string>

#include "mebasis/bell.hpp"

namespace mebasis {

CliffordReport cliffordCheck(const std::vector<ComplexMatrix> &rs, double tol) {
    if (rs.empty())
        throw std::invalid_argument("cliffordCheck: need at least one generator");
    const auto d = rs.front().rows();
    for (const auto &r : rs)
        if (r.rows() != d || r.cols() != d)
            throw std::invalid_argument("cliffordCheck: generators must be square of equal dimension");

    CliffordReport out;
    out.relations = CheckReport("clifford", tol);
    out.generators = static_cast<int>(rs.size());
    out.dimension = static_cast<int>(d);
    const int n = out.generators;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);

    int index = 0;
    for (int a = 0; a < n; ++a, ++index)
        out.relations.record(index, (rs[a] - rs[a].adjoint()).norm(), "hermiticity " + std::to_string(a), {rs[a]});
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b, ++index) {
            const ComplexMatrix ac = rs[a] * rs[b] + rs[b] * rs[a];
            out.relations.record(index, (ac - (a == b ? 2.0 : 0.0) * id).norm(),
                                 "pair (" + std::to_string(a) + "," + std::to_string(b) + ")", {rs[a], rs[b]});
        }
    out.relations.setTrials(1);

    if (n % 2 == 1) {
        out.predictedDimension = 1 << ((n - 1) / 2);
        out.dimensionMatches = *out.predictedDimension == out.dimension;
    }
    return out;
}

std::vector<ComplexMatrix> buildCliffordGenerators(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("buildCliffordGenerators: N must be odd and positive, got " + std::to_string(n));
    std::vector<ComplexMatrix> gens{ComplexMatrix::Ones(1, 1)};
    while (static_cast<int>(gens.size()) < n) {
        const auto id = ComplexMatrix::Identity(gens.front().rows(), gens.front().cols());
        std::vector<ComplexMatrix> next;
        next.reserve(gens.size() + 2);
        next.push_back(tensor(pauli(3), id));
        next.push_back(tensor(pauli(1), id));
        for (const auto &r : gens)
            next.push_back(tensor(pauli(2), r));
        gens = std::move(next);
    }
    return gens;
}

} // namespace mebasis
