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

#include <string>
#include <vector>

#include "mebasis/linalg.hpp"

namespace mebasis {

/// Sampled input that violated a checked property.
struct Witness {
    int trial = 0;
    double violation = 0.0;
    std::string label;
    std::vector<ComplexMatrix> inputs;
};

/// Outcome of a statistical or deterministic property check. Sampling can
/// only witness violations; a clean report means none was found.
class CheckReport {
  public:
    enum class Verdict { NoViolationFound, ViolationWitnessed };

    static constexpr std::size_t kMaxWitnesses = 8;

    CheckReport() = default;
    CheckReport(std::string name, double threshold) : name_(std::move(name)), threshold_(threshold) {}

    const std::string &name() const { return name_; }
    int trials() const { return trials_; }
    double maxViolation() const { return maxViolation_; }
    double threshold() const { return threshold_; }
    const std::vector<Witness> &witnesses() const { return witnesses_; }

    bool passed() const { return maxViolation_ < threshold_; }
    Verdict verdict() const { return passed() ? Verdict::NoViolationFound : Verdict::ViolationWitnessed; }

    void setTrials(int trials) { trials_ = trials; }

    /// Folds one evaluation into the report. A witness is kept when the
    /// violation reaches the threshold; beyond kMaxWitnesses only the largest
    /// violations survive, ordered by trial.
    void record(int trial, double violation, std::string label, std::vector<ComplexMatrix> inputs = {});

    /// Max-violation and witness union of two reports on the same property.
    void merge(const CheckReport &other);

  private:
    std::string name_;
    int trials_ = 0;
    double maxViolation_ = 0.0;
    double threshold_ = kDefaultTolerance;
    std::vector<Witness> witnesses_;
};

const char *toString(CheckReport::Verdict verdict);

} // namespace mebasis
