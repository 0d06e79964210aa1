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
#include "mebasis/check_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mebasis {

void CheckReport::record(int trial, double violation, std::string label, std::vector<ComplexMatrix> inputs) {
    // NaN must never read as a pass.
    if (std::isnan(violation))
        violation = std::numeric_limits<double>::infinity();
    maxViolation_ = std::max(maxViolation_, violation);
    if (violation < threshold_)
        return;
    Witness w{trial, violation, std::move(label), std::move(inputs)};
    if (witnesses_.size() < kMaxWitnesses) {
        witnesses_.push_back(std::move(w));
    } else {
        auto weakest = std::min_element(witnesses_.begin(), witnesses_.end(),
                                        [](const Witness &a, const Witness &b) { return a.violation < b.violation; });
        if (weakest->violation >= violation)
            return;
        *weakest = std::move(w);
    }
    std::stable_sort(witnesses_.begin(), witnesses_.end(),
                     [](const Witness &a, const Witness &b) { return a.trial < b.trial; });
}

void CheckReport::merge(const CheckReport &other) {
    trials_ += other.trials_;
    maxViolation_ = std::max(maxViolation_, other.maxViolation_);
    for (const Witness &w : other.witnesses_) {
        // Re-thresholded against this report, so the witness invariant holds.
        if (w.violation < threshold_)
            continue;
        witnesses_.push_back(w);
    }
    std::stable_sort(witnesses_.begin(), witnesses_.end(),
                     [](const Witness &a, const Witness &b) { return a.violation > b.violation; });
    if (witnesses_.size() > kMaxWitnesses)
        witnesses_.resize(kMaxWitnesses);
    std::stable_sort(witnesses_.begin(), witnesses_.end(),
                     [](const Witness &a, const Witness &b) { return a.trial < b.trial; });
}

const char *toString(CheckReport::Verdict verdict) {
    return verdict == CheckReport::Verdict::NoViolationFound ? "no violation found" : "violation witnessed";
}

} // namespace mebasis
