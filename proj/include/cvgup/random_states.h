// Copyright 2026 The cvgup Authors
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

#ifndef CVGUP_RANDOM_STATES_H
#define CVGUP_RANDOM_STATES_H

#include <cstddef>
#include <cstdint>
#include <random>

#include "cvgup/grid.h"

namespace cvgup {

/// Symmetric axis whose conjugate momentum axis has the same step,
/// h = sqrt(2 pi / n).
Axis balanced_axis(std::size_t n);

/// Mixture of 1-3 Gaussians, means in [-3, 3], widths in [0.3, 2].
Dist1D random_gaussian_mixture(std::mt19937_64 &rng, const Axis &axis);

/// Normalized superposition of 1-3 Gaussian packets with widths in [0.4, 2],
/// centers in [-3, 3], mean momenta in [-2, 2] and complex coefficients.
Field1D random_wavefunction(std::mt19937_64 &rng, const Axis &axis);

struct EpiCheckSummary {
    std::size_t trials = 0;
    double min_epi_gap = 0;
    double min_bbm_excess = 0;  // min over trials of bbm_sum - ln(pi e)
};

/// Each trial draws one density pair for the entropy power inequality and one
/// wavefunction for the entropic uncertainty relation.
EpiCheckSummary run_epi_check(std::size_t trials, std::uint64_t seed, std::size_t n = 4096);

}  // namespace cvgup

#endif  // CVGUP_RANDOM_STATES_H
