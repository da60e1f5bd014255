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

#include "cvgup/random_states.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cvgup/cv_state.h"
#include "cvgup/entropy.h"

namespace cvgup {

namespace {

double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int component_count(std::mt19937_64 &rng) {
    return std::uniform_int_distribution<int>(1, 3)(rng);
}

}  // namespace

Axis balanced_axis(std::size_t n) {
    double h = std::sqrt(2 * std::numbers::pi / static_cast<double>(n));
    return Axis::symmetric(0.5 * h * static_cast<double>(n - 1), n);
}

Dist1D random_gaussian_mixture(std::mt19937_64 &rng, const Axis &axis) {
    int count = component_count(rng);
    std::vector<double> values(axis.size(), 0.0);
    for (int c = 0; c < count; c++) {
        double weight = uniform(rng, 0.1, 1.0);
        double mu = uniform(rng, -3, 3);
        double sigma = uniform(rng, 0.3, 2);
        double scale = weight / (sigma * std::sqrt(2 * std::numbers::pi));
        for (std::size_t i = 0; i < axis.size(); i++) {
            double z = (axis[i] - mu) / sigma;
            values[i] += scale * std::exp(-0.5 * z * z);
        }
    }
    return normalize(Dist1D(axis, std::move(values)));
}

Field1D random_wavefunction(std::mt19937_64 &rng, const Axis &axis) {
    int count = component_count(rng);
    std::vector<Complex> values(axis.size(), Complex(0, 0));
    for (int c = 0; c < count; c++) {
        Complex coeff(uniform(rng, -1, 1), uniform(rng, -1, 1));
        double sigma = uniform(rng, 0.4, 2);
        double center = uniform(rng, -3, 3);
        double momentum = uniform(rng, -2, 2);
        Field1D packet = gaussian_wavepacket(axis, sigma, center, momentum);
        for (std::size_t i = 0; i < axis.size(); i++) {
            values[i] += coeff * packet[i];
        }
    }
    return normalize(Field1D(axis, std::move(values)));
}

EpiCheckSummary run_epi_check(std::size_t trials, std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    Axis axis = balanced_axis(n);
    EpiCheckSummary s;
    s.trials = trials;
    s.min_epi_gap = std::numeric_limits<double>::infinity();
    s.min_bbm_excess = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; t++) {
        Dist1D a = random_gaussian_mixture(rng, axis);
        Dist1D b = random_gaussian_mixture(rng, axis);
        s.min_epi_gap = std::min(s.min_epi_gap, epi_gap(a, b));
        s.min_bbm_excess = std::min(s.min_bbm_excess, bbm_sum(random_wavefunction(rng, axis)) - kLnPiE);
    }
    return s;
}

}  // namespace cvgup
