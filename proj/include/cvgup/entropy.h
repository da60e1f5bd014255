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

#ifndef CVGUP_ENTROPY_H
#define CVGUP_ENTROPY_H

#include <cmath>
#include <numbers>
#include <span>

#include "cvgup/cv_state.h"
#include "cvgup/grid.h"

namespace cvgup {

/// Entropy in natural-log units.
using Nats = double;

/// ln(pi e), the position-momentum entropic uncertainty bound.
inline const double kLnPiE = std::log(std::numbers::pi) + 1;
/// ln(2 pi e), the state-independent separability bound for x+- / p-+.
inline const double kLn2PiE = std::log(2 * std::numbers::pi) + 1;

enum class PmSign { Plus, Minus };

enum class Observable { XPlus, XMinus, PPlus, PMinus };

/// -sum P_i ln P_i with 0 ln 0 = 0. Throws ProbError unless P is a probability
/// vector (entries >= 0, sum 1 within 1e-12).
Nats discrete_shannon(std::span<const double> p);

/// -integral d ln d by trapezoid quadrature; samples below 1e-300 contribute 0.
/// Throws ProbError unless d integrates to 1 within 1e-6.
Nats shannon(const Dist1D &d);

/// Marginal of x+ (sign Plus) or x- (sign Minus) from a density sampled in
/// (x+, x-) coordinates, axis0 = x+, axis1 = x-.
Dist1D marginal_pm(const Dist2D &pm, PmSign sign);

/// Density of x1 + x2 or x1 - x2 from a density sampled in (x1, x2), computed
/// as lattice sums along the grid diagonals. Both axes must share one step.
Dist1D pushforward_pm(const Dist2D &joint, PmSign sign);

/// Linear convolution (a * b)(x) = integral a(y) b(x - y) dy. Output spans
/// [a.min + b.min, a.max + b.max] with the common step. Throws AxisError on
/// mismatched spacing.
Dist1D convolve(const Dist1D &a, const Dist1D &b);

/// d(-x) on the mirrored axis [-max, -min].
Dist1D mirror(const Dist1D &d);

/// Density of the sum (Plus) or difference (Minus) of two independent
/// variables with densities d1, d2: d1 * d2 or d1 * d2(-x).
Dist1D product_pm(const Dist1D &d1, const Dist1D &d2, PmSign sign);

/// exp(2H[a * b]) - exp(2H[a]) - exp(2H[b]); nonnegative by the entropy power inequality.
double epi_gap(const Dist1D &a, const Dist1D &b);

/// H[|psi|^2] + H[|phi|^2]; at least ln(pi e).
Nats bbm_sum(const Field1D &psi);

/// Convex combination of densities. Parts on different axes are linearly
/// resampled onto the finest grid spanning all of them.
Dist1D mix(std::span<const double> weights, std::span<const Dist1D> parts);

/// sum_m lambda_m w_m(+-) (or v_m(+-)) for an ensemble of product states.
Dist1D ensemble_density(const MixedEnsemble &e, Observable observable);

}  // namespace cvgup

#endif  // CVGUP_ENTROPY_H
