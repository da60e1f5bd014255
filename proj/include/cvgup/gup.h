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

#ifndef CVGUP_GUP_H
#define CVGUP_GUP_H

#include <span>

#include "cvgup/entropy.h"
#include "cvgup/grid.h"

namespace cvgup {

inline constexpr double kDefaultTailTolerance = 1e-8;

/// Deformation parameter of [x, k] = i (1 + beta k^2) with its momentum cutoff
/// p0 = pi / (2 sqrt(beta)); p0 is +inf for beta = 0.
class GupParam {
   public:
    /// Throws ParamError for negative or non-finite beta.
    explicit GupParam(double beta = 0);

    double beta() const noexcept { return beta_; }
    double p0() const noexcept { return p0_; }
    bool is_standard() const noexcept { return beta_ == 0; }

   private:
    double beta_;
    double p0_;
};

/// Per-subsystem entropy corrections and the momentum mass beyond the cutoff.
struct GupCorrection {
    double beta = 0;
    Nats eta1 = 0;
    Nats eta2 = 0;
    double tail1 = 0;
    double tail2 = 0;
};

/// k = tan(sqrt(beta) p) / sqrt(beta); k = p for beta = 0. Throws DomainError for |p| >= p0.
double p_to_k(double p, const GupParam &g);

/// Inverse map p = atan(sqrt(beta) k) / sqrt(beta).
double k_to_p(double k, const GupParam &g) noexcept;

/// Momentum mass with |p| > p0, by trapezoid quadrature with linear
/// interpolation inside the cut cells.
double tail_mass(const Dist1D &v, const GupParam &g);

/// Smallest P with (approximately) mass eps outside [-P, P].
double symmetric_quantile(const Dist1D &v, double eps);

/// Symmetric k grid with the step of the first density, wide enough for the
/// (1 - eps_tail) quantile image of every density.
Axis k_axis_for(std::span<const Dist1D> vs, const GupParam &g, double eps_tail = kDefaultTailTolerance);

/// u(k) = v(p(k)) / (1 + beta k^2) on `k_axis`, with v interpolated by a
/// monotone cubic, then renormalized. Returns v unchanged for beta = 0.
/// Throws GupDomainError when tail_mass(v) >= eps_tail.
Dist1D u_from_v(const Dist1D &v, const GupParam &g, const Axis &k_axis, double eps_tail = kDefaultTailTolerance);
Dist1D u_from_v(const Dist1D &v, const GupParam &g, double eps_tail = kDefaultTailTolerance);

/// eta = integral u(k) ln(1 + beta k^2) dk, evaluated in p as
/// integral v(p) ln(1 + tan^2(sqrt(beta) p)) dp. Zero for beta = 0.
Nats eta(const Dist1D &v, const GupParam &g, double eps_tail = kDefaultTailTolerance);

/// H[u] = H[v] + eta.
Nats gup_entropy(const Dist1D &v, const GupParam &g, double eps_tail = kDefaultTailTolerance);

/// Corrections and tail masses for the two subsystem momentum densities.
GupCorrection gup_correction(const Dist1D &v1, const Dist1D &v2, const GupParam &g,
                             double eps_tail = kDefaultTailTolerance);

/// Density of k1 + k2 (Plus) or k1 - k2 (Minus) from a joint momentum density
/// v(p1, p2): u(K) = integral dp1 v(p1, p2) / (1 + beta k2^2) with
/// k2 = +-(K - k1). Both axes must share one step. For beta = 0 this is
/// pushforward_pm(v). Throws GupDomainError when the momentum mass outside
/// (-p0, p0)^2 reaches eps_tail.
Dist1D joint_u_pm(const Dist2D &v, const GupParam &g, PmSign sign, double eps_tail = kDefaultTailTolerance);

}  // namespace cvgup

#endif  // CVGUP_GUP_H
