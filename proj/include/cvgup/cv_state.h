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

#ifndef CVGUP_CV_STATE_H
#define CVGUP_CV_STATE_H

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cvgup/grid.h"

namespace cvgup {

/// Coordinates a joint amplitude is sampled in.
enum class Coordinates { X1X2, XPlusMinus, P1P2, KPlusMinus };

/// psi1(x1) psi2(x2), each factor L2-normalized within 1e-8.
struct PureProductState {
    PureProductState(Field1D psi1, Field1D psi2);

    Field1D psi1;
    Field1D psi2;
};

class JointState {
   public:
    /// Throws ParamError unless the amplitude is L2-normalized within 1e-8.
    JointState(Field2D amplitude, Coordinates coordinates);

    const Field2D &amplitude() const noexcept { return amplitude_; }
    Coordinates coordinates() const noexcept { return coordinates_; }

   private:
    Field2D amplitude_;
    Coordinates coordinates_;
};

/// rho = sum_m weights[m] |psi1m psi2m><psi1m psi2m|.
class MixedEnsemble {
   public:
    /// Throws WeightError on negative weights, a sum off 1 by more than 1e-12,
    /// or a size mismatch.
    MixedEnsemble(std::vector<double> weights, std::vector<PureProductState> components);

    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const PureProductState> components() const noexcept { return components_; }
    std::size_t size() const noexcept { return weights_.size(); }

   private:
    std::vector<double> weights_;
    std::vector<PureProductState> components_;
};

/// Checks the ensemble weight invariants (nonnegative, sum 1 within 1e-12).
void validate_weights(std::span<const double> weights);

// ---- descriptors -----------------------------------------------------------

struct GaussianProductSpec {
    double sigma1 = 1;
    double sigma2 = 1;
    double center1 = 0;
    double center2 = 0;
    double momentum1 = 0;
    double momentum2 = 0;
};

struct TmsvSpec {
    double r = 0;
};

/// Either a factor pair (psi1, psi2) or a joint amplitude sampled on axis x axis.
struct TabulatedSpec {
    Axis axis;
    std::optional<std::vector<Complex>> psi1;
    std::optional<std::vector<Complex>> psi2;
    std::optional<std::vector<Complex>> joint;
};

struct StateDescriptor;

struct EnsembleSpec {
    std::vector<double> weights;
    std::vector<StateDescriptor> components;
};

struct StateDescriptor {
    std::variant<GaussianProductSpec, TmsvSpec, TabulatedSpec, EnsembleSpec> value;
};

/// Parses and validates a JSON state document. Throws SchemaError for
/// malformed documents and ParamError for invalid physical parameters.
StateDescriptor parse_descriptor(std::string_view text);

// ---- builders --------------------------------------------------------------

/// (2 pi sigma^2)^(-1/4) exp(-(x - center)^2 / (4 sigma^2) + i momentum x).
Field1D gaussian_wavepacket(const Axis &axis, double sigma, double center, double momentum);

/// Throws ParamError on non-positive or non-finite widths, AxisError when the
/// axis does not hold the packets.
PureProductState build_gaussian_product(const GaussianProductSpec &spec, const Axis &axis);

/// pi^(-1/2) exp(-e^(-2r) (x1 + x2)^2 / 4 - e^(2r) (x1 - x2)^2 / 4) on axis x axis.
JointState build_tmsv(double r, const Axis &axis);

/// phi(p) = (2 pi)^(-1/2) integral psi(x) exp(-i p x) dx on the conjugate axis
/// p_j = (j - (n-1)/2) * 2 pi / (n step). Throws AliasError when |phi| on the
/// boundary of the momentum axis is not below 1e-10.
Field1D to_momentum(const Field1D &f);
Field2D to_momentum(const Field2D &f);

/// X1X2 -> P1P2 or XPlusMinus -> KPlusMinus style transform of both coordinates.
JointState to_momentum(const JointState &j);

/// Change of variables (x1, x2) -> (x+, x-) with the 1/sqrt(2) Jacobian, by
/// bilinear resampling onto a grid spanning the image of the source
/// rectangle. Target nodes outside that image are zero.
JointState to_pm(const JointState &j);

/// Same onto explicit target axes (axis0 = x+, axis1 = x-). Throws AxisError
/// when a target node maps outside the source grid.
JointState to_pm(const JointState &j, const Axis &plus, const Axis &minus);

// ---- grid selection --------------------------------------------------------

struct GridOptions {
    std::size_t n = 4096;
    std::size_t n2d = 1024;
    std::optional<double> half_width;
};

inline constexpr std::size_t kMax2dPoints = 2048;

/// Symmetric axis holding every packet to 12 widths in position and momentum,
/// with position and momentum steps balanced geometrically.
Axis product_axis(std::span<const GaussianProductSpec> specs, const GridOptions &opts);

/// Square axis for the two-mode squeezed state; grows n2d up to kMax2dPoints
/// and throws ParamError when |r| cannot be resolved.
Axis tmsv_axis(double r, const GridOptions &opts);

using State = std::variant<PureProductState, JointState, MixedEnsemble>;

/// Samples a descriptor on grids chosen by `opts`.
State materialize(const StateDescriptor &d, const GridOptions &opts = {});

}  // namespace cvgup

#endif  // CVGUP_CV_STATE_H
