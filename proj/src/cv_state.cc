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

#include "cvgup/cv_state.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cvgup/errors.h"
#include "fft.h"

namespace cvgup {

namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kAliasThreshold = 1e-10;
constexpr double kWidthsHeld = 12;

void require_normalized(double norm2, const char *what) {
    if (!(std::abs(norm2 - 1) <= kNormTolerance)) {
        throw ParamError(std::string(what) + " is not L2-normalized (norm^2 = " + std::to_string(norm2) + ")");
    }
}

}  // namespace

PureProductState::PureProductState(Field1D psi1_, Field1D psi2_) : psi1(std::move(psi1_)), psi2(std::move(psi2_)) {
    require_normalized(l2_norm_squared(psi1), "psi1");
    require_normalized(l2_norm_squared(psi2), "psi2");
}

JointState::JointState(Field2D amplitude, Coordinates coordinates)
    : amplitude_(std::move(amplitude)), coordinates_(coordinates) {
    require_normalized(l2_norm_squared(amplitude_), "joint amplitude");
}

void validate_weights(std::span<const double> weights) {
    if (weights.empty()) {
        throw WeightError("ensemble needs at least one weight");
    }
    double total = 0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0) {
            throw WeightError("ensemble weights must be finite and nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw WeightError("ensemble weights sum to " + std::to_string(total) + ", not 1");
    }
}

MixedEnsemble::MixedEnsemble(std::vector<double> weights, std::vector<PureProductState> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
    validate_weights(weights_);
    if (weights_.size() != components_.size()) {
        throw WeightError("ensemble has " + std::to_string(weights_.size()) + " weights for " +
                          std::to_string(components_.size()) + " components");
    }
}

Field1D gaussian_wavepacket(const Axis &axis, double sigma, double center, double momentum) {
    if (!std::isfinite(sigma) || sigma <= 0) {
        throw ParamError("Gaussian width must be positive and finite");
    }
    if (!std::isfinite(center) || !std::isfinite(momentum)) {
        throw ParamError("Gaussian center and momentum must be finite");
    }
    double prefactor = std::pow(2 * std::numbers::pi * sigma * sigma, -0.25);
    std::vector<Complex> values(axis.size());
    for (std::size_t i = 0; i < axis.size(); i++) {
        double x = axis[i];
        double dx = x - center;
        values[i] = prefactor * std::exp(-dx * dx / (4 * sigma * sigma)) * std::polar(1.0, momentum * x);
    }
    return Field1D(axis, std::move(values));
}

PureProductState build_gaussian_product(const GaussianProductSpec &spec, const Axis &axis) {
    Field1D psi1 = gaussian_wavepacket(axis, spec.sigma1, spec.center1, spec.momentum1);
    Field1D psi2 = gaussian_wavepacket(axis, spec.sigma2, spec.center2, spec.momentum2);
    for (const Field1D *f : {&psi1, &psi2}) {
        if (std::abs(l2_norm_squared(*f) - 1) > kNormTolerance) {
            throw AxisError("axis [" + std::to_string(axis.min()) + ", " + std::to_string(axis.max()) +
                            "] does not resolve the Gaussian factors");
        }
    }
    return PureProductState(std::move(psi1), std::move(psi2));
}

JointState build_tmsv(double r, const Axis &axis) {
    if (!std::isfinite(r)) {
        throw ParamError("squeezing parameter must be finite");
    }
    double a = std::exp(-2 * r) / 4;
    double b = std::exp(2 * r) / 4;
    double prefactor = 1 / std::sqrt(std::numbers::pi);
    std::size_t n = axis.size();
    std::vector<Complex> values(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            double s = axis[i] + axis[j];
            double d = axis[i] - axis[j];
            values[i * n + j] = prefactor * std::exp(-a * s * s - b * d * d);
        }
    }
    Field2D amplitude(axis, axis, std::move(values));
    if (std::abs(l2_norm_squared(amplitude) - 1) > kNormTolerance) {
        throw AxisError("axis does not resolve the squeezed state with r = " + std::to_string(r));
    }
    return JointState(std::move(amplitude), Coordinates::X1X2);
}

namespace {

// Conjugate axis of `axis` under the centered DFT: p_j = (j - c) dp.
Axis conjugate_axis(const Axis &axis) {
    std::size_t n = axis.size();
    double c = 0.5 * static_cast<double>(n - 1);
    double dp = 2 * std::numbers::pi / (static_cast<double>(n) * axis.step());
    return Axis(-c * dp, c * dp, n);
}

// exp(+2 pi i c j / n) with c = (n - 1) / 2, using exact integer reduction of 2 c j mod 2n.
std::vector<Complex> pre_twiddle(std::size_t n) {
    std::vector<Complex> out(n);
    std::size_t two_n = 2 * n;
    for (std::size_t j = 0; j < n; j++) {
        std::size_t k = ((n - 1) * j) % two_n;
        out[j] = std::polar(1.0, std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    }
    return out;
}

// h / sqrt(2 pi) exp(-i p_j x0).
std::vector<Complex> post_twiddle(const Axis &x, const Axis &p) {
    std::vector<Complex> out(x.size());
    double scale = x.step() / std::sqrt(2 * std::numbers::pi);
    for (std::size_t j = 0; j < x.size(); j++) {
        out[j] = scale * std::polar(1.0, -p[j] * x.min());
    }
    return out;
}

}  // namespace

Field1D to_momentum(const Field1D &f) {
    const Axis &x = f.axis();
    Axis p = conjugate_axis(x);
    std::size_t n = x.size();
    auto pre = pre_twiddle(n);
    auto post = post_twiddle(x, p);

    std::vector<Complex> data(n);
    for (std::size_t i = 0; i < n; i++) {
        data[i] = f[i] * pre[i];
    }
    detail::dft(data, -1);
    for (std::size_t j = 0; j < n; j++) {
        data[j] *= post[j];
    }
    double edge = std::max(std::abs(data.front()), std::abs(data.back()));
    if (!(edge < kAliasThreshold)) {
        throw AliasError("momentum amplitude at the edge of the conjugate grid is " + std::to_string(edge) +
                         "; refine the position step");
    }
    return Field1D(p, std::move(data));
}

Field2D to_momentum(const Field2D &f) {
    const Axis &x0 = f.axis0();
    const Axis &x1 = f.axis1();
    Axis p0 = conjugate_axis(x0);
    Axis p1 = conjugate_axis(x1);
    std::size_t n0 = x0.size();
    std::size_t n1 = x1.size();
    auto pre0 = pre_twiddle(n0);
    auto pre1 = pre_twiddle(n1);
    auto post0 = post_twiddle(x0, p0);
    auto post1 = post_twiddle(x1, p1);

    std::vector<Complex> data(f.values().begin(), f.values().end());
    for (std::size_t i = 0; i < n0; i++) {
        for (std::size_t j = 0; j < n1; j++) {
            data[i * n1 + j] *= pre0[i] * pre1[j];
        }
    }
    detail::dft2(data, n0, n1, -1);
    double edge = 0;
    for (std::size_t i = 0; i < n0; i++) {
        for (std::size_t j = 0; j < n1; j++) {
            Complex &v = data[i * n1 + j];
            v *= post0[i] * post1[j];
            if (i == 0 || j == 0 || i + 1 == n0 || j + 1 == n1) {
                edge = std::max(edge, std::abs(v));
            }
        }
    }
    if (!(edge < kAliasThreshold)) {
        throw AliasError("joint momentum amplitude at the edge of the conjugate grid is " + std::to_string(edge));
    }
    return Field2D(p0, p1, std::move(data));
}

JointState to_momentum(const JointState &j) {
    if (j.coordinates() != Coordinates::X1X2) {
        throw AxisError("momentum transform of a joint state expects (x1, x2) coordinates");
    }
    return JointState(normalize(to_momentum(j.amplitude())), Coordinates::P1P2);
}

namespace {

// Bilinear sample of a 2D field; nullopt when (u, v) lies outside the source rectangle.
std::optional<Complex> bilinear(const Field2D &f, double u, double v) {
    const Axis &a0 = f.axis0();
    const Axis &a1 = f.axis1();
    constexpr double kSlack = 1e-9;
    double t0 = (u - a0.min()) / a0.step();
    double t1 = (v - a1.min()) / a1.step();
    double last0 = static_cast<double>(a0.size() - 1);
    double last1 = static_cast<double>(a1.size() - 1);
    if (t0 < -kSlack || t1 < -kSlack || t0 > last0 + kSlack || t1 > last1 + kSlack) {
        return std::nullopt;
    }
    t0 = std::clamp(t0, 0.0, last0);
    t1 = std::clamp(t1, 0.0, last1);
    auto i0 = std::min(static_cast<std::size_t>(t0), a0.size() - 2);
    auto i1 = std::min(static_cast<std::size_t>(t1), a1.size() - 2);
    double f0 = t0 - static_cast<double>(i0);
    double f1 = t1 - static_cast<double>(i1);
    return (1 - f0) * (1 - f1) * f(i0, i1) + f0 * (1 - f1) * f(i0 + 1, i1) + (1 - f0) * f1 * f(i0, i1 + 1) +
           f0 * f1 * f(i0 + 1, i1 + 1);
}

JointState resample_pm(const JointState &j, const Axis &plus, const Axis &minus, bool strict) {
    if (j.coordinates() != Coordinates::X1X2) {
        throw AxisError("the (x+, x-) change of variables expects (x1, x2) coordinates");
    }
    const Field2D &src = j.amplitude();
    std::vector<Complex> values(plus.size() * minus.size());
    const double jacobian = 1 / std::sqrt(2.0);
    for (std::size_t a = 0; a < plus.size(); a++) {
        for (std::size_t b = 0; b < minus.size(); b++) {
            double x1 = 0.5 * (plus[a] + minus[b]);
            double x2 = 0.5 * (plus[a] - minus[b]);
            auto v = bilinear(src, x1, x2);
            if (!v) {
                if (strict) {
                    throw AxisError("target (x+, x-) grid extends beyond the source (x1, x2) grid");
                }
                continue;
            }
            values[a * minus.size() + b] = jacobian * *v;
        }
    }
    return JointState(normalize(Field2D(plus, minus, std::move(values))), Coordinates::XPlusMinus);
}

}  // namespace

JointState to_pm(const JointState &j) {
    const Axis &a0 = j.amplitude().axis0();
    const Axis &a1 = j.amplitude().axis1();
    double h = std::min(a0.step(), a1.step());
    auto span_axis = [h](double lo, double hi) {
        auto n = static_cast<std::size_t>(std::llround((hi - lo) / h)) + 1;
        return Axis(lo, hi, n);
    };
    Axis plus = span_axis(a0.min() + a1.min(), a0.max() + a1.max());
    Axis minus = span_axis(a0.min() - a1.max(), a0.max() - a1.min());
    return resample_pm(j, plus, minus, false);
}

JointState to_pm(const JointState &j, const Axis &plus, const Axis &minus) {
    return resample_pm(j, plus, minus, true);
}

namespace {

// Step range [lo, hi] satisfying the position and momentum coverage of n points.
struct StepRange {
    double lo;
    double hi;
};

StepRange coverage_steps(double position_reach, double momentum_reach, std::size_t n) {
    double nd = static_cast<double>(n);
    return {2 * position_reach / (nd - 1), std::numbers::pi * (nd - 1) / (nd * momentum_reach)};
}

Axis axis_from_step(double step, std::size_t n) {
    return Axis::symmetric(0.5 * step * static_cast<double>(n - 1), n);
}

}  // namespace

Axis product_axis(std::span<const GaussianProductSpec> specs, const GridOptions &opts) {
    if (opts.half_width) {
        return Axis::symmetric(*opts.half_width, opts.n);
    }
    double position_reach = 0;
    double momentum_reach = 0;
    auto hold = [&](double sigma, double center, double momentum) {
        if (!std::isfinite(sigma) || sigma <= 0) {
            throw ParamError("Gaussian width must be positive and finite");
        }
        position_reach = std::max(position_reach, std::abs(center) + kWidthsHeld * sigma);
        momentum_reach = std::max(momentum_reach, std::abs(momentum) + kWidthsHeld / (2 * sigma));
    };
    for (const auto &s : specs) {
        hold(s.sigma1, s.center1, s.momentum1);
        hold(s.sigma2, s.center2, s.momentum2);
    }
    StepRange range = coverage_steps(position_reach, momentum_reach, opts.n);
    if (range.lo > range.hi) {
        throw AxisError("a grid of " + std::to_string(opts.n) + " points cannot hold these packets in both position "
                        "and momentum");
    }
    return axis_from_step(std::sqrt(range.lo * range.hi), opts.n);
}

Axis tmsv_axis(double r, const GridOptions &opts) {
    if (!std::isfinite(r)) {
        throw ParamError("squeezing parameter must be finite");
    }
    if (opts.half_width) {
        return Axis::symmetric(*opts.half_width, opts.n2d);
    }
    // Single-mode marginals have variance cosh(2r)/2 in both x and p; the
    // narrowest joint direction has width exp(-|r|).
    double reach = kWidthsHeld * std::sqrt(std::cosh(2 * r) / 2);
    double narrow = std::exp(-std::abs(r));
    for (std::size_t n = opts.n2d; n <= std::max(opts.n2d, kMax2dPoints); n *= 2) {
        StepRange range = coverage_steps(reach, reach, n);
        double nd = static_cast<double>(n);
        // Both the position step and its conjugate must resolve half the narrow width.
        double lo = std::max(range.lo, 4 * std::numbers::pi / (nd * narrow));
        double hi = std::min(range.hi, 0.5 * narrow);
        if (lo <= hi) {
            return axis_from_step(std::sqrt(lo * hi), n);
        }
    }
    throw ParamError("squeezing |r| = " + std::to_string(std::abs(r)) + " cannot be resolved on a " +
                     std::to_string(kMax2dPoints) + "^2 grid");
}

namespace {

Field1D tabulated_factor(const Axis &axis, const std::vector<Complex> &values) {
    return normalize(Field1D(axis, values));
}

MixedEnsemble materialize_ensemble(const EnsembleSpec &e, const GridOptions &opts) {
    std::vector<GaussianProductSpec> gaussians;
    std::vector<Axis> tabulated_axes;
    for (const auto &c : e.components) {
        if (const auto *g = std::get_if<GaussianProductSpec>(&c.value)) {
            gaussians.push_back(*g);
        } else if (const auto *t = std::get_if<TabulatedSpec>(&c.value); t && t->psi1 && t->psi2) {
            tabulated_axes.push_back(t->axis);
        } else {
            throw SchemaError("ensemble components must be pure product states");
        }
    }

    std::optional<Axis> common;
    if (tabulated_axes.empty()) {
        common = product_axis(gaussians, opts);
    } else {
        double lo = tabulated_axes.front().min();
        double hi = tabulated_axes.front().max();
        double step = tabulated_axes.front().step();
        for (const auto &a : tabulated_axes) {
            lo = std::min(lo, a.min());
            hi = std::max(hi, a.max());
            step = std::min(step, a.step());
        }
        auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9)) + 1;
        if (n > (std::size_t{1} << 20)) {
            throw AxisError("ensemble components span too wide a common grid");
        }
        common = Axis(lo, lo + step * static_cast<double>(n - 1), n);
    }

    std::vector<PureProductState> components;
    for (const auto &c : e.components) {
        if (const auto *g = std::get_if<GaussianProductSpec>(&c.value)) {
            components.push_back(build_gaussian_product(*g, *common));
            continue;
        }
        const auto &t = std::get<TabulatedSpec>(c.value);
        Field1D psi1 = tabulated_factor(t.axis, *t.psi1);
        Field1D psi2 = tabulated_factor(t.axis, *t.psi2);
        if (!(t.axis == *common)) {
            psi1 = normalize(resample(psi1, *common));
            psi2 = normalize(resample(psi2, *common));
        }
        components.emplace_back(std::move(psi1), std::move(psi2));
    }
    return MixedEnsemble(e.weights, std::move(components));
}

}  // namespace

State materialize(const StateDescriptor &d, const GridOptions &opts) {
    return std::visit(
        [&](const auto &spec) -> State {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, GaussianProductSpec>) {
                std::vector<GaussianProductSpec> one{spec};
                return build_gaussian_product(spec, product_axis(one, opts));
            } else if constexpr (std::is_same_v<T, TmsvSpec>) {
                return build_tmsv(spec.r, tmsv_axis(spec.r, opts));
            } else if constexpr (std::is_same_v<T, TabulatedSpec>) {
                if (spec.joint) {
                    Field2D amp(spec.axis, spec.axis, *spec.joint);
                    return JointState(normalize(amp), Coordinates::X1X2);
                }
                return PureProductState(tabulated_factor(spec.axis, *spec.psi1),
                                        tabulated_factor(spec.axis, *spec.psi2));
            } else {
                return materialize_ensemble(spec, opts);
            }
        },
        d.value);
}

}  // namespace cvgup
