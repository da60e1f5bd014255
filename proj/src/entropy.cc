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

#include "cvgup/entropy.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cvgup/errors.h"
#include "fft.h"

namespace cvgup {

namespace {

constexpr double kEntropyFloor = 1e-300;
constexpr double kNormalizedTolerance = 1e-6;

void require_unit_mass(const Dist1D &d, const char *what) {
    double mass = integrate(d);
    if (!(std::abs(mass - 1) <= kNormalizedTolerance)) {
        throw ProbError(std::string(what) + " needs a normalized density (mass " + std::to_string(mass) + ")");
    }
}

}  // namespace

Nats discrete_shannon(std::span<const double> p) {
    double total = 0;
    for (double v : p) {
        if (!std::isfinite(v) || v < 0) {
            throw ProbError("probabilities must be finite and nonnegative");
        }
        total += v;
    }
    if (p.empty() || std::abs(total - 1) > 1e-12) {
        throw ProbError("probabilities must sum to 1");
    }
    double h = 0;
    for (double v : p) {
        if (v > 0) {
            h -= v * std::log(v);
        }
    }
    return h;
}

Nats shannon(const Dist1D &d) {
    require_unit_mass(d, "shannon entropy");
    std::vector<double> integrand(d.size());
    for (std::size_t i = 0; i < d.size(); i++) {
        double v = d[i];
        integrand[i] = v < kEntropyFloor ? 0.0 : -v * std::log(v);
    }
    return trapezoid(integrand, d.axis().step());
}

Dist1D marginal_pm(const Dist2D &pm, PmSign sign) {
    double mass = integrate(pm);
    if (!(std::abs(mass - 1) <= kNormalizedTolerance)) {
        throw ProbError("marginal_pm needs a normalized joint density");
    }
    return marginal(pm, sign == PmSign::Plus ? 0 : 1);
}

Dist1D pushforward_pm(const Dist2D &joint, PmSign sign) {
    const Axis &a0 = joint.axis0();
    const Axis &a1 = joint.axis1();
    if (!same_step(a0, a1)) {
        throw AxisError("(x1, x2) density needs equal steps on both axes");
    }
    std::size_t n0 = a0.size();
    std::size_t n1 = a1.size();
    double h = a0.step();
    std::size_t n = n0 + n1 - 1;
    double lo = sign == PmSign::Plus ? a0.min() + a1.min() : a0.min() - a1.max();
    Axis out_axis(lo, lo + h * static_cast<double>(n - 1), n);

    auto weight = [](std::size_t i, std::size_t count) { return (i == 0 || i + 1 == count) ? 0.5 : 1.0; };
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n0; i++) {
        double wi = weight(i, n0) * h;
        for (std::size_t j = 0; j < n1; j++) {
            // x1 + x2 sits at index i + j; x1 - x2 at i + (n1 - 1 - j).
            std::size_t k = sign == PmSign::Plus ? i + j : i + (n1 - 1 - j);
            out[k] += wi * weight(j, n1) * joint(i, j);
        }
    }
    return Dist1D(out_axis, std::move(out));
}

Dist1D convolve(const Dist1D &a, const Dist1D &b) {
    if (!same_step(a.axis(), b.axis())) {
        throw AxisError("convolution needs equal grid spacing");
    }
    double h = a.axis().step();
    std::vector<double> c = detail::linear_convolution(a.values(), b.values());
    for (double &v : c) {
        v = std::max(v * h, 0.0);
    }
    double lo = a.axis().min() + b.axis().min();
    std::size_t n = c.size();
    Dist1D out(Axis(lo, lo + h * static_cast<double>(n - 1), n), std::move(c));
    return normalize(out);
}

Dist1D mirror(const Dist1D &d) {
    std::vector<double> out(d.values().rbegin(), d.values().rend());
    return Dist1D(Axis(-d.axis().max(), -d.axis().min(), d.size()), std::move(out));
}

Dist1D product_pm(const Dist1D &d1, const Dist1D &d2, PmSign sign) {
    return convolve(d1, sign == PmSign::Plus ? d2 : mirror(d2));
}

double epi_gap(const Dist1D &a, const Dist1D &b) {
    Nats ha = shannon(a);
    Nats hb = shannon(b);
    Nats hab = shannon(convolve(a, b));
    return std::exp(2 * hab) - std::exp(2 * ha) - std::exp(2 * hb);
}

Nats bbm_sum(const Field1D &psi) {
    return shannon(density(psi)) + shannon(density(to_momentum(psi)));
}

Dist1D mix(std::span<const double> weights, std::span<const Dist1D> parts) {
    validate_weights(weights);
    if (weights.size() != parts.size()) {
        throw WeightError("mixture needs one weight per density");
    }
    const Axis &first = parts.front().axis();
    bool shared = std::all_of(parts.begin(), parts.end(), [&](const Dist1D &p) { return p.axis() == first; });

    std::optional<Axis> common;
    if (shared) {
        common = first;
    } else {
        double lo = first.min();
        double hi = first.max();
        double step = first.step();
        for (const auto &p : parts) {
            lo = std::min(lo, p.axis().min());
            hi = std::max(hi, p.axis().max());
            step = std::min(step, p.axis().step());
        }
        double count = std::ceil((hi - lo) / step - 1e-9) + 1;
        if (count > static_cast<double>(std::size_t{1} << 22)) {
            throw AxisError("component grids are too far apart to share a common grid");
        }
        auto n = static_cast<std::size_t>(count);
        common = Axis(lo, lo + step * static_cast<double>(n - 1), n);
    }

    std::vector<double> out(common->size(), 0.0);
    for (std::size_t m = 0; m < parts.size(); m++) {
        Dist1D part = shared ? parts[m] : resample(parts[m], *common);
        for (std::size_t i = 0; i < out.size(); i++) {
            out[i] += weights[m] * part[i];
        }
    }
    return Dist1D(*common, std::move(out));
}

Dist1D ensemble_density(const MixedEnsemble &e, Observable observable) {
    std::vector<Dist1D> parts;
    parts.reserve(e.size());
    bool position = observable == Observable::XPlus || observable == Observable::XMinus;
    PmSign sign = (observable == Observable::XPlus || observable == Observable::PPlus) ? PmSign::Plus : PmSign::Minus;
    for (const auto &c : e.components()) {
        if (position) {
            parts.push_back(product_pm(density(c.psi1), density(c.psi2), sign));
        } else {
            parts.push_back(product_pm(density(to_momentum(c.psi1)), density(to_momentum(c.psi2)), sign));
        }
    }
    return mix(e.weights(), parts);
}

}  // namespace cvgup
