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

#include "cvgup/grid.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvgup/errors.h"

namespace cvgup {

Axis::Axis(double min, double max, std::size_t n) : min_(min), max_(max), n_(n), step_(0) {
    if (n < kMinAxisPoints) {
        throw AxisError("axis needs at least " + std::to_string(kMinAxisPoints) + " samples, got " +
                        std::to_string(n));
    }
    if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
        throw AxisError("axis bounds must be finite with max > min");
    }
    step_ = (max - min) / static_cast<double>(n - 1);
}

Axis Axis::symmetric(double half_width, std::size_t n) {
    return Axis(-half_width, half_width, n);
}

bool Axis::is_symmetric(double rel_tol) const noexcept {
    return std::abs(min_ + max_) <= rel_tol * std::max(std::abs(min_), std::abs(max_));
}

bool same_step(const Axis &a, const Axis &b, double rel_tol) noexcept {
    return std::abs(a.step() - b.step()) <= rel_tol * std::max(a.step(), b.step());
}

Field1D::Field1D(Axis axis, std::vector<Complex> values) : axis_(axis), values_(std::move(values)) {
    if (values_.size() != axis_.size()) {
        throw AxisError("field has " + std::to_string(values_.size()) + " samples for an axis of " +
                        std::to_string(axis_.size()));
    }
}

Field2D::Field2D(Axis axis0, Axis axis1, std::vector<Complex> values)
    : axis0_(axis0), axis1_(axis1), values_(std::move(values)) {
    if (values_.size() != axis0_.size() * axis1_.size()) {
        throw AxisError("2D field sample count does not match its axes");
    }
}

namespace {

void check_density_samples(std::span<const double> values) {
    for (double v : values) {
        if (!std::isfinite(v) || v < 0) {
            throw ProbError("density samples must be finite and nonnegative");
        }
    }
}

}  // namespace

Dist1D::Dist1D(Axis axis, std::vector<double> values) : axis_(axis), values_(std::move(values)) {
    if (values_.size() != axis_.size()) {
        throw AxisError("density has " + std::to_string(values_.size()) + " samples for an axis of " +
                        std::to_string(axis_.size()));
    }
    check_density_samples(values_);
}

Dist2D::Dist2D(Axis axis0, Axis axis1, std::vector<double> values)
    : axis0_(axis0), axis1_(axis1), values_(std::move(values)) {
    if (values_.size() != axis0_.size() * axis1_.size()) {
        throw AxisError("2D density sample count does not match its axes");
    }
    check_density_samples(values_);
}

double trapezoid(std::span<const double> samples, double step) noexcept {
    if (samples.empty()) {
        return 0;
    }
    double total = 0;
    for (double v : samples) {
        total += v;
    }
    total -= 0.5 * (samples.front() + samples.back());
    return total * step;
}

double integrate(const Dist1D &d) noexcept {
    return trapezoid(d.values(), d.axis().step());
}

double integrate(const Dist2D &d) noexcept {
    return integrate(marginal(d, 0));
}

Dist1D normalize(const Dist1D &d) {
    double mass = integrate(d);
    if (!std::isfinite(mass) || mass <= 0) {
        throw MassError("cannot normalize a density with mass " + std::to_string(mass));
    }
    std::vector<double> out(d.values().begin(), d.values().end());
    for (double &v : out) {
        v /= mass;
    }
    return Dist1D(d.axis(), std::move(out));
}

Dist2D normalize(const Dist2D &d) {
    double mass = integrate(d);
    if (!std::isfinite(mass) || mass <= 0) {
        throw MassError("cannot normalize a density with mass " + std::to_string(mass));
    }
    std::vector<double> out(d.values().begin(), d.values().end());
    for (double &v : out) {
        v /= mass;
    }
    return Dist2D(d.axis0(), d.axis1(), std::move(out));
}

Dist1D reflect(const Dist1D &d) {
    if (!d.axis().is_symmetric()) {
        throw AxisError("reflection requires an axis symmetric about 0");
    }
    std::vector<double> out(d.values().rbegin(), d.values().rend());
    return Dist1D(d.axis(), std::move(out));
}

Dist1D density(const Field1D &f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); i++) {
        out[i] = std::norm(f[i]);
    }
    return Dist1D(f.axis(), std::move(out));
}

Dist2D density(const Field2D &f) {
    std::vector<double> out(f.values().size());
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = std::norm(f.values()[i]);
    }
    return Dist2D(f.axis0(), f.axis1(), std::move(out));
}

double l2_norm_squared(const Field1D &f) noexcept {
    std::vector<double> w(f.size());
    for (std::size_t i = 0; i < f.size(); i++) {
        w[i] = std::norm(f[i]);
    }
    return trapezoid(w, f.axis().step());
}

double l2_norm_squared(const Field2D &f) noexcept {
    std::size_t n0 = f.axis0().size();
    std::size_t n1 = f.axis1().size();
    std::vector<double> rows(n0);
    std::vector<double> row(n1);
    for (std::size_t i = 0; i < n0; i++) {
        for (std::size_t j = 0; j < n1; j++) {
            row[j] = std::norm(f(i, j));
        }
        rows[i] = trapezoid(row, f.axis1().step());
    }
    return trapezoid(rows, f.axis0().step());
}

Field1D normalize(const Field1D &f) {
    double n2 = l2_norm_squared(f);
    if (!std::isfinite(n2) || n2 <= 0) {
        throw MassError("cannot normalize a field with zero or non-finite norm");
    }
    double scale = 1 / std::sqrt(n2);
    std::vector<Complex> out(f.values().begin(), f.values().end());
    for (auto &v : out) {
        v *= scale;
    }
    return Field1D(f.axis(), std::move(out));
}

Field2D normalize(const Field2D &f) {
    double n2 = l2_norm_squared(f);
    if (!std::isfinite(n2) || n2 <= 0) {
        throw MassError("cannot normalize a field with zero or non-finite norm");
    }
    double scale = 1 / std::sqrt(n2);
    std::vector<Complex> out(f.values().begin(), f.values().end());
    for (auto &v : out) {
        v *= scale;
    }
    return Field2D(f.axis0(), f.axis1(), std::move(out));
}

double moment(const Dist1D &d, int k) noexcept {
    std::vector<double> w(d.size());
    for (std::size_t i = 0; i < d.size(); i++) {
        w[i] = std::pow(d.axis()[i], k) * d[i];
    }
    return trapezoid(w, d.axis().step());
}

double mean(const Dist1D &d) noexcept {
    return moment(d, 1) / moment(d, 0);
}

double variance(const Dist1D &d) noexcept {
    double m0 = moment(d, 0);
    double mu = moment(d, 1) / m0;
    std::vector<double> w(d.size());
    for (std::size_t i = 0; i < d.size(); i++) {
        double dx = d.axis()[i] - mu;
        w[i] = dx * dx * d[i];
    }
    return trapezoid(w, d.axis().step()) / m0;
}

Dist1D marginal(const Dist2D &d, int keep) {
    std::size_t n0 = d.axis0().size();
    std::size_t n1 = d.axis1().size();
    if (keep == 0) {
        std::vector<double> out(n0);
        for (std::size_t i = 0; i < n0; i++) {
            out[i] = trapezoid(d.values().subspan(i * n1, n1), d.axis1().step());
        }
        return Dist1D(d.axis0(), std::move(out));
    }
    if (keep == 1) {
        std::vector<double> out(n1, 0.0);
        double h = d.axis0().step();
        for (std::size_t i = 0; i < n0; i++) {
            double w = (i == 0 || i + 1 == n0) ? 0.5 * h : h;
            for (std::size_t j = 0; j < n1; j++) {
                out[j] += w * d(i, j);
            }
        }
        return Dist1D(d.axis1(), std::move(out));
    }
    throw AxisError("marginal axis index must be 0 or 1");
}

namespace {

template <typename T>
std::vector<T> linear_resample(const Axis &src, std::span<const T> values, const Axis &target) {
    std::vector<T> out(target.size(), T{});
    for (std::size_t k = 0; k < target.size(); k++) {
        double t = (target[k] - src.min()) / src.step();
        if (t < -1e-9 || t > static_cast<double>(src.size() - 1) + 1e-9) {
            continue;
        }
        t = std::clamp(t, 0.0, static_cast<double>(src.size() - 1));
        auto i = static_cast<std::size_t>(std::floor(t));
        if (i >= src.size() - 1) {
            out[k] = values[src.size() - 1];
            continue;
        }
        double frac = t - static_cast<double>(i);
        out[k] = values[i] * (1 - frac) + values[i + 1] * frac;
    }
    return out;
}

}  // namespace

Dist1D resample(const Dist1D &d, const Axis &target) {
    return Dist1D(target, linear_resample<double>(d.axis(), d.values(), target));
}

Field1D resample(const Field1D &f, const Axis &target) {
    return Field1D(target, linear_resample<Complex>(f.axis(), f.values(), target));
}

}  // namespace cvgup
