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

#ifndef CVGUP_GRID_H
#define CVGUP_GRID_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cvgup {

using Complex = std::complex<double>;

inline constexpr std::size_t kMinAxisPoints = 16;

/// Uniform sampling x_i = min + i * step, i = 0..n-1, step = (max - min) / (n - 1).
class Axis {
   public:
    /// Throws AxisError unless n >= 16, both ends are finite and max > min.
    Axis(double min, double max, std::size_t n);

    /// Axis on [-half_width, half_width].
    static Axis symmetric(double half_width, std::size_t n);

    double min() const noexcept { return min_; }
    double max() const noexcept { return max_; }
    std::size_t size() const noexcept { return n_; }
    double step() const noexcept { return step_; }
    double operator[](std::size_t i) const noexcept { return min_ + static_cast<double>(i) * step_; }

    /// True when min == -max up to a relative tolerance.
    bool is_symmetric(double rel_tol = 1e-12) const noexcept;

    bool operator==(const Axis &) const = default;

   private:
    double min_;
    double max_;
    std::size_t n_;
    double step_;
};

/// Same spacing up to a relative tolerance.
bool same_step(const Axis &a, const Axis &b, double rel_tol = 1e-9) noexcept;

class Field1D {
   public:
    Field1D(Axis axis, std::vector<Complex> values);

    const Axis &axis() const noexcept { return axis_; }
    std::span<const Complex> values() const noexcept { return values_; }
    Complex operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

   private:
    Axis axis_;
    std::vector<Complex> values_;
};

/// Row-major samples: value(i0, i1) lives at i0 * axis1.size() + i1.
class Field2D {
   public:
    Field2D(Axis axis0, Axis axis1, std::vector<Complex> values);

    const Axis &axis0() const noexcept { return axis0_; }
    const Axis &axis1() const noexcept { return axis1_; }
    std::span<const Complex> values() const noexcept { return values_; }
    Complex operator()(std::size_t i0, std::size_t i1) const noexcept {
        return values_[i0 * axis1_.size() + i1];
    }

   private:
    Axis axis0_;
    Axis axis1_;
    std::vector<Complex> values_;
};

/// Nonnegative density sampled on an axis. Construction rejects negative or
/// non-finite samples with ProbError.
class Dist1D {
   public:
    Dist1D(Axis axis, std::vector<double> values);

    const Axis &axis() const noexcept { return axis_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

   private:
    Axis axis_;
    std::vector<double> values_;
};

class Dist2D {
   public:
    Dist2D(Axis axis0, Axis axis1, std::vector<double> values);

    const Axis &axis0() const noexcept { return axis0_; }
    const Axis &axis1() const noexcept { return axis1_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator()(std::size_t i0, std::size_t i1) const noexcept {
        return values_[i0 * axis1_.size() + i1];
    }

   private:
    Axis axis0_;
    Axis axis1_;
    std::vector<double> values_;
};

/// Composite trapezoid rule on uniform samples.
double trapezoid(std::span<const double> samples, double step) noexcept;

double integrate(const Dist1D &d) noexcept;
double integrate(const Dist2D &d) noexcept;

/// Rescales to unit mass. Throws MassError when the integral is not positive and finite.
Dist1D normalize(const Dist1D &d);
Dist2D normalize(const Dist2D &d);

/// d(-x) on the same axis. Throws AxisError unless the axis is symmetric about 0.
Dist1D reflect(const Dist1D &d);

/// |psi|^2.
Dist1D density(const Field1D &f);
Dist2D density(const Field2D &f);

double l2_norm_squared(const Field1D &f) noexcept;
double l2_norm_squared(const Field2D &f) noexcept;
Field1D normalize(const Field1D &f);
Field2D normalize(const Field2D &f);

/// Raw moment  integral x^k d(x) dx.
double moment(const Dist1D &d, int k) noexcept;
double mean(const Dist1D &d) noexcept;
double variance(const Dist1D &d) noexcept;

/// Integrates out axis1 (keep == 0) or axis0 (keep == 1).
Dist1D marginal(const Dist2D &d, int keep);

/// Piecewise-linear resampling onto `target`; zero outside the source axis.
Dist1D resample(const Dist1D &d, const Axis &target);
Field1D resample(const Field1D &f, const Axis &target);

}  // namespace cvgup

#endif  // CVGUP_GRID_H
