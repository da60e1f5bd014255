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

#include "cvgup/gup.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

// The Boost 1.74 pchip header calls isnan unqualified; math.h puts it in scope.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include "cvgup/errors.h"

namespace cvgup {

namespace {

// Fraction of p0 beyond which quantiles are clamped; keeps k grids finite.
constexpr double kCutoffMargin = 1e-3;

using Pchip = boost::math::interpolators::pchip<std::vector<double>>;

Pchip make_pchip(const Axis &axis, std::span<const double> values) {
    std::vector<double> x(axis.size());
    for (std::size_t i = 0; i < axis.size(); i++) {
        x[i] = axis[i];
    }
    return Pchip(std::move(x), std::vector<double>(values.begin(), values.end()));
}

// Trapezoid integral of the piecewise-linear interpolant of v from axis.min() to x.
class Cumulative {
   public:
    explicit Cumulative(const Dist1D &v) : v_(v), prefix_(v.size(), 0.0) {
        double h = v.axis().step();
        for (std::size_t i = 1; i < v.size(); i++) {
            prefix_[i] = prefix_[i - 1] + 0.5 * h * (v[i - 1] + v[i]);
        }
    }

    double total() const { return prefix_.back(); }

    double at(double x) const {
        const Axis &a = v_.axis();
        if (x <= a.min()) {
            return 0;
        }
        if (x >= a.max()) {
            return total();
        }
        double t = (x - a.min()) / a.step();
        auto i = std::min(static_cast<std::size_t>(t), v_.size() - 2);
        double frac = t - static_cast<double>(i);
        double vx = v_[i] + frac * (v_[i + 1] - v_[i]);
        return prefix_[i] + 0.5 * frac * a.step() * (v_[i] + vx);
    }

    // Smallest x with at(x) >= target, linear within a cell.
    double inverse(double target) const {
        const Axis &a = v_.axis();
        if (target <= 0) {
            return a.min();
        }
        auto it = std::lower_bound(prefix_.begin(), prefix_.end(), target);
        if (it == prefix_.end()) {
            return a.max();
        }
        auto k = static_cast<std::size_t>(it - prefix_.begin());
        if (k == 0) {
            return a.min();
        }
        double span = prefix_[k] - prefix_[k - 1];
        double frac = span > 0 ? (target - prefix_[k - 1]) / span : 0;
        return a[k - 1] + frac * a.step();
    }

   private:
    const Dist1D &v_;
    std::vector<double> prefix_;
};

void require_small_tail(double tail, double eps_tail) {
    if (!(tail < eps_tail)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "momentum mass %.3g beyond the cutoff reaches the tolerance %.3g", tail,
                      eps_tail);
        throw GupDomainError(msg);
    }
}

double capped_quantile(const Dist1D &v, const GupParam &g, double eps) {
    double q = symmetric_quantile(v, eps);
    if (!g.is_standard()) {
        q = std::min(q, g.p0() * (1 - kCutoffMargin));
    }
    return q;
}

}  // namespace

GupParam::GupParam(double beta) : beta_(beta), p0_(std::numeric_limits<double>::infinity()) {
    if (!std::isfinite(beta) || beta < 0) {
        throw ParamError("GUP parameter beta must be finite and >= 0");
    }
    if (beta > 0) {
        p0_ = std::numbers::pi / (2 * std::sqrt(beta));
    }
}

double p_to_k(double p, const GupParam &g) {
    if (g.is_standard()) {
        return p;
    }
    if (!(std::abs(p) < g.p0())) {
        throw DomainError("momentum " + std::to_string(p) + " outside (-p0, p0) with p0 = " + std::to_string(g.p0()));
    }
    double s = std::sqrt(g.beta());
    return std::tan(s * p) / s;
}

double k_to_p(double k, const GupParam &g) noexcept {
    if (g.is_standard()) {
        return k;
    }
    double s = std::sqrt(g.beta());
    return std::atan(s * k) / s;
}

double tail_mass(const Dist1D &v, const GupParam &g) {
    if (g.is_standard()) {
        return 0;
    }
    Cumulative c(v);
    return c.at(-g.p0()) + (c.total() - c.at(g.p0()));
}

double symmetric_quantile(const Dist1D &v, double eps) {
    Cumulative c(v);
    double total = c.total();
    double lo = c.inverse(0.5 * eps * total);
    double hi = c.inverse((1 - 0.5 * eps) * total);
    return std::max(std::abs(lo), std::abs(hi));
}

Axis k_axis_for(std::span<const Dist1D> vs, const GupParam &g, double eps_tail) {
    if (vs.empty()) {
        throw AxisError("k grid needs at least one momentum density");
    }
    double step = vs.front().axis().step();
    double reach = 0;
    for (const auto &v : vs) {
        reach = std::max(reach, p_to_k(capped_quantile(v, g, eps_tail), g));
    }
    auto m = static_cast<std::size_t>(std::ceil(reach / step));
    m = std::max<std::size_t>(m, kMinAxisPoints / 2);
    double half = step * static_cast<double>(m);
    return Axis(-half, half, 2 * m + 1);
}

Dist1D u_from_v(const Dist1D &v, const GupParam &g, const Axis &k_axis, double eps_tail) {
    if (g.is_standard() && k_axis == v.axis()) {
        return v;
    }
    require_small_tail(tail_mass(v, g), eps_tail);
    Pchip interp = make_pchip(v.axis(), v.values());
    const Axis &pa = v.axis();
    std::vector<double> u(k_axis.size(), 0.0);
    for (std::size_t i = 0; i < k_axis.size(); i++) {
        double k = k_axis[i];
        double p = k_to_p(k, g);
        if (p < pa.min() || p > pa.max()) {
            continue;
        }
        u[i] = std::max(0.0, interp(p)) / (1 + g.beta() * k * k);
    }
    Dist1D raw(k_axis, std::move(u));
    double mass = integrate(raw);
    if (std::abs(mass - 1) > 1e-4) {
        throw AxisError("k grid captures mass " + std::to_string(mass) + " of the deformed density");
    }
    return normalize(raw);
}

Dist1D u_from_v(const Dist1D &v, const GupParam &g, double eps_tail) {
    if (g.is_standard()) {
        return v;
    }
    std::vector<Dist1D> one{v};
    return u_from_v(v, g, k_axis_for(one, g, eps_tail), eps_tail);
}

Nats eta(const Dist1D &v, const GupParam &g, double eps_tail) {
    if (g.is_standard()) {
        return 0;
    }
    require_small_tail(tail_mass(v, g), eps_tail);
    double s = std::sqrt(g.beta());
    std::vector<double> integrand(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); i++) {
        double y = s * v.axis()[i];
        if (std::abs(y) < std::numbers::pi / 2) {
            double t = std::tan(y);
            integrand[i] = v[i] * std::log1p(t * t);
        }
    }
    return trapezoid(integrand, v.axis().step());
}

Nats gup_entropy(const Dist1D &v, const GupParam &g, double eps_tail) {
    return shannon(v) + eta(v, g, eps_tail);
}

GupCorrection gup_correction(const Dist1D &v1, const Dist1D &v2, const GupParam &g, double eps_tail) {
    GupCorrection c;
    c.beta = g.beta();
    c.tail1 = tail_mass(v1, g);
    c.tail2 = tail_mass(v2, g);
    c.eta1 = eta(v1, g, eps_tail);
    c.eta2 = eta(v2, g, eps_tail);
    return c;
}

Dist1D joint_u_pm(const Dist2D &v, const GupParam &g, PmSign sign, double eps_tail) {
    if (g.is_standard()) {
        return pushforward_pm(v, sign);
    }
    const Axis &a0 = v.axis0();
    const Axis &a1 = v.axis1();
    if (!same_step(a0, a1)) {
        throw AxisError("joint momentum density needs equal steps on both axes");
    }
    Dist1D v1 = marginal(v, 0);
    Dist1D v2 = marginal(v, 1);
    require_small_tail(tail_mass(v1, g) + tail_mass(v2, g), eps_tail);

    double h = a0.step();
    double reach = p_to_k(capped_quantile(v1, g, eps_tail), g) + p_to_k(capped_quantile(v2, g, eps_tail), g);
    // Anchor the K grid on the beta = 0 lattice of sums/differences.
    double anchor = sign == PmSign::Plus ? a0.min() + a1.min() : a0.min() - a1.max();
    auto j_lo = static_cast<long long>(std::floor((-reach - anchor) / h));
    auto j_hi = static_cast<long long>(std::ceil((reach - anchor) / h));
    if (j_hi - j_lo + 1 < static_cast<long long>(kMinAxisPoints)) {
        j_hi = j_lo + static_cast<long long>(kMinAxisPoints) - 1;
    }
    auto nk = static_cast<std::size_t>(j_hi - j_lo + 1);
    Axis k_axis(anchor + static_cast<double>(j_lo) * h, anchor + static_cast<double>(j_hi) * h, nk);

    double s = std::sqrt(g.beta());
    std::size_t n0 = a0.size();
    std::size_t n1 = a1.size();
    std::vector<double> out(nk, 0.0);
    for (std::size_t i = 0; i < n0; i++) {
        double p1 = a0[i];
        if (!(std::abs(s * p1) < std::numbers::pi / 2)) {
            continue;
        }
        auto row = v.values().subspan(i * n1, n1);
        if (*std::max_element(row.begin(), row.end()) < 1e-300) {
            continue;
        }
        double weight = ((i == 0 || i + 1 == n0) ? 0.5 : 1.0) * h;
        double k1 = std::tan(s * p1) / s;
        Pchip interp = make_pchip(a1, row);
        for (std::size_t j = 0; j < nk; j++) {
            double k2 = sign == PmSign::Plus ? k_axis[j] - k1 : k1 - k_axis[j];
            double p2 = std::atan(s * k2) / s;
            if (p2 < a1.min() || p2 > a1.max()) {
                continue;
            }
            out[j] += weight * std::max(0.0, interp(p2)) / (1 + g.beta() * k2 * k2);
        }
    }
    return normalize(Dist1D(k_axis, std::move(out)));
}

}  // namespace cvgup
