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

#include "cvgup/criteria.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "cvgup/cv_state.h"
#include "cvgup/errors.h"

namespace cvgup {

namespace {

// ln(e^a + e^b) without overflow.
double log_add_exp(double a, double b) noexcept {
    double hi = std::max(a, b);
    return hi + std::log1p(std::exp(-std::abs(a - b)));
}

// ln((e^a + e^b) / 2); exactly a when a == b.
double log_mean_exp(double a, double b) noexcept {
    double hi = std::max(a, b);
    return hi + std::log1p(0.5 * std::expm1(-std::abs(a - b)));
}

Nats strong_bound(Nats hw1, Nats hw2, Nats hv1, Nats hv2, Nats eta1, Nats eta2) noexcept {
    return 0.5 * (log_add_exp(2 * hw1, 2 * hw2) + log_add_exp(2 * eta1 + 2 * hv1, 2 * eta2 + 2 * hv2));
}

void require_nonnegative(Nats eta1, Nats eta2) {
    if (!(eta1 >= 0) || !(eta2 >= 0)) {
        throw ParamError("entropy corrections must be nonnegative");
    }
}

void require_matching(std::span<const double> weights, std::size_t count) {
    validate_weights(weights);
    if (weights.size() != count) {
        throw WeightError("one weight per ensemble component is required");
    }
}

constexpr std::array<std::pair<BoundFamily, std::string_view>, 4> kFamilyNames{{
    {BoundFamily::StrongPure, "strong-pure"},
    {BoundFamily::WeakPure, "weak-pure"},
    {BoundFamily::StrongMixed, "strong-mixed"},
    {BoundFamily::WeakMixed, "weak-mixed"},
}};

}  // namespace

std::string to_string(BoundKind kind) {
    for (const auto &[family, name] : kFamilyNames) {
        if (family == kind.family) {
            return std::string(name) + (kind.gup ? "-gup" : "");
        }
    }
    return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
    bool gup = false;
    constexpr std::string_view kSuffix = "-gup";
    if (name.size() > kSuffix.size() && name.substr(name.size() - kSuffix.size()) == kSuffix) {
        gup = true;
        name.remove_suffix(kSuffix.size());
    }
    for (const auto &[family, family_name] : kFamilyNames) {
        if (name == family_name) {
            return BoundKind{family, gup};
        }
    }
    return std::nullopt;
}

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Entangled ? "Entangled" : "Inconclusive";
}

std::string_view to_string(Pairing p) noexcept {
    return p == Pairing::PlusMinus ? "+-" : "-+";
}

Verdict verdict_for(double margin, double tau) noexcept {
    return margin > tau ? Verdict::Entangled : Verdict::Inconclusive;
}

Nats strong_pure_bound(Nats hw1, Nats hw2, Nats hv1, Nats hv2) noexcept {
    return strong_bound(hw1, hw2, hv1, hv2, 0, 0);
}

Nats weak_pure_bound() noexcept {
    return kLn2PiE;
}

Nats weak_bound_cosh_form(Nats hv1, Nats hv2) noexcept {
    // 2 (pi e)^2 (1 + cosh d) = (2 pi e)^2 (1 + sinh^2(d / 2)).
    double s = std::sinh(0.5 * (hv2 - hv1));
    return kLn2PiE + 0.5 * std::log1p(s * s);
}

Nats gup_strong_pure_bound(Nats hw1, Nats hw2, Nats hv1, Nats hv2, Nats eta1, Nats eta2) {
    require_nonnegative(eta1, eta2);
    return strong_bound(hw1, hw2, hv1, hv2, eta1, eta2);
}

Nats gup_weak_pure_bound(Nats eta1, Nats eta2) {
    require_nonnegative(eta1, eta2);
    return kLn2PiE + log_mean_exp(eta1, eta2);
}

Nats mixed_strong_bound(std::span<const double> weights, std::span<const ComponentEntropies> components) {
    require_matching(weights, components.size());
    Nats total = 0;
    for (std::size_t m = 0; m < weights.size(); m++) {
        const auto &c = components[m];
        total += weights[m] * strong_bound(c.w1, c.w2, c.v1, c.v2, 0, 0);
    }
    return total;
}

Nats gup_mixed_strong_bound(std::span<const double> weights, std::span<const ComponentEntropies> components,
                            std::span<const ComponentEtas> etas) {
    require_matching(weights, components.size());
    if (etas.size() != components.size()) {
        throw WeightError("one correction pair per ensemble component is required");
    }
    Nats total = 0;
    for (std::size_t m = 0; m < weights.size(); m++) {
        const auto &c = components[m];
        require_nonnegative(etas[m].eta1, etas[m].eta2);
        total += weights[m] * strong_bound(c.w1, c.w2, c.v1, c.v2, etas[m].eta1, etas[m].eta2);
    }
    return total;
}

Nats mixed_weak_bound() noexcept {
    return kLn2PiE;
}

Nats gup_mixed_weak_bound(std::span<const double> weights, std::span<const ComponentEtas> etas) {
    require_matching(weights, etas.size());
    double correction = 0;
    for (std::size_t m = 0; m < weights.size(); m++) {
        require_nonnegative(etas[m].eta1, etas[m].eta2);
        correction += weights[m] * log_mean_exp(etas[m].eta1, etas[m].eta2);
    }
    return kLn2PiE + correction;
}

DeltaHMinimum minimize_delta_h(Nats eta1, Nats eta2) noexcept {
    // d/dd [e^(2 eta1 + 2d) + e^(2 eta2 - 2d)] = 0  =>  d = (eta2 - eta1) / 2,
    // where both terms equal e^(eta1 + eta2).
    double sum = std::exp(eta1) + std::exp(eta2);
    return {0.5 * (eta2 - eta1), sum * sum};
}

}  // namespace cvgup
