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

#ifndef CVGUP_CRITERIA_H
#define CVGUP_CRITERIA_H

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cvgup/entropy.h"

namespace cvgup {

enum class BoundFamily { StrongPure, WeakPure, StrongMixed, WeakMixed };

/// A criterion family with or without the momentum deformation.
struct BoundKind {
    BoundFamily family = BoundFamily::WeakPure;
    bool gup = false;

    bool is_mixed() const noexcept {
        return family == BoundFamily::StrongMixed || family == BoundFamily::WeakMixed;
    }
    bool operator==(const BoundKind &) const = default;
};

/// "strong-pure", "weak-mixed-gup", ...
std::string to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

enum class Verdict { Entangled, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

inline constexpr double kDefaultVerdictTolerance = 1e-9;

/// Which pairing of the sum and difference observables produced lhs:
/// PlusMinus is H[w+] + H[v-], MinusPlus is H[w-] + H[v+].
enum class Pairing { PlusMinus, MinusPlus };

std::string_view to_string(Pairing p) noexcept;

struct CriterionResult {
    BoundKind kind;
    Pairing pairing = Pairing::PlusMinus;
    Nats lhs = 0;
    Nats bound = 0;
    double margin = 0;  // bound - lhs
    Verdict verdict = Verdict::Inconclusive;
    double delta_h = 0;  // H[v2] - H[v1], or H[u2] - H[u1] with the deformation
    double beta = 0;
};

/// Entangled iff margin > tau.
Verdict verdict_for(double margin, double tau = kDefaultVerdictTolerance) noexcept;

/// Subsystem entropies of one product component.
struct ComponentEntropies {
    Nats w1 = 0;
    Nats w2 = 0;
    Nats v1 = 0;
    Nats v2 = 0;
};

/// Per-component deformation corrections.
struct ComponentEtas {
    Nats eta1 = 0;
    Nats eta2 = 0;
};

/// 1/2 ln{(e^(2 Hw1) + e^(2 Hw2)) (e^(2 Hv1) + e^(2 Hv2))}.
Nats strong_pure_bound(Nats hw1, Nats hw2, Nats hv1, Nats hv2) noexcept;

/// ln(2 pi e).
Nats weak_pure_bound() noexcept;

/// 1/2 ln{2 (pi e)^2 (1 + cosh(Hv2 - Hv1))}.
Nats weak_bound_cosh_form(Nats hv1, Nats hv2) noexcept;

/// 1/2 ln{(e^(2 Hw1) + e^(2 Hw2)) (e^(2 eta1 + 2 Hv1) + e^(2 eta2 + 2 Hv2))}.
/// Throws ParamError on negative corrections.
Nats gup_strong_pure_bound(Nats hw1, Nats hw2, Nats hv1, Nats hv2, Nats eta1, Nats eta2);

/// ln(2 pi e) + ln((e^eta1 + e^eta2) / 2). Throws ParamError on negative corrections.
Nats gup_weak_pure_bound(Nats eta1, Nats eta2);

/// Weighted average of per-component strong bounds. Throws WeightError.
Nats mixed_strong_bound(std::span<const double> weights, std::span<const ComponentEntropies> components);

/// Weighted average of per-component deformed strong bounds. The corrections
/// enter only the momentum factor.
Nats gup_mixed_strong_bound(std::span<const double> weights, std::span<const ComponentEntropies> components,
                            std::span<const ComponentEtas> etas);

/// ln(2 pi e) for separable mixtures.
Nats mixed_weak_bound() noexcept;

/// ln(2 pi e) + sum_m lambda_m ln((e^eta1m + e^eta2m) / 2).
Nats gup_mixed_weak_bound(std::span<const double> weights, std::span<const ComponentEtas> etas);

/// Minimizer of e^(2 eta1 + 2 d) + e^(2 eta2 - 2 d) over d, and the minimum of
/// e^(2 eta1) + e^(2 eta2) + e^(2 eta1 + 2 d) + e^(2 eta2 - 2 d).
struct DeltaHMinimum {
    double argmin = 0;
    double min_value = 0;
};

DeltaHMinimum minimize_delta_h(Nats eta1, Nats eta2) noexcept;

}  // namespace cvgup

#endif  // CVGUP_CRITERIA_H
