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

#ifndef CVGUP_PIPELINE_H
#define CVGUP_PIPELINE_H

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "cvgup/criteria.h"
#include "cvgup/cv_state.h"
#include "cvgup/entropy.h"
#include "cvgup/grid.h"
#include "cvgup/gup.h"

namespace cvgup {

struct AnalysisOptions {
    GridOptions grid;
    double eps_tail = kDefaultTailTolerance;
};

/// Subsystem and sum/difference entropies of a state. For ensembles the
/// densities are the weighted mixtures.
struct StandardEntropies {
    Nats w1 = 0;
    Nats w2 = 0;
    Nats v1 = 0;
    Nats v2 = 0;
    Nats w_plus = 0;
    Nats w_minus = 0;
    Nats v_plus = 0;
    Nats v_minus = 0;
};

/// Momentum-space entropies after the deformation at one beta.
struct GupEntropies {
    double beta = 0;
    Nats u1 = 0;
    Nats u2 = 0;
    Nats u_plus = 0;
    Nats u_minus = 0;
    // Weighted means of the per-component corrections for ensembles.
    Nats eta1 = 0;
    Nats eta2 = 0;
    std::vector<ComponentEtas> component_etas;
};

/// Densities and entropies of one materialized state. Immutable once built,
/// so gup() and evaluate() may run concurrently.
class Analysis {
   public:
    explicit Analysis(const State &state);

    bool is_mixed() const noexcept { return mixed_; }
    const StandardEntropies &entropies() const noexcept { return entropies_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const ComponentEntropies> components() const noexcept { return components_; }

    /// Throws GupDomainError when a momentum tail beyond the cutoff reaches eps_tail.
    GupEntropies gup(const GupParam &g, double eps_tail = kDefaultTailTolerance) const;

    /// Throws KindError when a mixed kind meets a pure state or vice versa.
    /// `gup` supplies the deformed entropies for the "-gup" kinds.
    CriterionResult evaluate(BoundKind kind, const GupEntropies &gup,
                             double tau = kDefaultVerdictTolerance) const;
    CriterionResult evaluate(BoundKind kind, const GupParam &g = GupParam(0),
                             double eps_tail = kDefaultTailTolerance,
                             double tau = kDefaultVerdictTolerance) const;

   private:
    // Per-component momentum densities (v1m, v2m).
    using ProductMomenta = std::vector<std::pair<Dist1D, Dist1D>>;

    bool mixed_ = false;
    StandardEntropies entropies_;
    std::vector<double> weights_;
    std::vector<ComponentEntropies> components_;
    std::variant<ProductMomenta, Dist2D> momenta_;
};

/// Materializes the descriptor and evaluates one criterion.
CriterionResult evaluate(const StateDescriptor &state, BoundKind kind, const GupParam &g,
                         const AnalysisOptions &opts = {}, double tau = kDefaultVerdictTolerance);

}  // namespace cvgup

#endif  // CVGUP_PIPELINE_H
