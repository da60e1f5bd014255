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

#include "cvgup/pipeline.h"

#include <cstddef>
#include <utility>
#include <vector>

#include "cvgup/errors.h"

namespace cvgup {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct ProductDensities {
    Dist1D w1;
    Dist1D w2;
    Dist1D v1;
    Dist1D v2;
};

ProductDensities product_densities(const PureProductState &s) {
    return {density(s.psi1), density(s.psi2), density(to_momentum(s.psi1)), density(to_momentum(s.psi2))};
}

ComponentEntropies component_entropies(const ProductDensities &d) {
    return {shannon(d.w1), shannon(d.w2), shannon(d.v1), shannon(d.v2)};
}

Nats mixed_shannon(std::span<const double> weights, std::span<const Dist1D> parts) {
    return parts.size() == 1 ? shannon(parts[0]) : shannon(mix(weights, parts));
}

}  // namespace

Analysis::Analysis(const State &state) {
    std::visit(Overloaded{
                   [&](const PureProductState &s) {
                       ProductDensities d = product_densities(s);
                       ComponentEntropies c = component_entropies(d);
                       entropies_ = {c.w1, c.w2, c.v1, c.v2,
                                     shannon(product_pm(d.w1, d.w2, PmSign::Plus)),
                                     shannon(product_pm(d.w1, d.w2, PmSign::Minus)),
                                     shannon(product_pm(d.v1, d.v2, PmSign::Plus)),
                                     shannon(product_pm(d.v1, d.v2, PmSign::Minus))};
                       weights_ = {1.0};
                       components_ = {c};
                       momenta_ = ProductMomenta{{std::move(d.v1), std::move(d.v2)}};
                   },
                   [&](const JointState &s) {
                       if (s.coordinates() != Coordinates::X1X2) {
                           throw ParamError("joint states must be sampled in (x1, x2)");
                       }
                       Dist2D pos = density(s.amplitude());
                       Dist2D mom = density(to_momentum(s).amplitude());
                       entropies_ = {shannon(marginal(pos, 0)),
                                     shannon(marginal(pos, 1)),
                                     shannon(marginal(mom, 0)),
                                     shannon(marginal(mom, 1)),
                                     shannon(pushforward_pm(pos, PmSign::Plus)),
                                     shannon(pushforward_pm(pos, PmSign::Minus)),
                                     shannon(pushforward_pm(mom, PmSign::Plus)),
                                     shannon(pushforward_pm(mom, PmSign::Minus))};
                       weights_ = {1.0};
                       components_ = {{entropies_.w1, entropies_.w2, entropies_.v1, entropies_.v2}};
                       momenta_ = std::move(mom);
                   },
                   [&](const MixedEnsemble &e) {
                       mixed_ = true;
                       weights_.assign(e.weights().begin(), e.weights().end());
                       ProductMomenta momenta;
                       std::vector<Dist1D> w1s, w2s, v1s, v2s;
                       for (const auto &component : e.components()) {
                           ProductDensities d = product_densities(component);
                           components_.push_back(component_entropies(d));
                           w1s.push_back(d.w1);
                           w2s.push_back(d.w2);
                           v1s.push_back(d.v1);
                           v2s.push_back(d.v2);
                           momenta.emplace_back(std::move(d.v1), std::move(d.v2));
                       }
                       entropies_ = {mixed_shannon(weights_, w1s),
                                     mixed_shannon(weights_, w2s),
                                     mixed_shannon(weights_, v1s),
                                     mixed_shannon(weights_, v2s),
                                     shannon(ensemble_density(e, Observable::XPlus)),
                                     shannon(ensemble_density(e, Observable::XMinus)),
                                     shannon(ensemble_density(e, Observable::PPlus)),
                                     shannon(ensemble_density(e, Observable::PMinus))};
                       momenta_ = std::move(momenta);
                   },
               },
               state);
}

GupEntropies Analysis::gup(const GupParam &g, double eps_tail) const {
    GupEntropies out;
    out.beta = g.beta();
    if (g.is_standard()) {
        // No deformation: u is v, so reuse the standard entropies bit for bit.
        out.u1 = entropies_.v1;
        out.u2 = entropies_.v2;
        out.u_plus = entropies_.v_plus;
        out.u_minus = entropies_.v_minus;
        out.component_etas.assign(components_.size(), ComponentEtas{});
        return out;
    }
    if (const auto *mom = std::get_if<Dist2D>(&momenta_)) {
        Nats eta1 = eta(marginal(*mom, 0), g, eps_tail);
        Nats eta2 = eta(marginal(*mom, 1), g, eps_tail);
        out.eta1 = eta1;
        out.eta2 = eta2;
        out.component_etas = {{eta1, eta2}};
        out.u1 = entropies_.v1 + eta1;
        out.u2 = entropies_.v2 + eta2;
        out.u_plus = shannon(joint_u_pm(*mom, g, PmSign::Plus, eps_tail));
        out.u_minus = shannon(joint_u_pm(*mom, g, PmSign::Minus, eps_tail));
        return out;
    }

    const auto &factors = std::get<ProductMomenta>(momenta_);
    std::vector<Dist1D> all;
    for (const auto &[v1, v2] : factors) {
        all.push_back(v1);
        all.push_back(v2);
    }
    Axis k_axis = k_axis_for(all, g, eps_tail);
    std::vector<Dist1D> u1s, u2s, plus, minus;
    for (std::size_t m = 0; m < factors.size(); m++) {
        const auto &[v1, v2] = factors[m];
        ComponentEtas etas{eta(v1, g, eps_tail), eta(v2, g, eps_tail)};
        out.component_etas.push_back(etas);
        out.eta1 += weights_[m] * etas.eta1;
        out.eta2 += weights_[m] * etas.eta2;
        u1s.push_back(u_from_v(v1, g, k_axis, eps_tail));
        u2s.push_back(u_from_v(v2, g, k_axis, eps_tail));
        plus.push_back(product_pm(u1s.back(), u2s.back(), PmSign::Plus));
        minus.push_back(product_pm(u1s.back(), u2s.back(), PmSign::Minus));
    }
    if (mixed_) {
        out.u1 = mixed_shannon(weights_, u1s);
        out.u2 = mixed_shannon(weights_, u2s);
    } else {
        out.u1 = entropies_.v1 + out.eta1;
        out.u2 = entropies_.v2 + out.eta2;
    }
    out.u_plus = mixed_shannon(weights_, plus);
    out.u_minus = mixed_shannon(weights_, minus);
    return out;
}

CriterionResult Analysis::evaluate(BoundKind kind, const GupEntropies &gup, double tau) const {
    if (kind.is_mixed() != mixed_) {
        throw KindError(kind.is_mixed() ? "mixed criteria need an ensemble state"
                                        : "pure criteria do not apply to ensemble states");
    }
    Nats v_plus = kind.gup ? gup.u_plus : entropies_.v_plus;
    Nats v_minus = kind.gup ? gup.u_minus : entropies_.v_minus;

    Nats bound = 0;
    switch (kind.family) {
        case BoundFamily::StrongPure: {
            const ComponentEntropies &c = components_[0];
            bound = kind.gup ? gup_strong_pure_bound(c.w1, c.w2, c.v1, c.v2, gup.eta1, gup.eta2)
                             : strong_pure_bound(c.w1, c.w2, c.v1, c.v2);
            break;
        }
        case BoundFamily::WeakPure:
            bound = kind.gup ? gup_weak_pure_bound(gup.eta1, gup.eta2) : weak_pure_bound();
            break;
        case BoundFamily::StrongMixed:
            bound = kind.gup ? gup_mixed_strong_bound(weights_, components_, gup.component_etas)
                             : mixed_strong_bound(weights_, components_);
            break;
        case BoundFamily::WeakMixed:
            bound = kind.gup ? gup_mixed_weak_bound(weights_, gup.component_etas) : mixed_weak_bound();
            break;
    }

    CriterionResult r;
    r.kind = kind;
    r.bound = bound;
    Nats lhs_pm = entropies_.w_plus + v_minus;
    Nats lhs_mp = entropies_.w_minus + v_plus;
    if (bound - lhs_mp > bound - lhs_pm) {
        r.pairing = Pairing::MinusPlus;
        r.lhs = lhs_mp;
    } else {
        r.pairing = Pairing::PlusMinus;
        r.lhs = lhs_pm;
    }
    r.margin = bound - r.lhs;
    r.verdict = verdict_for(r.margin, tau);
    r.delta_h = kind.gup ? gup.u2 - gup.u1 : entropies_.v2 - entropies_.v1;
    r.beta = kind.gup ? gup.beta : 0.0;
    return r;
}

CriterionResult Analysis::evaluate(BoundKind kind, const GupParam &g, double eps_tail, double tau) const {
    if (kind.is_mixed() != mixed_) {
        return evaluate(kind, GupEntropies{}, tau);  // throws KindError
    }
    return evaluate(kind, kind.gup ? gup(g, eps_tail) : gup(GupParam(0)), tau);
}

CriterionResult evaluate(const StateDescriptor &state, BoundKind kind, const GupParam &g,
                         const AnalysisOptions &opts, double tau) {
    return Analysis(materialize(state, opts.grid)).evaluate(kind, g, opts.eps_tail, tau);
}

}  // namespace cvgup
