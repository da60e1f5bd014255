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

#include <cmath>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "cvgup/errors.h"
#include "test_util.h"

using namespace cvgup;

namespace {

const BoundKind kStrongPure{BoundFamily::StrongPure, false};
const BoundKind kWeakPure{BoundFamily::WeakPure, false};
const BoundKind kStrongMixed{BoundFamily::StrongMixed, false};
const BoundKind kWeakMixed{BoundFamily::WeakMixed, false};

BoundKind with_gup(BoundKind k) {
    k.gup = true;
    return k;
}

Analysis analyze(const std::string &json) {
    return Analysis(materialize(parse_descriptor(json)));
}

std::string tmsv(double r) {
    return R"({"type": "tmsv", "r": )" + std::to_string(r) + "}";
}

const char *kDisplacedEnsemble = R"({"type": "ensemble", "weights": [0.4, 0.6], "components": [
    {"type": "gaussian_product", "sigma1": 1, "sigma2": 1, "center1": -1.5, "center2": 1},
    {"type": "gaussian_product", "sigma1": 0.7, "sigma2": 0.7, "center1": 2, "center2": -0.5}]})";

const char *kSeparableProducts[] = {
    R"({"type": "gaussian_product", "sigma1": 1, "sigma2": 1})",
    R"({"type": "gaussian_product", "sigma1": 0.5, "sigma2": 2, "center1": 1})",
    R"({"type": "gaussian_product", "sigma1": 1.5, "sigma2": 0.8, "momentum1": 1, "momentum2": -0.5})",
};

}  // namespace

TEST(pipeline, tmsv_weak_criterion) {
    Analysis a = analyze(tmsv(0.5));
    CriterionResult r = a.evaluate(kWeakPure);
    ASSERT_NEAR(r.lhs, 1.837877, 1e-6);
    ASSERT_NEAR(r.bound, 2.837877, 1e-6);
    ASSERT_NEAR(r.margin, 1.0, 1e-9);
    ASSERT_EQ(r.verdict, Verdict::Entangled);
    ASSERT_NEAR(a.entropies().w_minus, 0.918939, 1e-6);
    ASSERT_NEAR(a.entropies().v_plus, 0.918939, 1e-6);
    ASSERT_NEAR(r.delta_h, 0, 1e-12);
}

TEST(pipeline, tmsv_detection_threshold) {
    for (double r : {0.01, 0.1, 0.25, 0.5, 1.0}) {
        CriterionResult res = analyze(tmsv(r)).evaluate(kWeakPure);
        ASSERT_EQ(res.verdict, Verdict::Entangled) << r;
        ASSERT_NEAR(res.margin, 2 * r, 1e-9) << r;
    }
    CriterionResult vacuum = analyze(tmsv(0)).evaluate(kWeakPure);
    ASSERT_EQ(vacuum.verdict, Verdict::Inconclusive);
    ASSERT_NEAR(vacuum.margin, 0, 1e-12);
}

TEST(pipeline, product_saturates_the_weak_bound) {
    Analysis a = analyze(kSeparableProducts[0]);
    CriterionResult r = a.evaluate(kWeakPure);
    ASSERT_NEAR(r.lhs, 2.837877, 1e-6);
    ASSERT_NEAR(r.margin, 0, 1e-12);
    ASSERT_EQ(r.verdict, Verdict::Inconclusive);
    ASSERT_NEAR(a.entropies().w1, 1.418939, 1e-6);
}

TEST(pipeline, tmsv_with_deformation) {
    Analysis a = analyze(tmsv(0.5));
    CriterionResult plain = a.evaluate(kWeakPure);
    GupEntropies g = a.gup(GupParam(0.01));
    CriterionResult deformed = a.evaluate(with_gup(kWeakPure), g);
    ASSERT_EQ(deformed.beta, 0.01);
    ASSERT_GT(deformed.bound, 2.837877);
    ASSERT_EQ(deformed.verdict, Verdict::Entangled);
    ASSERT_NEAR(deformed.bound - plain.bound, g.eta1, 1e-15);
    // The momentum side of lhs grows by about the subsystem correction.
    double growth = deformed.lhs - plain.lhs;
    ASSERT_GT(growth, 0);
    ASSERT_NEAR(growth, g.eta1, 0.03 * g.eta1);
    // The narrow sum marginal gains slightly more entropy than the bound, so
    // the margin shrinks by about 1e-4.
    ASSERT_LT(deformed.margin, plain.margin);
    ASSERT_NEAR(deformed.margin, plain.margin, 2e-4);
}

TEST(pipeline, standard_deformation_is_exact) {
    std::vector<std::string> states{tmsv(0.5), kSeparableProducts[1], kDisplacedEnsemble};
    for (const std::string &s : states) {
        Analysis a = analyze(s);
        std::vector<BoundKind> kinds = a.is_mixed() ? std::vector{kStrongMixed, kWeakMixed}
                                                    : std::vector{kStrongPure, kWeakPure};
        for (BoundKind k : kinds) {
            CriterionResult plain = a.evaluate(k);
            CriterionResult zero = a.evaluate(with_gup(k), GupParam(0));
            ASSERT_EQ(plain.lhs, zero.lhs);
            ASSERT_EQ(plain.bound, zero.bound);
            ASSERT_EQ(plain.margin, zero.margin);
            ASSERT_EQ(plain.verdict, zero.verdict);
            ASSERT_EQ(plain.delta_h, zero.delta_h);
        }
    }
}

TEST(pipeline, separable_states_are_never_flagged) {
    for (const char *s : kSeparableProducts) {
        Analysis a = analyze(s);
        for (BoundKind k : {kStrongPure, kWeakPure}) {
            ASSERT_EQ(a.evaluate(k).verdict, Verdict::Inconclusive) << s;
            for (double beta : {1e-4, 1e-3, 1e-2}) {
                CriterionResult r = a.evaluate(with_gup(k), GupParam(beta));
                ASSERT_EQ(r.verdict, Verdict::Inconclusive) << s << " " << beta;
                ASSERT_LE(r.margin, kDefaultVerdictTolerance);
            }
        }
    }
    Analysis e = analyze(kDisplacedEnsemble);
    for (BoundKind k : {kStrongMixed, kWeakMixed}) {
        ASSERT_EQ(e.evaluate(k).verdict, Verdict::Inconclusive);
        for (double beta : {1e-4, 1e-3, 1e-2}) {
            ASSERT_EQ(e.evaluate(with_gup(k), GupParam(beta)).verdict, Verdict::Inconclusive) << beta;
        }
    }
}

TEST(pipeline, bounds_grow_with_beta) {
    std::vector<std::string> states{tmsv(0.25), kSeparableProducts[2], kDisplacedEnsemble};
    for (const std::string &s : states) {
        Analysis a = analyze(s);
        std::vector<BoundKind> kinds = a.is_mixed() ? std::vector{kStrongMixed, kWeakMixed}
                                                    : std::vector{kStrongPure, kWeakPure};
        for (BoundKind k : kinds) {
            double standard = a.evaluate(k).bound;
            double previous = standard;
            for (double beta : {1e-4, 1e-3, 1e-2}) {
                double bound = a.evaluate(with_gup(k), GupParam(beta)).bound;
                ASSERT_GT(bound, standard);
                ASSERT_GE(bound, previous);
                previous = bound;
            }
            GupEntropies tiny = a.gup(GupParam(1e-6));
            double eta = std::max(tiny.eta1, tiny.eta2);
            ASSERT_LT(std::abs(a.evaluate(with_gup(k), tiny).bound - standard), 2 * eta);
        }
    }
}

TEST(pipeline, kind_mismatch) {
    Analysis pure = analyze(kSeparableProducts[0]);
    Analysis mixed = analyze(kDisplacedEnsemble);
    ASSERT_THROW(pure.evaluate(kWeakMixed), KindError);
    ASSERT_THROW(pure.evaluate(with_gup(kStrongMixed), GupParam(0.01)), KindError);
    ASSERT_THROW(mixed.evaluate(kStrongPure), KindError);
    ASSERT_THROW(analyze(tmsv(0.5)).evaluate(kWeakMixed), KindError);
}

TEST(pipeline, tail_failures_propagate) {
    Analysis a = analyze(R"({"type": "gaussian_product", "sigma1": 0.1, "sigma2": 1})");
    ASSERT_THROW(a.evaluate(with_gup(kWeakPure), GupParam(0.5)), GupDomainError);
    ASSERT_THROW(analyze(tmsv(1.0)).gup(GupParam(0.5)), GupDomainError);
}

TEST(pipeline, mixed_state_suite) {
    Analysis e = analyze(kDisplacedEnsemble);
    ASSERT_TRUE(e.is_mixed());
    ASSERT_EQ(e.weights().size(), 2u);

    // Concavity of each sum/difference density against its components.
    State state = materialize(parse_descriptor(kDisplacedEnsemble));
    const auto &ensemble = std::get<MixedEnsemble>(state);
    for (Observable o : {Observable::XPlus, Observable::XMinus, Observable::PPlus, Observable::PMinus}) {
        double average = 0;
        for (std::size_t m = 0; m < ensemble.size(); m++) {
            MixedEnsemble single({1.0}, {ensemble.components()[m]});
            average += ensemble.weights()[m] * shannon(ensemble_density(single, o));
        }
        ASSERT_GE(shannon(ensemble_density(ensemble, o)), average - 1e-9);
    }

    CriterionResult weak = e.evaluate(kWeakMixed);
    ASSERT_GE(weak.lhs, weak_pure_bound() - 1e-5);

    GupEntropies g = e.gup(GupParam(0.01));
    double excess = 0;
    for (std::size_t m = 0; m < 2; m++) {
        const ComponentEtas &c = g.component_etas[m];
        excess += e.weights()[m] * std::log((std::exp(c.eta1) + std::exp(c.eta2)) / 2);
    }
    ASSERT_NEAR(e.evaluate(with_gup(kWeakMixed), g).bound - weak.bound, excess, 1e-12);
    ASSERT_NEAR(e.evaluate(with_gup(kStrongMixed), g).bound - e.evaluate(kStrongMixed).bound, excess, 1e-6);
    ASSERT_NEAR(g.eta1, 0.4 * 0.01 * 0.25 + 0.6 * 0.01 / (4 * 0.49), 1e-5);
}

TEST(pipeline, descriptor_entry_point) {
    CriterionResult r = evaluate(parse_descriptor(tmsv(0.5)), kWeakPure, GupParam(0));
    ASSERT_NEAR(r.margin, 1, 1e-9);
    AnalysisOptions opts;
    opts.grid.n2d = 512;
    ASSERT_NEAR(evaluate(parse_descriptor(tmsv(0.5)), kWeakPure, GupParam(0), opts).margin, 1, 1e-9);
}
