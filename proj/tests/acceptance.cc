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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvgup/cli.h"
#include "cvgup/criteria.h"
#include "cvgup/entropy.h"
#include "cvgup/gup.h"
#include "cvgup/pipeline.h"
#include "cvgup/random_states.h"
#include "test_util.h"

using namespace cvgup;
using cvgup::testing::gaussian_entropy;
using cvgup::testing::gaussian_pdf;
using cvgup::testing::sampled;
using cvgup::testing::sampled_gaussian;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const double kLn2PiEValue = 1 + std::log(2 * std::numbers::pi);

Analysis analyze(const std::string &json) {
    return Analysis(materialize(parse_descriptor(json)));
}

BoundKind kind(BoundFamily f, bool gup = false) {
    return {f, gup};
}

Dist1D bimodal(const Axis &axis) {
    return sampled(axis, [](double p) { return 0.5 * gaussian_pdf(p, -1.5, 0.6) + 0.5 * gaussian_pdf(p, 1.5, 0.6); });
}

const char *kEnsemble = R"({"type": "ensemble", "weights": [0.35, 0.65], "components": [
    {"type": "gaussian_product", "sigma1": 1, "sigma2": 1, "center1": -1.5, "center2": 1.5},
    {"type": "gaussian_product", "sigma1": 0.8, "sigma2": 0.8, "center1": 2, "center2": -1}]})";

Outcome gaussian_entropy_oracle() {
    Axis axis = balanced_axis(4096);
    double worst = 0;
    for (double sigma : {0.5, 1.0, 2.0}) {
        worst = std::max(worst, std::abs(shannon(sampled_gaussian(axis, 0, sigma)) - gaussian_entropy(sigma)));
    }
    return {worst <= 1e-6, fmt("max |H - ln(2 pi e s^2)/2| = %.2e (tol 1e-6)", worst)};
}

Outcome bbm() {
    Axis axis = balanced_axis(4096);
    double worst = 0;
    for (double sigma : {0.5, 1.0, 2.0}) {
        double s = bbm_sum(gaussian_wavepacket(axis, sigma, 0, 0));
        worst = std::max({worst, std::abs(s - kLnPiE), std::abs(s - 2.144730) - 5e-7});
    }
    std::mt19937_64 rng(2);
    double min_excess = INFINITY;
    for (int t = 0; t < 100; t++) {
        min_excess = std::min(min_excess, bbm_sum(random_wavefunction(rng, axis)) - kLnPiE);
    }
    return {worst <= 1e-6 && min_excess >= -1e-6,
            fmt("saturation err %.2e (tol 1e-6), min excess over 100 random = %.3e (>= -1e-6)", worst, min_excess)};
}

Outcome epi() {
    Axis axis = balanced_axis(4096);
    std::mt19937_64 rng(3);
    double min_gap = INFINITY;
    for (int t = 0; t < 200; t++) {
        Dist1D a = random_gaussian_mixture(rng, axis);
        Dist1D b = random_gaussian_mixture(rng, axis);
        min_gap = std::min(min_gap, epi_gap(a, b));
    }
    double gaussian = 0;
    for (auto [s1, s2] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{0.7, 1.3}}) {
        gaussian = std::max(gaussian, std::abs(epi_gap(sampled_gaussian(axis, 0.5, s1), sampled_gaussian(axis, -1, s2))));
    }
    return {min_gap >= -1e-6 && gaussian <= 1e-5,
            fmt("min gap over 200 random pairs = %.3e (>= -1e-6), Gaussian |gap| = %.2e (tol 1e-5)", min_gap, gaussian)};
}

Outcome weak_saturation() {
    Analysis a = analyze(R"({"type": "gaussian_product", "sigma1": 1, "sigma2": 1})");
    const StandardEntropies &e = a.entropies();
    double err = std::max(std::abs(e.w_plus + e.v_minus - kLn2PiEValue), std::abs(e.w_minus + e.v_plus - kLn2PiEValue));
    CriterionResult r = a.evaluate(kind(BoundFamily::WeakPure));
    return {err <= 1e-5 && r.verdict == Verdict::Inconclusive,
            fmt("|H[w+-] + H[v-+] - ln(2 pi e)| = %.2e (tol 1e-5), margin %.2e", err, r.margin) + ", " +
                std::string(to_string(r.verdict))};
}

Outcome tmsv_detection() {
    double worst = 0;
    bool all_entangled = true;
    for (double r : {0.25, 0.5, 1.0}) {
        Analysis a = analyze(R"({"type": "tmsv", "r": )" + std::to_string(r) + "}");
        worst = std::max(worst, std::abs(a.entropies().w_minus + a.entropies().v_plus - (kLn2PiEValue - 2 * r)));
        all_entangled = all_entangled && a.evaluate(kind(BoundFamily::WeakPure)).verdict == Verdict::Entangled;
    }
    return {worst <= 1e-4 && all_entangled,
            fmt("max |H[w-] + H[v+] - (ln(2 pi e) - 2r)| = %.2e (tol 1e-4)", worst) +
                (all_entangled ? ", all Entangled" : ", verdict missed")};
}

Outcome eta_expansion() {
    Axis axis = balanced_axis(4096);
    Dist1D v = sampled_gaussian(axis, 0, 1);
    double worst_ratio = 0;
    for (double beta : {1e-3, 1e-2}) {
        double err = std::abs(eta(v, GupParam(beta)) - beta - beta * beta / 2);
        worst_ratio = std::max(worst_ratio, err / (10 * std::pow(beta, 3)));
    }
    return {worst_ratio <= 1, fmt("max |eta - b - b^2/2| / (10 b^3) = %.3f (<= 1)", worst_ratio)};
}

Outcome two_path() {
    Axis axis = balanced_axis(4096);
    GupParam g(1e-2);
    double worst = 0;
    for (const Dist1D &v : {sampled_gaussian(axis, 0, 1), bimodal(axis)}) {
        worst = std::max(worst, std::abs(shannon(u_from_v(v, g)) - shannon(v) - eta(v, g)));
    }
    return {worst < 1e-4, fmt("max |H[u] - H[v] - eta| = %.2e (tol 1e-4)", worst)};
}

Outcome bound_inflation() {
    std::vector<std::string> states{
        R"({"type": "gaussian_product", "sigma1": 1, "sigma2": 1})",
        R"({"type": "gaussian_product", "sigma1": 0.6, "sigma2": 1.5, "center1": 1, "momentum2": -0.5})",
        R"({"type": "tmsv", "r": 0.5})",
        kEnsemble,
    };
    bool ok = true;
    double min_lift = INFINITY;
    double worst_limit = 0;
    for (const std::string &s : states) {
        Analysis a = analyze(s);
        std::vector<BoundFamily> families = a.is_mixed()
                                                ? std::vector{BoundFamily::StrongMixed, BoundFamily::WeakMixed}
                                                : std::vector{BoundFamily::StrongPure, BoundFamily::WeakPure};
        for (BoundFamily f : families) {
            double h = a.evaluate(kind(f)).bound;
            for (double beta : {1e-4, 1e-3, 1e-2}) {
                double hg = a.evaluate(kind(f, true), GupParam(beta)).bound;
                min_lift = std::min(min_lift, hg - h);
                ok = ok && hg > h;
                if (f == BoundFamily::WeakPure || f == BoundFamily::WeakMixed) {
                    ok = ok && hg > kLn2PiEValue;
                }
            }
            GupEntropies tiny = a.gup(GupParam(1e-6));
            double ratio = std::abs(a.evaluate(kind(f, true), tiny).bound - h) / (2 * std::max(tiny.eta1, tiny.eta2));
            worst_limit = std::max(worst_limit, ratio);
            ok = ok && ratio < 1;
        }
    }
    return {ok, fmt("min lift h_GUP - h = %.3e (> 0), max |h_GUP(1e-6) - h| / (2 eta) = %.3f (< 1)", min_lift,
                    worst_limit)};
}

Outcome minimization() {
    auto g = [](double d) { return std::exp(0.02 + 2 * d) + std::exp(0.06 - 2 * d); };
    cvgup::testing::Minimum m = cvgup::testing::golden_section(g, -1, 1);
    double total = std::exp(0.02) + std::exp(0.06) + m.value;
    double expected = std::pow(std::exp(0.01) + std::exp(0.03), 2);
    DeltaHMinimum lib = minimize_delta_h(0.01, 0.03);
    bool ok = std::abs(m.x - 0.01) <= 1e-6 && std::abs(total - expected) <= 1e-9 &&
              std::abs(lib.argmin - m.x) <= 1e-6 && std::abs(lib.min_value - total) <= 1e-9;
    return {ok, fmt("golden-section argmin %.9f, min total %.12f vs (e^0.01 + e^0.03)^2 = %.12f", m.x, total,
                    expected)};
}

Outcome mixed_suite() {
    State state = materialize(parse_descriptor(kEnsemble));
    const auto &e = std::get<MixedEnsemble>(state);
    double worst_concavity = INFINITY;
    for (Observable o : {Observable::XPlus, Observable::XMinus, Observable::PPlus, Observable::PMinus}) {
        double average = 0;
        for (std::size_t m = 0; m < e.size(); m++) {
            average += e.weights()[m] * shannon(ensemble_density(MixedEnsemble({1.0}, {e.components()[m]}), o));
        }
        worst_concavity = std::min(worst_concavity, shannon(ensemble_density(e, o)) - average);
    }
    Analysis a(state);
    CriterionResult weak = a.evaluate(kind(BoundFamily::WeakMixed));
    GupEntropies g = a.gup(GupParam(1e-2));
    double expected = 0;
    for (std::size_t m = 0; m < e.size(); m++) {
        const ComponentEtas &c = g.component_etas[m];
        expected += e.weights()[m] * std::log((std::exp(c.eta1) + std::exp(c.eta2)) / 2);
    }
    double strong_excess =
        a.evaluate(kind(BoundFamily::StrongMixed, true), g).bound - a.evaluate(kind(BoundFamily::StrongMixed)).bound;
    double weak_excess = a.evaluate(kind(BoundFamily::WeakMixed, true), g).bound - weak.bound;
    double err = std::max(std::abs(strong_excess - expected), std::abs(weak_excess - expected));
    bool ok = worst_concavity >= -1e-9 && weak.lhs >= kLn2PiEValue - 1e-5 && err <= 1e-6 &&
              weak.verdict == Verdict::Inconclusive;
    return {ok, fmt("concavity slack %.3e (>= -1e-9), weak lhs - ln(2 pi e) = %.3e (>= -1e-5), excess err %.2e "
                    "(tol 1e-6)",
                    worst_concavity, weak.lhs - kLn2PiEValue, err)};
}

Outcome reflection() {
    Axis axis = balanced_axis(4096);
    std::mt19937_64 rng(11);
    double worst = 0;
    for (int t = 0; t < 20; t++) {
        Dist1D d = random_gaussian_mixture(rng, axis);
        worst = std::max(worst, std::abs(shannon(reflect(d)) - shannon(d)));
    }
    Dist1D skewed = sampled(axis, [](double x) { return 0.8 * gaussian_pdf(x, 2, 0.5) + 0.2 * gaussian_pdf(x, -1, 1.5); });
    worst = std::max(worst, std::abs(shannon(reflect(skewed)) - shannon(skewed)));
    return {worst < 1e-10, fmt("max |H[w(-x)] - H[w(x)]| = %.2e (tol 1e-10)", worst)};
}

struct Run {
    int code;
    std::string out;
};

Run cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str()};
}

std::string write_state(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("cvgup_acceptance_" + name);
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

Outcome cli_contracts() {
    std::string tmsv = write_state("tmsv.json", R"({"type": "tmsv", "r": 0.5})");
    std::string product = write_state("product.json", R"({"type": "gaussian_product", "sigma1": 1, "sigma2": 1})");
    std::string ensemble = write_state("ensemble.json", kEnsemble);
    std::string narrow = write_state("narrow.json", R"({"type": "gaussian_product", "sigma1": 0.1, "sigma2": 1})");
    std::string broken = write_state("broken.json", R"({"type": "gaussian_product"})");

    std::vector<std::string> crit{"criterion", "--state", tmsv, "--kind", "strong-pure-gup", "--beta", "0.01"};
    std::vector<std::string> epi{"epi-check", "--trials", "20", "--seed", "7"};
    bool identical = cli(crit).out == cli(crit).out && cli(epi).out == cli(epi).out;

    bool sweeps_match = true;
    const std::pair<std::string, std::string> cases[] = {
        {product, "weak-pure"}, {tmsv, "strong-pure"}, {tmsv, "weak-pure"}, {ensemble, "strong-mixed"},
        {ensemble, "weak-mixed"}};
    for (const auto &[state, k] : cases) {
        Run sweep = cli({"scan-beta", "--state", state, "--kind", k + "-gup", "--beta-grid", "0:0:1"});
        Run standard = cli({"criterion", "--state", state, "--kind", k, "--format", "csv"});
        sweeps_match = sweeps_match && sweep.code == 0 && sweep.out == standard.out;
    }

    bool codes = cli({"criterion", "--state", product, "--kind", "weak-pure"}).code == kExitOk &&
                 cli({"criterion", "--state", narrow, "--kind", "weak-pure-gup", "--beta", "0.5"}).code ==
                     kExitGupDomain &&
                 cli({"criterion", "--state", broken, "--kind", "weak-pure"}).code == kExitDescriptor &&
                 cli({"criterion", "--state", ensemble, "--kind", "strong-pure"}).code == kExitKindMismatch &&
                 cli({"entropy", "--state", product, "--rep", "k"}).code == kExitUsage &&
                 cli({"epi-check", "--trials", "0"}).code == kExitUsage;
    return {identical && sweeps_match && codes,
            std::string("byte-identical reruns: ") + (identical ? "yes" : "no") +
                ", beta = 0 sweeps equal undeformed output: " + (sweeps_match ? "yes" : "no") +
                ", exit codes 0/2/3/4/64: " + (codes ? "observed" : "mismatch")};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> check;
    };
    const Criterion criteria[] = {
        {"Gaussian entropy oracle", gaussian_entropy_oracle},
        {"Entropic uncertainty saturation", bbm},
        {"Entropy power inequality", epi},
        {"Weak criterion saturation", weak_saturation},
        {"Two-mode squeezed vacuum detection", tmsv_detection},
        {"Correction small-beta expansion", eta_expansion},
        {"Deformed entropy two-path identity", two_path},
        {"Bound inflation", bound_inflation},
        {"Minimization check", minimization},
        {"Mixed-state suite", mixed_suite},
        {"Reflection invariance", reflection},
        {"CLI determinism and contracts", cli_contracts},
    };
    int failures = 0;
    int index = 1;
    for (const Criterion &c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - 1 - failures, index - 1);
    return failures == 0 ? 0 : 1;
}
