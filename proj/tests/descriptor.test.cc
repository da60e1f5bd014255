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

#include <string>
#include <variant>

#include "gtest/gtest.h"

#include "cvgup/cv_state.h"
#include "cvgup/errors.h"

using namespace cvgup;

TEST(descriptor, gaussian_product) {
    StateDescriptor d = parse_descriptor(
        R"({"type": "gaussian_product", "comment": "displaced", "sigma1": 0.5, "sigma2": 2, "center2": -1,
            "momentum1": 0.25})");
    const auto &g = std::get<GaussianProductSpec>(d.value);
    ASSERT_EQ(g.sigma1, 0.5);
    ASSERT_EQ(g.sigma2, 2);
    ASSERT_EQ(g.center1, 0);
    ASSERT_EQ(g.center2, -1);
    ASSERT_EQ(g.momentum1, 0.25);
    ASSERT_EQ(g.momentum2, 0);
}

TEST(descriptor, tmsv) {
    ASSERT_EQ(std::get<TmsvSpec>(parse_descriptor(R"({"type": "tmsv", "r": 0.75})").value).r, 0.75);
    ASSERT_THROW(parse_descriptor(R"({"type": "tmsv"})"), SchemaError);
    ASSERT_THROW(parse_descriptor(R"({"type": "tmsv", "r": "big"})"), SchemaError);
}

TEST(descriptor, tabulated_joint_and_complex_samples) {
    std::string joint = "[";
    for (int i = 0; i < 16 * 16; i++) {
        joint += i ? ",[1,0.5]" : "[1,0.5]";
    }
    joint += "]";
    StateDescriptor d =
        parse_descriptor(R"({"type": "tabulated", "axis": {"min": -1, "max": 1, "n": 16}, "joint": )" + joint + "}");
    const auto &t = std::get<TabulatedSpec>(d.value);
    ASSERT_TRUE(t.joint.has_value());
    ASSERT_EQ(t.joint->size(), 256u);
    ASSERT_EQ((*t.joint)[7], Complex(1, 0.5));
    ASSERT_FALSE(t.psi1.has_value());
}

TEST(descriptor, ensemble) {
    StateDescriptor d = parse_descriptor(R"({"type": "ensemble", "weights": [0.5, 0.5], "components": [
        {"type": "gaussian_product", "sigma1": 1, "sigma2": 1},
        {"type": "gaussian_product", "sigma1": 2, "sigma2": 1}]})");
    const auto &e = std::get<EnsembleSpec>(d.value);
    ASSERT_EQ(e.weights.size(), 2u);
    ASSERT_EQ(std::get<GaussianProductSpec>(e.components[1].value).sigma1, 2);
}

TEST(descriptor, schema_errors) {
    const char *bad[] = {
        "not json",
        "[1, 2]",
        R"({"sigma1": 1, "sigma2": 1})",
        R"({"type": "squeezed"})",
        R"({"type": "gaussian_product", "sigma1": 1})",
        R"({"type": "gaussian_product", "sigma1": 1, "sigma2": 1, "phase": 0})",
        R"({"type": "tabulated", "axis": {"min": 0, "max": 1, "n": 16}, "psi1": [1]})",
        R"({"type": "tabulated", "axis": {"min": 0, "max": 1, "n": 4}, "joint": []})",
        R"({"type": "tabulated", "axis": {"min": 0, "max": 1, "n": 16}})",
        R"({"type": "ensemble", "weights": [1], "components": [{"type": "tmsv", "r": 1}]})",
        R"({"type": "ensemble", "weights": [0.5, 0.6], "components": [
            {"type": "gaussian_product", "sigma1": 1, "sigma2": 1},
            {"type": "gaussian_product", "sigma1": 1, "sigma2": 1}]})",
        R"({"type": "ensemble", "weights": [1], "components": []})",
        R"({"type": "ensemble", "weights": [1], "components": [
            {"type": "ensemble", "weights": [1], "components": [{"type": "gaussian_product", "sigma1": 1, "sigma2": 1}]}]})",
    };
    for (const char *text : bad) {
        ASSERT_THROW(parse_descriptor(text), SchemaError) << text;
    }
}

TEST(descriptor, parameter_errors) {
    ASSERT_THROW(parse_descriptor(R"({"type": "gaussian_product", "sigma1": 0, "sigma2": 1})"), ParamError);
    ASSERT_THROW(parse_descriptor(R"({"type": "gaussian_product", "sigma1": 1, "sigma2": -2})"), ParamError);
    ASSERT_THROW(parse_descriptor(R"({"type": "tmsv", "r": 1e999})"), std::exception);
}
