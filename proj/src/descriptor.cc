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

#include <cmath>
#include <set>
#include <string>

#include "cvgup/cv_state.h"
#include "cvgup/errors.h"
#include "json.hpp"

namespace cvgup {

namespace {

using json = nlohmann::json;

void check_keys(const json &doc, const std::set<std::string> &allowed) {
    for (const auto &item : doc.items()) {
        if (!allowed.contains(item.key())) {
            throw SchemaError("unexpected key \"" + item.key() + "\" in " + doc.value("type", "document"));
        }
    }
}

double number(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw SchemaError(std::string("missing required key \"") + key + "\"");
    }
    if (!it->is_number()) {
        throw SchemaError(std::string("\"") + key + "\" must be a number");
    }
    return it->get<double>();
}

double number_or(const json &doc, const char *key, double fallback) {
    return doc.contains(key) ? number(doc, key) : fallback;
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw ParamError(std::string(what) + " must be finite");
    }
}

Axis parse_axis(const json &doc) {
    if (!doc.is_object()) {
        throw SchemaError("\"axis\" must be an object with min, max, n");
    }
    check_keys(doc, {"min", "max", "n"});
    double lo = number(doc, "min");
    double hi = number(doc, "max");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() <= 0) {
        throw SchemaError("\"axis.n\" must be a positive integer");
    }
    try {
        return Axis(lo, hi, doc["n"].get<std::size_t>());
    } catch (const AxisError &e) {
        throw SchemaError(std::string("invalid axis: ") + e.what());
    }
}

std::vector<Complex> parse_samples(const json &doc, const char *key, std::size_t expected) {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_array()) {
        throw SchemaError(std::string("\"") + key + "\" must be an array of samples");
    }
    if (it->size() != expected) {
        throw SchemaError(std::string("\"") + key + "\" has " + std::to_string(it->size()) + " samples, expected " +
                          std::to_string(expected));
    }
    std::vector<Complex> out;
    out.reserve(expected);
    for (const auto &s : *it) {
        if (s.is_number()) {
            out.emplace_back(s.get<double>(), 0.0);
        } else if (s.is_array() && s.size() == 2 && s[0].is_number() && s[1].is_number()) {
            out.emplace_back(s[0].get<double>(), s[1].get<double>());
        } else {
            throw SchemaError(std::string("samples of \"") + key + "\" must be numbers or [re, im] pairs");
        }
        if (!std::isfinite(out.back().real()) || !std::isfinite(out.back().imag())) {
            throw ParamError("tabulated samples must be finite");
        }
    }
    return out;
}

StateDescriptor parse_node(const json &doc, bool nested) {
    if (!doc.is_object()) {
        throw SchemaError("state descriptor must be a JSON object");
    }
    auto type_it = doc.find("type");
    if (type_it == doc.end() || !type_it->is_string()) {
        throw SchemaError("state descriptor needs a string \"type\"");
    }
    const std::string type = type_it->get<std::string>();

    if (type == "gaussian_product") {
        check_keys(doc, {"type", "comment", "sigma1", "sigma2", "center1", "center2", "momentum1", "momentum2"});
        GaussianProductSpec s;
        s.sigma1 = number(doc, "sigma1");
        s.sigma2 = number(doc, "sigma2");
        s.center1 = number_or(doc, "center1", 0);
        s.center2 = number_or(doc, "center2", 0);
        s.momentum1 = number_or(doc, "momentum1", 0);
        s.momentum2 = number_or(doc, "momentum2", 0);
        for (double v : {s.sigma1, s.sigma2, s.center1, s.center2, s.momentum1, s.momentum2}) {
            require_finite(v, "Gaussian parameters");
        }
        if (s.sigma1 <= 0 || s.sigma2 <= 0) {
            throw ParamError("Gaussian widths must be positive");
        }
        return {s};
    }
    if (type == "tmsv") {
        check_keys(doc, {"type", "comment", "r"});
        TmsvSpec s{number(doc, "r")};
        require_finite(s.r, "squeezing parameter r");
        return {s};
    }
    if (type == "tabulated") {
        check_keys(doc, {"type", "comment", "axis", "psi1", "psi2", "joint"});
        if (!doc.contains("axis")) {
            throw SchemaError("tabulated state needs an \"axis\"");
        }
        TabulatedSpec s{parse_axis(doc["axis"]), std::nullopt, std::nullopt, std::nullopt};
        bool factors = doc.contains("psi1") || doc.contains("psi2");
        if (factors == doc.contains("joint")) {
            throw SchemaError("tabulated state needs either psi1 and psi2, or joint");
        }
        std::size_t n = s.axis.size();
        if (factors) {
            s.psi1 = parse_samples(doc, "psi1", n);
            s.psi2 = parse_samples(doc, "psi2", n);
        } else {
            s.joint = parse_samples(doc, "joint", n * n);
        }
        return {s};
    }
    if (type == "ensemble") {
        if (nested) {
            throw SchemaError("ensembles cannot be nested");
        }
        check_keys(doc, {"type", "comment", "weights", "components"});
        if (!doc.contains("weights") || !doc["weights"].is_array()) {
            throw SchemaError("ensemble needs a \"weights\" array");
        }
        if (!doc.contains("components") || !doc["components"].is_array()) {
            throw SchemaError("ensemble needs a \"components\" array");
        }
        EnsembleSpec e;
        for (const auto &w : doc["weights"]) {
            if (!w.is_number()) {
                throw SchemaError("ensemble weights must be numbers");
            }
            e.weights.push_back(w.get<double>());
        }
        for (const auto &c : doc["components"]) {
            StateDescriptor d = parse_node(c, true);
            bool product = std::holds_alternative<GaussianProductSpec>(d.value) ||
                           (std::holds_alternative<TabulatedSpec>(d.value) && std::get<TabulatedSpec>(d.value).psi1);
            if (!product) {
                throw SchemaError("ensemble components must be pure product states");
            }
            e.components.push_back(std::move(d));
        }
        if (e.weights.size() != e.components.size()) {
            throw SchemaError("ensemble has " + std::to_string(e.weights.size()) + " weights for " +
                              std::to_string(e.components.size()) + " components");
        }
        try {
            validate_weights(e.weights);
        } catch (const WeightError &err) {
            throw SchemaError(err.what());
        }
        return {std::move(e)};
    }
    throw SchemaError("unknown state type \"" + type + "\"");
}

}  // namespace

StateDescriptor parse_descriptor(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::exception &e) {
        throw SchemaError(std::string("state descriptor is not valid JSON: ") + e.what());
    }
    return parse_node(doc, false);
}

}  // namespace cvgup
