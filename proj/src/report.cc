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

#include "cvgup/report.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>

#include "cvgup/errors.h"

namespace cvgup {

namespace {

void dump(const Json &j, int depth, std::string &out) {
    auto indent = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto &[key, value] : j.items()) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                indent(depth + 1);
                out += Json(key).dump();
                out += ": ";
                dump(value, depth + 1, out);
            }
            out += "\n";
            indent(depth);
            out += "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); i++) {
                if (i > 0) {
                    out += ",\n";
                }
                indent(depth + 1);
                dump(j[i], depth + 1, out);
            }
            out += "\n";
            indent(depth);
            out += "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string format_number(double x) {
    if (!std::isfinite(x)) {
        throw Error("report value is not finite");
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump_json(const Json &j) {
    std::string out;
    dump(j, 0, out);
    out += "\n";
    return out;
}

Json to_json(const RunConfig &c) {
    Json j;
    j["grid_n"] = c.grid.n;
    j["grid_n2d"] = c.grid.n2d;
    j["half_width"] = c.grid.half_width ? Json(*c.grid.half_width) : Json(nullptr);
    j["eps_tail"] = c.eps_tail;
    j["tau"] = c.tau;
    return j;
}

Json to_json(const CriterionResult &r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["beta"] = r.beta;
    j["pairing"] = to_string(r.pairing);
    j["lhs"] = r.lhs;
    j["bound"] = r.bound;
    j["margin"] = r.margin;
    j["verdict"] = to_string(r.verdict);
    j["delta_h"] = r.delta_h;
    return j;
}

Json to_json(const Axis &a) {
    Json j;
    j["min"] = a.min();
    j["max"] = a.max();
    j["n"] = a.size();
    return j;
}

Json sampling_json(const State &s) {
    Json j;
    if (const auto *p = std::get_if<PureProductState>(&s)) {
        j["kind"] = "product";
        j["axis"] = to_json(p->psi1.axis());
    } else if (const auto *joint = std::get_if<JointState>(&s)) {
        j["kind"] = "joint";
        j["axis"] = to_json(joint->amplitude().axis0());
    } else {
        const auto &e = std::get<MixedEnsemble>(s);
        j["kind"] = "ensemble";
        j["axis"] = to_json(e.components()[0].psi1.axis());
    }
    return j;
}

std::string csv_header() {
    return "beta,lhs,bound,margin,eta1,eta2,verdict\n";
}

std::string csv_row(const CriterionResult &r, const GupEntropies &g) {
    std::string row;
    for (double x : {r.beta, r.lhs, r.bound, r.margin, g.eta1, g.eta2}) {
        row += format_number(x);
        row += ',';
    }
    row += to_string(r.verdict);
    row += '\n';
    return row;
}

}  // namespace cvgup
