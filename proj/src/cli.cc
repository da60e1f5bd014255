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

#include "cvgup/cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "cvgup/criteria.h"
#include "cvgup/cv_state.h"
#include "cvgup/errors.h"
#include "cvgup/gup.h"
#include "cvgup/pipeline.h"
#include "cvgup/random_states.h"
#include "cvgup/report.h"

namespace cvgup {

namespace {

constexpr std::size_t kMinGridN = std::size_t{1} << 8;
constexpr std::size_t kMaxGridN = std::size_t{1} << 16;
constexpr std::size_t kMinGridN2d = std::size_t{1} << 6;
constexpr double kViolationTolerance = 1e-6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Any failure while reading, validating or sampling the state descriptor.
struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string state_path;
    std::string kind;
    std::string rep = "x";
    std::string beta_grid;
    std::string format;
    std::string out;
    double beta = 0;
    std::size_t grid_n = GridOptions{}.n;
    std::size_t grid_n2d = GridOptions{}.n2d;
    std::optional<double> half_width;
    double eps_tail = kDefaultTailTolerance;
    double tau = kDefaultVerdictTolerance;
    std::uint64_t seed = 7;
    std::size_t trials = 200;
    bool timing = false;
};

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

std::optional<double> parse_double(std::string_view s) {
    double x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
        return std::nullopt;
    }
    return x;
}

RunConfig run_config(const Options &o) {
    RunConfig c;
    c.grid.n = o.grid_n;
    c.grid.n2d = o.grid_n2d;
    c.grid.half_width = o.half_width;
    c.eps_tail = o.eps_tail;
    c.tau = o.tau;
    c.seed = o.seed;
    if (!o.out.empty()) {
        c.out = o.out;
    }
    c.format = o.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    return c;
}

void validate(const Options &o) {
    if (!is_power_of_two(o.grid_n) || o.grid_n < kMinGridN || o.grid_n > kMaxGridN) {
        throw UsageError("--grid-n must be a power of two between 256 and 65536");
    }
    if (!is_power_of_two(o.grid_n2d) || o.grid_n2d < kMinGridN2d || o.grid_n2d > kMax2dPoints) {
        throw UsageError("--grid-n2d must be a power of two between 64 and " + std::to_string(kMax2dPoints));
    }
    if (o.half_width && !(*o.half_width > 0 && std::isfinite(*o.half_width))) {
        throw UsageError("--half-width must be positive");
    }
    if (!(o.eps_tail > 0 && o.eps_tail < 1)) {
        throw UsageError("--eps-tail must lie in (0, 1)");
    }
    if (!(o.tau > 0 && std::isfinite(o.tau))) {
        throw UsageError("--tau must be positive");
    }
    if (!(o.beta >= 0 && std::isfinite(o.beta))) {
        throw UsageError("--beta must be a nonnegative number");
    }
}

BoundKind require_kind(const std::string &name) {
    auto kind = parse_bound_kind(name);
    if (!kind) {
        throw UsageError("unknown criterion kind '" + name + "'");
    }
    return *kind;
}

struct Loaded {
    Json echo;
    State state;
};

Loaded load_state(const Options &o, const RunConfig &c) {
    std::ifstream in(o.state_path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot read state file '" + o.state_path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        StateDescriptor d = parse_descriptor(text);
        return {Json::parse(text), materialize(d, c.grid)};
    } catch (const Error &e) {
        throw LoadError(e.what());
    }
}

Json report_head(std::string_view command, const RunConfig &c) {
    Json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = to_json(c);
    return j;
}

void put_entropies(Json &j, const StandardEntropies &s) {
    j["H_w1"] = s.w1;
    j["H_w2"] = s.w2;
    j["H_v1"] = s.v1;
    j["H_v2"] = s.v2;
    j["H_w_plus"] = s.w_plus;
    j["H_w_minus"] = s.w_minus;
    j["H_v_plus"] = s.v_plus;
    j["H_v_minus"] = s.v_minus;
}

void put_gup_entropies(Json &j, const GupEntropies &g) {
    j["H_u1"] = g.u1;
    j["H_u2"] = g.u2;
    j["H_u_plus"] = g.u_plus;
    j["H_u_minus"] = g.u_minus;
    j["eta1"] = g.eta1;
    j["eta2"] = g.eta2;
}

std::string key_value_csv(const Json &j) {
    std::string s = "quantity,value\n";
    for (const auto &[key, value] : j.items()) {
        s += key + ',' + (value.is_number_float() ? format_number(value.get<double>()) : value.dump()) + '\n';
    }
    return s;
}

class Clock {
   public:
    Clock() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

void add_timing(Json &j, const Options &o, const Clock &clock) {
    if (o.timing) {
        j["timing"] = {{"seconds", clock.seconds()}};
    }
}

struct Output {
    std::string body;
    int code = kExitOk;
    std::string error;
};

Output ok(std::string body) {
    Output o;
    o.body = std::move(body);
    return o;
}

Output cmd_entropy(const Options &o, const RunConfig &c) {
    Clock clock;
    if (o.rep != "x" && o.rep != "p" && o.rep != "k") {
        throw UsageError("--rep must be x, p or k");
    }
    if (o.rep == "k" && o.beta == 0) {
        throw UsageError("the k representation needs --beta > 0");
    }
    Loaded loaded = load_state(o, c);
    Analysis analysis(loaded.state);
    const StandardEntropies &s = analysis.entropies();

    Json ent;
    if (o.rep == "x") {
        ent["H_w1"] = s.w1;
        ent["H_w2"] = s.w2;
        ent["H_w_plus"] = s.w_plus;
        ent["H_w_minus"] = s.w_minus;
    } else if (o.rep == "p") {
        ent["H_v1"] = s.v1;
        ent["H_v2"] = s.v2;
        ent["H_v_plus"] = s.v_plus;
        ent["H_v_minus"] = s.v_minus;
    } else {
        put_gup_entropies(ent, analysis.gup(GupParam(o.beta), o.eps_tail));
    }
    if (c.format == OutputFormat::Csv) {
        return ok(key_value_csv(ent));
    }
    Json j = report_head("entropy", c);
    j["config"]["rep"] = o.rep;
    j["config"]["beta"] = o.beta;
    j["state"] = loaded.echo;
    j["sampling"] = sampling_json(loaded.state);
    j["entropies"] = ent;
    add_timing(j, o, clock);
    return ok(dump_json(j));
}

void check_kind(const Analysis &a, BoundKind kind) {
    if (kind.is_mixed() != a.is_mixed()) {
        throw KindError("criterion '" + to_string(kind) + "' does not apply to this state");
    }
}

Output cmd_criterion(const Options &o, const RunConfig &c) {
    Clock clock;
    BoundKind kind = require_kind(o.kind);
    if (!kind.gup && o.beta != 0) {
        throw UsageError("--beta needs a -gup criterion kind");
    }
    Loaded loaded = load_state(o, c);
    Analysis analysis(loaded.state);
    check_kind(analysis, kind);
    GupEntropies g = analysis.gup(GupParam(kind.gup ? o.beta : 0.0), o.eps_tail);
    CriterionResult r = analysis.evaluate(kind, g, o.tau);

    if (c.format == OutputFormat::Csv) {
        return ok(csv_header() + csv_row(r, g));
    }
    Json j = report_head("criterion", c);
    j["config"]["kind"] = to_string(kind);
    j["config"]["beta"] = o.beta;
    j["state"] = loaded.echo;
    j["sampling"] = sampling_json(loaded.state);
    Json ent;
    put_entropies(ent, analysis.entropies());
    if (kind.gup) {
        put_gup_entropies(ent, g);
    }
    j["entropies"] = ent;
    j["results"] = Json::array({to_json(r)});
    add_timing(j, o, clock);
    return ok(dump_json(j));
}

Output cmd_scan_beta(const Options &o, const RunConfig &c) {
    Clock clock;
    BoundKind kind = require_kind(o.kind);
    if (!kind.gup) {
        throw UsageError("scan-beta needs a -gup criterion kind");
    }
    std::vector<double> betas = parse_beta_grid(o.beta_grid);
    if (betas.empty()) {
        throw UsageError("--beta-grid must look like A:B:N or A:B:N:log");
    }
    Loaded loaded = load_state(o, c);
    const Analysis analysis(loaded.state);
    check_kind(analysis, kind);

    struct Row {
        CriterionResult result;
        GupEntropies gup;
    };
    auto compute = [&](double beta) {
        GupEntropies g = analysis.gup(GupParam(beta), o.eps_tail);
        return Row{analysis.evaluate(kind, g, o.tau), g};
    };

    std::vector<Row> rows;
    std::optional<std::string> failure;
    std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < betas.size() && !failure; start += batch) {
        std::vector<std::future<Row>> pending;
        for (std::size_t i = start; i < std::min(betas.size(), start + batch); i++) {
            pending.push_back(std::async(std::launch::async, compute, betas[i]));
        }
        for (auto &f : pending) {
            try {
                Row row = f.get();
                if (!failure) {
                    rows.push_back(std::move(row));
                }
            } catch (const GupDomainError &e) {
                if (!failure) {
                    failure = e.what();
                }
            }
        }
    }

    Output result;
    result.code = failure ? kExitGupDomain : kExitOk;
    if (c.format == OutputFormat::Csv) {
        result.body = csv_header();
        for (const Row &row : rows) {
            result.body += csv_row(row.result, row.gup);
        }
    } else {
        Json j = report_head("scan-beta", c);
        j["config"]["kind"] = to_string(kind);
        j["config"]["beta_grid"] = o.beta_grid;
        j["state"] = loaded.echo;
        j["sampling"] = sampling_json(loaded.state);
        Json results = Json::array();
        for (const Row &row : rows) {
            Json r = to_json(row.result);
            r["eta1"] = row.gup.eta1;
            r["eta2"] = row.gup.eta2;
            results.push_back(std::move(r));
        }
        j["results"] = std::move(results);
        j["complete"] = !failure;
        add_timing(j, o, clock);
        result.body = dump_json(j);
    }
    if (failure) {
        result.error = *failure;
    }
    return result;
}

Output cmd_epi_check(const Options &o, const RunConfig &c) {
    Clock clock;
    if (o.trials == 0) {
        throw UsageError("--trials must be at least 1");
    }
    EpiCheckSummary s = run_epi_check(o.trials, o.seed, o.grid_n);
    bool passed = s.min_epi_gap >= -kViolationTolerance && s.min_bbm_excess >= -kViolationTolerance;

    Json summary;
    summary["trials"] = s.trials;
    summary["min_epi_gap"] = s.min_epi_gap;
    summary["min_bbm_excess"] = s.min_bbm_excess;
    summary["passed"] = passed;

    Output result;
    result.code = passed ? kExitOk : kExitViolation;
    if (!passed) {
        result.error = "inequality violated beyond tolerance";
    }
    if (c.format == OutputFormat::Csv) {
        result.body = key_value_csv(summary);
        return result;
    }
    Json j = report_head("epi-check", c);
    j["config"]["trials"] = o.trials;
    j["config"]["seed"] = o.seed;
    j["summary"] = summary;
    add_timing(j, o, clock);
    result.body = dump_json(j);
    return result;
}

void add_common_options(CLI::App *sub, Options &o) {
    sub->add_option("--grid-n", o.grid_n, "Samples per 1D axis (power of two, 256..65536)");
    sub->add_option("--grid-n2d", o.grid_n2d, "Samples per axis for joint states (power of two)");
    sub->add_option("--half-width", o.half_width, "Override the position half-width of product grids");
    sub->add_option("--eps-tail", o.eps_tail, "Momentum mass allowed beyond the cutoff");
    sub->add_option("--tau", o.tau, "Margin a verdict of Entangled must exceed");
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--timing", o.timing, "Include wall-clock timing in JSON reports");
}

void write(std::ostream &out, const Options &o, const std::string &body) {
    if (o.out.empty()) {
        out << body;
        out.flush();
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    file << body;
    if (!file) {
        throw Error("cannot write '" + o.out + "'");
    }
}

}  // namespace

std::vector<double> parse_beta_grid(const std::string &text) {
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    while (true) {
        auto colon = rest.find(':');
        parts.push_back(rest.substr(0, colon));
        if (colon == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(colon + 1);
    }
    if (parts.size() != 3 && parts.size() != 4) {
        return {};
    }
    bool log = false;
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            log = true;
        } else if (parts[3] != "linear") {
            return {};
        }
    }
    auto a = parse_double(parts[0]);
    auto b = parse_double(parts[1]);
    std::size_t count = 0;
    auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
    if (!a || !b || ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count == 0 || *a < 0 ||
        *b < 0 || (log && (*a <= 0 || *b <= 0))) {
        return {};
    }
    std::vector<double> betas(count);
    for (std::size_t i = 0; i < count; i++) {
        double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        betas[i] = log ? std::exp(std::log(*a) + t * (std::log(*b) - std::log(*a))) : *a + t * (*b - *a);
    }
    betas.front() = *a;
    if (count > 1) {
        betas.back() = *b;
    }
    return betas;
}

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entropic entanglement criteria for continuous-variable states, with a deformed momentum"};
    app.name("cvgup");
    app.require_subcommand(1);
    Options o;

    CLI::App *entropy = app.add_subcommand("entropy", "Subsystem and sum/difference entropies");
    entropy->add_option("--state", o.state_path, "State descriptor (JSON)")->required();
    entropy->add_option("--rep", o.rep, "x, p or k")->check(CLI::IsMember({"x", "p", "k"}));
    entropy->add_option("--beta", o.beta, "Deformation parameter");

    CLI::App *criterion = app.add_subcommand("criterion", "Evaluate one entanglement criterion");
    criterion->add_option("--state", o.state_path, "State descriptor (JSON)")->required();
    criterion->add_option("--kind", o.kind, "strong-pure, weak-pure, strong-mixed, weak-mixed, optionally -gup")
        ->required();
    criterion->add_option("--beta", o.beta, "Deformation parameter for -gup kinds");

    CLI::App *scan = app.add_subcommand("scan-beta", "Sweep a -gup criterion over beta");
    scan->add_option("--state", o.state_path, "State descriptor (JSON)")->required();
    scan->add_option("--kind", o.kind, "A -gup criterion kind")->required();
    scan->add_option("--beta-grid", o.beta_grid, "A:B:N or A:B:N:log")->required();

    CLI::App *epi = app.add_subcommand("epi-check", "Randomized entropy-power and uncertainty checks");
    epi->add_option("--trials", o.trials, "Number of random trials");
    epi->add_option("--seed", o.seed, "Random seed");

    for (CLI::App *sub : {entropy, criterion, scan, epi}) {
        add_common_options(sub, o);
    }

    std::vector<const char *> argv{"cvgup"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        validate(o);
        if (o.format.empty()) {
            o.format = scan->parsed() ? "csv" : "json";
        }
        RunConfig config = run_config(o);
        Output result;
        if (entropy->parsed()) {
            result = cmd_entropy(o, config);
        } else if (criterion->parsed()) {
            result = cmd_criterion(o, config);
        } else if (scan->parsed()) {
            result = cmd_scan_beta(o, config);
        } else {
            result = cmd_epi_check(o, config);
        }
        write(out, o, result.body);
        if (!result.error.empty()) {
            err << "error: " << result.error << "\n";
        }
        return result.code;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LoadError &e) {
        err << "state error: " << e.what() << "\n";
        return kExitDescriptor;
    } catch (const GupDomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kExitGupDomain;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kExitGupDomain;
    } catch (const KindError &e) {
        err << "kind error: " << e.what() << "\n";
        return kExitKindMismatch;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace cvgup
