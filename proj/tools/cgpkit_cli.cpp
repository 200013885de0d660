// Copyright 2026 The cgpkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgpkit/additive.hpp"
#include "cgpkit/coherence.hpp"
#include "cgpkit/ensembles.hpp"
#include "cgpkit/json_io.hpp"
#include "cgpkit/verify.hpp"

namespace {

using cgpkit::BasisProjectorSet;
using cgpkit::Channel;
using cgpkit::CoherenceMatrix;
using cgpkit::Index;
using cgpkit::TransferMatrix;
using nlohmann::json;

struct GlobalOptions {
    std::uint64_t seed = 12345;
    std::uint64_t samples = 100000;
    std::string output = "json";
    double tolerance = 1e-8;
};

// One shortest-round-trip formatter for every text output path, so JSON,
// CSV and tables print identical digits. Locale independent ('.' decimal
// point always).
std::string fmt_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return json(v).dump();
}

json json_double(double v) {
    if (std::isinf(v)) {
        return json(v > 0 ? "inf" : "-inf");
    }
    return json(v);
}

std::string join_permutation(const std::vector<Index>& perm) {
    std::ostringstream out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i > 0) {
            out << " ";
        }
        out << perm[i];
    }
    return out.str();
}

// A single measure evaluation destined for one output row.
struct MeasureValue {
    std::string name;
    double value = 0.0;
    bool stochastic = false;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::optional<std::vector<Index>> witness;
};

struct AnalyzeSetup {
    std::string channel_path;
    std::string scm_path;
    std::string basis_path;
    std::vector<std::string> measures = {"trace", "opnorm", "g"};
    bool emit_matrices = false;
};

// Lazily computed per-channel artifacts shared between measures.
struct AnalysisContext {
    Channel channel;
    BasisProjectorSet basis;
    std::optional<CoherenceMatrix> coherence;
    std::optional<TransferMatrix> transfer;
    std::optional<cgpkit::SimplexCorrelationMatrix> scm;

    const CoherenceMatrix& coherence_matrix_cached() {
        if (!coherence) {
            coherence = cgpkit::coherence_matrix(channel, basis);
        }
        return *coherence;
    }

    const TransferMatrix& transfer_matrix_cached() {
        if (!channel.is_unitary_channel()) {
            throw cgpkit::UnitaryOnlyError(
                "measure requires a unitary channel (single Kraus operator)");
        }
        if (!transfer) {
            transfer = cgpkit::transfer_matrix(channel.unitary(), basis);
        }
        return *transfer;
    }
};

MeasureValue evaluate_measure(const std::string& name, AnalysisContext& ctx,
                              const GlobalOptions& global) {
    MeasureValue mv;
    mv.name = name;
    if (name == "trace") {
        mv.value = cgp_trace_norm(ctx.coherence_matrix_cached());
    } else if (name == "opnorm") {
        mv.value = cgp_operator_norm(ctx.coherence_matrix_cached());
    } else if (name == "g") {
        const auto d = static_cast<double>(ctx.channel.dim());
        mv.value = cgp_trace_norm(ctx.coherence_matrix_cached()) / (d * (d + 1.0));
    } else if (name == "tilde") {
        auto r = cgp_permutation_distance(ctx.transfer_matrix_cached());
        mv.value = r.value;
        mv.witness = r.permutation;
    } else if (name == "geometric_min") {
        ctx.transfer_matrix_cached();  // unitary gate
        mv.value = cgpkit::cgp_geometric_min(ctx.channel.unitary(), ctx.basis);
    } else if (name == "geometric_f") {
        if (!ctx.channel.is_unitary_channel()) {
            throw cgpkit::UnitaryOnlyError(
                "measure requires a unitary channel (single Kraus operator)");
        }
        auto est = cgpkit::cgp_geometric_f(ctx.channel, ctx.basis, global.samples, global.seed);
        mv.value = est.value;
        mv.stochastic = true;
        mv.std_error = est.std_error;
        mv.n_samples = est.n_samples;
        mv.seed = est.seed;
    } else if (name == "ensemble") {
        if (!ctx.scm) {
            ctx.scm = cgpkit::scm_haar(ctx.channel.dim());
        }
        mv.value = cgpkit::cgp_ensemble(ctx.coherence_matrix_cached(), *ctx.scm);
    } else if (name == "phi_p") {
        mv.value = cgpkit::phi_p(ctx.transfer_matrix_cached());
    } else if (name == "phi_g") {
        mv.value = cgpkit::phi_g(ctx.transfer_matrix_cached());
    } else if (name == "phi_gtilde") {
        mv.value = cgpkit::phi_g_tilde(ctx.transfer_matrix_cached());
    } else if (name.rfind("phi_alpha:", 0) == 0) {
        double alpha = 0.0;
        try {
            std::size_t used = 0;
            alpha = std::stod(name.substr(10), &used);
            if (used != name.size() - 10) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw cgpkit::SchemaError("unparsable alpha in measure name: " + name);
        }
        mv.value = cgpkit::phi_alpha(ctx.transfer_matrix_cached(), alpha);
    } else {
        throw cgpkit::SchemaError("unknown measure: " + name);
    }
    return mv;
}

void print_measures(const std::vector<MeasureValue>& values, const AnalysisContext& ctx,
                    const AnalyzeSetup& setup, const GlobalOptions& global) {
    if (global.output == "json") {
        json j;
        j["channel_label"] = ctx.channel.label();
        j["dim"] = ctx.channel.dim();
        j["basis"] = ctx.basis.is_computational() ? "computational" : "custom";
        json measures = json::object();
        for (const auto& mv : values) {
            if (mv.stochastic) {
                json rec;
                rec["value"] = json_double(mv.value);
                rec["std_error"] = json_double(mv.std_error);
                rec["n_samples"] = mv.n_samples;
                rec["seed"] = mv.seed;
                measures[mv.name] = std::move(rec);
            } else if (mv.witness) {
                json rec;
                rec["value"] = json_double(mv.value);
                rec["witness_permutation"] = *mv.witness;
                measures[mv.name] = std::move(rec);
            } else {
                measures[mv.name] = json_double(mv.value);
            }
        }
        j["measures"] = std::move(measures);
        if (setup.emit_matrices) {
            json mats = json::object();
            if (ctx.coherence) {
                mats["coherence"] = cgpkit::real_matrix_to_json(ctx.coherence->entries());
            }
            if (ctx.transfer) {
                mats["transfer"] = cgpkit::real_matrix_to_json(ctx.transfer->entries());
            }
            if (ctx.scm) {
                mats["scm"] = cgpkit::real_matrix_to_json(ctx.scm->entries());
            }
            j["matrices"] = std::move(mats);
        }
        std::cout << j.dump(2) << "\n";
    } else if (global.output == "csv") {
        std::cout << "measure,value,std_error,n_samples,seed,witness\n";
        for (const auto& mv : values) {
            std::cout << mv.name << "," << fmt_double(mv.value) << ",";
            if (mv.stochastic) {
                std::cout << fmt_double(mv.std_error) << "," << mv.n_samples << "," << mv.seed;
            } else {
                std::cout << ",,";
            }
            std::cout << ",";
            if (mv.witness) {
                std::cout << join_permutation(*mv.witness);
            }
            std::cout << "\n";
        }
    } else {
        std::printf("%-16s %-24s %s\n", "measure", "value", "detail");
        for (const auto& mv : values) {
            std::string detail;
            if (mv.stochastic) {
                detail = "+/- " + fmt_double(mv.std_error) + " (n=" +
                         std::to_string(mv.n_samples) + ", seed=" + std::to_string(mv.seed) + ")";
            } else if (mv.witness) {
                detail = "witness: " + join_permutation(*mv.witness);
            }
            std::printf("%-16s %-24s %s\n", mv.name.c_str(), fmt_double(mv.value).c_str(),
                        detail.c_str());
        }
    }
}

int run_analyze(const AnalyzeSetup& setup, const GlobalOptions& global) {
    json doc = cgpkit::load_json_file(setup.channel_path);
    Channel channel = cgpkit::channel_from_json(doc, global.tolerance);

    // Basis precedence: --basis flag, then the channel's embedded basis,
    // then computational.
    BasisProjectorSet basis(channel.dim());
    if (!setup.basis_path.empty()) {
        basis = BasisProjectorSet(
            cgpkit::complex_matrix_from_json(cgpkit::load_json_file(setup.basis_path)));
    } else if (channel.preferred_basis()) {
        basis = BasisProjectorSet(*channel.preferred_basis());
    }
    if (basis.dim() != channel.dim()) {
        throw cgpkit::SchemaError("basis dimension does not match channel dimension");
    }

    AnalysisContext ctx{std::move(channel), std::move(basis), {}, {}, {}};
    if (!setup.scm_path.empty()) {
        ctx.scm = cgpkit::scm_from_json(cgpkit::load_json_file(setup.scm_path));
        if (ctx.scm->dim() != ctx.channel.dim()) {
            throw cgpkit::SchemaError("scm dimension does not match channel dimension");
        }
    }

    std::vector<MeasureValue> values;
    values.reserve(setup.measures.size());
    for (const auto& name : setup.measures) {
        values.push_back(evaluate_measure(name, ctx, global));
    }
    print_measures(values, ctx, setup, global);
    return 0;
}

struct ScmSetup {
    std::string kind;
    Index dim = 2;
    double alpha = 0.0;
    bool alpha_set = false;
    std::vector<double> params;
    std::string out_path;
};

int run_scm(const ScmSetup& setup, const GlobalOptions& global) {
    std::optional<cgpkit::SimplexCorrelationMatrix> s;
    cgpkit::ScmKind kind = cgpkit::scm_kind_from_name(setup.kind);
    switch (kind) {
        case cgpkit::ScmKind::haar:
            s = cgpkit::scm_haar(setup.dim);
            break;
        case cgpkit::ScmKind::vertex:
            s = cgpkit::scm_vertex(setup.dim);
            break;
        case cgpkit::ScmKind::perm_invariant:
            if (!setup.alpha_set) {
                throw cgpkit::SchemaError("scm: kind perm_invariant requires --alpha");
            }
            s = cgpkit::scm_perm_invariant(setup.dim, setup.alpha);
            break;
        case cgpkit::ScmKind::dirichlet: {
            std::vector<double> params = setup.params;
            if (params.empty()) {
                params.assign(static_cast<std::size_t>(setup.dim), 1.0);
            }
            s = cgpkit::scm_dirichlet_mc(setup.dim, params, global.samples, global.seed);
            break;
        }
        case cgpkit::ScmKind::empirical:
            throw cgpkit::SchemaError("scm: kind empirical can only be read from a file");
    }
    json j = cgpkit::scm_to_json(*s);
    if (setup.out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        cgpkit::write_json_file(setup.out_path, j);
    }
    return 0;
}

struct VerifySetup {
    std::vector<Index> dims = {2, 3, 4};
    int n_channels = 50;
    std::string report_path;
};

int run_verify(const VerifySetup& setup, const GlobalOptions& global) {
    cgpkit::VerifyOptions options;
    options.dims = setup.dims;
    options.seed = global.seed;
    options.n_channels = setup.n_channels;
    options.n_samples = global.samples;
    json report = cgpkit::verification_report(options);
    if (global.output == "table") {
        for (const auto& check : report.at("checks")) {
            std::printf("%-5s %-42s instances=%-5d max_violation=%s tolerance=%s\n",
                        check.at("pass").get<bool>() ? "PASS" : "FAIL",
                        check.at("name").get<std::string>().c_str(),
                        check.at("instances").get<int>(),
                        fmt_double(check.at("max_violation").get<double>()).c_str(),
                        fmt_double(check.at("tolerance").get<double>()).c_str());
        }
        std::printf("all_pass: %s\n", report.at("all_pass").get<bool>() ? "true" : "false");
    } else if (global.output == "csv") {
        std::cout << "name,instances,max_violation,tolerance,pass\n";
        for (const auto& check : report.at("checks")) {
            std::cout << check.at("name").get<std::string>() << ","
                      << check.at("instances").get<int>() << ","
                      << fmt_double(check.at("max_violation").get<double>()) << ","
                      << fmt_double(check.at("tolerance").get<double>()) << ","
                      << (check.at("pass").get<bool>() ? "true" : "false") << "\n";
        }
    } else {
        std::cout << report.dump(2) << "\n";
    }
    if (!setup.report_path.empty()) {
        cgpkit::write_json_file(setup.report_path, report);
    }
    return report.at("all_pass").get<bool>() ? 0 : 1;
}

struct SweepSetup {
    int points = 101;
    double alpha = 1.0 / 3.0;
    bool output_set = false;
};

int run_qubit_sweep(const SweepSetup& setup, const GlobalOptions& global) {
    if (setup.points < 2) {
        throw cgpkit::ValidationError("qubit-sweep: need at least 2 points");
    }
    if (setup.alpha < 0.25 - 1e-12 || setup.alpha > 0.5 + 1e-12) {
        throw cgpkit::ValidationError("qubit-sweep: alpha must lie in [1/4, 1/2]");
    }
    struct Row {
        double a_sq, trace, tilde, ensemble;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(setup.points));
    cgpkit::SimplexCorrelationMatrix scm =
        cgpkit::scm_perm_invariant(2, 2.0 * setup.alpha - 0.5);
    for (int k = 0; k < setup.points; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(setup.points - 1);
        double a = std::sqrt(t);
        double b = std::sqrt(1.0 - t);
        Row row;
        row.a_sq = t;
        row.trace = 4.0 * t * (1.0 - t);
        row.tilde = 4.0 * std::min(t * t, (1.0 - t) * (1.0 - t));
        row.ensemble = cgpkit::cgp_qubit_symmetric(cgpkit::Complex(a, 0.0),
                                                   cgpkit::Complex(b, 0.0), setup.alpha);

        // Cross-check every row against the matrix pipeline.
        cgpkit::ComplexMatrix u(2, 2);
        u << cgpkit::Complex(a, 0), cgpkit::Complex(-b, 0), cgpkit::Complex(b, 0),
            cgpkit::Complex(a, 0);
        TransferMatrix x = cgpkit::transfer_matrix(u);
        CoherenceMatrix c = cgpkit::coherence_matrix_unitary(x);
        double trace_m = cgp_trace_norm(c);
        double tilde_m = cgp_permutation_distance(x).value;
        double ens_m = cgpkit::cgp_ensemble(c, scm);
        if (std::abs(trace_m - row.trace) > 1e-10 || std::abs(tilde_m - row.tilde) > 1e-10 ||
            std::abs(ens_m - row.ensemble) > 1e-10) {
            throw std::runtime_error("qubit-sweep: closed forms disagree with matrix pipeline");
        }
        rows.push_back(row);
    }

    bool as_json = setup.output_set && global.output == "json";
    if (as_json) {
        json arr = json::array();
        for (const auto& r : rows) {
            json rec;
            rec["a_sq"] = r.a_sq;
            rec["cgp_trace"] = r.trace;
            rec["cgp_tilde"] = r.tilde;
            rec["cgp_ensemble"] = r.ensemble;
            arr.push_back(std::move(rec));
        }
        json j;
        j["alpha"] = setup.alpha;
        j["rows"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "a_sq,cgp_trace,cgp_tilde,cgp_ensemble\n";
        for (const auto& r : rows) {
            std::cout << fmt_double(r.a_sq) << "," << fmt_double(r.trace) << ","
                      << fmt_double(r.tilde) << "," << fmt_double(r.ensemble) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherence generating power toolkit for unital quantum channels"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "base RNG seed for all stochastic work")
        ->capture_default_str();
    app.add_option("--samples", global.samples, "Monte Carlo sample count")
        ->capture_default_str();
    auto* output_opt =
        app.add_option("--output", global.output, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
    app.add_option("--tolerance", global.tolerance,
                   "validation tolerance for channel trace preservation / unitality")
        ->capture_default_str();
    app.fallthrough();

    AnalyzeSetup analyze_setup;
    CLI::App* analyze = app.add_subcommand("analyze", "evaluate measures for a channel file");
    analyze->add_option("--channel", analyze_setup.channel_path, "channel JSON file")
        ->required();
    analyze->add_option("--measures", analyze_setup.measures,
                        "comma separated measure names (trace, opnorm, tilde, geometric_f, "
                        "geometric_min, g, ensemble, phi_p, phi_g, phi_gtilde, phi_alpha:<a>)")
        ->delimiter(',');
    analyze->add_option("--scm", analyze_setup.scm_path,
                        "ensemble JSON file for the ensemble measure (default: haar)");
    analyze->add_option("--basis", analyze_setup.basis_path,
                        "JSON file holding a basis unitary (overrides the channel's basis)");
    analyze->add_flag("--emit-matrices", analyze_setup.emit_matrices,
                      "include coherence/transfer/scm matrices in JSON output");

    ScmSetup scm_setup;
    CLI::App* scm = app.add_subcommand("scm", "construct an ensemble second-moment matrix");
    scm->add_option("--kind", scm_setup.kind,
                    "haar | vertex | perm_invariant | dirichlet")
        ->required();
    scm->add_option("--dim", scm_setup.dim, "dimension")->required();
    auto* alpha_opt = scm->add_option("--alpha", scm_setup.alpha,
                                      "perm_invariant weight in [0, 1/dim]");
    scm->add_option("--params", scm_setup.params,
                    "dirichlet concentration parameters (default: flat)")
        ->delimiter(',');
    scm->add_option("--out", scm_setup.out_path, "write to file instead of stdout");

    VerifySetup verify_setup;
    CLI::App* verify = app.add_subcommand("verify", "run the self-check battery");
    verify->add_option("--dims", verify_setup.dims, "dimensions to exercise")
        ->delimiter(',');
    verify->add_option("--channels", verify_setup.n_channels, "instances per check per dimension")
        ->capture_default_str();
    verify->add_option("--report", verify_setup.report_path, "also write the JSON report here");

    SweepSetup sweep_setup;
    CLI::App* sweep = app.add_subcommand(
        "qubit-sweep", "closed-form qubit measures on a grid of column weights");
    sweep->add_option("--points", sweep_setup.points, "grid resolution")
        ->capture_default_str();
    sweep->add_option("--alpha", sweep_setup.alpha,
                      "symmetric ensemble weight in [1/4, 1/2]")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    scm_setup.alpha_set = alpha_opt->count() > 0;
    sweep_setup.output_set = output_opt->count() > 0;

    try {
        if (analyze->parsed()) {
            return run_analyze(analyze_setup, global);
        }
        if (scm->parsed()) {
            return run_scm(scm_setup, global);
        }
        if (verify->parsed()) {
            return run_verify(verify_setup, global);
        }
        if (sweep->parsed()) {
            return run_qubit_sweep(sweep_setup, global);
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const cgpkit::NotUnitalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cgpkit::UnitaryOnlyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cgpkit::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cgpkit::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
