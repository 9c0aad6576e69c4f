// Copyright 2026 The Pulseforge Authors
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

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pulseforge/bounds.hpp"
#include "pulseforge/designs.hpp"
#include "pulseforge/graphcolor.hpp"
#include "pulseforge/harmonic.hpp"
#include "pulseforge/json_io.hpp"
#include "pulseforge/netham.hpp"
#include "pulseforge/scheme.hpp"
#include "pulseforge/signs.hpp"

namespace pulseforge::cli {

namespace {

using io::json;

// Full-space checks stop here; larger networks are checked pair by pair.
constexpr long long kFullCheckDimension = netham::kMaxHilbertDimension;

bool fits_full_check(int n, int d) {
    long long dim = 1;
    for (int k = 0; k < n; ++k) {
        dim *= d;
        if (dim > kFullCheckDimension) {
            return false;
        }
    }
    return true;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Run {
    Run(std::vector<std::string> a, std::ostream& o, std::ostream& e) : args(std::move(a)), out(o), err(e) {}

    std::vector<std::string> args;
    std::ostream& out;
    std::ostream& err;
    unsigned long long seed = 0;
    std::string out_path;
    std::string report_path;
    std::string format = "json";
    unsigned long long digest = 0xcbf29ce484222325ULL;
    json outputs = json::object();
    json residuals = json::object();
    json result;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json load(Run& run, const std::string& path) {
    run.digest = fnv1a(slurp(path), run.digest);
    return io::read_file(path);
}

// Writes the artifact to --out, or keeps it for the report when no path is set.
// CSV without --out goes to stdout and the report moves to stderr.
bool emit_artifact(Run& run, const json& doc, const std::optional<std::string>& csv) {
    if (run.format == "csv") {
        if (!csv) {
            throw UsageError("--format csv is not available for this output");
        }
        if (run.out_path.empty()) {
            run.out << *csv;
            return true;
        }
        std::ofstream f(run.out_path);
        if (!f) {
            throw UsageError("cannot write " + run.out_path);
        }
        f << *csv;
        run.outputs["artifact"] = run.out_path;
        return false;
    }
    if (run.out_path.empty()) {
        run.result = doc;
    } else {
        io::write_file(run.out_path, doc);
        run.outputs["artifact"] = run.out_path;
    }
    return false;
}

int finish(Run& run, bool ok, bool report_to_err = false) {
    json report;
    report["command"] = run.args;
    report["seed"] = run.seed;
    std::ostringstream hex;
    hex << std::hex << run.digest;
    report["input_digest"] = hex.str();
    report["outputs"] = run.outputs;
    report["residuals"] = run.residuals;
    report["ok"] = ok;
    report["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - run.start).count();
    if (!run.result.is_null()) {
        report["result"] = run.result;
    }
    if (!run.report_path.empty()) {
        io::write_file(run.report_path, report);
    }
    (report_to_err ? run.err : run.out) << report.dump(2) << '\n';
    return ok ? kOk : kVerificationFailed;
}

netham::PairHamiltonian sub_model(const netham::PairHamiltonian& model, const std::vector<int>& nodes) {
    const int m = model.m();
    netham::PairHamiltonian out;
    out.n = static_cast<int>(nodes.size());
    out.d = model.d;
    out.J = RMatrix::Zero(out.n * m, out.n * m);
    out.r = RVector::Zero(out.n * m);
    for (int a = 0; a < out.n; ++a) {
        const int k = nodes[static_cast<std::size_t>(a)];
        out.r.segment(a * m, m) = model.r.segment(k * m, m);
        for (int b = 0; b < out.n; ++b) {
            const int l = nodes[static_cast<std::size_t>(b)];
            out.J.block(a * m, b * m, m, m) = model.J.block(k * m, l * m, m, m);
        }
    }
    return out;
}

scheme::PulseScheme sub_scheme(const scheme::PulseScheme& sch, const std::vector<int>& nodes) {
    scheme::PulseScheme out = sch;
    out.n = static_cast<int>(nodes.size());
    out.pulses.clear();
    out.bases.clear();
    for (int k : nodes) {
        out.pulses.push_back(sch.pulses[static_cast<std::size_t>(k)]);
        out.bases.push_back(sch.bases[static_cast<std::size_t>(k)]);
    }
    return out;
}

enum class Target { kZero, kInvert };

// Residual ||o * avg - target|| / max(1, ||H||). Every term of a pair model
// lives on at most two nodes and averaging is linear, so for large networks
// checking each node pair separately is equivalent to the full check.
double pulse_residual(Run& run, const netham::PairHamiltonian& model, const scheme::PulseScheme& sch, Target target,
                      double overhead) {
    auto one = [&](const netham::PairHamiltonian& mdl, const scheme::PulseScheme& s) {
        const CMatrix H = netham::assemble(mdl);
        const CMatrix tgt = target == Target::kZero ? CMatrix::Zero(H.rows(), H.cols()) : CMatrix(-H);
        const CMatrix avg = scheme::average_hamiltonian(H, s);
        return (overhead * avg - tgt).norm() / std::max(1.0, H.norm());
    };
    if (fits_full_check(model.n, model.d)) {
        run.residuals["mode"] = "full";
        return one(model, sch);
    }
    run.residuals["mode"] = "pairwise";
    double worst = 0.0;
    for (int k = 0; k < model.n; ++k) {
        for (int l = k + 1; l < model.n; ++l) {
            worst = std::max(worst, one(sub_model(model, {k, l}), sub_scheme(sch, {k, l})));
        }
    }
    return worst;
}

netham::PairHamiltonian model_on_graph(const graphcolor::InteractionGraph& g, int d, unsigned long long seed) {
    auto model = netham::random_model(g.n, d, seed);
    const int m = model.m();
    for (int k = 0; k < g.n; ++k) {
        for (int l = 0; l < g.n; ++l) {
            if (k != l && !g.adjacent(k, l)) {
                model.J.block(k * m, l * m, m, m).setZero();
            }
        }
    }
    return model;
}

std::string signs_csv(const signs::SignTriple& st) {
    designs::IntMatrix all = st.Sx;
    all.insert(all.end(), st.Sy.begin(), st.Sy.end());
    all.insert(all.end(), st.Sz.begin(), st.Sz.end());
    return designs::to_csv(all);
}

void add_common(CLI::App* sub, Run& run, std::optional<unsigned long long>& seed) {
    sub->add_option("--out", run.out_path, "Write the artifact to this file");
    sub->add_option("--report", run.report_path, "Also write the run report to this file");
    sub->add_option("--format", run.format, "Artifact format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", seed, "Seed for the verification model (default: PULSEFORGE_SEED or 0)");
}

int cmd_decouple(Run& run, std::optional<int> n, int d, const std::string& graph_path) {
    scheme::PulseScheme sch;
    netham::PairHamiltonian model;
    if (!graph_path.empty()) {
        const auto g = io::graph_from_json(load(run, graph_path));
        if (n && *n != g.n) {
            throw UsageError("--n disagrees with the graph's vertex count");
        }
        sch = graphcolor::colored_decoupling_scheme(g, d);
        model = model_on_graph(g, d, run.seed);
        run.residuals["colors"] = graphcolor::vertex_coloring(g).count;
    } else {
        if (!n) {
            throw UsageError("decouple needs --n or --graph");
        }
        sch = scheme::decoupling_scheme(*n, d);
        model = netham::random_model(*n, d, run.seed);
    }
    const double residual = pulse_residual(run, model, sch, Target::kZero, 1.0);
    run.residuals["decoupling"] = residual;
    run.residuals["N"] = sch.N;
    const bool ok = residual <= scheme::kSchemeTolerance;
    if (!ok) {
        return finish(run, false);
    }
    const bool csv_on_stdout = emit_artifact(run, io::to_json(sch), designs::to_csv(sch.pulses));
    return finish(run, ok, csv_on_stdout);
}

int cmd_invert(Run& run, int n, std::optional<int> d, bool harmonic_path) {
    if (harmonic_path) {
        const int trunc = d.value_or(3);
        const auto ps = harmonic::fourier_inversion(n);
        const auto net = harmonic::random_network(n, trunc, run.seed);
        const double overhead = n - 1;
        double residual = 0.0;
        if (fits_full_check(n, trunc)) {
            const CMatrix H = harmonic::build_hc(net);
            const auto avg = harmonic::phase_average(net, ps);
            residual = (overhead * avg.hamiltonian + H).norm() / std::max(1.0, H.norm());
            run.residuals["mode"] = "full";
        } else {
            const CMatrix C = net.C.cast<Complex>();
            residual = (overhead * C.cwiseProduct(harmonic::weighted_gram(ps)) + C).norm() / std::max(1.0, C.norm());
            run.residuals["mode"] = "coupling";
        }
        run.residuals["inversion"] = residual;
        run.residuals["overhead"] = overhead;
        const bool ok = residual <= 1e-10;
        if (!ok) {
            return finish(run, false);
        }
        json doc = io::to_json(ps);
        doc["overhead"] = overhead;
        emit_artifact(run, doc, std::nullopt);
        return finish(run, ok);
    }
    if (!d) {
        throw UsageError("invert needs --d (or --harmonic)");
    }
    const auto sch = scheme::inversion_scheme(n, *d);
    const auto model = netham::random_model(n, *d, run.seed);
    const double residual = pulse_residual(run, model, sch, Target::kInvert, sch.target_overhead);
    run.residuals["inversion"] = residual;
    run.residuals["overhead"] = sch.target_overhead;
    const bool ok = residual <= scheme::kSchemeTolerance;
    if (!ok) {
        return finish(run, false);
    }
    const bool csv_on_stdout = emit_artifact(run, io::to_json(sch), designs::to_csv(sch.pulses));
    return finish(run, ok, csv_on_stdout);
}

int cmd_bound(Run& run, const std::string& model_path, bool invert, const std::string& target_path, int trials) {
    const auto model = io::model_from_json(load(run, model_path));
    RMatrix Jt;
    if (invert == !target_path.empty()) {
        throw UsageError("bound needs exactly one of --invert or --target");
    }
    if (invert) {
        Jt = -model.J;
    } else {
        const auto target = io::model_from_json(load(run, target_path));
        if (target.n != model.n || target.d != model.d) {
            throw UsageError("target and model differ in n or d");
        }
        Jt = target.J;
    }
    json doc;
    const auto bound = bounds::tau_min(Jt, model.J, model.m());
    doc["tau_min"] = bound.tau ? json(*bound.tau) : json(nullptr);
    doc["binding_k"] = bound.binding_k;
    doc["lower_bound"] = bound.lower_bound;
    if (invert) {
        doc["inversion_bound"] = bounds::inversion_lower_bound(model.J);
    }
    if (trials > 0) {
        const auto search = bounds::rescaled_search(Jt, model.J, model.m(), trials);
        doc["rescaled_max"] = search.rescaled_max;
        doc["S_argmax"] = io::matrix_to_json(search.S_argmax);
        doc["candidates"] = search.candidates;
    }
    emit_artifact(run, doc, std::nullopt);
    return finish(run, true);
}

int cmd_verify(Run& run, const std::string& model_path, const std::string& scheme_path, const std::string& target,
               std::optional<double> overhead) {
    const auto model = io::model_from_json(load(run, model_path));
    const auto sch = io::scheme_from_json(load(run, scheme_path));
    if (sch.n != model.n) {
        throw UsageError("model and scheme node counts differ");
    }
    for (int dk : sch.dims()) {
        if (dk != model.d) {
            throw UsageError("scheme node dimensions do not match the model");
        }
    }
    const double o = overhead.value_or(sch.target_overhead);
    double residual = 0.0;
    if (target == "zero" || target == "invert") {
        residual = pulse_residual(run, model, sch, target == "zero" ? Target::kZero : Target::kInvert, o);
    } else {
        const auto tgt_model = io::model_from_json(load(run, target));
        if (tgt_model.n != model.n || tgt_model.d != model.d) {
            throw UsageError("target model differs in n or d");
        }
        const CMatrix H = netham::assemble(model);
        const CMatrix T = netham::assemble(tgt_model);
        residual = (o * scheme::average_hamiltonian(H, sch) - T).norm() / std::max(1.0, H.norm());
        run.residuals["mode"] = "full";
    }
    run.residuals["residual"] = residual;
    run.residuals["overhead"] = o;
    return finish(run, residual <= scheme::kSchemeTolerance);
}

int cmd_signs(Run& run, std::optional<int> m, const std::string& oa_path) {
    if (m.has_value() == !oa_path.empty()) {
        throw UsageError("signs needs exactly one of --m or --from-oa");
    }
    const auto st = m ? signs::spread_signs(*m) : signs::oa_to_signs(io::oa_from_json(load(run, oa_path)));
    const auto rep = signs::verify_signs(st);
    run.residuals["sign_checks"] = rep.ok;
    if (!rep.messages.empty()) {
        run.residuals["sign_messages"] = rep.messages;
    }
    bool ok = rep.ok;
    if (ok) {
        const auto sch = signs::signs_to_pulse_scheme(st);
        const auto model = netham::random_model(st.n, 2, run.seed);
        const double residual = pulse_residual(run, model, sch, Target::kZero, 1.0);
        run.residuals["decoupling"] = residual;
        ok = residual <= scheme::kSchemeTolerance;
    }
    if (!ok) {
        return finish(run, false);
    }
    const bool csv_on_stdout = emit_artifact(run, io::to_json(st), signs_csv(st));
    return finish(run, ok, csv_on_stdout);
}

int cmd_design(Run& run, const std::string& kind, int s, int i, int n, int u) {
    json doc;
    std::string csv;
    bool ok = false;
    if (kind == "ds") {
        const auto ds = designs::cyclic_difference_scheme(u, n);
        const auto rep = designs::verify_difference_scheme(ds);
        ok = rep.ok;
        run.residuals["violations"] = rep.violations.size();
        doc = io::to_json(ds);
        csv = designs::to_csv(ds.entries);
    } else {
        const auto oa = kind == "rao-hamming" ? designs::rao_hamming_oa(s, i)
                        : kind == "product"   ? designs::product_oa(n, s)
                                              : designs::smallest_oa_for(n, s);
        const auto rep = designs::verify_oa(oa);
        ok = rep.ok;
        run.residuals["violations"] = rep.violations.size();
        doc = io::to_json(oa);
        csv = designs::to_csv(oa.entries);
    }
    if (!ok) {
        return finish(run, false);
    }
    const bool csv_on_stdout = emit_artifact(run, doc, csv);
    return finish(run, ok, csv_on_stdout);
}

int cmd_gram(Run& run, const std::string& target_path, int d) {
    const RMatrix T = io::matrix_from_json(load(run, target_path), "target");
    const auto report = harmonic::gram_synthesis_report(T);
    bool ok = true;
    if (report.has_upper) {
        const auto net = harmonic::random_network(static_cast<int>(T.rows()), d, run.seed);
        RMatrix off = T;
        off.diagonal().setZero();
        const CMatrix want = net.C.cwiseProduct(off).cast<Complex>();
        const CMatrix got = harmonic::schedule_coupling(net, report.schedule);
        const double residual = (got - want).norm() / std::max(1.0, want.norm());
        run.residuals["schedule"] = residual;
        ok = residual <= 1e-10;
    }
    if (!ok) {
        return finish(run, false);
    }
    emit_artifact(run, io::to_json(report), std::nullopt);
    return finish(run, ok);
}

}  // namespace

unsigned long long fnv1a(const std::string& data, unsigned long long h) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

unsigned long long default_seed() {
    if (const char* env = std::getenv("PULSEFORGE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("PULSEFORGE_SEED is not a non-negative integer");
        }
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Run run(args, out, err);
    CLI::App app{"Pulse-sequence synthesis and verification for pair-interaction networks", "pulseforge"};
    app.require_subcommand(1);
    std::optional<unsigned long long> seed;

    std::optional<int> n;
    std::optional<int> d;
    std::string graph_path;
    auto* decouple = app.add_subcommand("decouple", "Synthesize a decoupling scheme");
    decouple->add_option("--n", n, "Number of nodes")->check(CLI::PositiveNumber);
    decouple->add_option("--d", d, "Node dimension")->required()->check(CLI::Range(2, 8));
    decouple->add_option("--graph", graph_path, "Interaction graph JSON; nodes of one color share pulses");
    add_common(decouple, run, seed);

    int inv_n = 0;
    bool harmonic_path = false;
    auto* invert = app.add_subcommand("invert", "Synthesize a time-reversal scheme");
    invert->add_option("--n", inv_n, "Number of nodes")->required()->check(CLI::Range(2, 64));
    invert->add_option("--d", d, "Node dimension (truncation level with --harmonic, default 3)")
        ->check(CLI::Range(2, 8));
    invert->add_flag("--harmonic", harmonic_path, "Invert a bilinear oscillator network by phase rotations");
    add_common(invert, run, seed);

    std::string model_path;
    std::string target_path;
    bool invert_target = false;
    int trials = 0;
    auto* bound = app.add_subcommand("bound", "Majorization lower bound on the time overhead");
    bound->add_option("--model", model_path, "Given model JSON")->required();
    bound->add_flag("--invert", invert_target, "Target is the negated model");
    bound->add_option("--target", target_path, "Target model JSON");
    bound->add_option("--rescale-search", trials, "Random sign rescalings to try")->check(CLI::NonNegativeNumber);
    add_common(bound, run, seed);

    std::string scheme_path;
    std::string target = "zero";
    std::optional<double> overhead;
    auto* verify = app.add_subcommand("verify", "Check a scheme against a model");
    verify->add_option("--model", model_path, "Model JSON")->required();
    verify->add_option("--scheme", scheme_path, "Scheme JSON")->required();
    verify->add_option("--target", target, "zero, invert or a target model JSON");
    verify->add_option("--overhead", overhead, "Overhead factor (default: the scheme's own)");
    add_common(verify, run, seed);

    std::optional<int> m;
    std::string oa_path;
    auto* sgn = app.add_subcommand("signs", "Qubit sign-matrix decoupling");
    sgn->add_option("--m", m, "Spread over GF(4)^m")->check(CLI::Range(1, 4));
    sgn->add_option("--from-oa", oa_path, "Orthogonal array JSON over 4 symbols");
    add_common(sgn, run, seed);

    std::string kind = "smallest";
    int s = 0;
    int dim_i = 2;
    int rows = 0;
    int u = 0;
    auto* design = app.add_subcommand("design", "Export an orthogonal array or difference scheme");
    design->add_option("--kind", kind, "rao-hamming, product, smallest or ds")
        ->check(CLI::IsMember({"rao-hamming", "product", "smallest", "ds"}));
    design->add_option("--s", s, "Alphabet size");
    design->add_option("--i", dim_i, "Rao-Hamming dimension");
    design->add_option("--n", rows, "Number of rows");
    design->add_option("--u", u, "Cyclic group order for difference schemes");
    add_common(design, run, seed);

    int gram_d = 2;
    auto* gram = app.add_subcommand("gram", "Bounds and schedule for simulating T o C on oscillators");
    gram->add_option("--target", target_path, "Symmetric matrix T as nested JSON rows")->required();
    gram->add_option("--d", gram_d, "Truncation used for the self-check")->check(CLI::Range(2, 8));
    add_common(gram, run, seed);

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        run.seed = seed ? *seed : default_seed();
        for (std::size_t a = 1; a < args.size(); ++a) {
            run.digest = fnv1a(args[a] + '\0', run.digest);
        }
        if (decouple->parsed()) {
            return cmd_decouple(run, n, *d, graph_path);
        }
        if (invert->parsed()) {
            return cmd_invert(run, inv_n, d, harmonic_path);
        }
        if (bound->parsed()) {
            return cmd_bound(run, model_path, invert_target, target_path, trials);
        }
        if (verify->parsed()) {
            return cmd_verify(run, model_path, scheme_path, target, overhead);
        }
        if (sgn->parsed()) {
            return cmd_signs(run, m, oa_path);
        }
        if (design->parsed()) {
            return cmd_design(run, kind, s, dim_i, rows, u);
        }
        return cmd_gram(run, target_path, gram_d);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    }
}

}  // namespace pulseforge::cli
