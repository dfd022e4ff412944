#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <thread>

#include <nlohmann/json.hpp>

#include "dadqc/anticonc.hpp"
#include "dadqc/bounds.hpp"
#include "dadqc/config.hpp"
#include "dadqc/error.hpp"
#include "dadqc/io.hpp"
#include "dadqc/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace dadqc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "experiment config file")->required();
    cmd->add_option("--out-dir", args.out_dir, "output directory");
    cmd->add_option("--seed", args.seed, "override the config seed")
        ->each([&args](const std::string&) { args.seed_set = true; });
    cmd->add_option("--threads", args.threads, "instance-level worker threads");
}

struct Experiment {
    ExperimentConfig cfg;
    RandomSeed seed;
    fs::path out_dir;
    int threads = 1;
};

Experiment open_experiment(const CommonArgs& args) {
    Experiment ex{ExperimentConfig::load(args.config_path), RandomSeed{0},
                  fs::path(args.out_dir), std::max(1, args.threads)};
    ex.seed.value = args.seed_set
                        ? args.seed
                        : static_cast<std::uint64_t>(ex.cfg.get_int("seed", 0));
    fs::create_directories(ex.out_dir);
    return ex;
}

Provenance base_provenance(const Experiment& ex) {
    Provenance p;
    p.add("config_hash", ex.cfg.hash());
    p.add("seed", ex.seed.value);
    p.add("version", std::string(kVersion));
    return p;
}

HardwareGraph build_host_n(const ExperimentConfig& cfg, int n);

HardwareGraph build_host(const ExperimentConfig& cfg) {
    return build_host_n(cfg, static_cast<int>(cfg.get_int("n")));
}

std::uint64_t swap_steps_for(const ExperimentConfig& cfg, const HardwareGraph& host, int d) {
    if (cfg.has("swap_steps") && cfg.get_string("swap_steps") != "auto") {
        return static_cast<std::uint64_t>(cfg.get_int("swap_steps"));
    }
    return default_swap_steps(host, d);
}

MeasurementAngles theta_for(const ExperimentConfig& cfg, int n, RandomSeed seed) {
    const std::string mode = cfg.get_string("theta", "random");
    if (mode == "random") return MeasurementAngles::random(n, seed);
    if (mode == "zero") return MeasurementAngles::zero(n);
    throw ConfigError("key 'theta': expected random or zero", cfg.line_of("theta"));
}

EvolutionConfig evolution_for(const ExperimentConfig& cfg) {
    EvolutionConfig evo;
    evo.steps = static_cast<std::uint64_t>(cfg.get_int("steps", 4096));
    evo.tolerance = cfg.get_double("tolerance", 1e-9);
    evo.adaptive = cfg.get_bool("adaptive", true);
    if (evo.steps < 1) throw ConfigError("key 'steps': must be >= 1", cfg.line_of("steps"));
    return evo;
}

// A resolved physical instance: interaction graph, Ising coefficients, and
// the schedule (solving mu against the instance norms when "mu: auto").
struct ResolvedInstance {
    InteractionGraph graph;
    IsingParams params;
    SigmoidSchedule sched;
    ScheduleIntegrals ints;
    double target_eps = 0;  // 0 when mu was explicit
    FactorSampleInfo sample_info;
};

ResolvedInstance resolve_instance(const Experiment& ex) {
    const auto& cfg = ex.cfg;
    const HardwareGraph host = build_host(cfg);
    const int d = static_cast<int>(cfg.get_int("d"));
    ResolvedInstance out;
    out.graph = sample_d_factor(host, d, derive_seed(ex.seed, 0),
                                swap_steps_for(cfg, host, d), &out.sample_info);

    const std::string ising = cfg.get_string("ising", "graph-state");
    const double A0 = cfg.get_double("A0");
    const double B0 = cfg.get_double("B0");
    const double T = cfg.get_double("T");
    const double delta = cfg.get_double("delta");
    if (!(delta < T))
        throw ConfigError("key 'delta': must satisfy 0 < delta < T", cfg.line_of("delta"));
    const bool mu_auto = cfg.get_string("mu", "auto") == "auto";

    // Scaled-angle targets beta*h, beta*J for the configured Ising layer.
    std::vector<double> scaled_h(out.graph.n, 0.0);
    std::vector<double> scaled_J(out.graph.edges.size(), 0.0);
    if (ising == "graph-state") {
        std::fill(scaled_J.begin(), scaled_J.end(), std::numbers::pi / 4.0);
    } else if (ising == "random-grid") {
        CounterRng rng(derive_seed(ex.seed, 5), 0);
        for (auto& v : scaled_h) v = std::numbers::pi / 8.0 * rng.next_below(8);
        for (auto& v : scaled_J) v = std::numbers::pi / 8.0 * rng.next_below(8);
    } else if (ising == "file") {
        std::ifstream in(cfg.get_string("ising_file"));
        if (!in)
            throw ConfigError("key 'ising_file': cannot open file",
                              cfg.line_of("ising_file"));
        const IsingInstanceFile file = read_ising(in);
        if (file.params.graph.n != out.graph.n)
            throw ConfigError("key 'ising_file': vertex count differs from host config",
                              cfg.line_of("ising_file"));
        out.graph = file.params.graph;
        if (mu_auto) {
            // Fields/couplings are fixed by the file, so no beta coupling:
            // solve mu once against the instance norms.
            const bool exact = out.graph.n <= 12;
            const auto nb = norm_bounds(file.params);
            const double hi = exact ? exact_hi_norm(file.params) : nb.hi_bound;
            const double k_norm =
                exact ? exact_commutator_norm(file.params) : nb.k_bound;
            const double eps = cfg.get_double("target_eps");
            const MuSolution sol = solve_mu(eps, hi, k_norm, A0, B0, T, delta);
            if (sol.unconstrained)
                throw ConfigError("key 'mu': unconstrained (zero Hamiltonian); set mu "
                                  "explicitly",
                                  cfg.line_of("mu"));
            out.sched = SigmoidSchedule::create(A0, B0, T, delta, sol.mu);
            out.target_eps = eps;
        } else {
            out.sched = SigmoidSchedule::create(A0, B0, T, delta, cfg.get_double("mu"));
        }
        out.params = file.params;
        out.ints = integrals(out.sched);
        return out;
    } else if (ising != "zero") {
        throw ConfigError("key 'ising': expected graph-state, random-grid, file, or zero",
                          cfg.line_of("ising"));
    }

    if (mu_auto) {
        const double eps = cfg.get_double("target_eps");
        if (ising == "zero")
            throw ConfigError("key 'mu': auto needs a nonzero Ising layer",
                              cfg.line_of("mu"));
        const CalibrationResult cal =
            calibrate_scaled_angles(out.graph, scaled_h, scaled_J, eps, A0, B0, T, delta);
        out.sched = cal.sched;
        out.params = cal.params;
        out.target_eps = eps;
    } else {
        out.sched = SigmoidSchedule::create(A0, B0, T, delta, cfg.get_double("mu"));
        const double beta = integrals(out.sched).beta;
        std::vector<double> h(scaled_h.size()), J(scaled_J.size());
        double h_cap = 3.15, j_cap = 3.15;
        for (std::size_t i = 0; i < h.size(); ++i) {
            h[i] = scaled_h[i] / beta;
            h_cap = std::max(h_cap, std::abs(h[i]));
        }
        for (std::size_t k = 0; k < J.size(); ++k) {
            J[k] = scaled_J[k] / beta;
            j_cap = std::max(j_cap, std::abs(J[k]));
        }
        out.params = IsingParams::create(out.graph, std::move(h), std::move(J), h_cap, j_cap);
    }
    out.ints = integrals(out.sched);
    return out;
}

json report_to_json(const BoundReport& r) {
    return json{{"check", r.check},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"slack", r.slack()},
                {"instance", r.instance}};
}

// ---------------------------------------------------------------- graph ----

int cmd_graph(const CommonArgs& args) {
    const Experiment ex = open_experiment(args);
    const HardwareGraph host = build_host(ex.cfg);
    const int d = static_cast<int>(ex.cfg.get_int("d"));
    FactorSampleInfo info;
    const InteractionGraph g = sample_d_factor(host, d, derive_seed(ex.seed, 0),
                                               swap_steps_for(ex.cfg, host, d), &info);
    Provenance prov = base_provenance(ex);
    prov.add("host", host.name);
    prov.add("d", static_cast<std::uint64_t>(d));
    prov.add("method", info.method);
    prov.add("swap_steps", info.swap_steps);
    prov.add("rejections", info.rejections);

    const fs::path path = ex.out_dir / "graph.txt";
    std::ofstream os(path);
    write_graph(os, g, prov);
    std::cout << "host " << host.name << " (D=" << host.degree << "), sampled " << d
              << "-factor with " << g.edges.size() << " edges via " << info.method
              << " -> " << path.string() << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- schedule ----

int cmd_schedule(const CommonArgs& args) {
    const Experiment ex = open_experiment(args);
    const ResolvedInstance inst = resolve_instance(ex);
    const auto& sched = inst.sched;
    const ScheduleIntegrals cf = inst.ints;
    const ScheduleIntegrals q = quadrature_integrals(sched);

    auto row = [](const char* name, double closed, double quad) {
        const double denom = std::max(std::abs(closed), 1e-300);
        std::cout << "  " << name << ": closed=" << format_double(closed)
                  << " quadrature=" << format_double(quad)
                  << " rel_diff=" << format_double(std::abs(closed - quad) / denom) << "\n";
    };
    std::cout << "schedule A0=" << sched.A0 << " B0=" << sched.B0 << " T=" << sched.T
              << " delta=" << sched.delta << " mu=" << format_double(sched.mu) << "\n";
    row("eta        ", cf.eta, q.eta);
    row("beta       ", cf.beta, q.beta);
    row("delta_alpha", cf.delta_alpha, q.delta_alpha);
    row("alpha_T    ", cf.alpha_T, q.alpha_T);
    std::cout << "  kappa      : " << format_double(cf.kappa)
              << " (lower bound " << format_double(kappa_lower_bound(sched)) << ")\n";

    const double ln2_half = 0.5 * std::numbers::ln2;
    const double eta_cap = ln2_half * sched.B0 * sched.mu / cf.kappa;
    const double da_cap = ln2_half * sched.A0 * sched.mu / cf.kappa;
    std::cout << "  eta <= (ln2/2) B0 mu / kappa: " << format_double(cf.eta) << " <= "
              << format_double(eta_cap) << "\n";
    std::cout << "  dAlpha <= (ln2/2) A0 mu / kappa: " << format_double(cf.delta_alpha)
              << " <= " << format_double(da_cap) << "\n";

    json out;
    out["mu"] = sched.mu;
    out["kappa"] = cf.kappa;
    out["kappa_lower_bound"] = kappa_lower_bound(sched);
    out["closed_form"] = {{"eta", cf.eta},
                          {"beta", cf.beta},
                          {"delta_alpha", cf.delta_alpha},
                          {"alpha_T", cf.alpha_T}};
    out["quadrature"] = {{"eta", q.eta},
                         {"beta", q.beta},
                         {"delta_alpha", q.delta_alpha},
                         {"alpha_T", q.alpha_T}};
    bool ok = cf.eta <= eta_cap * (1 + 1e-12) && cf.delta_alpha <= da_cap * (1 + 1e-12) &&
              cf.kappa >= kappa_lower_bound(sched) - 1e-12;
    if (inst.target_eps > 0) {
        const double hi = inst.graph.n <= 12 ? exact_hi_norm(inst.params)
                                             : norm_bounds(inst.params).hi_bound;
        const double k_norm = inst.graph.n <= 12
                                  ? exact_commutator_norm(inst.params)
                                  : norm_bounds(inst.params).k_bound;
        const double quarter = inst.target_eps / 4.0;
        const double eta_term = cf.eta * hi;
        const double late_term = k_norm * cf.beta * cf.delta_alpha;
        std::cout << "  solved mu for eps=" << inst.target_eps << ": eta|H_I|="
                  << format_double(eta_term) << " <= " << format_double(quarter)
                  << ", K beta dAlpha=" << format_double(late_term) << " <= "
                  << format_double(quarter) << "\n";
        out["target_eps"] = inst.target_eps;
        out["eta_hi"] = eta_term;
        out["k_beta_dalpha"] = late_term;
        ok = ok && eta_term <= quarter * (1 + 1e-9) && late_term <= quarter * (1 + 1e-9);
    }

    std::ofstream os(ex.out_dir / "schedule_report.json");
    os << base_provenance(ex).line() << "\n" << out.dump(2) << "\n";
    if (!ok) {
        std::cerr << "schedule bound check failed\n";
        return kExitBoundViolation;
    }
    return kExitOk;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const CommonArgs& args) {
    const Experiment ex = open_experiment(args);
    const ResolvedInstance inst = resolve_instance(ex);
    const int n = inst.graph.n;
    if (n > 8)
        throw ConfigError("verify needs n <= 8 (dense operator checks)", ex.cfg.line_of("n"));
    const EvolutionConfig evo = evolution_for(ex.cfg);
    const MeasurementAngles theta = theta_for(ex.cfg, n, derive_seed(ex.seed, 1));
    const std::string tag = inst.graph.host_name + "/seed" + std::to_string(ex.seed.value);

    std::vector<BoundReport> reports = duhamel_check(inst.params, inst.sched, evo, tag);
    for (auto& r : tv_bound_check_dense(inst.params, inst.sched, theta, evo, {}, tag)) {
        reports.push_back(r);
    }

    const double delta_par = ex.cfg.get_double("delta_par", 0.01);
    CounterRng rng(derive_seed(ex.seed, 2), 0);
    std::vector<double> dh(inst.params.h.size()), dJ(inst.params.J.size());
    for (auto& v : dh) v = rng.next_symmetric(delta_par);
    for (auto& v : dJ) v = rng.next_symmetric(delta_par);
    for (auto& r : perturbation_check(inst.params, dh, dJ, inst.ints.beta, tag)) {
        reports.push_back(r);
    }

    const CzReport cz = cz_decomposition_check(inst.graph);
    reports.push_back({"cz-product", cz.product_deviation, 1e-12, tag});
    reports.push_back({"cz-single-edge", cz.single_edge_deviation, 1e-12, tag});

    const CMatrix u_analog = densify_analog(inst.params, inst.sched, evo);
    const CMatrix s_tilde = dense_gx(n, inst.ints.alpha_T) * tilde_u(inst.params, inst.sched, evo);
    reports.push_back(
        {"interaction-picture", spectral_norm(u_analog - s_tilde), 1e-6, tag});

    std::ofstream os(ex.out_dir / "bounds.jsonl");
    os << base_provenance(ex).line() << "\n";
    bool violated = false;
    for (const auto& r : reports) {
        os << report_to_json(r).dump() << "\n";
        const bool bad = r.slack() < -1e-8;
        violated = violated || bad;
        std::cout << (bad ? "[FAIL] " : "[ ok ] ") << r.check
                  << ": lhs=" << format_double(r.lhs) << " rhs=" << format_double(r.rhs)
                  << " slack=" << format_double(r.slack()) << "\n";
    }
    return violated ? kExitBoundViolation : kExitOk;
}

// -------------------------------------------------------------- anticonc ---

int cmd_anticonc(const CommonArgs& args) {
    const Experiment ex = open_experiment(args);
    const auto& cfg = ex.cfg;
    const std::string mode = cfg.get_string("mode", "moments");
    const int d = static_cast<int>(cfg.get_int("d"));
    const int instances = static_cast<int>(cfg.get_int("instances"));

    auto ensemble_for = [&](int n) {
        EnsembleConfig ec;
        ec.host = build_host_n(cfg, n);
        ec.d = d;
        ec.instances = instances;
        ec.seed = ex.seed;
        ec.threads = ex.threads;
        if (cfg.has("fixed_v")) {
            ec.fixed_v.assign(n, cfg.get_double("fixed_v"));
        }
        if (cfg.has("target_s")) {
            const std::string s = cfg.get_string("target_s");
            if (static_cast<int>(s.size()) != n)
                throw ConfigError("key 'target_s': bitstring length != n",
                                  cfg.line_of("target_s"));
            ec.target_strings = {parse_bitstring(s)};
        }
        if (cfg.has("swap_steps") && cfg.get_string("swap_steps") != "auto") {
            ec.swap_steps = static_cast<std::uint64_t>(cfg.get_int("swap_steps"));
        }
        return ec;
    };

    if (mode == "supremacy") {
        if (d < 3)
            throw ConfigError(
                "supremacy mode requires d >= 3: graph states on d <= 2 factors have "
                "bounded treewidth and are classically simulable",
                cfg.line_of("d"));
        const EnsembleConfig ec = ensemble_for(static_cast<int>(cfg.get_int("n")));
        SupremacyOptions opt;
        opt.eps = cfg.get_double("target_eps", 0.2);
        opt.A0 = cfg.get_double("A0");
        opt.B0 = cfg.get_double("B0");
        opt.T = cfg.get_double("T");
        opt.delta = cfg.get_double("delta");
        opt.evolution = evolution_for(cfg);
        const auto records = run_supremacy_ensemble(ec, opt);

        std::ofstream os(ex.out_dir / "supremacy.jsonl");
        os << base_provenance(ex).line() << "\n";
        int passes = 0;
        double worst_tv = 0;
        for (const auto& r : records) {
            passes += r.pass ? 1 : 0;
            worst_tv = std::max(worst_tv, r.tv);
            os << json{{"index", r.index},     {"graph_hash", r.graph_hash},
                       {"tv", r.tv},           {"budget", r.budget},
                       {"mu", r.mu},           {"beta", r.beta},
                       {"hi_norm", r.hi_norm}, {"k_norm", r.k_norm},
                       {"pass", r.pass}}
                      .dump()
               << "\n";
        }
        json summary{{"instances", records.size()},
                     {"passes", passes},
                     {"eps", opt.eps},
                     {"worst_tv", worst_tv}};
        std::ofstream sos(ex.out_dir / "summary.json");
        sos << base_provenance(ex).line() << "\n" << summary.dump(2) << "\n";
        std::cout << "supremacy: " << passes << "/" << records.size()
                  << " instances with TV <= eps/2 (worst TV " << format_double(worst_tv)
                  << ")\n";
        return passes == static_cast<int>(records.size()) ? kExitOk : kExitBoundViolation;
    }
    if (mode != "moments")
        throw ConfigError("key 'mode': expected moments or supremacy", cfg.line_of("mode"));

    std::vector<std::int64_t> n_grid;
    if (cfg.has("n_grid")) {
        n_grid = cfg.get_int_list("n_grid");
    } else {
        n_grid = {cfg.get_int("n")};
    }

    std::ofstream rows_os(ex.out_dir / "moments.jsonl");
    rows_os << base_provenance(ex).line() << "\n";
    std::ofstream csv_os(ex.out_dir / "m2_vs_n.csv");
    csv_os << base_provenance(ex).line() << "\n";
    csv_os << "n,m2_mean,m2_se,mean_p,mean_p_se,pz_fraction,pz_bound\n";
    json summary = json::array();
    for (const auto n_val : n_grid) {
        const int n = static_cast<int>(n_val);
        const EnsembleConfig ec = ensemble_for(n);
        const auto rows = instance_moments(ec);
        const MomentReport rep = summarize(ec, rows);
        for (const auto& r : rows) {
            rows_os << json{{"n", n},
                            {"index", r.index},
                            {"graph_hash", r.graph_hash},
                            {"p", r.p},
                            {"m2", r.m2}}
                           .dump()
                    << "\n";
        }
        csv_os << n << "," << format_double(rep.m2_mean) << "," << format_double(rep.m2_se)
               << "," << format_double(rep.mean_p[0]) << ","
               << format_double(rep.mean_p_se[0]) << "," << format_double(rep.pz_fraction[0])
               << "," << format_double(rep.pz_bound(0)) << "\n";
        summary.push_back(json{{"n", n},
                               {"instances", rep.instances},
                               {"mean_p", rep.mean_p[0]},
                               {"mean_p_se", rep.mean_p_se[0]},
                               {"expected_mean_p", std::ldexp(1.0, -n)},
                               {"m2_mean", rep.m2_mean},
                               {"m2_se", rep.m2_se},
                               {"pz_fraction", rep.pz_fraction[0]},
                               {"pz_fraction_se", rep.pz_fraction_se[0]},
                               {"pz_bound", rep.pz_bound(0)}});
        std::cout << "n=" << n << ": E[p]=" << format_double(rep.mean_p[0]) << " (2^-n="
                  << format_double(std::ldexp(1.0, -n)) << "), E[m2]="
                  << format_double(rep.m2_mean) << " +- " << format_double(rep.m2_se)
                  << ", PZ fraction=" << format_double(rep.pz_fraction[0]) << " >= "
                  << format_double(rep.pz_bound(0)) << "\n";
    }
    std::ofstream sos(ex.out_dir / "summary.json");
    sos << base_provenance(ex).line() << "\n" << summary.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- sample ---

int cmd_sample(const CommonArgs& args) {
    const Experiment ex = open_experiment(args);
    const ResolvedInstance inst = resolve_instance(ex);
    const int n = inst.graph.n;
    const EvolutionConfig evo = evolution_for(ex.cfg);
    const MeasurementAngles theta = theta_for(ex.cfg, n, derive_seed(ex.seed, 1));
    const auto count = static_cast<std::size_t>(ex.cfg.get_int("samples", 1024));

    const Distribution dist = dadqc_run(inst.params, inst.sched, theta, evo);
    const auto samples = sample_bitstrings(dist, count, derive_seed(ex.seed, 4));

    Provenance prov = base_provenance(ex);
    prov.add("host", inst.graph.host_name);
    prov.add("d", static_cast<std::uint64_t>(inst.graph.degree));
    prov.add("mu", inst.sched.mu);
    prov.add("beta", inst.ints.beta);
    prov.add("samples", static_cast<std::uint64_t>(count));

    std::ofstream os(ex.out_dir / "samples.txt");
    write_samples(os, samples, n, prov);
    if (ex.cfg.get_bool("emit_distribution", false)) {
        std::ofstream dos(ex.out_dir / "distribution.csv");
        write_distribution_csv(dos, dist, prov);
    }
    std::cout << "wrote " << count << " samples for n=" << n << " (mu="
              << format_double(inst.sched.mu) << ", beta=" << format_double(inst.ints.beta)
              << ")\n";
    return kExitOk;
}

HardwareGraph build_host_n(const ExperimentConfig& cfg, int n) {
    const std::string host = cfg.get_string("host", "complete");
    if (host == "complete") return build_complete(n);
    if (host == "circulant") {
        const auto offsets64 = cfg.get_int_list("offsets");
        std::vector<int> offsets(offsets64.begin(), offsets64.end());
        return build_circulant(n, offsets);
    }
    throw ConfigError("key 'host': expected complete or circulant", cfg.line_of("host"));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DADQC sampling laboratory: schedules, d-factor ensembles, "
                 "statevector runs, and analytic bound verification"};
    app.require_subcommand(1);

    CommonArgs args;
    int (*handler)(const CommonArgs&) = nullptr;

    auto* graph_cmd = app.add_subcommand("graph", "sample a d-factor of the host graph");
    add_common(graph_cmd, args);
    graph_cmd->callback([&]() { handler = cmd_graph; });

    auto* sched_cmd =
        app.add_subcommand("schedule", "closed-form schedule integrals vs quadrature");
    add_common(sched_cmd, args);
    sched_cmd->callback([&]() { handler = cmd_schedule; });

    auto* verify_cmd =
        app.add_subcommand("verify", "run the analytic bound suite on one instance");
    add_common(verify_cmd, args);
    verify_cmd->callback([&]() { handler = cmd_verify; });

    auto* anti_cmd =
        app.add_subcommand("anticonc", "ensemble moments / supremacy pipeline");
    add_common(anti_cmd, args);
    anti_cmd->callback([&]() { handler = cmd_anticonc; });

    auto* sample_cmd = app.add_subcommand("sample", "end-to-end DADQC bitstring sampling");
    add_common(sample_cmd, args);
    sample_cmd->callback([&]() { handler = cmd_sample; });

    CLI11_PARSE(app, argc, argv);

    try {
        return handler(args);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
