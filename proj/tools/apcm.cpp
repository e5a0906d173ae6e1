// Command-line front end. Exit codes: 0 success, 1 data error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "apcm/apcm.hpp"
#include "apcm/datagen.hpp"
#include "apcm/fcm.hpp"
#include "apcm/pcm.hpp"
#include "apcm/report.hpp"
#include "apcm/theory.hpp"

using namespace apcm;

namespace {

constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kGenerators{"experiment1", "experiment2", "experiment3", "fig4"};

struct Source {
    std::string input;
    std::string gen;
    std::string label_col;
    std::string header = "auto";
};

struct Params {
    std::string algorithm = "apcm";
    std::size_t m_ini = 0;
    double alpha = 1.0;
    double K = 1.0;
    double q = 2.0;
    double tol = 1e-6;
    std::size_t max_iter = 300;
    std::uint64_t seed = 42;
};

void add_source(CLI::App* cmd, Source& src) {
    auto* input = cmd->add_option("--input", src.input, "CSV file of points");
    auto* gen = cmd->add_option("--gen", src.gen, "Built-in synthetic data set")->check(CLI::IsMember(kGenerators));
    input->excludes(gen);
    cmd->add_option("--label-col", src.label_col, "Class column (header name or \"last\") used for scoring");
    cmd->add_option("--header", src.header, "Whether the CSV has a header row")
        ->check(CLI::IsMember({"auto", "yes", "no"}))
        ->capture_default_str();
}

void add_seed(CLI::App* cmd, Params& p) {
    cmd->add_option("--seed", p.seed, "Seed for initialization and data generation")->capture_default_str();
}

void add_fcm_params(CLI::App* cmd, Params& p) {
    cmd->add_option("--q", p.q, "FCM fuzzifier (initialization)")->capture_default_str()->check(
        CLI::PositiveNumber);
    add_seed(cmd, p);
}

DataSet load(const Source& src, std::uint64_t seed) {
    if (src.input.empty() == src.gen.empty()) throw UsageError("exactly one of --input or --gen is required");
    DataSet data;
    if (!src.gen.empty()) {
        data = generate_named(src.gen, seed);
        if (!src.label_col.empty()) throw UsageError("--label-col applies to --input only");
    } else {
        const HeaderMode mode =
            src.header == "yes" ? HeaderMode::present : src.header == "no" ? HeaderMode::absent : HeaderMode::detect;
        std::optional<std::string> label;
        if (!src.label_col.empty()) label = src.label_col;
        data = load_csv(src.input, mode, label);
    }
    validate(data);
    return data;
}

FcmOptions fcm_options(const Params& p) {
    FcmOptions f;
    f.q = p.q;
    f.seed = p.seed;
    return f;
}

ApcmOptions apcm_options(const Params& p, double alpha) {
    ApcmOptions o;
    o.alpha = alpha;
    o.fcm = fcm_options(p);
    o.tol = p.tol;
    o.max_iter = p.max_iter;
    return o;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    return out;
}

// ---- run -------------------------------------------------------------------

struct RunArgs {
    Source src;
    Params p;
    std::string output;
    std::string labels_out;
    CLI::Option* alpha = nullptr;
    CLI::Option* K = nullptr;
};

int cmd_run(const RunArgs& a) {
    const Algorithm alg = algorithm_from_string(a.p.algorithm);
    if (a.alpha->count() > 0 && alg != Algorithm::apcm) throw UsageError("--alpha applies to apcm only");
    if (a.K->count() > 0 && alg != Algorithm::pcm) throw UsageError("--K applies to pcm only");
    const DataSet data = load(a.src, a.p.seed);
    if (a.p.m_ini > data.size()) throw UsageError("--m-ini exceeds the number of points");

    ClusteringReport report;
    switch (alg) {
        case Algorithm::fcm: {
            FcmOptions f = fcm_options(a.p);
            f.tol = a.p.tol;
            f.max_iter = a.p.max_iter;
            report = fcm_cluster(data, a.p.m_ini, f);
            break;
        }
        case Algorithm::pcm: {
            PcmOptions o;
            o.K = a.p.K;
            o.fcm = fcm_options(a.p);
            o.tol = a.p.tol;
            o.max_iter = a.p.max_iter;
            report = pcm_run(data, a.p.m_ini, o);
            break;
        }
        case Algorithm::apcm:
            report = apcm_run(data, a.p.m_ini, apcm_options(a.p, a.p.alpha));
            break;
    }

    std::cout << summary_header() << '\n' << summary_line(report) << '\n';
    if (!a.output.empty()) write_report(a.output, report);
    if (!a.labels_out.empty()) write_labels_csv(std::filesystem::path(a.labels_out), report.labels);
    return kOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
    Source src;
    Params p;
    std::vector<std::size_t> m_ini{5};
    std::vector<double> alpha{1.0};
    std::string output;
};

int cmd_sweep(const SweepArgs& a) {
    if (a.p.algorithm != "apcm") throw UsageError("sweep supports --algorithm apcm only");
    const DataSet data = load(a.src, a.p.seed);
    for (std::size_t m : a.m_ini) {
        if (m == 0 || m > data.size()) throw UsageError("--m-ini values must lie in [1, N]");
    }

    std::ofstream file;
    if (!a.output.empty()) file = open_out(a.output);
    std::ostream& out = a.output.empty() ? std::cout : file;
    out << "m_ini,alpha,m_final\n";
    for (std::size_t m : a.m_ini) {
        // One FCM initialization per m_ini, shared across the alpha grid.
        const FcmResult init = fcm_run(data, m, fcm_options(a.p));
        for (double alpha : a.alpha) {
            const auto r = apcm_run(data, init, apcm_options(a.p, alpha));
            out << m << ',' << format_real(alpha) << ',' << r.m_final << '\n';
        }
    }
    return kOk;
}

// ---- landscape -------------------------------------------------------------

struct LandscapeArgs {
    Source src;
    Params p;
    std::size_t points = 2401;
    std::string output;
};

int cmd_landscape(const LandscapeArgs& a) {
    const DataSet data = load(a.src, a.p.seed);
    if (data.dim() != 1) throw DataError("landscape needs one-dimensional data, got " + std::to_string(data.dim()));
    if (a.p.m_ini > data.size()) throw UsageError("--m-ini exceeds the number of points");

    const double eta_hat = initial_eta_hat(data, a.p.m_ini, fcm_options(a.p));
    const auto box = bounding_box(data.points);
    const double pad = 0.1 * (box.hi[0] - box.lo[0]);
    const auto grid = linear_grid(box.lo[0] - pad, box.hi[0] + pad, a.points);
    const auto cost = cost_landscape_1d(data, eta_hat, a.p.alpha, grid);
    const auto minima = find_local_minima(grid, cost);

    if (!a.output.empty()) {
        auto out = open_out(a.output);
        out << "theta,J\n";
        for (std::size_t g = 0; g < grid.size(); ++g) out << format_real(grid[g]) << ',' << format_real(cost[g]) << '\n';
    }
    std::printf("eta_hat %.6g alpha %g minima %zu:", eta_hat, a.p.alpha, minima.size());
    for (double m : minima) std::printf(" %.4g", m);
    std::printf("\n");
    return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    int prop = 1;
    std::size_t trials = 0;  // 0: per-property default
    double sigma = 1.0;
    double gamma = 2.0;
    double alpha = 1.0;
    std::uint64_t seed = 42;
};

bool verify_deviation_bounds(const VerifyArgs& a, std::size_t trials) {
    std::mt19937_64 rng(a.seed);
    std::exponential_distribution<double> value(1.0);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<double> dev(1 + rng() % 50);
        for (double& v : dev) v = value(rng);
        failures += check_deviation_bounds(dev).holds ? 0 : 1;
    }
    std::printf("prop 1: %zu random deviation sets, %zu violations\n", trials, failures);
    return failures == 0;
}

bool verify_prop2(const VerifyArgs& a, std::size_t trials) {
    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_real_distribution<double> eta(0.2, 5.0);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    for (std::size_t t = 0; t < trials;) {
        const std::vector<double> t1{coord(rng), coord(rng)};
        const std::vector<double> t2{coord(rng), coord(rng)};
        const double e1 = eta(rng);
        const double e2 = eta(rng);
        if (std::max(e1, e2) / std::min(e1, e2) < 1.05) continue;
        ++t;
        const Locus l = locus_sphere(t1, t2, e1, e2);
        for (int k = 0; k < 16; ++k) {
            std::vector<double> dir{normal(rng), normal(rng)};
            const double n = std::hypot(dir[0], dir[1]);
            dir[0] /= n;
            dir[1] /= n;
            const double found = boundary_along_ray(l.sphere.center, dir, 3.0 * l.sphere.radius, t1, t2, e1, e2);
            worst = std::max(worst, std::fabs(found - l.sphere.radius));
        }
    }
    std::printf("prop 2: %zu configurations, max boundary error %.3g\n", trials, worst);
    return worst <= 1e-9;
}

bool verify_prop34(const VerifyArgs& a) {
    const auto trace = empirical_fixed_point(a.sigma, a.gamma, 100000, 10, a.seed);
    const double expected = expected_contraction(a.sigma, a.gamma);
    const auto& last = trace.trajectory.back();
    double norm = 0.0;
    for (double v : last) norm += v * v;
    std::printf("prop 3-4: contraction %.4f expected %.4f, |theta| after %zu steps %.3g\n", trace.contraction_est,
                expected, trace.trajectory.size() - 1, std::sqrt(norm));
    return std::fabs(trace.contraction_est - expected) <= 0.05 * expected;
}

bool verify_prop5(const VerifyArgs& a, std::size_t trials) {
    std::size_t merged = 0;
    std::size_t violations = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto run = single_gaussian_run(500, 2, a.alpha, a.seed + t);
        merged += run.report.m_final == 1 ? 1 : 0;
        violations += run.audit.violations;
    }
    std::printf("prop 5: %zu/%zu single-Gaussian runs end with one cluster\n", merged, trials);
    return merged == trials && violations == 0;
}

int cmd_verify(const VerifyArgs& a) {
    bool pass = false;
    switch (a.prop) {
        case 1: pass = verify_deviation_bounds(a, a.trials ? a.trials : 1000); break;
        case 2: pass = verify_prop2(a, a.trials ? a.trials : 100); break;
        case 34: pass = verify_prop34(a); break;
        case 5: pass = verify_prop5(a, a.trials ? a.trials : 10); break;
        default: throw UsageError("--prop must be 1, 2, 34 or 5");
    }
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    return kOk;
}

// ---- gen -------------------------------------------------------------------

int cmd_gen(const std::string& name, std::uint64_t seed, const std::string& output) {
    const DataSet data = generate_named(name, seed);
    if (output.empty()) {
        write_csv(std::cout, data);
    } else {
        write_csv(std::filesystem::path(output), data);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy, possibilistic and adaptive possibilistic c-means clustering"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Cluster one data set and report the result");
    add_source(run_cmd, run.src);
    run_cmd->add_option("--algorithm", run.p.algorithm)->check(CLI::IsMember({"fcm", "pcm", "apcm"}))->capture_default_str();
    run_cmd->add_option("--m-ini", run.p.m_ini, "Initial number of clusters; for apcm, 3-4 times the expected count")
        ->required()
        ->check(CLI::PositiveNumber);
    run.alpha = run_cmd->add_option("--alpha", run.p.alpha, "apcm scale factor; values around 1 to 3 usually suffice")
                    ->capture_default_str()
                    ->check(CLI::PositiveNumber);
    run.K = run_cmd->add_option("--K", run.p.K, "pcm scale multiplier")->capture_default_str()->check(CLI::PositiveNumber);
    run_cmd->add_option("--tol", run.p.tol, "Stop when no representative moves this far")->capture_default_str();
    run_cmd->add_option("--max-iter", run.p.max_iter)->capture_default_str();
    add_fcm_params(run_cmd, run.p);
    run_cmd->add_option("--output", run.output, "JSON report path");
    run_cmd->add_option("--labels-out", run.labels_out, "Per-point labels CSV path");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Final cluster counts over a grid of m_ini and alpha (apcm)");
    add_source(sweep_cmd, sweep.src);
    sweep_cmd->add_option("--algorithm", sweep.p.algorithm)->capture_default_str();
    sweep_cmd->add_option("--m-ini", sweep.m_ini, "One or more initial cluster counts")->delimiter(',');
    sweep_cmd->add_option("--alpha", sweep.alpha, "One or more alpha values")->delimiter(',')->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--tol", sweep.p.tol)->capture_default_str();
    sweep_cmd->add_option("--max-iter", sweep.p.max_iter)->capture_default_str();
    add_fcm_params(sweep_cmd, sweep.p);
    sweep_cmd->add_option("--output", sweep.output, "CSV path (default: stdout)");

    LandscapeArgs land;
    land.p.m_ini = 3;
    auto* land_cmd = app.add_subcommand("landscape", "Single-cluster cost over a grid of one-dimensional positions");
    add_source(land_cmd, land.src);
    land_cmd->add_option("--m-ini", land.p.m_ini, "Clusters of the FCM run that fixes eta_hat")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    land_cmd->add_option("--alpha", land.p.alpha)->capture_default_str()->check(CLI::PositiveNumber);
    land_cmd->add_option("--points", land.points, "Grid size")->capture_default_str()->check(CLI::Range(2, 10000000));
    add_fcm_params(land_cmd, land.p);
    land_cmd->add_option("--output", land.output, "theta,J CSV path");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Numerical checks of the analytical properties");
    verify_cmd->add_option("--prop", verify.prop, "1, 2, 34 or 5")->required()->check(CLI::IsMember({1, 2, 34, 5}));
    verify_cmd->add_option("--trials", verify.trials, "Number of random cases");
    verify_cmd->add_option("--sigma", verify.sigma, "Gaussian spread (34)")->capture_default_str()->check(
        CLI::PositiveNumber);
    verify_cmd->add_option("--gamma", verify.gamma, "Cluster scale (34)")->capture_default_str()->check(
        CLI::PositiveNumber);
    verify_cmd->add_option("--alpha", verify.alpha, "apcm alpha (5)")->capture_default_str()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify.seed)->capture_default_str();

    std::string gen_name;
    std::uint64_t gen_seed = 42;
    std::string gen_output;
    auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic data set as CSV");
    gen_cmd->add_option("--gen", gen_name)->required()->check(CLI::IsMember(kGenerators));
    gen_cmd->add_option("--seed", gen_seed)->capture_default_str();
    gen_cmd->add_option("--output", gen_output, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsageError;
    }

    try {
        if (*run_cmd) return cmd_run(run);
        if (*sweep_cmd) return cmd_sweep(sweep);
        if (*land_cmd) return cmd_landscape(land);
        if (*verify_cmd) return cmd_verify(verify);
        if (*gen_cmd) return cmd_gen(gen_name, gen_seed, gen_output);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const ContractViolation& e) {
        // Parameters inconsistent with the data, e.g. m_ini > N.
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsageError;
}
