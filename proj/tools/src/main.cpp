#include <chrono>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "cli_util.hpp"
#include "gegwp/analysis.hpp"
#include "gegwp/errors.hpp"
#include "gegwp/simulate.hpp"

using namespace gegwp;
using namespace gegwp::cli;

namespace {

struct ModelFlags {
    std::vector<std::string> factors;
    double sigma2 = 2.0 * std::numbers::pi;

    void attach(CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--factor", factors,
                                    "model factor as 'd,nu' (nu in cycles/sample, "
                                    "decimal or rational like 1/12); repeatable");
        if (required) opt->required();
        cmd->add_option("--sigma2", sigma2, "innovation variance (default 2*pi)");
    }
    GegenbauerModel build() const {
        std::vector<GegenbauerFactor> fs;
        for (const auto& t : factors) fs.push_back(parse_factor(t));
        return GegenbauerModel(fs, sigma2);
    }
};

WpTree tree_for_method(const std::string& method, const std::vector<Frequency>& nus,
                       const std::vector<double>& ds, int J, const std::string& filter,
                       double threshold, double delta, double sigma2) {
    if (method == "ours") return best_basis_kfactor(nus, J);
    if (method == "whitcher") return whitcher_basis(nus, make_filter(filter), J, threshold);
    std::vector<GegenbauerFactor> fs;
    for (std::size_t i = 0; i < nus.size(); ++i)
        fs.push_back({i < ds.size() ? ds[i] : 0.25, nus[i]});
    GegenbauerModel model(fs, sigma2);
    if (method == "cw-indicator")
        return cw_best_basis(model, J, {CostKind::singularity_indicator, 0.0});
    if (method == "cw-threshold")
        return cw_best_basis(model, J, {CostKind::threshold_functional, delta});
    throw Error("unknown method '" + method + "'");
}

void cmd_basis(const std::vector<std::string>& nu_text, const std::vector<double>& ds,
               int J, const std::string& method, const std::string& filter,
               double threshold, double delta, double sigma2, const std::string& out_path,
               const std::vector<std::string>& argv) {
    std::vector<Frequency> nus;
    for (const auto& t : nu_text) nus.push_back(Frequency::parse(t));
    auto tree = tree_for_method(method, nus, ds, J, filter, threshold, delta, sigma2);
    Output out(out_path);
    out.stream() << tree_to_json(tree) << "\n";
    write_manifest(out, "basis", argv, 0);
    std::cout << render_bands(tree);
    if (!out.is_stdout())
        std::cout << "leaves: " << leaf_count(tree) << " -> " << out.path() << "\n";
}

void cmd_filters(const std::string& name, const std::string& out_path,
                 const std::vector<std::string>& argv) {
    auto f = make_filter(name);
    Output out(out_path);
    out.stream() << "index,h,g\n";
    int lo = std::min(f.n1, f.g_lo());
    int hi = std::max(f.n2, f.g_hi());
    for (int n = lo; n <= hi; ++n) {
        double hv = (n >= f.n1 && n <= f.n2) ? f.h[static_cast<size_t>(n - f.n1)] : 0.0;
        double gv = (n >= f.g_lo() && n <= f.g_hi()) ? f.g[static_cast<size_t>(n - f.g_lo())] : 0.0;
        out.stream() << n << "," << fmt(hv) << "," << fmt(gv) << "\n";
    }
    write_manifest(out, "filters", argv, 0);
}

void cmd_acv(const ModelFlags& mf, int hmax, double tol, const std::string& out_path,
             const std::vector<std::string>& argv) {
    auto model = mf.build();
    auto acv = autocovariance(model, hmax, tol);
    Output out(out_path);
    out.stream() << "h,gamma,rho\n";
    for (int h = 0; h <= hmax; ++h)
        out.stream() << h << "," << fmt(acv(h)) << "," << fmt(acv.rho(h)) << "\n";
    write_manifest(out, "acv", argv, 0);
}

void cmd_simulate(const ModelFlags& mf, const std::string& method, int J,
                  const std::string& filter, const std::string& tree_file,
                  std::uint64_t seed, int M, const std::string& out_path,
                  const std::vector<std::string>& argv) {
    auto model = mf.build();
    std::vector<std::vector<double>> runs;
    if (method == "hosking") {
        runs = simulate_hosking(model, 1 << J, seed, M);
    } else if (method == "wp") {
        WpTree tree = tree_file.empty()
                          ? best_basis_kfactor(model_frequencies(model), J)
                          : [&] {
                                std::ifstream in(tree_file);
                                std::stringstream ss;
                                ss << in.rdbuf();
                                return tree_from_json(ss.str());
                            }();
        runs = simulate_wp({model, tree, make_filter(filter), seed, M});
    } else {
        throw Error("unknown simulation method '" + method + "'");
    }
    Output out(out_path);
    out.stream() << "replicate,t,value\n";
    for (std::size_t r = 0; r < runs.size(); ++r)
        for (std::size_t t = 0; t < runs[r].size(); ++t)
            out.stream() << r << "," << t << "," << fmt(runs[r][t]) << "\n";
    write_manifest(out, "simulate", argv, seed);
}

void score_row(std::ostream& os, const std::string& process, const QmfPair& filter,
               const std::string& method, const ScoreReport& rep) {
    os << process << "," << to_string(filter.family) << "," << filter.q << "," << method
       << "," << rep.leaf_cnt << "," << fmt(rep.lambda) << "," << fmt(rep.hs_error)
       << "," << fmt(rep.S);
    if (rep.B) os << "," << fmt(*rep.B) << "," << fmt(*rep.B_pen) << "," << rep.seed;
    os << "\n";
}

void cmd_score(const ModelFlags& mf, int J, const std::string& filter_name,
               const std::string& method, double threshold, int M, std::uint64_t seed,
               const std::string& out_path, const std::vector<std::string>& argv) {
    auto model = mf.build();
    auto filter = make_filter(filter_name);
    const int N = 1 << J;
    WpTree tree = method == "root"
                      ? WpTree::root_only(J)
                      : tree_for_method(method, model_frequencies(model), {}, J,
                                        filter_name, threshold, 0.0, model.sigma2());
    auto rep = score_S(model, tree, filter, N);
    if (M > 0) {
        auto sim = score_B(model, tree, filter, N, M, seed);
        rep.B = sim.B;
        rep.B_pen = sim.B_pen;
        rep.M = M;
        rep.seed = seed;
    }
    Output out(out_path);
    out.stream() << "process,family,q,method,leaf_count,lambda,hs_error,S"
                 << (M > 0 ? ",B,B_pen,seed" : "") << "\n";
    score_row(out.stream(), "custom", filter, method, rep);
    write_manifest(out, "score", argv, seed);
}

void cmd_table1(int process_filter, const std::string& family_filter, int J,
                const std::string& out_path, const std::vector<std::string>& argv) {
    const int N = 1 << J;
    Output out(out_path);
    // one row per (process, filter); cells without a basis stay empty
    out.stream() << "process,family,q,lambda,leaf_ours,hs_ours,S_ours,"
                    "leaf_whitcher,hs_whitcher,S_whitcher\n";
    auto processes = reference_processes();
    for (std::size_t pi = 0; pi < processes.size(); ++pi) {
        if (process_filter > 0 && static_cast<int>(pi) + 1 != process_filter) continue;
        GegenbauerModel model(processes[pi].factors);
        Eigen::MatrixXd gamma = covariance_matrix(model, N);
        double lambda = lambda_weight(correlation_from_covariance(gamma));
        auto nus = model_frequencies(model);
        auto ours = best_basis_kfactor(nus, J);
        for (const auto& fname : filter_grid()) {
            auto filter = make_filter(fname);
            if (!family_filter.empty() && to_string(filter.family) != family_filter)
                continue;
            auto hs_of = [&](const WpTree& tree) {
                auto omega_b =
                    correlation_from_covariance(wp_covariance(gamma, tree, filter));
                return hs_norm_sq(omega_b - Eigen::MatrixXd::Identity(N, N));
            };
            double hs_ours = hs_of(ours);
            out.stream() << processes[pi].label << "," << to_string(filter.family)
                         << "," << filter.q << "," << fmt(lambda) << ","
                         << leaf_count(ours) << "," << fmt(hs_ours) << ","
                         << fmt(hs_ours + lambda * leaf_count(ours)) << ",";
            try {
                auto whit = whitcher_basis(nus, filter, J);
                double hs_whit = hs_of(whit);
                out.stream() << leaf_count(whit) << "," << fmt(hs_whit) << ","
                             << fmt(hs_whit + lambda * leaf_count(whit)) << "\n";
            } catch (const BasisNotFound&) {
                out.stream() << ",,\n";
            }
        }
    }
    write_manifest(out, "table1", argv, 0);
}

void cmd_table2(int process_filter, const std::string& family_filter, int J, int M,
                std::uint64_t seed, const std::string& out_path,
                const std::vector<std::string>& argv) {
    const int N = 1 << J;
    Output out(out_path);
    // one row per (process, filter); B_hosk is the per-process exact baseline
    out.stream() << "process,family,q,B_hosk,B_ours,B_pen_ours,"
                    "B_whitcher,B_pen_whitcher,seed\n";
    auto processes = reference_processes();
    for (std::size_t pi = 0; pi < processes.size(); ++pi) {
        if (process_filter > 0 && static_cast<int>(pi) + 1 != process_filter) continue;
        GegenbauerModel model(processes[pi].factors);
        auto nus = model_frequencies(model);
        auto ours = best_basis_kfactor(nus, J);
        double b_hosk =
            *score_B(model, ours, make_filter("db10"), N, M, seed, SimMethod::hosking).B;
        for (const auto& fname : filter_grid()) {
            auto filter = make_filter(fname);
            if (!family_filter.empty() && to_string(filter.family) != family_filter)
                continue;
            auto rep = score_B(model, ours, filter, N, M, seed);
            out.stream() << processes[pi].label << "," << to_string(filter.family)
                         << "," << filter.q << "," << fmt(b_hosk) << ","
                         << fmt(*rep.B) << "," << fmt(*rep.B_pen) << ",";
            try {
                auto whit = whitcher_basis(nus, filter, J);
                auto wrep = score_B(model, whit, filter, N, M, seed);
                out.stream() << fmt(*wrep.B) << "," << fmt(*wrep.B_pen) << ","
                             << seed << "\n";
            } catch (const BasisNotFound&) {
                out.stream() << ",," << seed << "\n";
            }
        }
    }
    write_manifest(out, "table2", argv, seed);
}

void cmd_decay(const ModelFlags& mf, const std::string& filter_name, int J, int depth,
               const std::string& out_path, const std::vector<std::string>& argv) {
    auto model = mf.build();
    auto fits = decay_check(model, make_filter(filter_name), WpTree::uniform(J, depth),
                            1 << J);
    Output out(out_path);
    out.stream() << "j1,p1,j2,p2,predicted,fitted,pairs\n";
    for (const auto& f : fits)
        out.stream() << f.prediction.a.j << "," << f.prediction.a.p << ","
                     << f.prediction.b.j << "," << f.prediction.b.p << ","
                     << fmt(f.prediction.predicted) << "," << fmt(f.fitted) << ","
                     << f.pairs << "\n";
    write_manifest(out, "decay", argv, 0);
}

void cmd_bench(int jmin, int jmax, const std::string& filter_name,
               const std::string& nu_text, int repeats, const std::string& out_path,
               const std::vector<std::string>& argv) {
    auto filter = make_filter(filter_name);
    std::vector<Frequency> nus{Frequency::parse(nu_text)};
    Output out(out_path);
    out.stream() << "J,method,seconds\n";
    for (int J = jmin; J <= jmax; ++J) {
        auto time_med = [&](const std::function<void()>& fn) {
            std::vector<double> ts;
            for (int r = 0; r < repeats; ++r) {
                auto t0 = std::chrono::steady_clock::now();
                fn();
                ts.push_back(std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count());
            }
            std::sort(ts.begin(), ts.end());
            return ts[ts.size() / 2];
        };
        double t_ours = time_med([&] { (void)best_basis_kfactor(nus, J); });
        double t_whit = time_med([&] { (void)whitcher_basis(nus, filter, J); });
        out.stream() << J << ",ours," << fmt(t_ours) << "\n";
        out.stream() << J << ",whitcher," << fmt(t_whit) << "\n";
    }
    write_manifest(out, "bench", argv, 0);
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> raw_args(argv, argv + argc);
    CLI::App app{"wavelet-packet simulation of seasonal long-memory processes"};
    app.require_subcommand(1);

    // ---- basis ----
    auto* basis = app.add_subcommand(
        "basis", "build a packet basis for given singular frequencies");
    std::vector<std::string> nu_text;
    std::vector<double> ds;
    int J = 8;
    std::string method = "ours", filter_name = "db10", out_path = "-", tree_file;
    double threshold = 0.01, delta = 0.0, sigma2 = 2.0 * std::numbers::pi;
    basis->add_option("--nu", nu_text,
                      "singular frequency in cycles/sample, in [0, 1/2]; decimal "
                      "or rational like 1/12; repeatable")
        ->required();
    basis->add_option("--J", J, "tree depth (series length 2^J)")->required();
    basis->add_option("--method", method, "ours | cw-indicator | cw-threshold | whitcher")
        ->check(CLI::IsMember({"ours", "cw-indicator", "cw-threshold", "whitcher"}));
    basis->add_option("--filter", filter_name, "filter short name (whitcher)");
    basis->add_option("--threshold", threshold, "gain threshold (whitcher)");
    basis->add_option("--delta", delta, "variance threshold (cw-threshold)");
    basis->add_option("--d", ds, "memory parameter per --nu (cw methods)");
    basis->add_option("--sigma2", sigma2, "innovation variance (cw methods)");
    basis->add_option("--out", out_path, "output path for the tree JSON ('-' = stdout)");
    basis->callback([&] {
        cmd_basis(nu_text, ds, J, method, filter_name, threshold, delta, sigma2,
                  out_path, raw_args);
    });

    // ---- filters ----
    auto* filters = app.add_subcommand("filters", "dump filter taps as CSV");
    filters->add_option("--filter", filter_name, "filter short name, e.g. db10")
        ->required();
    filters->add_option("--out", out_path, "output path ('-' = stdout)");
    filters->callback([&] { cmd_filters(filter_name, out_path, raw_args); });

    // ---- acv ----
    auto* acv = app.add_subcommand("acv", "exact autocovariance of a model");
    ModelFlags acv_model;
    acv_model.attach(acv);
    int hmax = 64;
    double tol = 1e-7;
    acv->add_option("--hmax", hmax, "maximum lag");
    acv->add_option("--tol", tol, "relative quadrature tolerance");
    acv->add_option("--out", out_path, "output path ('-' = stdout)");
    acv->callback([&] { cmd_acv(acv_model, hmax, tol, out_path, raw_args); });

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "generate realizations");
    ModelFlags sim_model;
    sim_model.attach(sim);
    std::string sim_method = "wp";
    std::uint64_t seed = 1;
    int M = 1;
    sim->add_option("--method", sim_method, "wp | hosking")
        ->check(CLI::IsMember({"wp", "hosking"}));
    sim->add_option("--J", J, "series length exponent (N = 2^J)")->required();
    sim->add_option("--filter", filter_name, "filter short name (wp)");
    sim->add_option("--tree", tree_file, "tree JSON file (wp; default: our basis)");
    sim->add_option("--seed", seed, "rng seed");
    sim->add_option("--replicates", M, "number of replicates");
    sim->add_option("--out", out_path, "output path ('-' = stdout)");
    sim->callback([&] {
        cmd_simulate(sim_model, sim_method, J, filter_name, tree_file, seed, M,
                     out_path, raw_args);
    });

    // ---- score ----
    auto* score = app.add_subcommand("score", "diagonalization scores for one cell");
    ModelFlags score_model;
    score_model.attach(score);
    int score_M = 0;
    score->add_option("--J", J, "series length exponent (N = 2^J)");
    score->add_option("--filter", filter_name, "filter short name")->required();
    score->add_option("--method", method, "ours | whitcher | cw-indicator | root");
    score->add_option("--threshold", threshold, "gain threshold (whitcher)");
    score->add_option("--replicates", score_M, "add simulation scores with M replicates");
    score->add_option("--seed", seed, "rng seed for the simulation scores");
    score->add_option("--out", out_path, "output path ('-' = stdout)");
    score->callback([&] {
        cmd_score(score_model, J, filter_name, method, threshold, score_M, seed,
                  out_path, raw_args);
    });

    // ---- table1 / table2 ----
    int process_filter = 0;
    std::string family_filter;
    auto* t1 = app.add_subcommand("table1", "exact S scores over the reference grid");
    t1->add_option("--process", process_filter, "restrict to process index 1..4");
    t1->add_option("--family", family_filter, "restrict to one wavelet family");
    t1->add_option("--J", J, "series length exponent (default 8)");
    t1->add_option("--out", out_path, "output path ('-' = stdout)");
    t1->callback([&] { cmd_table1(process_filter, family_filter, J, out_path, raw_args); });

    auto* t2 = app.add_subcommand("table2", "simulation B scores over the reference grid");
    int M2 = 500;
    t2->add_option("--process", process_filter, "restrict to process index 1..4");
    t2->add_option("--family", family_filter, "restrict to one wavelet family");
    t2->add_option("--J", J, "series length exponent (default 8)");
    t2->add_option("--replicates", M2, "replicates per cell (default 500)");
    t2->add_option("--seed", seed, "rng seed");
    t2->add_option("--out", out_path, "output path ('-' = stdout)");
    t2->callback([&] {
        cmd_table2(process_filter, family_filter, J, M2, seed, out_path, raw_args);
    });

    // ---- decay ----
    auto* decay = app.add_subcommand("decay", "packet covariance decay exponents");
    ModelFlags decay_model;
    decay_model.attach(decay);
    int depth = 2;
    decay->add_option("--J", J, "series length exponent")->required();
    decay->add_option("--filter", filter_name, "filter short name")->required();
    decay->add_option("--depth", depth, "uniform tree depth (default 2)");
    decay->add_option("--out", out_path, "output path ('-' = stdout)");
    decay->callback([&] {
        cmd_decay(decay_model, filter_name, J, depth, out_path, raw_args);
    });

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "basis construction timings");
    int jmin = 6, jmax = 13, repeats = 5;
    std::string bench_nu = "1/12";
    bench->add_option("--jmin", jmin, "smallest depth");
    bench->add_option("--jmax", jmax, "largest depth");
    bench->add_option("--filter", filter_name, "filter for the gain-threshold method");
    bench->add_option("--nu", bench_nu, "singular frequency");
    bench->add_option("--repeats", repeats, "timing repetitions (median reported)");
    bench->add_option("--out", out_path, "output path ('-' = stdout)");
    bench->callback([&] {
        cmd_bench(jmin, jmax, filter_name, bench_nu, repeats, out_path, raw_args);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const QuadratureFailure& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return 2;
    } catch (const BasisNotFound& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return 2;
    } catch (const NonPositiveDefinite& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return 2;
    } catch (const InsufficientPairs& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
