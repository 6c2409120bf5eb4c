// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riscade/harness.hpp"
#include "riscade/measurement.hpp"
#include "support/quadrature.hpp"
#include "support/stats.hpp"

using namespace riscade;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double elapsed) {
    std::printf("%s criterion %2d: %s [%s] (%.1f s)\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), detail.c_str(), elapsed);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

CMatrix random_cmatrix(RngStream& rng, Eigen::Index rows, Eigen::Index cols) {
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.circular_gaussian(1.0);
    return m;
}

// ---- criterion 1: cascade identity at reference dimensions ----
void criterion_cascade_identity() {
    Timer timer;
    const ArrayGeometry geom{16, 10, 10, 0.5};
    RngStream rng(101, 1);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const ChannelRealization chan =
            draw_channel(rng, geom, 2, 2.5e-8, 3, {2.6e-6, 2.4e-6, 2.8e-6});
        for (int k = 0; k < chan.num_ue(); ++k) {
            const double rel =
                (chan.cascaded[k] - chan.dictionary[k] * chan.alpha[k]).norm() /
                chan.cascaded[k].norm();
            worst = std::max(worst, rel);
        }
    }
    const double elapsed = timer.seconds();
    const bool pass = worst <= 1e-12 && elapsed < 5.0;
    report(1, "cascade identity vec(G diag f) = W alpha at N=16, L=100", pass,
           "worst rel " + fmt(worst) + ", limit 1e-12", elapsed);
}

// ---- criterion 2: slot-level protocol equals the direct linear model ----
void criterion_protocol_equivalence() {
    Timer timer;
    const ArrayGeometry geom{16, 10, 10, 0.5};
    const int t_blocks = 6, tau = 3, num_ue = 3;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t seed = mix_seed(202, trial);
        RngStream chan_rng(seed, 1), prof_rng(seed, 2);
        const ChannelRealization chan =
            draw_channel(chan_rng, geom, 2, 2.5e-8, 3, {2.6e-6, 2.4e-6, 2.8e-6});
        const RisProfile profile = gen_ris_profile(prof_rng, geom.ris_elements(), t_blocks);
        const PilotBook pilots = gen_pilots(tau, num_ue);
        const double power = dbm_to_watt(23.0), sigma2 = 1.6e-12;

        RngStream noise_a(seed, 3);
        const MeasurementSet meas = assemble(chan, profile, pilots, power, noise_a, sigma2);

        RngStream noise_b(seed, 3);
        std::vector<CMatrix> slot_noise(t_blocks, CMatrix(geom.bs_antennas, tau));
        for (int t = 0; t < t_blocks; ++t)
            for (int u = 0; u < tau; ++u)
                slot_noise[t].col(u) = sample_circ_gauss(noise_b, geom.bs_antennas, sigma2);
        for (int k = 0; k < num_ue; ++k) {
            CMatrix nk(geom.bs_antennas, t_blocks);
            for (int t = 0; t < t_blocks; ++t)
                nk.col(t) = slot_noise[t] * pilots.pilots.col(k).conjugate() /
                            static_cast<double>(tau);
            const CVector direct = meas.sensing * chan.cascaded[k] + vec(nk);
            worst = std::max(worst, (meas.y[k] - direct).norm() / direct.norm());
        }
    }
    const double elapsed = timer.seconds();
    const bool pass = worst <= 1e-10 && elapsed < 10.0;
    report(2, "slot-level protocol equals y = S_bar c + n under shared noise", pass,
           "worst rel " + fmt(worst) + ", limit 1e-10", elapsed);
}

// ---- criterion 3: Gaussian-Gamma mixture marginalizes to the Laplace prior ----
void criterion_marginalization() {
    Timer timer;
    double worst = 0.0;
    for (double mag : {0.1, 1.0, 10.0}) {
        for (double gamma : {0.1, 1.0, 10.0}) {
            const auto integrand = [&](double lambda) {
                const double gauss = std::exp(-mag * mag / lambda) / (M_PI * lambda);
                const double rate = gamma / 4.0;
                const double gamma_pdf = std::pow(rate, 1.5) / std::tgamma(1.5) *
                                         std::sqrt(lambda) * std::exp(-rate * lambda);
                return gauss * gamma_pdf;
            };
            const double numeric =
                testsupport::simpson_log(integrand, 1e-12, 1e10, 80000);
            const double closed = marginal_laplace_pdf(mag, gamma);
            worst = std::max(worst, std::abs(numeric - closed) / closed);
        }
    }
    const double elapsed = timer.seconds();
    report(3, "Gaussian-Gamma hierarchy marginalizes to gamma/(2pi) exp(-sqrt(gamma)|a|)",
           worst <= 1e-5, "worst rel " + fmt(worst) + ", limit 1e-5", elapsed);
}

// ---- criterion 4: product-Gaussian density normalization and sampling ----
void criterion_product_pdf() {
    Timer timer;
    const double total =
        2.0 * M_PI *
        testsupport::simpson_log(
            [&](double r) { return product_gaussian_pdf(r, 1.0, 1.0) * r; }, 1e-9, 30.0,
            60000);
    const bool norm_ok = std::abs(total - 1.0) <= 1e-4;

    const int n = 1000000, bins = 50;
    const double rmax = 3.0, width = rmax / bins;
    RngStream rng(404, 7);
    std::vector<long> observed(bins, 0);
    for (int i = 0; i < n; ++i) {
        const double r =
            std::abs(rng.circular_gaussian(1.0) * rng.circular_gaussian(1.0));
        if (r < rmax) ++observed[static_cast<int>(r / width)];
    }
    int within = 0;
    for (int b = 0; b < bins; ++b) {
        const double p = 2.0 * M_PI *
                         testsupport::simpson(
                             [&](double r) {
                                 return r == 0.0 ? 0.0
                                                 : product_gaussian_pdf(r, 1.0, 1.0) * r;
                             },
                             b * width, (b + 1) * width, 2000);
        const double sd = std::sqrt(n * p * (1.0 - p));
        within += std::abs(observed[b] - n * p) <= 3.0 * sd;
    }
    const bool hist_ok = within >= 48; // 95% of 50 bins
    const double elapsed = timer.seconds();
    report(4, "product-Gaussian density: unit mass and 1e6-sample histogram",
           norm_ok && hist_ok,
           "integral " + fmt(total) + ", bins within 3 MC SE " + std::to_string(within) +
               "/50",
           elapsed);
}

// ---- criterion 5: q(alpha) update equals an independent ridge solve ----
void criterion_ridge_oracle() {
    Timer timer;
    RngStream rng(505, 1);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const int nt = 16, m = 6;
        const CMatrix s = random_cmatrix(rng, nt, m);
        const CVector y = random_cmatrix(rng, nt, 1);
        PosteriorState state = init_posterior(m, y);
        state.mean_beta = std::exp(rng.uniform(-2.0, 4.0));
        for (int i = 0; i < m; ++i)
            state.mean_inv_lambda[i] = std::exp(rng.uniform(-3.0, 3.0));
        const double beta = state.mean_beta;
        const Eigen::VectorXd d = state.mean_inv_lambda;
        update_q_alpha(state, s, y);

        CMatrix a = beta * (s.adjoint() * s);
        a.diagonal() += d.cast<std::complex<double>>();
        const CVector oracle = a.fullPivLu().solve(beta * (s.adjoint() * y));
        worst = std::max(worst, (state.mean_alpha - oracle).norm() / oracle.norm());
    }
    const double elapsed = timer.seconds();
    report(5, "q(alpha) update matches the independent dense ridge solve", worst <= 1e-10,
           "worst rel " + fmt(worst) + ", limit 1e-10", elapsed);
}

// ---- criterion 6: GIG closed-form means against quadrature ----
void criterion_gig_means() {
    Timer timer;
    const double gammas[] = {0.3, 1.0, 4.0, 10.0, 0.05};
    const double moments[] = {0.8, 2.5, 0.1, 1.0, 5.0};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        PosteriorState state = init_posterior(1, CVector::Ones(1));
        state.mean_alpha = CVector::Zero(1);
        state.cov_alpha = CMatrix::Identity(1, 1) * moments[i];
        state.mean_gamma = Eigen::VectorXd::Constant(1, gammas[i]);
        update_q_lambda(state);

        const double a = gammas[i] / 2.0, b = 2.0 * moments[i];
        const double center = std::sqrt(b / a);
        const auto w = [&](double x) {
            return std::exp(-0.5 * (a * x + b / x)) / std::sqrt(x);
        };
        const double z = testsupport::simpson_log(w, center * 1e-9, center * 1e9, 40000);
        const double m1 = testsupport::simpson_log(
            [&](double x) { return x * w(x); }, center * 1e-9, center * 1e9, 40000);
        const double mi = testsupport::simpson_log(
            [&](double x) { return w(x) / x; }, center * 1e-9, center * 1e9, 40000);
        worst = std::max(worst, std::abs(state.mean_lambda[0] - m1 / z) / (m1 / z));
        worst = std::max(worst, std::abs(state.mean_inv_lambda[0] - mi / z) / (mi / z));
    }
    const double elapsed = timer.seconds();
    report(6, "GIG posterior means match quadrature on 5 parameter triples",
           worst <= 1e-6, "worst rel " + fmt(worst) + ", limit 1e-6", elapsed);
}

// ---- criterion 7: noiseless recovery ----
void criterion_noiseless_recovery() {
    Timer timer;
    ScenarioConfig cfg;
    cfg.noise_variance_override = 0.0;
    cfg.estimators = {"ls", "vi-laplace"};
    int vi_ok = 0, ls_ok = 0;
    for (int t = 0; t < 100; ++t) {
        const TrialResult tr =
            run_trial(cfg, 12, 0.0, trial_seed(cfg.master_seed, 12, 0.0, t));
        ls_ok += tr.trial_nmse(0) <= 1e-10;
        vi_ok += tr.trial_nmse(1) <= 1e-4;
    }
    const double elapsed = timer.seconds();
    const bool pass = vi_ok >= 95 && ls_ok == 100 && elapsed < 60.0;
    report(7, "noiseless recovery at T=12 (VI <= 1e-4, LS <= 1e-10)", pass,
           "VI " + std::to_string(vi_ok) + "/100, LS " + std::to_string(ls_ok) + "/100",
           elapsed);
}

// ---- criterion 8: NMSE-vs-T trend and orderings at the reference setup ----
void criterion_blocks_trend() {
    Timer timer;
    ScenarioConfig cfg;
    cfg.trials = 200;
    cfg.mode = "blocks"; // T in {2,...,12}
    const SweepResult result = run_sweep(cfg, true);
    const int ne = static_cast<int>(cfg.estimators.size());
    const int np = static_cast<int>(cfg.t_list.size());

    std::vector<std::vector<std::vector<double>>> values(
        np, std::vector<std::vector<double>>(ne, std::vector<double>(cfg.trials)));
    for (int p = 0; p < np; ++p)
        for (int e = 0; e < ne; ++e)
            for (int t = 0; t < cfg.trials; ++t)
                values[p][e][t] = result.trials[p * cfg.trials + t].trial_nmse(e);

    std::ostringstream detail;
    bool pass = true;

    // orderings at T = 6 (index 2), paired gaps at 2 standard errors
    const int p6 = 2, laplace = 3;
    const char* names[] = {"ls", "lmmse", "vi-s"};
    for (int e = 0; e < 3; ++e) {
        const auto gap = testsupport::paired_gap(values[p6][e], values[p6][laplace]);
        const bool ok = gap.mean > 0.0 && gap.mean > 2.0 * gap.se;
        pass = pass && ok;
        detail << names[e] << " gap " << fmt(gap.mean) << " (" << fmt(gap.mean / gap.se)
               << " se)" << (ok ? "" : " <-- not significant") << "; ";
    }

    // mean NMSE non-increasing in T, one combined standard error of slack
    for (int e = 0; e < ne; ++e) {
        for (int p = 0; p + 1 < np; ++p) {
            const double m0 = testsupport::mean(values[p][e]);
            const double m1 = testsupport::mean(values[p + 1][e]);
            const double se = std::hypot(testsupport::standard_error(values[p][e]),
                                         testsupport::standard_error(values[p + 1][e]));
            if (m1 - m0 > se) {
                pass = false;
                detail << cfg.estimators[e] << " rises T=" << cfg.t_list[p] << "->"
                       << cfg.t_list[p + 1] << " by " << fmt(m1 - m0) << " (>1 se "
                       << fmt(se) << "); ";
            }
        }
    }

    const double elapsed = timer.seconds();
    pass = pass && elapsed < 900.0;
    report(8, "NMSE-vs-T orderings and monotonic trend (200 trials)", pass, detail.str(),
           elapsed);
}

// ---- criterion 9: angle-uncertainty trend ----
void criterion_angle_trend() {
    Timer timer;
    ScenarioConfig cfg;
    cfg.mode = "angle";
    cfg.delta2_list = {0.0, 1e-3, 1e-2, 1e-1};
    cfg.trials = 200;
    const SweepResult result = run_sweep(cfg, true);
    const int ne = static_cast<int>(cfg.estimators.size());
    const int np = static_cast<int>(cfg.delta2_list.size());

    std::vector<std::vector<std::vector<double>>> values(
        np, std::vector<std::vector<double>>(ne, std::vector<double>(cfg.trials)));
    for (int p = 0; p < np; ++p)
        for (int e = 0; e < ne; ++e)
            for (int t = 0; t < cfg.trials; ++t)
                values[p][e][t] = result.trials[p * cfg.trials + t].trial_nmse(e);

    std::ostringstream detail;
    bool pass = true;
    const int ls = 0, lmmse = 1, laplace = 3;

    for (int p = 0; p < np; ++p) {
        const double m_vi = testsupport::mean(values[p][laplace]);
        const double m_ls = testsupport::mean(values[p][ls]);
        const double m_lm = testsupport::mean(values[p][lmmse]);
        if (!(m_vi < m_ls && m_vi < m_lm)) {
            pass = false;
            detail << "ordering breaks at delta2=" << fmt(cfg.delta2_list[p]) << "; ";
        }
    }

    for (int e = 0; e < ne; ++e) {
        for (int p = 0; p + 1 < np; ++p) {
            const double m0 = testsupport::mean(values[p][e]);
            const double m1 = testsupport::mean(values[p + 1][e]);
            const double se = std::hypot(testsupport::standard_error(values[p][e]),
                                         testsupport::standard_error(values[p + 1][e]));
            if (m0 - m1 > se) {
                pass = false;
                detail << cfg.estimators[e] << " falls delta2="
                       << fmt(cfg.delta2_list[p]) << "->" << fmt(cfg.delta2_list[p + 1])
                       << " by " << fmt(m0 - m1) << " (>1 se " << fmt(se) << "); ";
            }
        }
    }
    if (detail.str().empty()) detail << "all orderings and trends hold";

    const double elapsed = timer.seconds();
    pass = pass && elapsed < 900.0;
    report(9, "angle-uncertainty orderings and trend (200 trials per delta2)", pass,
           detail.str(), elapsed);
}

// ---- criterion 10: learned noise precision ----
void criterion_noise_precision() {
    Timer timer;
    ScenarioConfig cfg;
    cfg.estimators = {"vi-laplace"};
    const double truth = cfg.tau() / noise_variance(cfg);
    int within = 0;
    for (int t = 0; t < 100; ++t) {
        const TrialResult tr =
            run_trial(cfg, 6, 0.0, trial_seed(cfg.master_seed, 6, 0.0, t));
        const double ratio = tr.records[0][0].noise_precision / truth;
        within += ratio >= 0.5 && ratio <= 2.0;
    }
    const double elapsed = timer.seconds();
    report(10, "learned <beta> within 2x of the tau-scaled noise precision",
           within >= 80, std::to_string(within) + "/100 within factor 2", elapsed);
}

// ---- criterion 11: byte-identical CSVs across executions ----
void criterion_determinism(const char* simulate_path, const char* config_path) {
    Timer timer;
    const fs::path base = fs::temp_directory_path() / "riscade_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);

    bool pass = false;
    std::string detail;
    if (simulate_path && config_path) {
        const std::string out_a = (base / "run_a").string();
        const std::string out_b = (base / "run_b").string();
        const std::string cmd_a = std::string(simulate_path) + " --config " + config_path +
                                  " --out " + out_a + " > /dev/null";
        const std::string cmd_b = std::string(simulate_path) + " --config " + config_path +
                                  " --out " + out_b + " --threads 1 > /dev/null";
        const int rc_a = std::system(cmd_a.c_str());
        const int rc_b = std::system(cmd_b.c_str());
        if (rc_a != 0 || rc_b != 0) {
            detail = "simulate exited nonzero";
        } else {
            const auto slurp = [](const fs::path& p) {
                std::ifstream in(p, std::ios::binary);
                std::ostringstream buf;
                buf << in.rdbuf();
                return buf.str();
            };
            const bool trials_same =
                slurp(fs::path(out_a) / "trials.csv") == slurp(fs::path(out_b) / "trials.csv");
            const bool agg_same = slurp(fs::path(out_a) / "aggregate.csv") ==
                                  slurp(fs::path(out_b) / "aggregate.csv");
            pass = trials_same && agg_same;
            detail = std::string("trials.csv ") + (trials_same ? "identical" : "differ") +
                     ", aggregate.csv " + (agg_same ? "identical" : "differ") +
                     " (parallel vs --threads 1)";
        }
    } else {
        detail = "simulate binary not supplied, comparing in-process sweeps";
        ScenarioConfig cfg;
        cfg.trials = 10;
        cfg.t_list = {2, 6};
        pass = trials_csv(run_sweep(cfg, true)) == trials_csv(run_sweep(cfg, false));
    }
    const double elapsed = timer.seconds();
    report(11, "byte-identical CSVs across executions and thread counts", pass, detail,
           elapsed);
}

} // namespace

int main(int argc, char** argv) {
    const char* simulate_path = argc > 1 ? argv[1] : nullptr;
    const char* config_path = argc > 2 ? argv[2] : nullptr;

    criterion_cascade_identity();
    criterion_protocol_equivalence();
    criterion_marginalization();
    criterion_product_pdf();
    criterion_ridge_oracle();
    criterion_gig_means();
    criterion_noiseless_recovery();
    criterion_blocks_trend();
    criterion_angle_trend();
    criterion_noise_precision();
    criterion_determinism(simulate_path, config_path);

    std::printf("%d of 11 criteria failed\n", failures);
    return failures;
}
