#ifndef RISCADE_HARNESS_HPP
#define RISCADE_HARNESS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "riscade/channel.hpp"
#include "riscade/estimators.hpp"
#include "riscade/linalg.hpp"

namespace riscade {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Planar deployment in meters; UEs sit on a circle around ue_center.
struct DeploymentGeometry {
    double bs_x = 0.0, bs_y = 0.0;
    double ris_x = 350.0, ris_y = 10.0;
    double ue_center_x = 400.0, ue_center_y = 0.0;
    double ue_circle_radius_m = 5.0;
};

/// Full experiment configuration. Defaults reproduce the reference setup:
/// 16-antenna BS, 3 UEs, 10x10 RIS, 23 dBm uplink power, 80 MHz bandwidth,
/// -174 dBm/Hz noise density, 7 dB noise figure, path-loss exponents 2.2/2.1
/// from a -20 dB reference loss at 1 m, 2 RIS-BS and 3 UE-RIS paths, tau = K
/// pilot slots, and a = b = 1e-6 hyperpriors.
struct ScenarioConfig {
    int bs_antennas = 16;
    int num_ue = 3;
    int ris_horizontal = 10;
    int ris_vertical = 10;
    double element_spacing = 0.5;
    int paths_ris_bs = 2;
    int paths_ue_ris = 3;

    double power_dbm = 23.0;
    double bandwidth_hz = 8e7;
    double noise_density_dbm_hz = -174.0;
    double noise_figure_db = 7.0;
    double noise_variance_override = -1.0; // >= 0 replaces the derived value

    PathLossModel pathloss_ris_bs{-20.0, 1.0, 2.2};
    PathLossModel pathloss_ue_ris{-20.0, 1.0, 2.1};
    DeploymentGeometry geometry;
    AngleSector sector;

    int pilot_slots = 0; // 0 means one slot per UE (tau = K)

    Hyperpriors hyper;
    double vi_tol = 1e-6;
    int vi_max_iters = 200;
    bool tau_scaled_noise = true; // feed sigma_B^2/tau to the baselines

    std::string mode = "blocks"; // "blocks" sweeps T, "angle" sweeps delta2
    std::vector<int> t_list{2, 4, 6, 8, 10, 12};
    std::vector<double> delta2_list{0.0, 1e-4, 1e-3, 1e-2, 1e-1};
    int angle_mode_blocks = 6;   // T used by the angle-uncertainty sweep
    int trials = 100;
    std::uint64_t master_seed = 1;
    std::vector<std::string> estimators{"ls", "lmmse", "vi-s", "vi-laplace"};
    bool fast_path = true;
    bool timing = false; // real wall_ms breaks byte-identical output
    int threads = 0;     // 0 = library default
    std::string out_dir = "results";

    int tau() const { return pilot_slots > 0 ? pilot_slots : num_ue; }
};

/// sigma_B^2 = W * N0 * NF in linear watts.
double noise_variance(const ScenarioConfig& cfg);

double dbm_to_watt(double dbm);

/// (1/K) sum_k ||c_k - c_hat_k||^2 / ||c_k||^2. Throws on zero-norm truth.
double nmse(const std::vector<CVector>& truth, const std::vector<CVector>& estimates);

/// Per-trial seed: hash of (master seed, T, delta2 bits, trial index). The
/// mode tag is deliberately absent so an angle-mode trial at delta2 = 0
/// replays the matching blocks-mode trial bit for bit.
std::uint64_t trial_seed(std::uint64_t master_seed, int t_blocks, double delta2,
                         int trial);

struct EstimatorTrialRecord {
    double sq_err = 0.0;
    double truth_sq_norm = 0.0;
    int iterations = 0;
    double wall_ms = 0.0;
    double noise_precision = std::numeric_limits<double>::quiet_NaN();
};

struct TrialResult {
    int t_blocks = 0;
    double delta2 = 0.0;
    int trial = 0;
    // records[estimator][ue], estimator order as configured
    std::vector<std::vector<EstimatorTrialRecord>> records;

    /// Per-trial NMSE of one estimator (mean over UEs).
    double trial_nmse(int estimator) const;
};

/// Runs one seeded trial: draws channel/RIS/noise from dedicated substreams,
/// builds the estimators' dictionaries from true (delta2 = 0) or perturbed
/// angles, and runs every configured estimator on the identical data.
TrialResult run_trial(const ScenarioConfig& cfg, int t_blocks, double delta2,
                      std::uint64_t seed);

struct AggregateRow {
    int t_blocks = 0;
    double delta2 = 0.0;
    std::string estimator;
    double mean_nmse = 0.0;
    double median_nmse = 0.0;
    int trials = 0;
};

struct SweepResult {
    std::vector<TrialResult> trials;       // canonical (point, trial) order
    std::vector<AggregateRow> aggregates;  // canonical (point, estimator) order
    std::string mode;
    std::vector<std::string> estimator_names;
};

/// Executes the configured sweep. `parallel` picks the OpenMP task loop over
/// the serial reference loop; both fill preallocated slots and merge in
/// canonical order, so the results are identical byte for byte.
SweepResult run_sweep(const ScenarioConfig& cfg, bool parallel);

std::string trials_csv(const SweepResult& result);
std::string aggregate_csv(const SweepResult& result);

/// Writes trials.csv, aggregate.csv and manifest.txt under cfg.out_dir.
void write_outputs(const ScenarioConfig& cfg, const SweepResult& result);

/// key = value config file with [sections]; unknown keys are errors.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& text);
std::string serialize_config(const ScenarioConfig& cfg);

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

} // namespace riscade

#endif
