#include "riscade/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "riscade/measurement.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace riscade {

namespace {

// substream ids: channel, RIS profile, noise, angle perturbation, UE placement
enum Stream : std::uint64_t {
    kChannel = 1,
    kRisProfile = 2,
    kNoise = 3,
    kPerturb = 4,
    kPlacement = 5,
};

enum class EstimatorKind { Ls, Lmmse, ViStudent, ViLaplace };

EstimatorKind estimator_kind(const std::string& name) {
    if (name == "ls") return EstimatorKind::Ls;
    if (name == "lmmse") return EstimatorKind::Lmmse;
    if (name == "vi-s") return EstimatorKind::ViStudent;
    if (name == "vi-laplace") return EstimatorKind::ViLaplace;
    throw ConfigError("unknown estimator '" + name + "'");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void validate_config(const ScenarioConfig& cfg) {
    if (cfg.bs_antennas < 1 || cfg.num_ue < 1 || cfg.ris_horizontal < 1 ||
        cfg.ris_vertical < 1 || cfg.paths_ris_bs < 1 || cfg.paths_ue_ris < 1)
        throw ConfigError("all counts must be at least 1");
    if (cfg.pilot_slots != 0 && cfg.pilot_slots < cfg.num_ue)
        throw ConfigError("pilot_slots must be at least the number of UEs");
    if (!(std::isfinite(cfg.power_dbm) && std::isfinite(cfg.bandwidth_hz) &&
          std::isfinite(cfg.noise_density_dbm_hz) && std::isfinite(cfg.noise_figure_db)))
        throw ConfigError("powers must be finite");
    if (cfg.element_spacing <= 0.0) throw ConfigError("element_spacing must be positive");
    if (cfg.mode != "blocks" && cfg.mode != "angle")
        throw ConfigError("mode must be 'blocks' or 'angle'");
    if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
    if (cfg.mode == "blocks" && cfg.t_list.empty())
        throw ConfigError("t_list must not be empty");
    if (cfg.mode == "angle" && cfg.delta2_list.empty())
        throw ConfigError("delta2_list must not be empty");
    for (int t : cfg.t_list)
        if (t < 1) throw ConfigError("every T must be at least 1");
    for (double d : cfg.delta2_list)
        if (d < 0.0) throw ConfigError("delta2 values must be nonnegative");
    if (cfg.angle_mode_blocks < 1) throw ConfigError("angle_mode_blocks must be at least 1");
    if (cfg.estimators.empty()) throw ConfigError("estimator list must not be empty");
    for (const auto& e : cfg.estimators) estimator_kind(e);
    if (cfg.threads < 0) throw ConfigError("threads must be nonnegative");
    if (cfg.vi_max_iters < 1) throw ConfigError("vi_max_iters must be at least 1");
}

} // namespace

double dbm_to_watt(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double noise_variance(const ScenarioConfig& cfg) {
    const double dbm = cfg.noise_density_dbm_hz + 10.0 * std::log10(cfg.bandwidth_hz) +
                       cfg.noise_figure_db;
    return dbm_to_watt(dbm);
}

double nmse(const std::vector<CVector>& truth, const std::vector<CVector>& estimates) {
    if (truth.size() != estimates.size() || truth.empty())
        throw std::invalid_argument("nmse: mismatched or empty inputs");
    double acc = 0.0;
    for (std::size_t k = 0; k < truth.size(); ++k) {
        const double denom = truth[k].squaredNorm();
        if (denom <= 0.0) throw std::invalid_argument("nmse: zero-norm truth");
        acc += (truth[k] - estimates[k]).squaredNorm() / denom;
    }
    return acc / static_cast<double>(truth.size());
}

std::uint64_t trial_seed(std::uint64_t master_seed, int t_blocks, double delta2,
                         int trial) {
    std::uint64_t delta_bits = 0;
    std::memcpy(&delta_bits, &delta2, sizeof(delta_bits));
    std::uint64_t h = mix_seed(master_seed, static_cast<std::uint64_t>(t_blocks));
    h = mix_seed(h, delta_bits);
    return mix_seed(h, static_cast<std::uint64_t>(trial));
}

double TrialResult::trial_nmse(int estimator) const {
    const auto& per_ue = records.at(estimator);
    double acc = 0.0;
    for (const auto& rec : per_ue) acc += rec.sq_err / rec.truth_sq_norm;
    return acc / static_cast<double>(per_ue.size());
}

TrialResult run_trial(const ScenarioConfig& cfg, int t_blocks, double delta2,
                      std::uint64_t seed) {
    const ArrayGeometry geom{cfg.bs_antennas, cfg.ris_horizontal, cfg.ris_vertical,
                             cfg.element_spacing};
    const int num_ue = cfg.num_ue;
    const int tau = cfg.tau();

    RngStream chan_rng(seed, kChannel);
    RngStream ris_rng(seed, kRisProfile);
    RngStream noise_rng(seed, kNoise);
    RngStream perturb_rng(seed, kPerturb);
    RngStream place_rng(seed, kPlacement);

    const auto& g = cfg.geometry;
    const double d_rb = std::hypot(g.ris_x - g.bs_x, g.ris_y - g.bs_y);
    const double sigma2_rb = path_loss(cfg.pathloss_ris_bs, d_rb);
    std::vector<double> sigma2_ur(num_ue);
    for (int k = 0; k < num_ue; ++k) {
        const double theta = place_rng.uniform(0.0, 2.0 * M_PI);
        const double ue_x = g.ue_center_x + g.ue_circle_radius_m * std::cos(theta);
        const double ue_y = g.ue_center_y + g.ue_circle_radius_m * std::sin(theta);
        sigma2_ur[k] = path_loss(cfg.pathloss_ue_ris,
                                 std::hypot(ue_x - g.ris_x, ue_y - g.ris_y));
    }

    const ChannelRealization chan =
        draw_channel(chan_rng, geom, cfg.paths_ris_bs, sigma2_rb, cfg.paths_ue_ris,
                     sigma2_ur, cfg.sector);
    const RisProfile profile = gen_ris_profile(ris_rng, geom.ris_elements(), t_blocks);
    const PilotBook pilots = gen_pilots(tau, num_ue);

    const double sigma2_b = cfg.noise_variance_override >= 0.0
                                ? cfg.noise_variance_override
                                : noise_variance(cfg);
    const double power = dbm_to_watt(cfg.power_dbm);
    const MeasurementSet meas =
        cfg.fast_path ? assemble_direct(chan, profile, pilots, power, noise_rng, sigma2_b)
                      : assemble(chan, profile, pilots, power, noise_rng, sigma2_b);

    // Estimators see the true dictionary, or one rebuilt from perturbed angles.
    const std::vector<CMatrix>* dict = &chan.dictionary;
    const std::vector<CMatrix>* effective = &meas.effective;
    std::vector<CMatrix> dict_perturbed, effective_perturbed;
    if (delta2 > 0.0) {
        const PathSet rb = perturb_angles(chan.paths_rb, perturb_rng, delta2);
        dict_perturbed.resize(num_ue);
        effective_perturbed.resize(num_ue);
        for (int k = 0; k < num_ue; ++k) {
            const PathSet ur = perturb_angles(chan.paths_ur[k], perturb_rng, delta2);
            dict_perturbed[k] = build_dictionary(rb, ur, geom);
            effective_perturbed[k] = meas.sensing * dict_perturbed[k];
        }
        dict = &dict_perturbed;
        effective = &effective_perturbed;
    }

    const double est_noise_var = cfg.tau_scaled_noise ? sigma2_b / tau : sigma2_b;
    const double l = geom.ris_elements();
    const double gain_var_scale = (cfg.bs_antennas * l / cfg.paths_ris_bs) *
                                  (l / cfg.paths_ue_ris) * sigma2_rb;

    VIOptions vi_opts;
    vi_opts.tol = cfg.vi_tol;
    vi_opts.max_iters = cfg.vi_max_iters;

    TrialResult result;
    result.t_blocks = t_blocks;
    result.delta2 = delta2;
    result.records.resize(cfg.estimators.size(),
                          std::vector<EstimatorTrialRecord>(num_ue));
    for (std::size_t e = 0; e < cfg.estimators.size(); ++e) {
        const EstimatorKind kind = estimator_kind(cfg.estimators[e]);
        for (int k = 0; k < num_ue; ++k) {
            const auto start = std::chrono::steady_clock::now();
            EstimatorOutput out;
            switch (kind) {
            case EstimatorKind::Ls:
                out = estimate_ls(meas.y[k], (*effective)[k], (*dict)[k]);
                break;
            case EstimatorKind::Lmmse: {
                const Eigen::VectorXd prior_var = Eigen::VectorXd::Constant(
                    (*effective)[k].cols(), gain_var_scale * sigma2_ur[k]);
                out = estimate_lmmse(meas.y[k], (*effective)[k], (*dict)[k], prior_var,
                                     est_noise_var);
                break;
            }
            case EstimatorKind::ViStudent:
                out = estimate_vi_student(meas.y[k], (*effective)[k], (*dict)[k],
                                          cfg.hyper, vi_opts);
                break;
            case EstimatorKind::ViLaplace:
                out = estimate_vi_laplace(meas.y[k], (*effective)[k], (*dict)[k],
                                          cfg.hyper, vi_opts);
                break;
            }
            auto& rec = result.records[e][k];
            rec.sq_err = (chan.cascaded[k] - out.c_hat).squaredNorm();
            rec.truth_sq_norm = chan.cascaded[k].squaredNorm();
            rec.iterations = out.diag.iterations;
            rec.noise_precision = out.diag.noise_precision;
            if (cfg.timing) {
                const auto stop = std::chrono::steady_clock::now();
                rec.wall_ms =
                    std::chrono::duration<double, std::milli>(stop - start).count();
            }
        }
    }
    return result;
}

SweepResult run_sweep(const ScenarioConfig& cfg, bool parallel) {
    validate_config(cfg);

    struct Point {
        int t_blocks;
        double delta2;
    };
    std::vector<Point> points;
    if (cfg.mode == "blocks") {
        for (int t : cfg.t_list) points.push_back({t, 0.0});
    } else {
        for (double d : cfg.delta2_list) points.push_back({cfg.angle_mode_blocks, d});
    }

    const int tasks = static_cast<int>(points.size()) * cfg.trials;
    SweepResult result;
    result.mode = cfg.mode;
    result.estimator_names = cfg.estimators;
    result.trials.resize(tasks);
    std::vector<std::string> errors(tasks);

    auto run_task = [&](int idx) {
        const Point& p = points[idx / cfg.trials];
        const int trial = idx % cfg.trials;
        try {
            TrialResult r = run_trial(cfg, p.t_blocks, p.delta2,
                                      trial_seed(cfg.master_seed, p.t_blocks, p.delta2,
                                                 trial));
            r.trial = trial;
            result.trials[idx] = std::move(r);
        } catch (const std::exception& ex) {
            std::ostringstream msg;
            msg << "trial failed (mode=" << cfg.mode << ", T=" << p.t_blocks
                << ", delta2=" << fmt_double(p.delta2) << ", trial=" << trial
                << "): " << ex.what();
            errors[idx] = msg.str();
        }
    };

    if (parallel) {
#ifdef _OPENMP
        const int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int i = 0; i < tasks; ++i) run_task(i);
#else
        for (int i = 0; i < tasks; ++i) run_task(i);
#endif
    } else {
        for (int i = 0; i < tasks; ++i) run_task(i);
    }

    for (const auto& err : errors)
        if (!err.empty()) throw NumericalError(err);

    // aggregates in canonical (point, estimator) order
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        for (std::size_t e = 0; e < cfg.estimators.size(); ++e) {
            std::vector<double> values(cfg.trials);
            double sum = 0.0;
            for (int t = 0; t < cfg.trials; ++t) {
                values[t] = result.trials[pi * cfg.trials + t].trial_nmse(
                    static_cast<int>(e));
                sum += values[t];
            }
            std::sort(values.begin(), values.end());
            const int n = cfg.trials;
            const double median = (n % 2 == 1)
                                      ? values[n / 2]
                                      : 0.5 * (values[n / 2 - 1] + values[n / 2]);
            AggregateRow row;
            row.t_blocks = points[pi].t_blocks;
            row.delta2 = points[pi].delta2;
            row.estimator = cfg.estimators[e];
            row.mean_nmse = sum / n;
            row.median_nmse = median;
            row.trials = n;
            result.aggregates.push_back(std::move(row));
        }
    }
    return result;
}

std::string trials_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "mode,T,delta2,trial,ue,estimator,sq_err,truth_sq_norm,iters,wall_ms\n";
    for (const auto& trial : result.trials) {
        for (std::size_t e = 0; e < result.estimator_names.size(); ++e) {
            for (std::size_t k = 0; k < trial.records[e].size(); ++k) {
                const auto& rec = trial.records[e][k];
                out << result.mode << ',' << trial.t_blocks << ','
                    << fmt_double(trial.delta2) << ',' << trial.trial << ',' << k << ','
                    << result.estimator_names[e] << ',' << fmt_double(rec.sq_err) << ','
                    << fmt_double(rec.truth_sq_norm) << ',' << rec.iterations << ','
                    << fmt_double(rec.wall_ms) << '\n';
            }
        }
    }
    return out.str();
}

std::string aggregate_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "mode,T,delta2,estimator,mean_nmse,median_nmse,trials\n";
    for (const auto& row : result.aggregates) {
        out << result.mode << ',' << row.t_blocks << ',' << fmt_double(row.delta2) << ','
            << row.estimator << ',' << fmt_double(row.mean_nmse) << ','
            << fmt_double(row.median_nmse) << ',' << row.trials << '\n';
    }
    return out.str();
}

void write_outputs(const ScenarioConfig& cfg, const SweepResult& result) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const auto write_file = [&](const std::string& name, const std::string& text) {
        std::ofstream out(fs::path(cfg.out_dir) / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + name + " in " + cfg.out_dir);
        out << text;
    };
    write_file("trials.csv", trials_csv(result));
    write_file("aggregate.csv", aggregate_csv(result));
    write_file("manifest.txt", serialize_config(cfg));
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for " + key + ": '" + v + "'");
    }
}

int to_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return static_cast<int>(d);
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + key + ": '" + v + "'");
    }
}

std::uint64_t to_u64(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const unsigned long long d = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("invalid seed for " + key + ": '" + v + "'");
    }
}

bool to_bool(const std::string& v, const std::string& key) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw ConfigError("invalid on/off value for " + key + ": '" + v + "'");
}

void apply_key(ScenarioConfig& cfg, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string full = section + "." + key;
    if (section == "scenario") {
        if (key == "bs_antennas") cfg.bs_antennas = to_int(value, full);
        else if (key == "ues") cfg.num_ue = to_int(value, full);
        else if (key == "ris_horizontal") cfg.ris_horizontal = to_int(value, full);
        else if (key == "ris_vertical") cfg.ris_vertical = to_int(value, full);
        else if (key == "element_spacing") cfg.element_spacing = to_double(value, full);
        else if (key == "paths_ris_bs") cfg.paths_ris_bs = to_int(value, full);
        else if (key == "paths_ue_ris") cfg.paths_ue_ris = to_int(value, full);
        else if (key == "power_dbm") cfg.power_dbm = to_double(value, full);
        else if (key == "bandwidth_hz") cfg.bandwidth_hz = to_double(value, full);
        else if (key == "noise_density_dbm_hz") cfg.noise_density_dbm_hz = to_double(value, full);
        else if (key == "noise_figure_db") cfg.noise_figure_db = to_double(value, full);
        else if (key == "noise_variance_override") cfg.noise_variance_override = to_double(value, full);
        else if (key == "pathloss_ref_db") {
            cfg.pathloss_ris_bs.ref_loss_db = to_double(value, full);
            cfg.pathloss_ue_ris.ref_loss_db = cfg.pathloss_ris_bs.ref_loss_db;
        } else if (key == "pathloss_ref_dist_m") {
            cfg.pathloss_ris_bs.ref_distance_m = to_double(value, full);
            cfg.pathloss_ue_ris.ref_distance_m = cfg.pathloss_ris_bs.ref_distance_m;
        } else if (key == "pathloss_exp_ris_bs") cfg.pathloss_ris_bs.exponent = to_double(value, full);
        else if (key == "pathloss_exp_ue_ris") cfg.pathloss_ue_ris.exponent = to_double(value, full);
        else if (key == "bs_x") cfg.geometry.bs_x = to_double(value, full);
        else if (key == "bs_y") cfg.geometry.bs_y = to_double(value, full);
        else if (key == "ris_x") cfg.geometry.ris_x = to_double(value, full);
        else if (key == "ris_y") cfg.geometry.ris_y = to_double(value, full);
        else if (key == "ue_center_x") cfg.geometry.ue_center_x = to_double(value, full);
        else if (key == "ue_center_y") cfg.geometry.ue_center_y = to_double(value, full);
        else if (key == "ue_circle_radius_m") cfg.geometry.ue_circle_radius_m = to_double(value, full);
        else if (key == "azimuth_sector_rad") cfg.sector.azimuth_max = to_double(value, full);
        else if (key == "elevation_sector_rad") cfg.sector.elevation_max = to_double(value, full);
        else if (key == "pilot_slots") cfg.pilot_slots = to_int(value, full);
        else throw ConfigError("unknown key " + full);
    } else if (section == "estimator") {
        if (key == "hyper_a") cfg.hyper.a = to_double(value, full);
        else if (key == "hyper_b") cfg.hyper.b = to_double(value, full);
        else if (key == "vi_tol") cfg.vi_tol = to_double(value, full);
        else if (key == "vi_max_iters") cfg.vi_max_iters = to_int(value, full);
        else if (key == "tau_scaled_noise") cfg.tau_scaled_noise = to_bool(value, full);
        else throw ConfigError("unknown key " + full);
    } else if (section == "sweep") {
        if (key == "mode") cfg.mode = value;
        else if (key == "t_list") cfg.t_list = parse_int_list(value);
        else if (key == "delta2_list") cfg.delta2_list = parse_double_list(value);
        else if (key == "angle_mode_blocks") cfg.angle_mode_blocks = to_int(value, full);
        else if (key == "trials") cfg.trials = to_int(value, full);
        else if (key == "seed") cfg.master_seed = to_u64(value, full);
        else if (key == "estimators") cfg.estimators = split_list(value);
        else if (key == "fast_path") cfg.fast_path = to_bool(value, full);
        else if (key == "threads") cfg.threads = to_int(value, full);
        else if (key == "timing") cfg.timing = to_bool(value, full);
        else throw ConfigError("unknown key " + full);
    } else if (section == "output") {
        if (key == "dir") cfg.out_dir = value;
        else throw ConfigError("unknown key " + full);
    } else {
        throw ConfigError("unknown section [" + section + "]");
    }
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += items[i];
    }
    return out;
}

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) out.push_back(to_int(item, "list entry"));
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(to_double(item, "list entry"));
    return out;
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside a section");
        apply_key(cfg, section, key, value);
    }
    validate_config(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "[scenario]\n";
    out << "bs_antennas = " << cfg.bs_antennas << "\n";
    out << "ues = " << cfg.num_ue << "\n";
    out << "ris_horizontal = " << cfg.ris_horizontal << "\n";
    out << "ris_vertical = " << cfg.ris_vertical << "\n";
    out << "element_spacing = " << fmt_double(cfg.element_spacing) << "\n";
    out << "paths_ris_bs = " << cfg.paths_ris_bs << "\n";
    out << "paths_ue_ris = " << cfg.paths_ue_ris << "\n";
    out << "power_dbm = " << fmt_double(cfg.power_dbm) << "\n";
    out << "bandwidth_hz = " << fmt_double(cfg.bandwidth_hz) << "\n";
    out << "noise_density_dbm_hz = " << fmt_double(cfg.noise_density_dbm_hz) << "\n";
    out << "noise_figure_db = " << fmt_double(cfg.noise_figure_db) << "\n";
    out << "noise_variance_override = " << fmt_double(cfg.noise_variance_override) << "\n";
    out << "pathloss_ref_db = " << fmt_double(cfg.pathloss_ris_bs.ref_loss_db) << "\n";
    out << "pathloss_ref_dist_m = " << fmt_double(cfg.pathloss_ris_bs.ref_distance_m) << "\n";
    out << "pathloss_exp_ris_bs = " << fmt_double(cfg.pathloss_ris_bs.exponent) << "\n";
    out << "pathloss_exp_ue_ris = " << fmt_double(cfg.pathloss_ue_ris.exponent) << "\n";
    out << "bs_x = " << fmt_double(cfg.geometry.bs_x) << "\n";
    out << "bs_y = " << fmt_double(cfg.geometry.bs_y) << "\n";
    out << "ris_x = " << fmt_double(cfg.geometry.ris_x) << "\n";
    out << "ris_y = " << fmt_double(cfg.geometry.ris_y) << "\n";
    out << "ue_center_x = " << fmt_double(cfg.geometry.ue_center_x) << "\n";
    out << "ue_center_y = " << fmt_double(cfg.geometry.ue_center_y) << "\n";
    out << "ue_circle_radius_m = " << fmt_double(cfg.geometry.ue_circle_radius_m) << "\n";
    out << "azimuth_sector_rad = " << fmt_double(cfg.sector.azimuth_max) << "\n";
    out << "elevation_sector_rad = " << fmt_double(cfg.sector.elevation_max) << "\n";
    out << "pilot_slots = " << cfg.pilot_slots << "\n";
    out << "\n[estimator]\n";
    out << "hyper_a = " << fmt_double(cfg.hyper.a) << "\n";
    out << "hyper_b = " << fmt_double(cfg.hyper.b) << "\n";
    out << "vi_tol = " << fmt_double(cfg.vi_tol) << "\n";
    out << "vi_max_iters = " << cfg.vi_max_iters << "\n";
    out << "tau_scaled_noise = " << (cfg.tau_scaled_noise ? "on" : "off") << "\n";
    out << "\n[sweep]\n";
    out << "mode = " << cfg.mode << "\n";
    {
        std::vector<std::string> ts;
        for (int t : cfg.t_list) ts.push_back(std::to_string(t));
        out << "t_list = " << join_list(ts) << "\n";
    }
    {
        std::vector<std::string> ds;
        for (double d : cfg.delta2_list) ds.push_back(fmt_double(d));
        out << "delta2_list = " << join_list(ds) << "\n";
    }
    out << "angle_mode_blocks = " << cfg.angle_mode_blocks << "\n";
    out << "trials = " << cfg.trials << "\n";
    out << "seed = " << cfg.master_seed << "\n";
    out << "estimators = " << join_list(cfg.estimators) << "\n";
    out << "fast_path = " << (cfg.fast_path ? "on" : "off") << "\n";
    out << "threads = " << cfg.threads << "\n";
    out << "timing = " << (cfg.timing ? "on" : "off") << "\n";
    out << "\n[output]\n";
    out << "dir = " << cfg.out_dir << "\n";
    return out.str();
}

} // namespace riscade
