#include "riscade/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "riscade/special.hpp"

namespace riscade {

namespace {

constexpr double kMinAngleSeparation = 1e-6;

bool too_close(const PathSet& paths, int i, int j) {
    bool close = std::abs(paths.azimuth[i] - paths.azimuth[j]) < kMinAngleSeparation &&
                 std::abs(paths.elevation[i] - paths.elevation[j]) < kMinAngleSeparation;
    if (!paths.bs_angle.empty())
        close = close && std::abs(paths.bs_angle[i] - paths.bs_angle[j]) < kMinAngleSeparation;
    return close;
}

PathSet draw_paths(RngStream& rng, int num_paths, double sigma2,
                   const AngleSector& sector, bool with_bs_angle) {
    if (num_paths < 1)
        throw std::invalid_argument("draw_paths: need at least one path");
    PathSet paths;
    paths.azimuth.resize(num_paths);
    paths.elevation.resize(num_paths);
    if (with_bs_angle) paths.bs_angle.resize(num_paths);
    for (int m = 0; m < num_paths; ++m) {
        for (;;) {
            paths.azimuth[m] = rng.uniform(-sector.azimuth_max, sector.azimuth_max);
            paths.elevation[m] = rng.uniform(-sector.elevation_max, sector.elevation_max);
            if (with_bs_angle)
                paths.bs_angle[m] = rng.uniform(-sector.azimuth_max, sector.azimuth_max);
            bool clash = false;
            for (int j = 0; j < m && !clash; ++j) clash = too_close(paths, m, j);
            if (!clash) break;
        }
    }
    paths.gains = sample_circ_gauss(rng, num_paths, sigma2);
    return paths;
}

} // namespace

double path_loss(const PathLossModel& model, double distance_m) {
    if (distance_m <= 0.0)
        throw std::invalid_argument("path_loss: distance must be positive");
    return std::pow(10.0, model.ref_loss_db / 10.0) *
           std::pow(distance_m / model.ref_distance_m, -model.exponent);
}

CVector steer_ula(int n, double phi, double spacing) {
    if (n < 1) throw std::invalid_argument("steer_ula: need at least one element");
    CVector a(n);
    const double step = 2.0 * M_PI * spacing * std::sin(phi);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i)
        a[i] = scale * std::polar(1.0, step * i);
    return a;
}

CVector steer_upa(int lh, int lv, double az, double el, double spacing) {
    if (lh < 1 || lv < 1) throw std::invalid_argument("steer_upa: need at least one element");
    CVector horizontal(lh), vertical(lv);
    const double hstep = 2.0 * M_PI * spacing * std::sin(az) * std::cos(el);
    const double vstep = 2.0 * M_PI * spacing * std::sin(el);
    const double hscale = 1.0 / std::sqrt(static_cast<double>(lh));
    const double vscale = 1.0 / std::sqrt(static_cast<double>(lv));
    for (int i = 0; i < lh; ++i) horizontal[i] = hscale * std::polar(1.0, hstep * i);
    for (int i = 0; i < lv; ++i) vertical[i] = vscale * std::polar(1.0, vstep * i);
    CVector a(lh * lv);
    for (int i = 0; i < lh; ++i)
        a.segment(static_cast<Eigen::Index>(i) * lv, lv) = horizontal[i] * vertical;
    return a;
}

CMatrix bs_steering_matrix(const ArrayGeometry& geom, const PathSet& paths) {
    CMatrix a(geom.bs_antennas, paths.count());
    for (int m = 0; m < paths.count(); ++m)
        a.col(m) = steer_ula(geom.bs_antennas, paths.bs_angle[m], geom.spacing);
    return a;
}

CMatrix ris_steering_matrix(const ArrayGeometry& geom, const PathSet& paths) {
    CMatrix a(geom.ris_elements(), paths.count());
    for (int m = 0; m < paths.count(); ++m)
        a.col(m) = steer_upa(geom.ris_horizontal, geom.ris_vertical,
                             paths.azimuth[m], paths.elevation[m], geom.spacing);
    return a;
}

CMatrix ris_bs_from_paths(const ArrayGeometry& geom, const PathSet& paths) {
    const double scale = std::sqrt(static_cast<double>(geom.bs_antennas) *
                                   geom.ris_elements() / paths.count());
    const CMatrix a_bs = bs_steering_matrix(geom, paths);
    const CMatrix a_ris = ris_steering_matrix(geom, paths);
    return a_bs * (scale * paths.gains).asDiagonal() * a_ris.adjoint();
}

CVector ue_ris_from_paths(const ArrayGeometry& geom, const PathSet& paths) {
    const double scale = std::sqrt(static_cast<double>(geom.ris_elements()) / paths.count());
    return ris_steering_matrix(geom, paths) * (scale * paths.gains);
}

std::pair<CMatrix, PathSet> draw_ris_bs_channel(RngStream& rng, const ArrayGeometry& geom,
                                                int num_paths, double sigma2,
                                                const AngleSector& sector) {
    PathSet paths = draw_paths(rng, num_paths, sigma2, sector, true);
    return {ris_bs_from_paths(geom, paths), std::move(paths)};
}

std::pair<CVector, PathSet> draw_ue_ris_channel(RngStream& rng, const ArrayGeometry& geom,
                                                int num_paths, double sigma2,
                                                const AngleSector& sector) {
    PathSet paths = draw_paths(rng, num_paths, sigma2, sector, false);
    return {ue_ris_from_paths(geom, paths), std::move(paths)};
}

CMatrix build_dictionary(const PathSet& paths_rb, const PathSet& paths_ur,
                         const ArrayGeometry& geom) {
    const CMatrix a_ris_rb = ris_steering_matrix(geom, paths_rb);    // L x M_RB
    const CMatrix a_ris_ur = ris_steering_matrix(geom, paths_ur);    // L x M_UR
    const CMatrix a_bs = bs_steering_matrix(geom, paths_rb);         // N x M_RB

    // ((A_R,RB^H kr A_R,UR^T)^T kr A_B,RB (I (x) 1^T)), column-wise Khatri-Rao
    const CMatrix inner =
        khatri_rao_cols(a_ris_rb.adjoint(), a_ris_ur.transpose()).transpose(); // L x M
    const CMatrix replicate = kron(CMatrix::Identity(paths_rb.count(), paths_rb.count()),
                                   CMatrix::Ones(1, paths_ur.count()));
    const CMatrix a_bs_tilde = a_bs * replicate;                     // N x M
    return khatri_rao_cols(inner, a_bs_tilde);                       // NL x M
}

CVector cascaded_gains(const PathSet& paths_rb, const PathSet& paths_ur,
                       const ArrayGeometry& geom) {
    const double scale_rb = std::sqrt(static_cast<double>(geom.bs_antennas) *
                                      geom.ris_elements() / paths_rb.count());
    const double scale_ur = std::sqrt(static_cast<double>(geom.ris_elements()) /
                                      paths_ur.count());
    const CVector a = scale_rb * paths_rb.gains;
    const CVector b = scale_ur * paths_ur.gains;
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

CVector cascade_vector(const CMatrix& ris_bs, const CVector& ue_ris) {
    return vec(ris_bs * ue_ris.asDiagonal());
}

double product_gaussian_pdf(std::complex<double> z, double sigma1, double sigma2) {
    if (sigma1 <= 0.0 || sigma2 <= 0.0)
        throw std::invalid_argument("product_gaussian_pdf: variances must be positive");
    const double r = std::abs(z);
    const double s = sigma1 * sigma2;
    return 2.0 / (M_PI * s * s) * bessel_k0(2.0 * r / s);
}

PathSet perturb_angles(const PathSet& paths, RngStream& rng, double delta2) {
    if (delta2 < 0.0)
        throw std::invalid_argument("perturb_angles: negative variance");
    const double stddev = std::sqrt(delta2);
    PathSet out = paths;
    for (auto& a : out.azimuth) a += rng.gaussian(stddev);
    for (auto& a : out.elevation) a += rng.gaussian(stddev);
    for (auto& a : out.bs_angle) a += rng.gaussian(stddev);
    return out;
}

ChannelRealization draw_channel(RngStream& rng, const ArrayGeometry& geom,
                                int paths_rb, double sigma2_rb,
                                int paths_ur, const std::vector<double>& sigma2_ur,
                                const AngleSector& sector) {
    ChannelRealization chan;
    chan.sigma2_rb = sigma2_rb;
    chan.sigma2_ur = sigma2_ur;
    std::tie(chan.ris_bs, chan.paths_rb) =
        draw_ris_bs_channel(rng, geom, paths_rb, sigma2_rb, sector);

    const int num_ue = static_cast<int>(sigma2_ur.size());
    chan.ue_ris.resize(num_ue);
    chan.paths_ur.resize(num_ue);
    chan.dictionary.resize(num_ue);
    chan.alpha.resize(num_ue);
    chan.cascaded.resize(num_ue);
    for (int k = 0; k < num_ue; ++k) {
        std::tie(chan.ue_ris[k], chan.paths_ur[k]) =
            draw_ue_ris_channel(rng, geom, paths_ur, sigma2_ur[k], sector);
        chan.dictionary[k] = build_dictionary(chan.paths_rb, chan.paths_ur[k], geom);
        chan.alpha[k] = cascaded_gains(chan.paths_rb, chan.paths_ur[k], geom);
        chan.cascaded[k] = cascade_vector(chan.ris_bs, chan.ue_ris[k]);
    }
    return chan;
}

} // namespace riscade
