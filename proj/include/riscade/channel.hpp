#ifndef RISCADE_CHANNEL_HPP
#define RISCADE_CHANNEL_HPP

#include <complex>
#include <utility>
#include <vector>

#include "riscade/linalg.hpp"
#include "riscade/rng.hpp"

namespace riscade {

/// BS uniform linear array plus RIS uniform planar array dimensions.
struct ArrayGeometry {
    int bs_antennas = 16;
    int ris_horizontal = 10;
    int ris_vertical = 10;
    double spacing = 0.5; // element spacing in wavelengths

    int ris_elements() const { return ris_horizontal * ris_vertical; }
};

/// Uniform angle priors for drawn paths: azimuths and BS angles on
/// [-azimuth_max, azimuth_max], elevations on [-elevation_max, elevation_max].
/// Restricted sectors keep drawn paths away from endfire.
struct AngleSector {
    double azimuth_max = M_PI / 3.0;
    double elevation_max = M_PI / 6.0;
};

/// One propagation link: per-path RIS-side azimuth/elevation angles, the
/// BS-side angle (RIS-BS link only, empty otherwise) and raw complex gains.
/// The deterministic sqrt(.../M) array-gain factor is not stored here; it is
/// applied where the channel matrices and cascaded gain vectors are formed.
struct PathSet {
    std::vector<double> azimuth;
    std::vector<double> elevation;
    std::vector<double> bs_angle;
    CVector gains;

    int count() const { return static_cast<int>(azimuth.size()); }
};

/// PL = mu0 * (d/d0)^(-eta) with mu0 in dB.
struct PathLossModel {
    double ref_loss_db = -20.0;
    double ref_distance_m = 1.0;
    double exponent = 2.0;
};

/// Linear power gain at distance d. Throws std::invalid_argument for d <= 0.
double path_loss(const PathLossModel& model, double distance_m);

/// Unit-norm ULA steering vector, entry i = exp(j*2*pi*spacing*i*sin(phi))/sqrt(n).
CVector steer_ula(int n, double phi, double spacing);

/// Unit-norm UPA steering vector: Kronecker product of a horizontal factor
/// with phase 2*pi*spacing*i*sin(az)*cos(el) and a vertical factor with
/// phase 2*pi*spacing*i*sin(el).
CVector steer_upa(int lh, int lv, double az, double el, double spacing);

/// N x M steering matrix at the BS from the path set's BS angles.
CMatrix bs_steering_matrix(const ArrayGeometry& geom, const PathSet& paths);

/// L x M steering matrix at the RIS from the path set's azimuth/elevation.
CMatrix ris_steering_matrix(const ArrayGeometry& geom, const PathSet& paths);

/// Assembles the RIS-BS channel G = A_B diag(scaled gains) A_R^H, the
/// sqrt(N*L/M) array gain folded into the gain vector.
CMatrix ris_bs_from_paths(const ArrayGeometry& geom, const PathSet& paths);

/// Assembles a UE-RIS channel f = A_R * (scaled gains), sqrt(L/M) folded in.
CVector ue_ris_from_paths(const ArrayGeometry& geom, const PathSet& paths);

/// Draws the RIS-BS link: angles uniform over the sector, gains i.i.d.
/// CN(0, sigma2). Paths closer than 1e-6 rad in every coordinate are redrawn
/// so dictionary columns cannot repeat exactly.
std::pair<CMatrix, PathSet> draw_ris_bs_channel(RngStream& rng, const ArrayGeometry& geom,
                                                int num_paths, double sigma2,
                                                const AngleSector& sector = {});

/// Draws one UE-RIS link, same conventions as draw_ris_bs_channel.
std::pair<CVector, PathSet> draw_ue_ris_channel(RngStream& rng, const ArrayGeometry& geom,
                                                int num_paths, double sigma2,
                                                const AngleSector& sector = {});

/// Cascade dictionary W (NL x M_RB*M_UR) built from the two path sets so
/// that vec(G diag(f)) = W * (alpha_RB (x) alpha_UR) for every gain draw.
CMatrix build_dictionary(const PathSet& paths_rb, const PathSet& paths_ur,
                         const ArrayGeometry& geom);

/// Cascaded gain vector alpha = (sqrt(NL/M_RB) g_RB) (x) (sqrt(L/M_UR) g_UR).
CVector cascaded_gains(const PathSet& paths_rb, const PathSet& paths_ur,
                       const ArrayGeometry& geom);

/// vec(G diag(f)): the vectorized cascaded channel.
CVector cascade_vector(const CMatrix& ris_bs, const CVector& ue_ris);

/// Density on the complex plane of the product of two independent zero-mean
/// circular Gaussians with variances sigma1^2, sigma2^2:
///   f(z) = 2 / (pi sigma1^2 sigma2^2) * K0(2|z| / (sigma1 sigma2)).
/// Diverges logarithmically at z = 0, where +inf is returned.
double product_gaussian_pdf(std::complex<double> z, double sigma1, double sigma2);

/// Returns a copy with every angle entry perturbed by independent N(0, delta2)
/// noise; gains are copied verbatim. Throws for delta2 < 0. Perturbed angles
/// may leave the drawing sector: they model imperfect angle estimates.
PathSet perturb_angles(const PathSet& paths, RngStream& rng, double delta2);

/// Ground truth for one trial: shared RIS-BS channel, per-UE links, and the
/// per-UE dictionary/gain/cascade triple satisfying c_k = W_k alpha_k.
struct ChannelRealization {
    CMatrix ris_bs;                    // G, N x L
    std::vector<CVector> ue_ris;       // f_k, length L
    std::vector<CMatrix> dictionary;   // W_k, NL x M_k
    std::vector<CVector> alpha;        // cascaded gains, length M_k
    std::vector<CVector> cascaded;     // c_k = vec(G diag f_k), length NL
    PathSet paths_rb;
    std::vector<PathSet> paths_ur;
    double sigma2_rb = 0.0;
    std::vector<double> sigma2_ur;

    int num_ue() const { return static_cast<int>(ue_ris.size()); }
};

/// Draws a full multi-UE realization; sigma2_ur carries one gain variance per UE.
ChannelRealization draw_channel(RngStream& rng, const ArrayGeometry& geom,
                                int paths_rb, double sigma2_rb,
                                int paths_ur, const std::vector<double>& sigma2_ur,
                                const AngleSector& sector = {});

} // namespace riscade

#endif
