#ifndef RISCADE_RNG_HPP
#define RISCADE_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace riscade {

/// Combines a running hash with one more 64-bit value (splitmix64 finalizer).
/// Used to derive per-trial and per-purpose seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v);

/// Deterministic random stream keyed by (seed, stream id).
///
/// xoshiro256++ core seeded through splitmix64, with hand-rolled uniform,
/// Box-Muller and circular complex Gaussian draws, so a given (seed, stream)
/// pair replays the identical sequence on any platform. Distinct stream ids
/// on the same seed give statistically independent sequences, which lets a
/// trial replay its channel, RIS-profile and noise draws separately.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Real N(0, stddev^2) via Box-Muller (two uniforms per draw).
    double gaussian(double stddev);
    /// Circularly-symmetric CN(0, variance): E|x|^2 = variance, zero
    /// pseudo-covariance. Throws std::invalid_argument for variance < 0.
    std::complex<double> circular_gaussian(double variance);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

private:
    std::array<std::uint64_t, 4> state_;
    std::uint64_t seed_;
    std::uint64_t stream_;
};

/// n i.i.d. CN(0, variance) entries. Throws std::invalid_argument for
/// variance < 0; variance == 0 yields an exact zero vector.
Eigen::VectorXcd sample_circ_gauss(RngStream& rng, Eigen::Index n, double variance);

} // namespace riscade

#endif
