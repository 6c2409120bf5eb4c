#include "riscade/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace riscade {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
    x += kGolden;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
    std::uint64_t x = h ^ (v + kGolden + (h << 6) + (h >> 2));
    return splitmix64(x);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id) {
    std::uint64_t z = mix_seed(seed, stream_id);
    for (auto& s : state_) s = splitmix64(z);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + uniform() * (hi - lo);
}

double RngStream::gaussian(double stddev) {
    // (0,1] on the log argument so log() stays finite
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    return stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::complex<double> RngStream::circular_gaussian(double variance) {
    if (variance < 0.0)
        throw std::invalid_argument("circular_gaussian: negative variance");
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-variance * std::log(u1));
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

Eigen::VectorXcd sample_circ_gauss(RngStream& rng, Eigen::Index n, double variance) {
    if (variance < 0.0)
        throw std::invalid_argument("sample_circ_gauss: negative variance");
    Eigen::VectorXcd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = rng.circular_gaussian(variance);
    return out;
}

} // namespace riscade
