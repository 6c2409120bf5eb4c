#include "riscade/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace riscade {

PilotBook gen_pilots(int tau, int num_ue) {
    if (tau < num_ue)
        throw std::invalid_argument("gen_pilots: tau must be at least the number of UEs");
    if (num_ue < 1)
        throw std::invalid_argument("gen_pilots: need at least one UE");
    PilotBook book;
    book.pilots.resize(tau, num_ue);
    for (int k = 0; k < num_ue; ++k)
        for (int u = 0; u < tau; ++u)
            book.pilots(u, k) = std::polar(1.0, 2.0 * M_PI * k * u / tau);
    return book;
}

RisProfile gen_ris_profile(RngStream& rng, int elements, int blocks) {
    if (elements < 1 || blocks < 1)
        throw std::invalid_argument("gen_ris_profile: dimensions must be positive");
    RisProfile profile;
    profile.s.resize(elements, blocks);
    for (int t = 0; t < blocks; ++t)
        for (int l = 0; l < elements; ++l)
            profile.s(l, t) = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
    return profile;
}

CMatrix sensing_matrix(const RisProfile& profile, double power, int bs_antennas) {
    return std::sqrt(power) *
           kron(profile.s.transpose(), CMatrix::Identity(bs_antennas, bs_antennas));
}

CVector simulate_slot(const ChannelRealization& chan, const RisProfile& profile,
                      const PilotBook& pilots, double power, RngStream& rng,
                      double noise_var, int block, int slot) {
    if (block < 0 || block >= profile.blocks())
        throw std::invalid_argument("simulate_slot: block out of range");
    if (slot < 0 || slot >= pilots.tau())
        throw std::invalid_argument("simulate_slot: slot out of range");

    const Eigen::Index n = chan.ris_bs.rows();
    CVector y = CVector::Zero(n);
    const auto s_t = profile.s.col(block);
    for (int k = 0; k < chan.num_ue(); ++k)
        y += chan.ris_bs * (s_t.cwiseProduct(chan.ue_ris[k])) * pilots.pilots(slot, k);
    y *= std::sqrt(power);
    y += sample_circ_gauss(rng, n, noise_var);
    return y;
}

CVector decorrelate(const CMatrix& slot_stack, const PilotBook& pilots, int ue) {
    if (ue < 0 || ue >= pilots.num_ue())
        throw std::invalid_argument("decorrelate: UE index out of range");
    if (slot_stack.cols() != pilots.tau())
        throw std::invalid_argument("decorrelate: slot count mismatch");
    return slot_stack * pilots.pilots.col(ue).conjugate() / static_cast<double>(pilots.tau());
}

MeasurementSet assemble(const ChannelRealization& chan, const RisProfile& profile,
                        const PilotBook& pilots, double power, RngStream& rng,
                        double noise_var) {
    const int num_ue = chan.num_ue();
    const int blocks = profile.blocks();
    const int tau = pilots.tau();
    const Eigen::Index n = chan.ris_bs.rows();
    if (pilots.num_ue() != num_ue)
        throw std::invalid_argument("assemble: pilot book does not match UE count");
    if (profile.elements() != chan.ris_bs.cols())
        throw std::invalid_argument("assemble: RIS profile does not match channel");

    std::vector<CMatrix> subblock(num_ue, CMatrix(n, blocks));
    CMatrix slot_stack(n, tau);
    for (int t = 0; t < blocks; ++t) {
        for (int u = 0; u < tau; ++u)
            slot_stack.col(u) = simulate_slot(chan, profile, pilots, power, rng,
                                              noise_var, t, u);
        for (int k = 0; k < num_ue; ++k)
            subblock[k].col(t) = decorrelate(slot_stack, pilots, k);
    }

    MeasurementSet meas;
    meas.sensing = sensing_matrix(profile, power, static_cast<int>(n));
    meas.noise_var = noise_var;
    meas.power = power;
    meas.tau = tau;
    meas.y.resize(num_ue);
    meas.effective.resize(num_ue);
    for (int k = 0; k < num_ue; ++k) {
        meas.y[k] = vec(subblock[k]);
        meas.effective[k] = meas.sensing * chan.dictionary[k];
    }
    return meas;
}

MeasurementSet assemble_direct(const ChannelRealization& chan, const RisProfile& profile,
                               const PilotBook& pilots, double power, RngStream& rng,
                               double noise_var) {
    const int num_ue = chan.num_ue();
    const Eigen::Index n = chan.ris_bs.rows();
    const int tau = pilots.tau();
    if (pilots.num_ue() != num_ue)
        throw std::invalid_argument("assemble_direct: pilot book does not match UE count");

    MeasurementSet meas;
    meas.sensing = sensing_matrix(profile, power, static_cast<int>(n));
    meas.noise_var = noise_var;
    meas.power = power;
    meas.tau = tau;
    meas.y.resize(num_ue);
    meas.effective.resize(num_ue);
    for (int k = 0; k < num_ue; ++k) {
        meas.y[k] = meas.sensing * chan.cascaded[k] +
                    sample_circ_gauss(rng, meas.sensing.rows(), noise_var / tau);
        meas.effective[k] = meas.sensing * chan.dictionary[k];
    }
    return meas;
}

} // namespace riscade
