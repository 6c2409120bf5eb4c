#ifndef RISCADE_MEASUREMENT_HPP
#define RISCADE_MEASUREMENT_HPP

#include <vector>

#include "riscade/channel.hpp"
#include "riscade/linalg.hpp"
#include "riscade/rng.hpp"

namespace riscade {

/// Orthogonal pilot book: tau x K matrix of unit-modulus DFT columns with
/// x_k^T x_g^* = tau * delta_{kg} exactly.
struct PilotBook {
    CMatrix pilots; // tau x K, column k is UE k's sequence

    int tau() const { return static_cast<int>(pilots.rows()); }
    int num_ue() const { return static_cast<int>(pilots.cols()); }
};

/// Throws std::invalid_argument when tau < num_ue (orthogonality impossible).
PilotBook gen_pilots(int tau, int num_ue);

/// RIS reflection schedule S in C^{L x T}, unit-modulus entries with phases
/// i.i.d. uniform on [0, 2pi).
struct RisProfile {
    CMatrix s; // L x T

    int blocks() const { return static_cast<int>(s.cols()); }
    int elements() const { return static_cast<int>(s.rows()); }
};

RisProfile gen_ris_profile(RngStream& rng, int elements, int blocks);

/// Stacked sensing operator S_bar = sqrt(P) (S^T (x) I_N), NT x NL.
CMatrix sensing_matrix(const RisProfile& profile, double power, int bs_antennas);

/// Received N-vector for subblock `block`, slot `slot` (0-based):
/// sqrt(P) sum_k G diag(s[block]) f_k x_k[slot] + fresh CN(0, noise_var) noise.
CVector simulate_slot(const ChannelRealization& chan, const RisProfile& profile,
                      const PilotBook& pilots, double power, RngStream& rng,
                      double noise_var, int block, int slot);

/// Pilot decorrelation for one UE: (1/tau) Y[t] x_k^*, an N-vector.
CVector decorrelate(const CMatrix& slot_stack, const PilotBook& pilots, int ue);

/// Per-UE stacked observations plus the sensing operators they obey:
/// y_k = S_bar c_k + n_k with n_k of per-entry variance noise_var / tau,
/// and effective[k] = S_bar * W_k.
struct MeasurementSet {
    std::vector<CVector> y;        // NT per UE
    CMatrix sensing;               // S_bar, NT x NL
    std::vector<CMatrix> effective; // S_c,k = S_bar W_k, NT x M_k
    double noise_var = 0.0;        // sigma_B^2 at the slot level, linear watts
    double power = 0.0;            // transmit power, linear watts
    int tau = 1;
};

/// Full slot-level protocol: simulates all T*tau slots, decorrelates each
/// subblock per UE, stacks and vectorizes. Noise is drawn slot by slot in
/// (block, slot) order, one length-N vector per slot.
MeasurementSet assemble(const ChannelRealization& chan, const RisProfile& profile,
                        const PilotBook& pilots, double power, RngStream& rng,
                        double noise_var);

/// Fast path: y_k = S_bar c_k + CN(0, noise_var/tau) drawn directly, one
/// length-NT vector per UE in UE order. Statistically equivalent to
/// assemble(); the slot-level path is the reference and stays in the tests.
MeasurementSet assemble_direct(const ChannelRealization& chan, const RisProfile& profile,
                               const PilotBook& pilots, double power, RngStream& rng,
                               double noise_var);

} // namespace riscade

#endif
