#ifndef RISCADE_ESTIMATORS_HPP
#define RISCADE_ESTIMATORS_HPP

#include <complex>
#include <limits>

#include "riscade/linalg.hpp"

namespace riscade {

/// Shape/rate of the broad Gamma hyperpriors on the noise precision and the
/// per-component scale precisions.
struct Hyperpriors {
    double a = 1e-6;
    double b = 1e-6;
};

struct VIOptions {
    double tol = 1e-6;        // relative change of m_alpha between sweeps
    int max_iters = 200;
    double moment_floor = 1e-30; // floor on <|alpha_i|^2> before square roots
    double rate_floor = 1e-30;   // floor on the beta posterior rate
    double beta_cap = 1e12;      // cap on <beta> (normalized domain)
};

/// Mean-field posterior over (alpha, lambda, gamma, beta) for one UE.
/// mean_inv_lambda is the diagonal prior precision entering q(alpha); the
/// Student's-t variant stores its <gamma> there (same role) and leaves
/// mean_lambda untouched.
struct PosteriorState {
    CVector mean_alpha;           // m_alpha
    CMatrix cov_alpha;            // C_alpha, Hermitian PSD
    Eigen::VectorXd mean_lambda;
    Eigen::VectorXd mean_inv_lambda;
    Eigen::VectorXd mean_gamma;
    double mean_beta = 1.0;
    int iteration = 0;
    double last_change = std::numeric_limits<double>::infinity();
};

/// Broad start: zero mean, identity covariance, unit scale means, and a
/// scale-aware noise guess beta = 1 / (0.1 * mean |y_i|^2).
PosteriorState init_posterior(Eigen::Index num_components, const CVector& y,
                              const VIOptions& opts = {});

/// q(alpha) update: C = (<beta> S^H S + diag<lambda^-1>)^-1, m = <beta> C S^H y.
void update_q_alpha(PosteriorState& state, const CMatrix& s_ck, const CVector& y);

/// q(lambda) update (generalized inverse Gaussian posterior):
/// <lambda_i> = 2 sqrt(<|a_i|^2>)/sqrt(<gamma_i>) + 2/<gamma_i>,
/// <lambda_i^-1> = sqrt(<gamma_i>) / (2 sqrt(<|a_i|^2>)),
/// with <|a_i|^2> = |m_i|^2 + C_ii floored at moment_floor.
void update_q_lambda(PosteriorState& state, double moment_floor = 1e-30);

/// q(gamma) update: <gamma_i> = (a + 3/2) / (b + <lambda_i>/4).
void update_q_gamma(PosteriorState& state, const Hyperpriors& hp);

/// q(beta) update: <beta> = (a + NT) / (b + ||y - S m||^2 + tr(C S^H S)),
/// rate floored and the result capped per opts.
void update_q_beta(PosteriorState& state, const CMatrix& s_ck, const CVector& y,
                   const Hyperpriors& hp, const VIOptions& opts = {});

/// Student's-t (RVM) precision update: <gamma_i> = (a + 1) / (b + <|a_i|^2>),
/// written to both mean_gamma and mean_inv_lambda.
void update_q_gamma_student(PosteriorState& state, const Hyperpriors& hp,
                            double moment_floor = 1e-30);

struct EstimatorDiagnostics {
    int iterations = 0;
    double final_change = 0.0;
    // learned noise precision in input units; NaN for estimators without one
    double noise_precision = std::numeric_limits<double>::quiet_NaN();
};

struct EstimatorOutput {
    CVector c_hat;     // reconstructed cascaded channel, W * alpha_hat
    CVector alpha_hat;
    EstimatorDiagnostics diag;
};

/// Proposed estimator: mean-field VI under the complex adaptive Laplace
/// hierarchy, cycling the alpha/lambda/gamma/beta updates until the relative
/// change of m_alpha drops below opts.tol. Inputs are rescaled internally to
/// unit-RMS observation and unit-norm dictionary columns so the (a, b)
/// hyperpriors stay broad at any physical scale; outputs are mapped back.
EstimatorOutput estimate_vi_laplace(const CVector& y, const CMatrix& s_ck,
                                    const CMatrix& dictionary,
                                    const Hyperpriors& hp = {},
                                    const VIOptions& opts = {});

/// Baseline: VI with a Student's-t prior (complex RVM), same loop and
/// normalization, with the Gamma precision update in place of lambda/gamma.
EstimatorOutput estimate_vi_student(const CVector& y, const CMatrix& s_ck,
                                    const CMatrix& dictionary,
                                    const Hyperpriors& hp = {},
                                    const VIOptions& opts = {});

/// Baseline: minimum-norm least squares through a rank-revealing
/// factorization with relative pivot tolerance 1e-10.
EstimatorOutput estimate_ls(const CVector& y, const CMatrix& s_ck,
                            const CMatrix& dictionary);

/// Baseline: LMMSE in gain space with diagonal prior covariance,
/// alpha = D S^H (S D S^H + noise_var I)^-1 y, D = diag(prior_var).
EstimatorOutput estimate_lmmse(const CVector& y, const CMatrix& s_ck,
                               const CMatrix& dictionary,
                               const Eigen::VectorXd& prior_var, double noise_var);

/// Single-component complex adaptive Laplace density,
/// gamma/(2 pi) * exp(-sqrt(gamma) |alpha|). Validation oracle only.
double marginal_laplace_pdf(std::complex<double> alpha, double gamma);

} // namespace riscade

#endif
