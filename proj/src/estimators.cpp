#include "riscade/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace riscade {

namespace {

constexpr double kTiny = 1e-300;

Eigen::VectorXd second_moment(const PosteriorState& state, double floor_value) {
    return (state.mean_alpha.cwiseAbs2() + state.cov_alpha.diagonal().real())
        .cwiseMax(floor_value);
}

enum class Prior { Laplace, Student };

EstimatorOutput run_vi(const CVector& y, const CMatrix& s_ck, const CMatrix& dictionary,
                       const Hyperpriors& hp, const VIOptions& opts, Prior prior) {
    const Eigen::Index nt = y.size();
    const Eigen::Index m = s_ck.cols();
    if (s_ck.rows() != nt)
        throw std::invalid_argument("estimate_vi: observation/sensing dimension mismatch");

    // Rescale to unit-RMS observation and unit-norm columns; the gamma and
    // beta rates (b = 1e-6) are only broad for O(1) data, and the physical
    // path losses put ||y||^2 and |alpha_i|^2 many decades below that.
    const double y_rms = std::max(std::sqrt(y.squaredNorm() / nt), kTiny);
    Eigen::VectorXd col_norm(m);
    for (Eigen::Index j = 0; j < m; ++j)
        col_norm[j] = std::max(s_ck.col(j).norm(), kTiny);
    const CVector y_n = y / y_rms;
    const CMatrix s_n = s_ck * col_norm.cwiseInverse().asDiagonal();

    PosteriorState state = init_posterior(m, y_n, opts);
    CVector m_prev = state.mean_alpha;
    for (int it = 1; it <= opts.max_iters; ++it) {
        update_q_alpha(state, s_n, y_n);
        if (!state.mean_alpha.allFinite())
            throw std::runtime_error("estimate_vi: non-finite posterior mean at iteration " +
                                     std::to_string(it));
        if (prior == Prior::Laplace) {
            update_q_lambda(state, opts.moment_floor);
            update_q_gamma(state, hp);
        } else {
            update_q_gamma_student(state, hp, opts.moment_floor);
        }
        update_q_beta(state, s_n, y_n, hp, opts);

        state.iteration = it;
        state.last_change =
            (state.mean_alpha - m_prev).norm() / std::max(m_prev.norm(), kTiny);
        m_prev = state.mean_alpha;
        if (state.last_change < opts.tol) break;
    }

    EstimatorOutput out;
    out.alpha_hat = y_rms * state.mean_alpha.cwiseQuotient(
                                col_norm.cast<std::complex<double>>());
    out.c_hat = dictionary * out.alpha_hat;
    out.diag.iterations = state.iteration;
    out.diag.final_change = state.last_change;
    out.diag.noise_precision = state.mean_beta / (y_rms * y_rms);
    return out;
}

} // namespace

PosteriorState init_posterior(Eigen::Index num_components, const CVector& y,
                              const VIOptions& opts) {
    PosteriorState state;
    state.mean_alpha = CVector::Zero(num_components);
    state.cov_alpha = CMatrix::Identity(num_components, num_components);
    state.mean_lambda = Eigen::VectorXd::Ones(num_components);
    state.mean_inv_lambda = Eigen::VectorXd::Ones(num_components);
    state.mean_gamma = Eigen::VectorXd::Ones(num_components);
    const double mean_sq = std::max(y.squaredNorm() / std::max<Eigen::Index>(y.size(), 1),
                                    kTiny);
    state.mean_beta = std::min(1.0 / (0.1 * mean_sq), opts.beta_cap);
    return state;
}

void update_q_alpha(PosteriorState& state, const CMatrix& s_ck, const CVector& y) {
    const Eigen::Index m = s_ck.cols();
    CMatrix precision = state.mean_beta * (s_ck.adjoint() * s_ck);
    precision.diagonal() += state.mean_inv_lambda.cast<std::complex<double>>();
    CMatrix cov = hermitian_solve(precision, CMatrix::Identity(m, m));
    state.cov_alpha = 0.5 * (cov + cov.adjoint());
    state.mean_alpha = state.mean_beta * (state.cov_alpha * (s_ck.adjoint() * y));
}

void update_q_lambda(PosteriorState& state, double moment_floor) {
    const Eigen::VectorXd m2 = second_moment(state, moment_floor);
    const Eigen::VectorXd root_m2 = m2.cwiseSqrt();
    const Eigen::VectorXd root_gamma = state.mean_gamma.cwiseSqrt();
    state.mean_lambda = 2.0 * root_m2.cwiseQuotient(root_gamma) +
                        2.0 * state.mean_gamma.cwiseInverse();
    state.mean_inv_lambda = root_gamma.cwiseQuotient(2.0 * root_m2);
}

void update_q_gamma(PosteriorState& state, const Hyperpriors& hp) {
    state.mean_gamma =
        ((hp.a + 1.5) / (state.mean_lambda.array() / 4.0 + hp.b)).matrix();
}

void update_q_beta(PosteriorState& state, const CMatrix& s_ck, const CVector& y,
                   const Hyperpriors& hp, const VIOptions& opts) {
    const double residual = (y - s_ck * state.mean_alpha).squaredNorm();
    const double trace_term =
        (state.cov_alpha * (s_ck.adjoint() * s_ck)).trace().real();
    const double rate = std::max(hp.b + residual + trace_term, opts.rate_floor);
    state.mean_beta = std::min((hp.a + y.size()) / rate, opts.beta_cap);
}

void update_q_gamma_student(PosteriorState& state, const Hyperpriors& hp,
                            double moment_floor) {
    const Eigen::VectorXd m2 = second_moment(state, moment_floor);
    state.mean_gamma = ((hp.a + 1.0) / (m2.array() + hp.b)).matrix();
    state.mean_inv_lambda = state.mean_gamma;
}

EstimatorOutput estimate_vi_laplace(const CVector& y, const CMatrix& s_ck,
                                    const CMatrix& dictionary,
                                    const Hyperpriors& hp, const VIOptions& opts) {
    return run_vi(y, s_ck, dictionary, hp, opts, Prior::Laplace);
}

EstimatorOutput estimate_vi_student(const CVector& y, const CMatrix& s_ck,
                                    const CMatrix& dictionary,
                                    const Hyperpriors& hp, const VIOptions& opts) {
    return run_vi(y, s_ck, dictionary, hp, opts, Prior::Student);
}

EstimatorOutput estimate_ls(const CVector& y, const CMatrix& s_ck,
                            const CMatrix& dictionary) {
    Eigen::CompleteOrthogonalDecomposition<CMatrix> cod;
    cod.setThreshold(1e-10);
    cod.compute(s_ck);
    EstimatorOutput out;
    out.alpha_hat = cod.solve(y);
    out.c_hat = dictionary * out.alpha_hat;
    return out;
}

EstimatorOutput estimate_lmmse(const CVector& y, const CMatrix& s_ck,
                               const CMatrix& dictionary,
                               const Eigen::VectorXd& prior_var, double noise_var) {
    if (prior_var.size() != s_ck.cols())
        throw std::invalid_argument("estimate_lmmse: prior variance length mismatch");
    CMatrix gram = s_ck * prior_var.cast<std::complex<double>>().asDiagonal() *
                   s_ck.adjoint();
    gram.diagonal().array() += noise_var;
    const CVector x = hermitian_solve(gram, y);
    EstimatorOutput out;
    out.alpha_hat = prior_var.cast<std::complex<double>>().asDiagonal() *
                    (s_ck.adjoint() * x);
    out.c_hat = dictionary * out.alpha_hat;
    return out;
}

double marginal_laplace_pdf(std::complex<double> alpha, double gamma) {
    if (gamma <= 0.0)
        throw std::invalid_argument("marginal_laplace_pdf: gamma must be positive");
    return gamma / (2.0 * M_PI) * std::exp(-std::sqrt(gamma) * std::abs(alpha));
}

} // namespace riscade
