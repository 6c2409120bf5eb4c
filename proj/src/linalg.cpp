#include "riscade/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace riscade {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix khatri_rao_cols(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("khatri_rao_cols: column counts differ");
    CMatrix out(a.rows() * b.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out.col(j).segment(i * b.rows(), b.rows()) = a(i, j) * b.col(j);
    return out;
}

CVector vec(const CMatrix& m) {
    return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols)
        throw std::invalid_argument("unvec: size mismatch");
    return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

CMatrix hermitian_solve(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("hermitian_solve: matrix not square");
    if (a.rows() != b.rows())
        throw std::invalid_argument("hermitian_solve: dimension mismatch");

    const CMatrix h = 0.5 * (a + a.adjoint());
    Eigen::LLT<CMatrix> llt(h);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("hermitian_solve: Cholesky factorization failed, matrix not positive definite");

    CMatrix x = llt.solve(b);
    const double bnorm = b.norm();
    if (bnorm > 0.0) {
        for (int pass = 0; pass < 2; ++pass) {
            const CMatrix r = b - h * x;
            if (r.norm() <= 1e-13 * bnorm) break;
            x += llt.solve(r);
        }
    }
    return x;
}

bool all_finite(const CMatrix& m) {
    return m.allFinite();
}

} // namespace riscade
