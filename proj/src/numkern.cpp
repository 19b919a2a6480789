#include "hodmd/numkern.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <string>

namespace hodmd {

namespace {

void require_finite(const Eigen::Ref<const RealMatrix>& m, const char* who) {
    if (!m.allFinite()) {
        throw InvalidInput(std::string(who) + ": input contains NaN or Inf");
    }
}

}  // namespace

SvdResult svd(const Eigen::Ref<const RealMatrix>& m) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw InvalidInput("svd: empty matrix");
    }
    require_finite(m, "svd");

    Eigen::BDCSVD<RealMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success) {
        throw NumericalFailure("svd: decomposition did not converge");
    }
    SvdResult out;
    out.u = dec.matrixU();
    out.sigma = dec.singularValues();
    out.vt = dec.matrixV().transpose();
    return out;
}

EigResult eig(const Eigen::Ref<const ComplexMatrix>& m) {
    if (m.rows() != m.cols()) {
        throw InvalidInput("eig: matrix must be square, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (m.size() == 0) {
        throw InvalidInput("eig: empty matrix");
    }
    if (!m.allFinite()) {
        throw InvalidInput("eig: input contains NaN or Inf");
    }

    Eigen::ComplexEigenSolver<ComplexMatrix> dec(m, /*computeEigenvectors=*/true);
    if (dec.info() != Eigen::Success) {
        throw NumericalFailure("eig: iteration did not converge");
    }
    EigResult out;
    out.values = dec.eigenvalues();
    out.vectors = dec.eigenvectors();
    // ComplexEigenSolver already returns unit columns; renormalize anyway so
    // the contract does not depend on kernel internals.
    for (Index j = 0; j < out.vectors.cols(); ++j) {
        const double n = out.vectors.col(j).norm();
        if (n > 0.0) {
            out.vectors.col(j) /= n;
        }
    }
    return out;
}

ComplexVector pinv_apply(const Eigen::Ref<const ComplexMatrix>& phi,
                         const Eigen::Ref<const ComplexVector>& y,
                         double rcond) {
    if (phi.rows() != y.size()) {
        throw InvalidInput("pinv_apply: dimension mismatch, phi has " +
                           std::to_string(phi.rows()) + " rows but y has " +
                           std::to_string(y.size()) + " entries");
    }
    if (!phi.allFinite() || !y.allFinite()) {
        throw InvalidInput("pinv_apply: input contains NaN or Inf");
    }

    Eigen::JacobiSVD<ComplexMatrix> dec(phi, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sigma = dec.singularValues();
    const double cutoff = sigma.size() > 0 ? rcond * sigma(0) : 0.0;

    // b = V * diag(1/sigma_i for sigma_i > cutoff, else 0) * U^H * y
    ComplexVector uy = dec.matrixU().adjoint() * y;
    for (Index i = 0; i < sigma.size(); ++i) {
        uy(i) = sigma(i) > cutoff ? uy(i) / sigma(i) : Complex(0.0, 0.0);
    }
    return dec.matrixV() * uy;
}

}  // namespace hodmd
