#pragma once

#include "hodmd/types.hpp"

namespace hodmd {

/// Thin SVD factors of a real matrix: m = u * sigma.asDiagonal() * vt,
/// with u of size rows x k, vt of size k x cols, k = min(rows, cols).
/// sigma is nonnegative and sorted descending.
struct SvdResult {
    RealMatrix u;
    RealVector sigma;
    RealMatrix vt;

    Index rank_count() const { return sigma.size(); }
};

/// Eigen-decomposition of a square complex matrix. Columns of `vectors`
/// are unit-norm eigenvectors matching `values` elementwise.
struct EigResult {
    ComplexVector values;
    ComplexMatrix vectors;
};

/// Thin SVD. Throws InvalidInput on non-finite entries or an empty
/// matrix, NumericalFailure if the kernel does not converge.
SvdResult svd(const Eigen::Ref<const RealMatrix>& m);

/// Dense complex eigen-decomposition. Throws InvalidInput for non-square
/// or non-finite input, NumericalFailure on iteration failure.
EigResult eig(const Eigen::Ref<const ComplexMatrix>& m);

/// Minimum-norm least-squares solution b of phi * b ~= y via SVD of phi.
/// Singular values below rcond * sigma_max are treated as zero.
ComplexVector pinv_apply(const Eigen::Ref<const ComplexMatrix>& phi,
                         const Eigen::Ref<const ComplexVector>& y,
                         double rcond = 1e-12);

}  // namespace hodmd
