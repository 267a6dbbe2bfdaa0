#ifndef TPDS_LANCZOS_HPP
#define TPDS_LANCZOS_HPP

#include <functional>
#include <span>
#include <vector>

#include "tpds/sparse.hpp"

namespace tpds {

struct GroundStateResult {
    double energy = 0.0;
    std::vector<cplx> vector;   ///< normalized to 1e-12 when converged
    double residual = 0.0;      ///< ||H psi - E psi||
    bool converged = false;
    int iterations = 0;
};

/// y = A x for a Hermitian operator of the given dimension.
using LinearOperator = std::function<void(std::span<const cplx>, std::span<cplx>)>;

/// Lowest eigenpair by Lanczos with full reorthogonalization.
/// Returns converged = false (with the best residual and iteration count)
/// instead of throwing when max_iter is exhausted.
GroundStateResult ground_state(const LinearOperator& apply, std::size_t dim, double tol = 1e-10,
                               int max_iter = 500, std::uint64_t seed = 0x5eed);

GroundStateResult ground_state(const SparseMatrix& H, double tol = 1e-10, int max_iter = 500,
                               std::uint64_t seed = 0x5eed);

/// Smallest eigenvalue and eigenvector of a symmetric tridiagonal matrix
/// (Sturm bisection + inverse iteration). Exposed for testing.
void tridiag_ground(const std::vector<double>& diag, const std::vector<double>& offdiag,
                    double& eval, std::vector<double>& evec);

} // namespace tpds

#endif
