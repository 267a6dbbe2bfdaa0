#ifndef TPDS_HAMILTONIAN_HPP
#define TPDS_HAMILTONIAN_HPP

#include <span>

#include "tpds/hilbert.hpp"
#include "tpds/model.hpp"
#include "tpds/sparse.hpp"

namespace tpds {

/// Sparse H on the Fock (x) Dicke basis. Nonzeros sit on Dn in {0, +-2},
/// Dm in {0, +-1}; the diagonal is omega_c n + omega_q (m - N/2) + U n (m - N/2).
/// Throws cutoff_too_small for n_max < 2.
SparseMatrix build_hamiltonian(const ModelParams& params, const HilbertSpace& space);

/// Z4 parity Pi: diagonal with eigenvalue (-1)^m i^n on |n, m>.
SparseMatrix build_parity(const HilbertSpace& space);

/// Matrix-free application y = H x (agrees with build_hamiltonian to 1e-12).
void apply_hamiltonian(const ModelParams& params, const HilbertSpace& space,
                       std::span<const cplx> x, std::span<cplx> y);

/// max over stored entries of |[H, Pi]| for the diagonal parity operator.
double parity_commutator_norm(const SparseMatrix& H, const SparseMatrix& parity);

} // namespace tpds

#endif
