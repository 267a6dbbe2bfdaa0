#ifndef TPDS_SPARSE_HPP
#define TPDS_SPARSE_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace tpds {

using cplx = std::complex<double>;

/// Row-compressed Hermitian operator. Columns are sorted within each row and
/// explicit zeros are dropped. Hermiticity is verified on construction.
class SparseMatrix {
public:
    /// Build from triplets (i, j, v); duplicates are summed.
    static SparseMatrix from_triplets(std::size_t dim,
                                      std::vector<std::tuple<std::uint64_t, std::uint64_t, cplx>> triplets,
                                      double hermiticity_tol = 1e-12);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t nnz() const noexcept { return cols_.size(); }

    std::span<const std::uint64_t> row_offsets() const noexcept { return row_offsets_; }
    std::span<const std::uint64_t> cols() const noexcept { return cols_; }
    std::span<const cplx> values() const noexcept { return values_; }

    /// y = A x (rows in parallel).
    void apply(std::span<const cplx> x, std::span<cplx> y) const;

    cplx coeff(std::uint64_t i, std::uint64_t j) const;

    /// max |A_ij - conj(A_ji)| over stored entries.
    double hermiticity_defect() const;

    /// <x|A|x> for a normalized vector (real up to Hermiticity defect).
    double expectation(std::span<const cplx> x) const;

    /// Versioned little-endian binary dump: "TPDSCSR1", dim, nnz,
    /// row offsets, columns, values (re, im pairs).
    void dump_binary(std::ostream& os) const;
    static SparseMatrix load_binary(std::istream& is);

private:
    SparseMatrix() = default;

    std::size_t dim_ = 0;
    std::vector<std::uint64_t> row_offsets_;
    std::vector<std::uint64_t> cols_;
    std::vector<cplx> values_;
};

} // namespace tpds

#endif
