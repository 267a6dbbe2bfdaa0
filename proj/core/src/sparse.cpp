#include "tpds/sparse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <tuple>

#include "tpds/errors.hpp"

namespace tpds {

static_assert(std::endian::native == std::endian::little,
              "binary dump format is little-endian");

SparseMatrix SparseMatrix::from_triplets(
    std::size_t dim, std::vector<std::tuple<std::uint64_t, std::uint64_t, cplx>> triplets,
    double hermiticity_tol) {
    std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });

    SparseMatrix m;
    m.dim_ = dim;
    m.row_offsets_.assign(dim + 1, 0);
    m.cols_.reserve(triplets.size());
    m.values_.reserve(triplets.size());

    std::size_t k = 0;
    for (std::size_t row = 0; row < dim; ++row) {
        while (k < triplets.size() && std::get<0>(triplets[k]) == row) {
            const std::uint64_t col = std::get<1>(triplets[k]);
            cplx v = std::get<2>(triplets[k]);
            ++k;
            while (k < triplets.size() && std::get<0>(triplets[k]) == row
                   && std::get<1>(triplets[k]) == col) {
                v += std::get<2>(triplets[k]);
                ++k;
            }
            if (v != cplx{0.0, 0.0}) {
                m.cols_.push_back(col);
                m.values_.push_back(v);
            }
        }
        m.row_offsets_[row + 1] = m.cols_.size();
    }
    if (k != triplets.size())
        throw invalid_argument("SparseMatrix: triplet row index out of range");

    const double defect = m.hermiticity_defect();
    if (defect > hermiticity_tol)
        throw invalid_argument("SparseMatrix: Hermiticity defect " + std::to_string(defect));
    return m;
}

void SparseMatrix::apply(std::span<const cplx> x, std::span<cplx> y) const {
    const auto n = static_cast<std::int64_t>(dim_);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        cplx acc{0.0, 0.0};
        for (std::uint64_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
            acc += values_[k] * x[cols_[k]];
        y[i] = acc;
    }
}

cplx SparseMatrix::coeff(std::uint64_t i, std::uint64_t j) const {
    const auto begin = cols_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[i]);
    const auto end = cols_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[i + 1]);
    const auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j)
        return {0.0, 0.0};
    return values_[static_cast<std::size_t>(it - cols_.begin())];
}

double SparseMatrix::hermiticity_defect() const {
    double defect = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::uint64_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
            defect = std::max(defect, std::abs(values_[k] - std::conj(coeff(cols_[k], i))));
    return defect;
}

double SparseMatrix::expectation(std::span<const cplx> x) const {
    std::vector<cplx> y(dim_);
    apply(x, y);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i)
        acc += std::conj(x[i]) * y[i];
    return acc.real();
}

namespace {

template <typename T>
void write_raw(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

} // namespace

void SparseMatrix::dump_binary(std::ostream& os) const {
    const char magic[8] = {'T', 'P', 'D', 'S', 'C', 'S', 'R', '1'};
    os.write(magic, 8);
    write_raw<std::uint64_t>(os, dim_);
    write_raw<std::uint64_t>(os, nnz());
    os.write(reinterpret_cast<const char*>(row_offsets_.data()),
             static_cast<std::streamsize>(row_offsets_.size() * sizeof(std::uint64_t)));
    os.write(reinterpret_cast<const char*>(cols_.data()),
             static_cast<std::streamsize>(cols_.size() * sizeof(std::uint64_t)));
    for (const cplx& v : values_) {
        write_raw<double>(os, v.real());
        write_raw<double>(os, v.imag());
    }
}

SparseMatrix SparseMatrix::load_binary(std::istream& is) {
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, "TPDSCSR1", 8) != 0)
        throw invalid_argument("SparseMatrix::load_binary: bad magic/version");
    SparseMatrix m;
    m.dim_ = read_raw<std::uint64_t>(is);
    const auto nnz = read_raw<std::uint64_t>(is);
    m.row_offsets_.resize(m.dim_ + 1);
    is.read(reinterpret_cast<char*>(m.row_offsets_.data()),
            static_cast<std::streamsize>(m.row_offsets_.size() * sizeof(std::uint64_t)));
    m.cols_.resize(nnz);
    is.read(reinterpret_cast<char*>(m.cols_.data()),
            static_cast<std::streamsize>(nnz * sizeof(std::uint64_t)));
    m.values_.resize(nnz);
    for (std::uint64_t k = 0; k < nnz; ++k) {
        const double re = read_raw<double>(is);
        const double im = read_raw<double>(is);
        m.values_[k] = {re, im};
    }
    if (!is)
        throw invalid_argument("SparseMatrix::load_binary: truncated stream");
    return m;
}

} // namespace tpds
