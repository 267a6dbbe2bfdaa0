#ifndef TPDS_HILBERT_HPP
#define TPDS_HILBERT_HPP

#include <cstddef>

#include "tpds/errors.hpp"

namespace tpds {

/// Truncated Fock (x) collective Dicke basis: n in [0, n_max], m in [0, N]
/// labeling |j = N/2, m - N/2>. Flat index = n*(N+1) + m.
class HilbertSpace {
public:
    HilbertSpace(int n_max, int N) : n_max_(n_max), N_(N) {
        if (n_max < 0 || N < 1)
            throw invalid_argument("HilbertSpace: need n_max >= 0, N >= 1");
    }

    int n_max() const noexcept { return n_max_; }
    int N() const noexcept { return N_; }
    std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(n_max_ + 1) * (N_ + 1);
    }

    std::size_t index(int n, int m) const noexcept {
        return static_cast<std::size_t>(n) * (N_ + 1) + m;
    }
    int fock_of(std::size_t idx) const noexcept { return static_cast<int>(idx / (N_ + 1)); }
    int dicke_of(std::size_t idx) const noexcept { return static_cast<int>(idx % (N_ + 1)); }

private:
    int n_max_;
    int N_;
};

} // namespace tpds

#endif
