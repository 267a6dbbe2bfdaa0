#include "tpds/hamiltonian.hpp"

#include <cmath>
#include <vector>

namespace tpds {

namespace {

// J+ matrix element sqrt(j(j+1) - mt(mt+1)) on |j = N/2, mt = m - N/2>.
double jplus_elem(int N, int m) {
    const double j = N / 2.0;
    const double mt = m - j;
    return std::sqrt(j * (j + 1.0) - mt * (mt + 1.0));
}

} // namespace

SparseMatrix build_hamiltonian(const ModelParams& p, const HilbertSpace& space) {
    if (space.n_max() < 2)
        throw cutoff_too_small("build_hamiltonian: n_max must be at least 2");
    const int N = space.N();
    const int n_max = space.n_max();
    const double j = N / 2.0;

    std::vector<std::tuple<std::uint64_t, std::uint64_t, cplx>> trips;
    trips.reserve(space.dimension() * 3);
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= N; ++m) {
            const double mt = m - j;
            const std::uint64_t i = space.index(n, m);
            trips.emplace_back(i, i,
                               cplx{p.omega_c() * n + p.omega_q() * mt + p.U() * n * mt, 0.0});
            // (g/N)(J+ + J-)(a^2 + a'^2): emit the n -> n-2 column pairs and
            // their Hermitian partners.
            if (n >= 2) {
                const double pair = std::sqrt(static_cast<double>(n) * (n - 1));
                if (m + 1 <= N) {
                    const double amp = p.g() / N * jplus_elem(N, m) * pair;
                    trips.emplace_back(space.index(n - 2, m + 1), i, cplx{amp, 0.0});
                    trips.emplace_back(i, space.index(n - 2, m + 1), cplx{amp, 0.0});
                }
                if (m - 1 >= 0) {
                    const double amp = p.g() / N * jplus_elem(N, m - 1) * pair;
                    trips.emplace_back(space.index(n - 2, m - 1), i, cplx{amp, 0.0});
                    trips.emplace_back(i, space.index(n - 2, m - 1), cplx{amp, 0.0});
                }
            }
        }
    }
    return SparseMatrix::from_triplets(space.dimension(), std::move(trips));
}

SparseMatrix build_parity(const HilbertSpace& space) {
    const cplx iunit{0.0, 1.0};
    std::vector<std::tuple<std::uint64_t, std::uint64_t, cplx>> trips;
    trips.reserve(space.dimension());
    for (int n = 0; n <= space.n_max(); ++n) {
        cplx phase_n{1.0, 0.0};
        for (int k = 0; k < n % 4; ++k)
            phase_n *= iunit;
        for (int m = 0; m <= space.N(); ++m) {
            const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
            const std::uint64_t i = space.index(n, m);
            trips.emplace_back(i, i, sign_m * phase_n);
        }
    }
    // Pi is unitary, not Hermitian; skip the Hermiticity gate.
    return SparseMatrix::from_triplets(space.dimension(), std::move(trips),
                                       std::numeric_limits<double>::infinity());
}

void apply_hamiltonian(const ModelParams& p, const HilbertSpace& space,
                       std::span<const cplx> x, std::span<cplx> y) {
    const int N = space.N();
    const int n_max = space.n_max();
    const double j = N / 2.0;
    const double gn = p.g() / N;

#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= N; ++m) {
            const double mt = m - j;
            const std::uint64_t i = space.index(static_cast<int>(n), m);
            cplx acc = (p.omega_c() * n + p.omega_q() * mt + p.U() * n * mt) * x[i];
            if (n >= 2) {
                const double pair = std::sqrt(static_cast<double>(n) * (n - 1));
                if (m + 1 <= N)
                    acc += gn * jplus_elem(N, m) * pair * x[space.index(static_cast<int>(n) - 2, m + 1)];
                if (m - 1 >= 0)
                    acc += gn * jplus_elem(N, m - 1) * pair * x[space.index(static_cast<int>(n) - 2, m - 1)];
            }
            if (n + 2 <= n_max) {
                const double pair = std::sqrt(static_cast<double>(n + 1) * (n + 2));
                if (m + 1 <= N)
                    acc += gn * jplus_elem(N, m) * pair * x[space.index(static_cast<int>(n) + 2, m + 1)];
                if (m - 1 >= 0)
                    acc += gn * jplus_elem(N, m - 1) * pair * x[space.index(static_cast<int>(n) + 2, m - 1)];
            }
            y[i] = acc;
        }
    }
}

double parity_commutator_norm(const SparseMatrix& H, const SparseMatrix& parity) {
    // Pi diagonal: [H, Pi]_ij = H_ij (Pi_jj - Pi_ii).
    double worst = 0.0;
    const auto offsets = H.row_offsets();
    const auto cols = H.cols();
    const auto vals = H.values();
    for (std::size_t i = 0; i < H.dimension(); ++i) {
        const cplx pi = parity.coeff(i, i);
        for (std::uint64_t k = offsets[i]; k < offsets[i + 1]; ++k) {
            const cplx pj = parity.coeff(cols[k], cols[k]);
            worst = std::max(worst, std::abs(vals[k] * (pj - pi)));
        }
    }
    return worst;
}

} // namespace tpds
