#include "tpds/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tpds/errors.hpp"

namespace tpds {

namespace {

double nrm2(std::span<const cplx> v) {
    double acc = 0.0;
    for (const cplx& x : v)
        acc += std::norm(x);
    return std::sqrt(acc);
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] += alpha * x[i];
}

// Count of eigenvalues of T strictly below x (Sturm sequence).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    int count = 0;
    double q = 1.0;
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double e2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
        q = d[i] - x - (q == 0.0 ? std::abs(e[i - 1]) / 1e-300 : e2 / q);
        if (q < 0.0)
            ++count;
    }
    return count;
}

} // namespace

void tridiag_ground(const std::vector<double>& d, const std::vector<double>& e, double& eval,
                    std::vector<double>& evec) {
    const std::size_t n = d.size();
    if (n == 0)
        throw invalid_argument("tridiag_ground: empty matrix");
    if (n == 1) {
        eval = d[0];
        evec.assign(1, 1.0);
        return;
    }

    // Gershgorin bounds, then bisect for the smallest eigenvalue.
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    eval = 0.5 * (lo + hi);

    // Inverse iteration on (T - eval) with a small shift for singularity.
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> dl(n), du(n), dd(n), work(n);
    const double shift = eval - 1e-12 * std::max(1.0, std::abs(eval));
    for (int sweep = 0; sweep < 4; ++sweep) {
        // Thomas solve (T - shift) w = v with partial regularization.
        dd.assign(d.begin(), d.end());
        for (std::size_t i = 0; i < n; ++i)
            dd[i] -= shift;
        dl.assign(n, 0.0);
        du.assign(n, 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            dl[i + 1] = e[i];
            du[i] = e[i];
        }
        work = v;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(dd[i - 1]) < 1e-300)
                dd[i - 1] = 1e-300;
            const double m = dl[i] / dd[i - 1];
            dd[i] -= m * du[i - 1];
            work[i] -= m * work[i - 1];
        }
        if (std::abs(dd[n - 1]) < 1e-300)
            dd[n - 1] = 1e-300;
        v[n - 1] = work[n - 1] / dd[n - 1];
        for (std::size_t i = n - 1; i-- > 0;)
            v[i] = (work[i] - du[i] * v[i + 1]) / dd[i];
        double nrm = 0.0;
        for (double x : v)
            nrm += x * x;
        nrm = std::sqrt(nrm);
        for (double& x : v)
            x /= nrm;
    }
    evec = std::move(v);
}

GroundStateResult ground_state(const LinearOperator& apply, std::size_t dim, double tol,
                               int max_iter, std::uint64_t seed) {
    GroundStateResult res;
    if (dim == 0)
        throw invalid_argument("ground_state: empty space");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    std::vector<std::vector<cplx>> basis;
    std::vector<double> alpha, beta;  // beta[k] couples v_k and v_{k+1}

    std::vector<cplx> v(dim), w(dim);
    for (cplx& x : v)
        x = {dist(rng), dist(rng)};
    {
        const double nrm = nrm2(v);
        for (cplx& x : v)
            x /= nrm;
    }

    const int kmax = std::min<std::size_t>(max_iter, dim);
    double best_resid = std::numeric_limits<double>::infinity();

    for (int k = 0; k < kmax; ++k) {
        basis.push_back(v);
        apply(basis.back(), w);
        const double a = dotc(basis.back(), w).real();
        alpha.push_back(a);

        axpy(cplx{-a, 0.0}, basis.back(), w);
        if (k > 0)
            axpy(cplx{-beta[k - 1], 0.0}, basis[k - 1], w);
        // full reorthogonalization, two passes
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis)
                axpy(-dotc(q, w), q, w);

        const double b = nrm2(w);

        // Ritz estimate and cheap residual bound |beta * s_last|
        double theta;
        std::vector<double> s;
        tridiag_ground(alpha, beta, theta, s);
        best_resid = std::min(best_resid, b * std::abs(s.back()));

        // b ~ 0 means the Krylov space went invariant; the Ritz pair is exact there.
        const bool terminal = b < 1e-14 || k + 1 == kmax;
        if (b * std::abs(s.back()) < 0.1 * tol || terminal) {
            // assemble the Ritz vector and measure the true residual
            std::vector<cplx> y(dim, cplx{0.0, 0.0});
            for (std::size_t q = 0; q < basis.size(); ++q)
                axpy(cplx{s[q], 0.0}, basis[q], y);
            const double ny = nrm2(y);
            for (cplx& x : y)
                x /= ny;
            std::vector<cplx> hy(dim);
            apply(y, hy);
            const double e = dotc(y, hy).real();
            axpy(cplx{-e, 0.0}, y, hy);
            const double resid = nrm2(hy);
            res.energy = e;
            res.vector = std::move(y);
            res.residual = resid;
            res.iterations = k + 1;
            if (resid < tol) {
                res.converged = true;
                return res;
            }
            if (terminal)
                return res;
        }

        beta.push_back(b);
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = w[i] / b;
    }
    res.iterations = kmax;
    res.residual = best_resid;
    return res;
}

GroundStateResult ground_state(const SparseMatrix& H, double tol, int max_iter,
                               std::uint64_t seed) {
    return ground_state(
        [&H](std::span<const cplx> x, std::span<cplx> y) { H.apply(x, y); },
        H.dimension(), tol, max_iter, seed);
}

} // namespace tpds
