#include "tpds/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "tpds/errors.hpp"

namespace tpds {

namespace {

constexpr double kHpMargin = 1.0 - 1e-9;  // keep sqrt(N - beta^2) well-defined

double energy_or_nan(const ModelParams& p, double beta) {
    const double wb = omega_beta(p, beta);
    const double gp = g_prime(p, beta);
    if (2.0 * std::abs(gp) >= wb)
        return std::numeric_limits<double>::quiet_NaN();
    const double r = 0.5 * std::atanh(2.0 * gp / wb);
    return (wb * wb - 4.0 * gp * gp) / (2.0 * wb) * std::cosh(2.0 * r)
        + (p.omega_q() - p.U() / 2.0) * beta * beta
        - p.omega_q() * p.N() / 2.0 - p.omega_c() / 2.0 + p.U() * p.N() / 4.0;
}

} // namespace

AuxCoefficients aux_coefficients(const ModelParams& p) {
    const double N2 = static_cast<double>(p.N()) * p.N();
    AuxCoefficients u{};
    u.u1 = p.g() * p.g() * N2;
    u.u2 = p.U() * p.U() * N2;
    u.u3 = p.omega_q() * p.omega_q() * N2;
    u.u4 = p.g() * p.omega_q() * N2;
    u.u5 = p.U() * p.omega_q() * N2;
    u.u0 = u.u2 * (4.0 * u.u5 - u.u2 - 4.0 * u.u3 + 4.0 * p.omega_c() * p.omega_c()
                   - 16.0 * p.g() * p.g());
    return u;
}

double omega_beta(const ModelParams& p, double beta) {
    return p.omega_c() + p.U() * (beta * beta - p.N() / 2.0);
}

double g_prime(const ModelParams& p, double beta) {
    const double s = beta * beta;
    if (s > p.N())
        throw invalid_argument("g_prime: |beta| exceeds sqrt(N)");
    return 2.0 * p.g() * beta * std::sqrt(p.N() - s) / p.N();
}

double ground_energy(const ModelParams& p, double beta) {
    if (beta * beta > p.N())
        throw invalid_argument("ground_energy: |beta| exceeds sqrt(N)");
    const double e = energy_or_nan(p, beta);
    if (std::isnan(e))
        throw bogoliubov_unstable("ground_energy: 2|g'| >= omega_beta at this beta");
    return e;
}

double order_parameter_closed_form(const ModelParams& p) {
    if (!p.well_posed())
        throw invalid_argument("order_parameter_closed_form: params not well-posed");
    const double gt = critical_rabi(p);
    if (p.g() <= gt)
        throw below_threshold("order_parameter_closed_form: g <= g_t, beta = 0");

    // Stationarity of E_G in s = beta^2 squares to a quadratic a2 s^2 + a1 s + a0 = 0.
    const double N = p.N();
    const double g2 = p.g() * p.g();
    const double wc = p.omega_c();
    const double wq = p.omega_q();
    const double U = p.U();
    const AuxCoefficients u = aux_coefficients(p);

    const double P = 16.0 * g2 + u.u2;
    const double Q = 4.0 * g2 + u.u5 - u.u3;
    const double a2 = 16.0 * P * Q / (N * N * N * N);
    const double a1 = -16.0 * (u.u2 - 2.0 * N * U * wc + 16.0 * g2) * Q / (N * N * N);
    // u5 - 2 N wc wq + 8 g^2 = 8 (g^2 - g_t^2): positive above threshold
    const double a0 = 4.0 * (u.u5 - 2.0 * N * wc * wq + 8.0 * g2)
        * (u.u2 - u.u5 - 2.0 * N * U * wc + 2.0 * N * wc * wq + 8.0 * g2) / (N * N);

    double roots[2];
    int nroots = 0;
    if (std::abs(a2) < 1e-300) {
        if (a1 != 0.0)
            roots[nroots++] = -a0 / a1;
    } else {
        double disc = a1 * a1 - 4.0 * a2 * a0;
        if (disc < 0.0) {
            // degenerate double root (e.g. U = 2 omega_q): clamp FP noise
            if (disc > -1e-10 * (a1 * a1 + std::abs(4.0 * a2 * a0)))
                disc = 0.0;
            else
                throw negative_discriminant("order_parameter_closed_form: no real stationary point");
        }
        const double sq = std::sqrt(disc);
        const double qq = -0.5 * (a1 + std::copysign(sq, a1));
        roots[nroots++] = qq / a2;
        if (qq != 0.0)
            roots[nroots++] = a0 / qq;
    }

    std::optional<double> best_s;
    double best_e = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nroots; ++i) {
        const double s = roots[i];
        if (!std::isfinite(s) || s <= 0.0 || s >= N)
            continue;
        const double e = energy_or_nan(p, std::sqrt(s));
        if (std::isnan(e))
            continue;
        if (e < best_e) {
            best_e = e;
            best_s = s;
        }
    }
    if (!best_s)
        throw negative_discriminant("order_parameter_closed_form: stationary points outside domain");
    return std::sqrt(*best_s);
}

double order_parameter_numeric(const ModelParams& p) {
    if (!p.well_posed())
        throw invalid_argument("order_parameter_numeric: params not well-posed");
    const double hi = std::sqrt(static_cast<double>(p.N())) * kHpMargin;
    const double step = 1e-3;

    double best_b = std::numeric_limits<double>::quiet_NaN();
    double best_e = std::numeric_limits<double>::infinity();
    bool any_valid = false;
    const long npts = static_cast<long>(hi / step) + 1;
    for (long i = 0; i <= npts; ++i) {
        const double b = std::min(i * step, hi);
        const double e = energy_or_nan(p, b);
        if (std::isnan(e))
            continue;
        any_valid = true;
        if (e < best_e) {
            best_e = e;
            best_b = b;
        }
    }
    if (!any_valid)
        throw landscape_unstable("order_parameter_numeric: no Bogoliubov-stable beta in domain");

    double a = std::max(0.0, best_b - step);
    double b = std::min(hi, best_b + step);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    auto f = [&](double x) {
        const double e = energy_or_nan(p, x);
        return std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
    };
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

std::vector<LandscapePoint> energy_landscape(const ModelParams& p,
                                             const std::vector<double>& beta_grid) {
    std::vector<LandscapePoint> out;
    out.reserve(beta_grid.size());
    for (double b : beta_grid) {
        if (b * b > p.N())
            throw invalid_argument("energy_landscape: grid point outside Holstein-Primakoff domain");
        const double e = energy_or_nan(p, b);
        out.push_back({b, e, !std::isnan(e)});
    }
    return out;
}

PhaseDiagram phase_diagram(const ModelParams& base, const std::vector<double>& U_grid,
                           const std::vector<double>& g_grid) {
    PhaseDiagram out;
    out.U_grid = U_grid;
    out.g_grid = g_grid;
    out.boundary.reserve(U_grid.size());
    for (double U : U_grid) {
        const ModelParams p = base.with_U(U);
        if (!p.well_posed())
            throw invalid_argument("phase_diagram: U grid leaves the well-posed region");
        out.boundary.push_back({U, critical_rabi(p), collapse_coupling(p)});
    }
    out.labels.reserve(U_grid.size() * g_grid.size());
    for (double U : U_grid)
        for (double g : g_grid)
            out.labels.push_back(classify_phase(base.with_U(U).with_g(g)));
    return out;
}

MeanFieldSolution solve_mean_field(const ModelParams& p) {
    const PhaseLabel phase = classify_phase(p);
    if (phase == PhaseLabel::CollapseRegion)
        throw bogoliubov_unstable("solve_mean_field: g >= g_c, no normalizable ground state");
    double beta = 0.0;
    if (phase == PhaseLabel::SuperradiantPhase && p.g() > critical_rabi(p))
        beta = order_parameter_closed_form(p);
    MeanFieldSolution sol{};
    sol.beta = beta;
    sol.omega_beta = omega_beta(p, beta);
    sol.g_prime = g_prime(p, beta);
    sol.r_beta = 0.5 * std::atanh(2.0 * sol.g_prime / sol.omega_beta);
    sol.energy = ground_energy(p, beta);
    sol.phase = phase;
    return sol;
}

} // namespace tpds
