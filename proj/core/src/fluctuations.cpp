#include "tpds/fluctuations.hpp"

#include <cmath>

#include "tpds/errors.hpp"
#include "tpds/meanfield.hpp"

namespace tpds {

QuadraticBosonForm QuadraticBosonForm::normal_form() const {
    if (shape == QuadraticShape::PairCreation)
        return *this;
    return {omega + 2.0 * lambda, lambda, QuadraticShape::PairCreation, constant + lambda};
}

BogoliubovResult bogoliubov_diagonalize(const QuadraticBosonForm& form) {
    const QuadraticBosonForm nf = form.normal_form();
    if (2.0 * std::abs(nf.lambda) >= nf.omega)
        throw bogoliubov_unstable("bogoliubov_diagonalize: |2 lambda| >= omega");
    BogoliubovResult res{};
    res.excitation_energy = std::sqrt(nf.omega * nf.omega - 4.0 * nf.lambda * nf.lambda);
    res.squeeze_r = 0.5 * std::atanh(2.0 * nf.lambda / nf.omega);
    res.ground_shift = (res.excitation_energy - nf.omega) / 2.0 + nf.constant;
    return res;
}

QuadraticBosonForm np_effective(const ModelParams& p) {
    if (classify_phase(p) != PhaseLabel::NormalPhase)
        throw wrong_phase("np_effective: not in the normal phase");
    const double lam = -2.0 * p.g() * p.g() / (p.N() * (2.0 * p.omega_c() - p.N() * p.U()));
    return {p.omega_q(), lam, QuadraticShape::PlusSquared, -p.omega_q() * p.N() / 2.0};
}

double np_squeezing(const ModelParams& p) {
    if (classify_phase(p) != PhaseLabel::NormalPhase)
        throw wrong_phase("np_squeezing: not in the normal phase");
    const double arg = 1.0 - 8.0 * p.g() * p.g()
        / (p.omega_q() * p.N() * (2.0 * p.omega_c() - p.U() * p.N()));
    if (arg <= 0.0)
        throw error("np_squeezing: log argument not positive");
    return 0.25 * std::log(arg);
}

namespace {

// lambda1 + lambda3/4 as a function of alpha at fixed couplings.
double linear_residual_at(const ModelParams& p, double alpha) {
    const double N = p.N();
    const double beta = alpha * std::sqrt(N);
    const double chi = std::sqrt(1.0 - alpha * alpha);
    const double delta = 1.0 - beta * beta / (N - beta * beta);
    const double wcp = p.omega_c() + p.U() * beta * beta - p.U() * N / 2.0;
    const double arg = p.g() * alpha / (wcp * N * chi) + 4.0 * p.g() * alpha * chi / wcp;
    if (std::abs(arg) >= 1.0 || wcp <= 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    const double x = std::atanh(arg);
    const double lam1 = p.omega_q() * N * alpha / (2.0 * wcp);
    const double lam3 = -(p.g() * chi * delta / (2.0 * wcp)) * std::sinh(x)
        + (alpha * p.U() * N / wcp) * std::cosh(x);
    return lam1 + lam3 / 4.0;
}

} // namespace

std::pair<SpEffectiveParams, QuadraticBosonForm> sp_effective(const ModelParams& p, double beta) {
    if (classify_phase(p) != PhaseLabel::SuperradiantPhase)
        throw wrong_phase("sp_effective: not in the superradiant phase");
    const double N = p.N();
    if (beta <= 0.0 || beta * beta >= N)
        throw invalid_argument("sp_effective: beta outside (0, sqrt(N))");

    SpEffectiveParams sp{};
    sp.alpha = beta / std::sqrt(N);
    sp.chi = std::sqrt(1.0 - sp.alpha * sp.alpha);
    sp.delta = 1.0 - beta * beta / (N - beta * beta);
    sp.omega_c_prime = p.omega_c() + p.U() * beta * beta - p.U() * N / 2.0;

    const double arg = p.g() * sp.alpha / (sp.omega_c_prime * N * sp.chi)
        + 4.0 * p.g() * sp.alpha * sp.chi / sp.omega_c_prime;
    if (sp.omega_c_prime <= 0.0 || std::abs(arg) >= 1.0)
        throw bogoliubov_unstable("sp_effective: photon-sector squeeze argument reaches 1");
    sp.r_a2 = 0.5 * std::atanh(arg);
    sp.x = 2.0 * sp.r_a2;

    const double ch = std::cosh(sp.x);
    const double sh = std::sinh(sp.x);
    const double g = p.g();
    const double U = p.U();
    const double wq = p.omega_q();
    const double wcp = sp.omega_c_prime;

    sp.lambda0 = ch - (4.0 * g * sp.alpha * sp.chi / wcp + g * sp.alpha / (wcp * sp.chi * N)) * sh;
    sp.lambda1 = wq * N * sp.alpha / (2.0 * wcp);
    sp.lambda2 = (g * sp.chi * sp.delta / wcp) * ch - (sp.alpha * U * N / (2.0 * wcp)) * sh;
    sp.lambda3 = -(g * sp.chi * sp.delta / (2.0 * wcp)) * sh + (sp.alpha * U * N / wcp) * ch;
    sp.lambda4 = wq * N / (2.0 * wcp);
    sp.lambda5 = (U * N / wcp) * ch;
    sp.lambda6 = (U * N / (2.0 * wcp)) * sh;
    sp.alpha_prime = sp.alpha / (2.0 * sp.chi)
        + sp.alpha * sp.alpha * sp.alpha / (4.0 * sp.chi * sp.chi * sp.chi);

    sp.omega1 = sp.lambda4 / N + (g * sp.alpha / (2.0 * wcp * sp.chi * N)) * sh
        + sp.lambda5 / (4.0 * N);
    sp.omega2 = (g * sp.alpha_prime / (2.0 * wcp * N)) * sh
        - sp.lambda2 * sp.lambda2 / (2.0 * N * sp.lambda0);

    sp.linear_residual = sp.lambda1 + sp.lambda3 / 4.0;

    // Local re-solve for an alpha zeroing the residual; report only when a
    // sign change brackets a root in (0, 1).
    if (std::abs(sp.linear_residual) >= 1e-6) {
        const int scan = 400;
        double prev_a = std::numeric_limits<double>::quiet_NaN();
        double prev_f = std::numeric_limits<double>::quiet_NaN();
        for (int i = 1; i < scan; ++i) {
            const double a = static_cast<double>(i) / scan;
            const double f = linear_residual_at(p, a);
            if (std::isnan(f))
                continue;
            if (!std::isnan(prev_f) && prev_f * f < 0.0) {
                double lo = prev_a, hi = a;
                for (int it = 0; it < 100; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = linear_residual_at(p, mid);
                    if (std::isnan(fm))
                        break;
                    if (fm * linear_residual_at(p, lo) <= 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                sp.alpha_rebalanced = 0.5 * (lo + hi);
                break;
            }
            prev_a = a;
            prev_f = f;
        }
    }

    sp.r_s2_printed = -0.25 * std::log1p(sp.omega2 / sp.omega1);

    QuadraticBosonForm form{sp.omega1, sp.omega2, QuadraticShape::PlusSquared, sp.lambda0 / 4.0};
    return {sp, form};
}

SpinMoments spin_moments(const ModelParams& p) {
    const PhaseLabel phase = classify_phase(p);
    if (phase == PhaseLabel::CollapseRegion)
        throw bogoliubov_unstable("spin_moments: g >= g_c");

    const double N = p.N();
    SpinMoments m{};
    m.phase = phase;

    double beta = 0.0;
    double r = 0.0;
    if (phase == PhaseLabel::NormalPhase) {
        r = bogoliubov_diagonalize(np_effective(p)).squeeze_r;
    } else {
        beta = order_parameter_closed_form(p);
        auto [sp, form] = sp_effective(p, beta);
        r = bogoliubov_diagonalize(form).squeeze_r;
    }
    m.squeeze_r = r;

    const double var_x = std::exp(-2.0 * r) / 4.0;
    const double var_p = std::exp(2.0 * r) / 4.0;
    const double s = beta * beta;

    m.mean_Jx = beta * std::sqrt(N - s);
    m.mean_Jy = 0.0;
    m.mean_Jz = s - N / 2.0;

    // Transverse ellipse axes: in-plane axis couples to X through
    // dJ_perp = -N X / sqrt(N - beta^2); the y axis to P through sqrt(N - beta^2).
    m.var_Jx = N * N / (N - s) * var_x;
    m.var_Jy = (N - s) * var_p;
    const double sh2 = std::sinh(2.0 * r);
    m.var_Jz = 4.0 * s * var_x + sh2 * sh2 / 2.0;
    return m;
}

} // namespace tpds
