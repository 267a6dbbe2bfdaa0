#ifndef TPDS_FLUCTUATIONS_HPP
#define TPDS_FLUCTUATIONS_HPP

#include <optional>

#include "tpds/model.hpp"

namespace tpds {

/// Shape of the quadratic term in a one-mode boson Hamiltonian.
enum class QuadraticShape {
    PairCreation,   ///< lambda (d^2 + d'^2)
    PlusSquared,    ///< lambda (d + d')^2
};

/// omega d'd + lambda * shape + constant. The two shapes interconvert exactly
/// through (d + d')^2 = d^2 + d'^2 + 2 d'd + 1.
struct QuadraticBosonForm {
    double omega;
    double lambda;
    QuadraticShape shape;
    double constant;

    /// Equivalent PairCreation form.
    QuadraticBosonForm normal_form() const;
};

struct BogoliubovResult {
    double excitation_energy;  ///< eps = sqrt(omega_e^2 - 4 lambda_e^2)
    double squeeze_r;          ///< tanh(2r) = 2 lambda_e / omega_e
    double ground_shift;       ///< (eps - omega_e)/2 + constant
};

/// Diagonalize a stable quadratic form. Throws bogoliubov_unstable when
/// |2 lambda_e| >= omega_e after normal-form reduction.
BogoliubovResult bogoliubov_diagonalize(const QuadraticBosonForm& form);

/// Normal-phase low-energy effective Hamiltonian:
/// omega_q d'd - [2 g^2 / (N (2 omega_c - N U))] (d + d')^2 - omega_q N / 2.
/// Throws wrong_phase outside the normal phase.
QuadraticBosonForm np_effective(const ModelParams& params);

/// r_s = ln(1 - 8 g^2 / (omega_q N (2 omega_c - U N)))/4; nonpositive in the
/// normal phase (the squeezed quadrature is P, not X).
double np_squeezing(const ModelParams& params);

/// Superradiant-phase effective parameter set built at a given beta.
struct SpEffectiveParams {
    double alpha;    ///< beta / sqrt(N)
    double chi;      ///< sqrt(1 - alpha^2)
    double delta;    ///< 1 - beta^2/(N - beta^2)
    double omega_c_prime;
    double r_a2;     ///< photon-sector squeeze, artanh(g a/(w' N chi) + 4 g a chi / w')/2
    double x;        ///< 2 r_a2
    double lambda0, lambda1, lambda2, lambda3, lambda4, lambda5, lambda6;
    double alpha_prime;
    double omega1, omega2;
    double linear_residual;  ///< lambda1 + lambda3/4 (projected linear coefficient)
    /// alpha re-solved to zero the linear residual, when a root exists in (0, 1).
    std::optional<double> alpha_rebalanced;
    double r_s2_printed;     ///< -ln(1 + omega2/omega1)/4
};

/// Builds the SP parameter set and the effective form
/// H = lambda0/4 + omega1 d'd + omega2 (d + d')^2.
/// Throws wrong_phase outside the superradiant phase and bogoliubov_unstable
/// when the photon-sector artanh argument reaches 1.
std::pair<SpEffectiveParams, QuadraticBosonForm> sp_effective(const ModelParams& params,
                                                              double beta);

/// Collective-spin means and variances of the fluctuation ground state.
///
/// Quadratures X = (d+d')/2, P = (d-d')/(2i), vacuum variance 1/4. With r the
/// diagonalizer squeeze of the phase's effective form, the ground state has
/// var X = e^{-2r}/4 and var P = e^{+2r}/4 (X grows toward the transition in
/// the NP, where r <= 0). Lab-frame variances follow at leading
/// Holstein-Primakoff order; var_Jx / var_Jy are the transverse ellipse axes
/// (rotated frame in the SP), var_Jz adds the squeezed-vacuum number variance.
struct SpinMoments {
    double mean_Jx, mean_Jy, mean_Jz;
    double var_Jx, var_Jy, var_Jz;
    double squeeze_r;  ///< squeeze of the phase's effective form
    PhaseLabel phase;
};

/// Throws bogoliubov_unstable at or beyond g_c (propagated from the builders).
SpinMoments spin_moments(const ModelParams& params);

} // namespace tpds

#endif
