#ifndef TPDS_MEANFIELD_HPP
#define TPDS_MEANFIELD_HPP

#include <vector>

#include "tpds/model.hpp"

namespace tpds {

/// Mean-field ground state at the energy-minimizing order parameter.
struct MeanFieldSolution {
    double beta;        ///< order parameter, nonnegative branch (the - branch is -beta)
    double omega_beta;  ///< displaced cavity frequency omega_c + U(beta^2 - N/2)
    double g_prime;     ///< effective two-photon coupling 2 g beta sqrt(N - beta^2)/N
    double r_beta;      ///< cavity squeezing, artanh(2 g'/omega_beta)/2
    double energy;      ///< E_G at beta
    PhaseLabel phase;
};

/// Polynomial coefficients entering the closed-form order parameter.
struct AuxCoefficients {
    double u0, u1, u2, u3, u4, u5;
};

AuxCoefficients aux_coefficients(const ModelParams& params);

/// Displaced cavity frequency at order parameter beta.
double omega_beta(const ModelParams& params, double beta);

/// Effective two-photon coupling at order parameter beta.
double g_prime(const ModelParams& params, double beta);

/// Mean-field ground-state energy functional E_G(beta).
///
/// E_G = (omega_b^2 - 4 g'^2)/(2 omega_b) cosh(2 r_b) + (omega_q - U/2) beta^2
///       - omega_q N/2 - omega_c/2 + U N/4,  r_b = artanh(2 g'/omega_b)/2.
/// Throws bogoliubov_unstable when 2|g'| >= omega_b (collapse at this beta).
double ground_energy(const ModelParams& params, double beta);

/// Positive root of the closed-form order parameter for g > g_t.
/// Throws below_threshold for g <= g_t where beta = 0 is the unique minimum.
double order_parameter_closed_form(const ModelParams& params);

/// Global minimizer of ground_energy over beta in [0, sqrt(N)(1-1e-9)]:
/// coarse grid (1e-3 step) then golden section to 1e-10 in beta.
/// Throws landscape_unstable if no scanned beta is Bogoliubov-stable.
double order_parameter_numeric(const ModelParams& params);

/// One sampled point of the energy landscape. Points inside the
/// Bogoliubov-invalid region carry valid = false instead of NaN energies.
struct LandscapePoint {
    double beta;
    double energy;
    bool valid;
};

std::vector<LandscapePoint> energy_landscape(const ModelParams& params,
                                             const std::vector<double>& beta_grid);

struct PhaseBoundaryPoint {
    double U;
    double g_t;
    double g_c;
};

struct PhaseDiagram {
    std::vector<PhaseBoundaryPoint> boundary;  ///< sampled at the U grid
    std::vector<double> U_grid;
    std::vector<double> g_grid;
    std::vector<PhaseLabel> labels;  ///< row-major over (U, g)
};

/// Phase labels over a (U, g) grid plus the g_t(U), g_c(U) boundary curves.
PhaseDiagram phase_diagram(const ModelParams& base, const std::vector<double>& U_grid,
                           const std::vector<double>& g_grid);

/// Full solution at the minimizing beta (closed form checked against the
/// numeric landscape for robustness near thresholds).
MeanFieldSolution solve_mean_field(const ModelParams& params);

} // namespace tpds

#endif
