#ifndef TPDS_MODEL_HPP
#define TPDS_MODEL_HPP

#include <string>

namespace tpds {

/// Phase of the two-photon Dicke-Stark ground state at given couplings.
enum class PhaseLabel {
    NormalPhase,
    SuperradiantPhase,
    CollapseRegion,
};

std::string to_string(PhaseLabel label);

/// Parameters of H = omega_c n + omega_q Jz + (g/N)(J+ + J-)(a^2 + a'^2) + U n Jz.
///
/// All frequencies are in units of omega_c (omega_c = 1 by default). The
/// constructor rejects invalid values; well_posed() additionally requires
/// U*N < 2*omega_c, which keeps the displaced cavity frequency positive at
/// beta = 0. Operations that need well-posedness check it explicitly.
class ModelParams {
public:
    ModelParams(double omega_q, double g, double U, int N, double omega_c = 1.0);

    double omega_c() const noexcept { return omega_c_; }
    double omega_q() const noexcept { return omega_q_; }
    double g() const noexcept { return g_; }
    double U() const noexcept { return U_; }
    int N() const noexcept { return N_; }

    /// U*N < 2*omega_c; collapse expressions stay non-degenerate.
    bool well_posed() const noexcept;

    ModelParams with_g(double g) const { return {omega_q_, g, U_, N_, omega_c_}; }
    ModelParams with_U(double U) const { return {omega_q_, g_, U, N_, omega_c_}; }

private:
    double omega_c_;
    double omega_q_;
    double g_;
    double U_;
    int N_;
};

/// Critical Rabi coupling g_t = sqrt(omega_c omega_q N - U omega_q N^2/2)/2.
/// Throws negative_discriminant when U > 2 omega_c / N (with omega_q > 0).
double critical_rabi(const ModelParams& params);

/// Spectral-collapse coupling g_c = sqrt(omega_c^2 - U^2 N^2/4)/2.
/// Throws negative_discriminant when U*N > 2 omega_c.
double collapse_coupling(const ModelParams& params);

/// NormalPhase for g < g_t, SuperradiantPhase for g_t <= g < g_c,
/// CollapseRegion for g >= g_c. Boundary ties resolve to the higher phase.
PhaseLabel classify_phase(const ModelParams& params);

} // namespace tpds

#endif
