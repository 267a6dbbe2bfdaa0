#include "tpds/model.hpp"

#include <cmath>

#include "tpds/errors.hpp"

namespace tpds {

std::string to_string(PhaseLabel label) {
    switch (label) {
    case PhaseLabel::NormalPhase: return "normal";
    case PhaseLabel::SuperradiantPhase: return "superradiant";
    case PhaseLabel::CollapseRegion: return "collapse";
    }
    return "unknown";
}

ModelParams::ModelParams(double omega_q, double g, double U, int N, double omega_c)
    : omega_c_(omega_c), omega_q_(omega_q), g_(g), U_(U), N_(N) {
    if (!(std::isfinite(omega_c) && std::isfinite(omega_q) && std::isfinite(g) && std::isfinite(U)))
        throw invalid_argument("ModelParams: non-finite value");
    if (omega_c <= 0.0)
        throw invalid_argument("ModelParams: omega_c must be positive");
    if (omega_q < 0.0)
        throw invalid_argument("ModelParams: omega_q must be nonnegative");
    if (g < 0.0)
        throw invalid_argument("ModelParams: g must be nonnegative (positive-branch convention)");
    if (U < 0.0)
        throw invalid_argument("ModelParams: U must be nonnegative");
    if (N < 1)
        throw invalid_argument("ModelParams: N must be at least 1");
}

bool ModelParams::well_posed() const noexcept {
    return U_ * N_ < 2.0 * omega_c_;
}

double critical_rabi(const ModelParams& p) {
    const double disc = p.omega_c() * p.omega_q() * p.N() - p.U() * p.omega_q() * p.N() * p.N() / 2.0;
    if (disc < 0.0)
        throw negative_discriminant("critical_rabi: U exceeds 2 omega_c / N, g_t undefined");
    return std::sqrt(disc) / 2.0;
}

double collapse_coupling(const ModelParams& p) {
    const double un = p.U() * p.N();
    const double disc = p.omega_c() * p.omega_c() - un * un / 4.0;
    if (disc < 0.0)
        throw negative_discriminant("collapse_coupling: U*N exceeds 2 omega_c");
    return std::sqrt(disc) / 2.0;
}

PhaseLabel classify_phase(const ModelParams& p) {
    if (!p.well_posed())
        throw invalid_argument("classify_phase: params not well-posed (U*N >= 2 omega_c)");
    if (p.g() >= collapse_coupling(p))
        return PhaseLabel::CollapseRegion;
    if (p.g() < critical_rabi(p))
        return PhaseLabel::NormalPhase;
    return PhaseLabel::SuperradiantPhase;
}

} // namespace tpds
