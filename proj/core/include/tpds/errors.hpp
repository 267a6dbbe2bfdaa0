#ifndef TPDS_ERRORS_HPP
#define TPDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpds {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form square root has a negative argument (coupling undefined).
class negative_discriminant : public error {
public:
    using error::error;
};

/// Requested coupling is at or below the transition threshold.
class below_threshold : public error {
public:
    using error::error;
};

/// Quadratic boson form is not positive: |2 lambda| >= omega after reduction.
class bogoliubov_unstable : public error {
public:
    using error::error;
};

/// Every point of a scanned landscape violated Bogoliubov stability.
class landscape_unstable : public error {
public:
    using error::error;
};

/// Operation called in a phase where it is not defined.
class wrong_phase : public error {
public:
    using error::error;
};

/// Fock cutoff too small for the requested operator.
class cutoff_too_small : public error {
public:
    using error::error;
};

/// Sideband detunings do not match the rotating-frame construction.
class inconsistent_detunings : public error {
public:
    using error::error;
};

/// Sideband balance ratio degenerates (epsilon_S >= 1/2).
class degenerate_balance : public error {
public:
    using error::error;
};

/// Inverse mapping cannot satisfy a hardware constraint; names the binding one.
class infeasible_target : public error {
public:
    infeasible_target(const std::string& constraint, const std::string& what)
        : error(what), constraint_(constraint) {}
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// Integrator step does not resolve the fastest drive frequency.
class step_too_large : public error {
public:
    using error::error;
};

/// State norm drifted beyond the integrator quality gate.
class norm_drift : public error {
public:
    using error::error;
};

/// Invalid parameter values (constructor checks, config validation).
class invalid_argument : public error {
public:
    using error::error;
};

} // namespace tpds

#endif
