#pragma once

#include <stdexcept>
#include <string>

namespace qb {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error("config error: " + m) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error("domain error: " + m) {}
};

// Specialization v -> zeta hit a vanishing denominator (element is not in the
// integral form at this order).
struct SpecializationPole : std::runtime_error {
    explicit SpecializationPole(const std::string& m) : std::runtime_error("specialization pole: " + m) {}
};

// Internal consistency failure of the straightening/Hopf machinery; signals a
// convention bug rather than a user error.
struct EngineError : std::runtime_error {
    explicit EngineError(const std::string& m) : std::runtime_error("engine error: " + m) {}
};

struct AmbientMismatch : std::runtime_error {
    explicit AmbientMismatch(const std::string& m) : std::runtime_error("ambient mismatch: " + m) {}
};

struct NotAUnit : std::runtime_error {
    explicit NotAUnit(const std::string& m) : std::runtime_error("not a unit: " + m) {}
};

struct NotACocycle : std::runtime_error {
    explicit NotACocycle(const std::string& m) : std::runtime_error("not a cocycle: " + m) {}
};

struct OracleBound : std::runtime_error {
    explicit OracleBound(const std::string& m) : std::runtime_error("oracle bound exceeded: " + m) {}
};

// Degree-zero normalization only handles coefficients that are roots of unity
// of order dividing a power of l; anything else lands here.
struct UnsupportedDegreeZero : std::runtime_error {
    explicit UnsupportedDegreeZero(const std::string& m) : std::runtime_error("unsupported degree-zero twist: " + m) {}
};

// A nonexact obstruction appeared away from l*Phi+; would falsify the
// cohomology support computation, so it is a hard error.
struct TheoremViolation : std::runtime_error {
    explicit TheoremViolation(const std::string& m) : std::runtime_error("classification invariant violated: " + m) {}
};

// A sign/exponent convention produced an inconsistent structure (for example a
// divided-power tensor that fails the twist axioms).
struct ConventionError : std::runtime_error {
    explicit ConventionError(const std::string& m) : std::runtime_error("convention error: " + m) {}
};

}  // namespace qb
