#pragma once

#include <stdexcept>
#include <string>

namespace kstruve {

// Base class for every failure this library reports by exception.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside a function's domain of definition.
struct domain_error : error {
    using error::error;
};

// A gamma factor was requested at (or within tolerance of) one of its poles.
struct pole_error : error {
    using error::error;
};

// A magnitude left the representable double range.
struct overflow_error : error {
    using error::error;
};

// A series or quadrature exhausted its work budget before reaching tolerance.
struct nonconvergence_error : error {
    using error::error;
};

// Wright-series weight condition violated: sum(beta) - sum(alpha) must exceed -1.
struct convergence_condition_error : error {
    using error::error;
};

// The integrand itself failed during quadrature; carries the abscissa.
struct integrand_error : error {
    integrand_error(const std::string& why, double where)
        : error(why + " (integrand at t=" + std::to_string(where) + ")"), location(where) {}
    double location;
};

} // namespace kstruve
