#pragma once

#include <stdexcept>
#include <string>

namespace zlab {

// Evaluation requested too close to the a+b = 0 pole of an exp-rational form.
struct PoleProximity : std::domain_error {
    using std::domain_error::domain_error;
};

// A mean value c <= 0 cannot be fed into log-based proportion bounds.
struct NonPositiveMean : std::domain_error {
    using std::domain_error::domain_error;
};

// Zeta evaluation requested within 1e-6 of the s = 1 pole.
struct NearPole : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameters violate a structural invariant (bad mollifier spec, bad decode).
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Configuration text failed to decode; message carries line/field context.
struct InvalidConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature exceeded its node budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zlab
