#pragma once

#include <stdexcept>

namespace contx {

// Argument outside an operation's stated domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested set has no members / no admissible parameters.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A certified-interval computation could not separate the decision at the
// requested precision; callers retry with more bits.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace contx
