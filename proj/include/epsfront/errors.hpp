#ifndef EPSFRONT_ERRORS_HPP
#define EPSFRONT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epsfront {

struct UnboundedBoxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnboundedObjectiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalInstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace epsfront

#endif  // EPSFRONT_ERRORS_HPP
