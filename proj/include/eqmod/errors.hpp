#pragma once

#include <stdexcept>
#include <string>

namespace eqmod {

// Graded-only operations reject non-homogeneous input with this type.
struct non_homogeneous_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A desk-scale computational bound was exceeded; the message names the bound.
struct bound_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Consistency violation that valid inputs cannot trigger.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace eqmod
