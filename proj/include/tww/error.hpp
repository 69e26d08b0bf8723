#ifndef TWW_ERROR_HPP
#define TWW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tww {

// Raised when caller input violates a documented precondition (unknown
// vertex, malformed step, bad parameter). Messages carry a stable leading
// phrase so callers and tests can distinguish the cases.
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a text file does not match one of the declared formats.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tww

#endif
