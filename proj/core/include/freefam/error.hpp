#ifndef FREEFAM_ERROR_HPP
#define FREEFAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace freefam {

// Raised when an input violates an operation's precondition (bad
// coefficients, a mean outside the family domain, a series that cannot be
// inverted, ...). Anything else escaping the library is an internal error.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace freefam

#endif  // FREEFAM_ERROR_HPP
