#ifndef FREEFAM_FORMAT_HPP
#define FREEFAM_FORMAT_HPP

#include <string>

namespace freefam {

/// Shortest decimal text that reads back to exactly `value` (at most 17
/// significant digits). Negative zero prints as "0"; non-finite values
/// print as "null" so the result is always a JSON token.
std::string format_number(double value);

}  // namespace freefam

#endif  // FREEFAM_FORMAT_HPP
