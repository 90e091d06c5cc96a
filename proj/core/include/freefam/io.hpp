#ifndef FREEFAM_IO_HPP
#define FREEFAM_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "freefam/format.hpp"
#include "freefam/freeconv.hpp"
#include "freefam/measures.hpp"

namespace freefam {

/// Writes `x,density` rows for `points` equally spaced interior points of
/// the continuous part ('\n' line endings, header row first). A purely
/// atomic measure produces the header only.
void write_density_csv(std::ostream& out, const Measure& nu, std::size_t points = 200);

/// [{"location":x,"mass":p},...]
std::string atoms_json(const Measure& nu);

/// {"grid":[...],"distances":[...],"slope":s}
std::string convergence_report_json(const ConvergenceReport& report);

}  // namespace freefam

#endif  // FREEFAM_IO_HPP
