#ifndef FREEFAM_FREEFAM_HPP
#define FREEFAM_FREEFAM_HPP

#include "freefam/cumulants.hpp"
#include "freefam/error.hpp"
#include "freefam/format.hpp"
#include "freefam/freeconv.hpp"
#include "freefam/io.hpp"
#include "freefam/measures.hpp"
#include "freefam/moments.hpp"
#include "freefam/quadrature.hpp"
#include "freefam/sequences.hpp"
#include "freefam/series.hpp"
#include "freefam/transforms.hpp"
#include "freefam/variance_function.hpp"

#endif  // FREEFAM_FREEFAM_HPP
