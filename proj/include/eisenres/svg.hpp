#pragma once

// Picture of a deformation run: polar lines, the Stage-I segment, crossing
// points, the Stage-II segments and the support of the discrete functional.

#include <string>

#include "eisenres/spectral.hpp"

namespace eisenres {

/// Rank 1 draws a number line; rank 2 the real plane with the Euclidean
/// metric of the root system.  Higher rank throws ConfigError.
std::string render_svg(const SpectralReport& report, const RootSystem& rs);

}  // namespace eisenres
