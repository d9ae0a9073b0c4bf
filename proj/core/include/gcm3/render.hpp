#pragma once

/**
 * @file render.hpp
 * @brief Klein-disk SVG rendering of polygon candidates.
 *
 * Mirrors are straight chords in the Klein model, so each side is drawn as
 * the chord between the mirror's ideal endpoints. This is the only place in
 * the library where floating point is used.
 */

#include <string>

#include "gcm3/search.hpp"

namespace gcm3 {

// SVG 1.1 document. Throws PreconditionError when the candidate has fewer
// than 3 roots or its data is degenerate (non-timelike chamber).
std::string render_klein_svg(const PolygonCandidate& c);

}  // namespace gcm3
