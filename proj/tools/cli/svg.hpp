#pragma once

#include <terrace/frechet.hpp>
#include <terrace/marginals.hpp>

#include <string>

namespace terrace::cli {

/// Largest event count drawn as a figure (256 bars).
inline constexpr std::size_t kMaxFigureEvents = 8;

struct FigureSpec {
  int width_px = 800;
  int height_px = 400;
};

/**
 * Interval chart of the boundary distributions: one column per subset in
 * ascending SubsetIndex order, a red rect spanning [p-(X), p*(X)] and a blue
 * rect spanning [p*(X), p+(X)]. Dashed class="grid" lines mark 0, 1/4, 1/2,
 * 3/4 and 1. Coordinates are exact to 1/1000 px, so a red rect's top edge and
 * its blue partner's bottom edge are the same number.
 *
 * Throws TooLarge for more than kMaxFigureEvents events.
 */
std::string render_figure(const MarginalSet& m, const FigureSpec& spec = {});

}  // namespace terrace::cli
