#pragma once

/// Deterministic SVG renderers for question figures. Every coordinate is
/// formatted from integer hundredths, no timestamps or generated ids appear in
/// the output, so equal inputs give byte-identical files on any platform.

#include <string>
#include <vector>

#include "qbank/question.hpp"
#include "qbank/radical.hpp"
#include "qbank/stats.hpp"
#include "qbank/templates.hpp"
#include "qbank/trapezoid.hpp"

namespace qbank {

/// Square scatterplot with axes labeled "Variable 1" and "Variable 2", both
/// spanning [0, max of the data]. One circle per point. Needs n >= 2 and
/// first-quadrant data.
ImageAsset render_scatterplot(const SampleXY& data, const std::string& filename,
                              int width_px = 500);

/// Lattice-point grid over [0, extent]^2 with the trapezoid outline drawn on
/// top: (extent+1)^2 dots and 4 edges. Vertices must fit the grid.
ImageAsset render_lattice_figure(const LatticeTrapezoid& t, std::int64_t grid_extent,
                                 const std::string& filename);

/// Typeset image of an exact radical sum, e.g. 13 + sqrt(13) with a drawn
/// radical glyph; plain integers render as digit glyphs only.
ImageAsset render_typeset_radical(const RadicalSum& value, const std::string& filename);

/// Equal-width count histogram over [min, max]; a zero-width range falls back
/// to one unit-wide bin. One rect per nonempty bin position, each carrying its
/// count in a data-count attribute.
ImageAsset render_histogram(const std::vector<double>& values, int bin_count,
                            const std::string& filename, int width_px = 500);

/// Runs every queued rendering job, in order.
std::vector<ImageAsset> render_assets(const std::vector<AssetJob>& jobs);

} // namespace qbank
