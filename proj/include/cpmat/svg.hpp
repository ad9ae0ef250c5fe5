#pragma once

#include "cpmat/lattice.hpp"

#include <string>

namespace cpmat {

struct SvgOptions {
    double unit = 32.0;    // pixels per lattice step
    double margin = 24.0;  // pixels around the bounding box
    bool show_grid = true;
};

/// Draws FPD(M) for a 2x2 modulus: the parallelogram spanned by the columns of
/// M (solid edges from the origin, dashed far edges), the FPD points as filled
/// circles ("fpd-point") and the remaining lattice points of the closed
/// parallelogram as hollow circles ("excluded-point"). Each circle carries
/// data-x/data-y lattice coordinates. Output is deterministic.
/// Throws UnsupportedDimension when M is not 2x2.
std::string render_fpd_svg(const Fpd& fpd, const SvgOptions& opts = {});

}  // namespace cpmat
