#pragma once

// Normal-plane plot: indicatrix, characteristic conic, binormals, origin.

#include <string>
#include <vector>

#include "surf4/classify.hpp"

namespace surf4 {

struct PlotData
{
    std::vector<Vec2> indicatrix;                   ///< 256 samples of eta
    std::vector<std::vector<Vec2>> characteristic;  ///< one polyline per branch
    std::vector<bool> characteristic_closed;
    std::vector<Vec2> binormals;                    ///< unit directions
    Vec2 view_min = Vec2::Zero();                   ///< bounding box with margin
    Vec2 view_max = Vec2::Zero();
};

inline constexpr int kIndicatrixSamples = 256;
inline constexpr int kCharacteristicSamples = 2048;

/// Samples everything in (e3, e4) coordinates. The characteristic conic is
/// traced through evolvent points and split into branches where it leaves
/// the view or jumps across infinity.
PlotData build_plot(const LocalInvariants& inv, const ToleranceSet& tol = {});

/// Static SVG 1.1 document with an 800 x 800 viewBox.
std::string render_svg(const PlotData& plot);

} // namespace surf4
