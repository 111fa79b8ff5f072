#pragma once

// Text output shared by the command-line tool and the Python module.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "surf4/locus.hpp"

namespace surf4 {

/// Ordered key = value pairs.
using Record = std::vector<std::pair<std::string, std::string>>;

/// Everything known at one point, in this order:
///
///   x y E F G W Ehat Fhat Ghat a b c e f g
///   K K_hessian K_brioschi kappa kappa_minors H3 H4 Delta Delta_det
///   nq0 nq1 nq2 class inflection_type circle minimal umbilic rankM
///   asymptotic binormal wintgen_gap semi_axis_major semi_axis_minor
///   indicatrix_degenerate indicatrix_conic indicatrix_kind
///   characteristic_conic characteristic_kind
///
/// Direction lists are "u v" pairs joined by ';' ("none" when empty, "all"
/// at an inflection). Conic matrices are nine row-major entries, "none"
/// when the indicatrix is degenerate.
Record analyze_record(const SurfaceSpec& surface, double x, double y, const ToleranceSet& tol = {});

/// One "key=value" line per entry.
std::string format_record(const Record& record);

/// Header x,y,K,kappa,Delta,class; nodes row by row from (xmin, ymin).
std::string grid_csv(const SurfaceSpec& surface, int res, const ToleranceSet& tol = {});

/// Header polyline_id,vertex_id,x,y,delta_residual.
std::string trace_csv(const PolylineSet& set);

/// One "x y type K detHDelta residual" line per report.
std::string inflections_text(const std::vector<InflectionReport>& reports);

struct SelfCheckFailure
{
    double x = 0.0, y = 0.0;
    std::string check;
    double value = 0.0;
    double limit = 0.0;
};

struct SelfCheckSummary
{
    std::size_t points = 0;
    std::size_t checks = 0;
    std::vector<SelfCheckFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Cross-formula checks at every grid node: K three ways, kappa two ways,
/// Delta two ways, the normal Gram identity, the Wintgen inequality, the
/// area law, and the Kommerell conic kind.
SelfCheckSummary self_check(const SurfaceSpec& surface, int res);

} // namespace surf4
