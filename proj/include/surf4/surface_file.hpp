#pragma once

// Surface description files:
//
//   # comment
//   phi = x^2 - y^2
//   psi = 2*x*y
//   domain = -1 1 -1 1
//
// Each key must appear exactly once; the domain lists xmin xmax ymin ymax.

#include <string>
#include <string_view>

#include "surf4/localgeom.hpp"

namespace surf4 {

/// Malformed surface file. `line` is 1-based, 0 when the problem is not tied
/// to one line (a missing key).
class SurfaceFileError : public Error
{
public:
    SurfaceFileError(int line, const std::string& message)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message)
        , line_(line)
    {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

SurfaceSpec parse_surface_text(std::string_view text);

/// Reads and parses `path`; an unreadable file is a SurfaceFileError too.
SurfaceSpec parse_surface_file(const std::string& path);

} // namespace surf4
