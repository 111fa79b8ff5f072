#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surf4 {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Expression syntax error or unknown identifier. `offset` is a byte offset
/// into the parsed text.
class ParseError : public Error
{
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(message + " at offset " + std::to_string(offset))
        , offset_(offset)
        , detail_(message)
    {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t offset_;
    std::string detail_;
};

/// Expression evaluation outside its domain: log/sqrt of a non-positive
/// argument, tan at a pole, division by zero, non-finite result.
class EvalError : public Error
{
public:
    using Error::Error;
};

/// A geometric construction that is undefined at the requested point.
class GeometryError : public Error
{
public:
    enum class Reason {
        DegenerateMetric,
        InconsistentFormulas,
        Umbilic,
        DegenerateIndicatrix,
        SingularSystem,
        RankDeficientConic,
        PoleAtInfinity,
        Inflection,
        NoAsymptoticDirection,
    };

    GeometryError(Reason reason, const std::string& message)
        : Error(message)
        , reason_(reason)
    {}

    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

} // namespace surf4
