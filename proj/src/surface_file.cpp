#include "surf4/surface_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace surf4 {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Domain parse_domain(std::string_view value, int line)
{
    std::vector<double> nums;
    std::size_t pos = 0;
    while (true) {
        while (pos < value.size() && (value[pos] == ' ' || value[pos] == '\t'))
            ++pos;
        if (pos == value.size())
            break;
        double v = 0.0;
        const char* begin = value.data() + pos;
        const char* end = value.data() + value.size();
        if (*begin == '+')
            ++begin;
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc() || (res.ptr != end && *res.ptr != ' ' && *res.ptr != '\t'))
            throw SurfaceFileError(line, "malformed domain: expected four numbers 'xmin xmax ymin ymax'");
        nums.push_back(v);
        pos = static_cast<std::size_t>(res.ptr - value.data());
    }
    if (nums.size() != 4)
        throw SurfaceFileError(line, "malformed domain: expected four numbers 'xmin xmax ymin ymax', got " +
                                         std::to_string(nums.size()));
    try {
        return make_domain(nums[0], nums[1], nums[2], nums[3]);
    } catch (const std::invalid_argument& ex) {
        throw SurfaceFileError(line, ex.what());
    }
}

} // namespace

SurfaceSpec parse_surface_text(std::string_view text)
{
    std::optional<Expr> phi, psi;
    std::optional<Domain> domain;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw SurfaceFileError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "phi" || key == "psi") {
            auto& slot = key == "phi" ? phi : psi;
            if (slot)
                throw SurfaceFileError(line_no, "duplicate key '" + std::string(key) + "'");
            try {
                slot = parse_expression(value);
            } catch (const ParseError& ex) {
                throw SurfaceFileError(line_no, std::string(key) + ": " + ex.what());
            }
        } else if (key == "domain") {
            if (domain)
                throw SurfaceFileError(line_no, "duplicate key 'domain'");
            domain = parse_domain(value, line_no);
        } else {
            throw SurfaceFileError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!phi)
        throw SurfaceFileError(0, "missing key 'phi'");
    if (!psi)
        throw SurfaceFileError(0, "missing key 'psi'");
    if (!domain)
        throw SurfaceFileError(0, "missing key 'domain'");
    return SurfaceSpec{*phi, *psi, *domain};
}

SurfaceSpec parse_surface_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SurfaceFileError(0, "cannot open surface file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface_text(buf.str());
}

} // namespace surf4
