#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planeop/core.hpp"

namespace planeop::cli {

/// Malformed command-line input (exit code 1).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "a,b;c,d" (rows split by ';', columns by ',') or a JSON array [[a,b],[c,d]].
/// Locale independent; all four entries must be finite.
Mat2 parse_matrix(std::string_view text);

/// "x,y".
Vec2 parse_point(std::string_view text);

/// Shortest representation that parses back to the same double.
std::string format_double(double value);

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDomainError = 2 };

/// Runs the tool with args[0] as the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planeop::cli
