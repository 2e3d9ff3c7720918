#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace iasi::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_usage = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`
/// as JSON; diagnostics go to `err`. A labeling file named "-" is read from
/// `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace iasi::cli
