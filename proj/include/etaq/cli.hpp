#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "etaq/qseries.hpp"

namespace etaq::cli {

/// Runs the command line; returns the process exit code (0 success, 1 a
/// claim failed unexpectedly or an expected failure passed, 2 usage,
/// parse or configuration error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "q - 24q^2 + 252q^3" for coefficients a(0..terms).
std::string format_series(const ZSeries& s, std::size_t terms);
/// Residues printed as representatives in [0, l^t).
std::string format_series(const ModSeries& s, std::size_t terms);

}  // namespace etaq::cli
