#pragma once

#include "qhankel/ratfunc.hpp"
#include "qhankel/zpoly.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qhankel::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kInvalidFlags = 2, kMismatch = 3 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string latex(const QPoly& p);
std::string latex(const RatFuncQ& f);
std::string latex(const mpq_class& v);
std::string latex(const ZPoly& p);

}  // namespace qhankel::cli
