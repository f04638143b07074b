#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperdiag::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

// Entry point of the command-line tool; args excludes the program name.
// Returns 0 on success, 1 on a failed verification or assertion, 2 on a
// usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hyperdiag::cli
