#pragma once

#include <iosfwd>

namespace gyro {

// full command dispatch; returns the process exit code
// (0 = all checks pass, 1 = a property failed, 2 = usage or input error)
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace gyro
