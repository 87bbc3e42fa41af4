#pragma once

namespace yb::cli {

// Exit codes: 0 all residuals within tolerance, 2 tolerance failure, 1 usage or IO error.
int run_command(int argc, char** argv);

}  // namespace yb::cli
