#pragma once

// Command-line front end.  Returns the process exit code:
//   0  command succeeded (for checks: every verdict pass or inapplicable)
//   1  a check produced a fail verdict
//   2  usage, parse, or computation error (message on stderr)

namespace monolab {

int run_cli(int argc, const char* const* argv);

}  // namespace monolab
