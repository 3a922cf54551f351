#ifndef NORMTOP_CLI_HPP
#define NORMTOP_CLI_HPP

namespace normtop {

// Full command dispatch. Exit code 0: success, certificate written.
// 1: a checked mathematical precondition failed (diagnostic JSON written).
// 2: malformed input or usage.
int run_cli(int argc, const char* const* argv);

} // namespace normtop

#endif
