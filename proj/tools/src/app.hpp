#pragma once

#include <iosfwd>

namespace ddk::cli {

/// Entry point shared by the executable and the tests. Exit codes: 0 all
/// asserted identities hold, 1 an asserted identity failed, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ddk::cli
