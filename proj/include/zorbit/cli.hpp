#pragma once

#include <iosfwd>

namespace zorbit {

// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or spec error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zorbit
