#pragma once

#include <stdexcept>
#include <string>

namespace msc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed construction input: bad vertex id, self-loop, parse failure.
struct InvalidInput : Error {
    using Error::Error;
};

// A solver was invoked outside the hypotheses it is correct under.
struct PreconditionError : Error {
    using Error::Error;
};

// A configured cap (oracle size, subset-scan budget, ...) was exceeded.
struct ResourceLimit : Error {
    using Error::Error;
};

// A produced solution failed re-verification. Always a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace msc
