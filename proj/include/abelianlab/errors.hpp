#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace abelianlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotProlongable : Error {
    using Error::Error;
};

struct AlphabetMismatch : Error {
    using Error::Error;
};

struct TooShort : Error {
    using Error::Error;
};

// Factor enumeration hit the prefix cap before two doublings agreed.
struct NotStabilized : Error {
    NotStabilized(std::size_t n, std::size_t cap)
        : Error("factor set of length " + std::to_string(n) +
                " did not stabilize below prefix cap " + std::to_string(cap)),
          length(n), prefix_cap(cap) {}
    std::size_t length;
    std::size_t prefix_cap;
};

struct NotClosed : Error {
    explicit NotClosed(std::size_t cap)
        : Error("kernel basis exceeded rank cap " + std::to_string(cap)), rank_cap(cap) {}
    std::size_t rank_cap;
};

struct VerificationFailed : Error {
    VerificationFailed(std::uint64_t at, std::string which)
        : Error("relation for " + which + " fails at n=" + std::to_string(at)),
          n(at), label(std::move(which)) {}
    std::uint64_t n;
    std::string label;
};

struct StateCapExceeded : Error {
    explicit StateCapExceeded(std::size_t cap)
        : Error("automatic kernel exceeded state cap " + std::to_string(cap)), state_cap(cap) {}
    std::size_t state_cap;
};

}  // namespace abelianlab
