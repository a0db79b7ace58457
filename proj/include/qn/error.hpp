#pragma once

#include <stdexcept>
#include <string>

namespace qn {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or search domain exceeds its configured cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Candidate (top,bottom) square count blew the lifting cap.
struct UniverseTooLarge : CapExceeded {
    explicit UniverseTooLarge(const std::string& what) : CapExceeded(what) {}
};

// A^Hom(X,A) does not fit the power cap.
struct PowerTooLarge : CapExceeded {
    explicit PowerTooLarge(const std::string& what) : CapExceeded(what) {}
};

// Syntax or resolution error in the textual notation; pos is a byte offset.
struct NotationError : Error {
    size_t pos;
    NotationError(const std::string& what, size_t pos_)
        : Error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

} // namespace qn
