#pragma once

#include <stdexcept>
#include <string>

namespace tracecodes {

// Raised when an enumeration would exceed the configured ceiling.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when supplied data fails a consistency check (e.g. a share vector
// that cannot extend to a dual codeword, or a defining set that is not
// closed under scalar multiplication when it must be).
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// The defining set came out empty (possible only at tiny parameters).
class empty_defining_set_error : public std::invalid_argument {
public:
    explicit empty_defining_set_error(const std::string& what) : std::invalid_argument(what) {}
};

// The requested secret sharing scheme is degenerate (trivial dual or a zero
// secret column).
class degenerate_scheme_error : public std::invalid_argument {
public:
    explicit degenerate_scheme_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tracecodes
