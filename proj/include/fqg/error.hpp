#ifndef FQG_ERROR_HPP
#define FQG_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text: cycle notation, group files, CLI ranges.
class ParseError : public Error {
public:
    using Error::Error;
};

// The characteristic divides the group order, so the group algebra is not semisimple.
class ModularCaseError : public Error {
public:
    ModularCaseError(std::uint64_t prime, std::uint64_t group_order)
        : Error("modular case unsupported: p = " + std::to_string(prime) + " divides |G| = " +
                std::to_string(group_order)),
          prime_(prime) {}

    std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

// An internal consistency check failed; indicates a bug rather than bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace fqg

#endif  // FQG_ERROR_HPP
