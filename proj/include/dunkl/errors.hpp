#ifndef DUNKL_ERRORS_HPP
#define DUNKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dunkl {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtSpecialization : std::runtime_error {
    explicit PoleAtSpecialization(const std::string& what) : std::runtime_error(what) {}
};

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct WrongVariableFamily : std::runtime_error {
    explicit WrongVariableFamily(const std::string& what) : std::runtime_error(what) {}
};

struct OddPermutationUnderFormalTwist : std::runtime_error {
    explicit OddPermutationUnderFormalTwist(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroOperator : std::runtime_error {
    explicit ZeroOperator(const std::string& what) : std::runtime_error(what) {}
};

struct NotSpherical : std::runtime_error {
    explicit NotSpherical(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSuite : std::runtime_error {
    explicit UnknownSuite(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

} // namespace dunkl

#endif
