// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace extq {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct NonSquare : Error {
    explicit NonSquare(const std::string& m) : Error(m) {}
};
struct UnsupportedType : Error {
    explicit UnsupportedType(const std::string& m) : Error(m) {}
};
struct GroupTooLarge : Error {
    explicit GroupTooLarge(const std::string& m) : Error(m) {}
};
struct NotSubgroup : Error {
    explicit NotSubgroup(const std::string& m) : Error(m) {}
};
struct NotPrime : Error {
    explicit NotPrime(const std::string& m) : Error(m) {}
};
struct InvalidParam : Error {
    explicit InvalidParam(const std::string& m) : Error(m) {}
};
struct NotFixed : Error {
    explicit NotFixed(const std::string& m) : Error(m) {}
};
struct Unlabelled : Error {
    explicit Unlabelled(const std::string& m) : Error(m) {}
};
struct LabelInconsistency : Error {
    explicit LabelInconsistency(const std::string& m) : Error(m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(m) {}
};

}  // namespace extq
