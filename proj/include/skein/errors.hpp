#pragma once

#include <stdexcept>
#include <string>

namespace skein {

class SkeinError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UndefinedDegreeError : public SkeinError {
public:
    UndefinedDegreeError() : SkeinError("minimum degree of the zero polynomial is undefined") {}
};

class RemainderError : public SkeinError {
public:
    using SkeinError::SkeinError;
};

class AdmissibilityError : public SkeinError {
public:
    AdmissibilityError(int a, int b, int c)
        : SkeinError("inadmissible triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")") {}
};

class ArityError : public SkeinError {
public:
    using SkeinError::SkeinError;
};

class GradingError : public SkeinError {
public:
    using SkeinError::SkeinError;
};

class RangeError : public SkeinError {
public:
    using SkeinError::SkeinError;
};

class ParseError : public SkeinError {
public:
    ParseError(const std::string& what, std::size_t pos)
        : SkeinError(what + " at position " + std::to_string(pos)), position_(pos) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class BudgetError : public SkeinError {
public:
    BudgetError(const std::string& cap, long long limit, long long requested)
        : SkeinError("budget exceeded: " + cap + " = " + std::to_string(limit) + ", required " +
                     std::to_string(requested)),
          cap_(cap) {}
    const std::string& cap() const { return cap_; }

private:
    std::string cap_;
};

class PreconditionError : public SkeinError {
public:
    using SkeinError::SkeinError;
};

class InsufficientWindowError : public SkeinError {
public:
    InsufficientWindowError(std::size_t have, std::size_t need)
        : SkeinError("insufficient window: have " + std::to_string(have) + " coefficients, need " +
                     std::to_string(need)) {}
};

}  // namespace skein
