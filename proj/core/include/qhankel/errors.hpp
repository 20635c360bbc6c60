#pragma once

/**
 * @file errors.hpp
 * @brief Exception types raised by the qhankel library.
 *
 * Every failure mode that a caller may want to distinguish gets its own
 * type. All derive from qhankel::Error so a CLI can catch them in one place.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhankel {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero rational function") {}
};

/// Inexact division in Z[q] where exactness was required.
class InexactDivision : public Error {
public:
    InexactDivision() : Error("polynomial division is not exact") {}
};

/// Reduced denominator vanishes at the evaluation point.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& point)
        : Error("pole at q = " + point) {}
};

/// Malformed serialized input. `position` is a byte offset or -1 when the
/// failure is structural; `path` names the offending JSON element.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::ptrdiff_t position, std::string path = {})
        : Error(format(what, position, path)), position_(position), path_(std::move(path)) {}

    std::ptrdiff_t position() const noexcept { return position_; }
    const std::string& path() const noexcept { return path_; }

private:
    static std::string format(const std::string& what, std::ptrdiff_t pos, const std::string& path) {
        std::string msg = "parse error";
        if (pos >= 0) msg += " at byte " + std::to_string(pos);
        if (!path.empty()) msg += " at " + path;
        return msg + ": " + what;
    }

    std::ptrdiff_t position_;
    std::string path_;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A Pochhammer factor in the denominator of a basic hypergeometric term is zero.
class VanishingDenominator : public Error {
public:
    explicit VanishingDenominator(int k)
        : Error("denominator Pochhammer vanishes at term k = " + std::to_string(k)), k_(k) {}
    int term() const noexcept { return k_; }

private:
    int k_;
};

/// Favard nondegeneracy violated: b_n = 0.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(int n)
        : Error("three-term recurrence is degenerate: b_" + std::to_string(n) + " = 0"), n_(n) {}
    int index() const noexcept { return n_; }

private:
    int n_;
};

/// Moment sequence is not quasi-definite at the given depth.
class VanishingHankel : public Error {
public:
    explicit VanishingHankel(int depth)
        : Error("Hankel determinant vanishes at depth " + std::to_string(depth)), depth_(depth) {}
    int depth() const noexcept { return depth_; }

private:
    int depth_;
};

class InsufficientLength : public Error {
public:
    InsufficientLength(std::size_t needed, std::size_t have)
        : Error("sequence needs " + std::to_string(needed) + " values, has " + std::to_string(have)) {}
};

class PairingMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace qhankel
