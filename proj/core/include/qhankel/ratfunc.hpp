#pragma once

/**
 * @file ratfunc.hpp
 * @brief Elements of the rational function field Q(q).
 *
 * A RatFuncQ is stored as num/den with num, den in Z[q] and kept canonical
 * after every operation:
 *   - den is nonzero with positive leading coefficient;
 *   - num and den have no common factor of positive degree;
 *   - the integer contents of num and den are coprime;
 *   - zero is 0/1.
 * Two values are equal exactly when their canonical forms are identical.
 * Scalars (rationals) are RatFuncQ values with constant num and den.
 */

#include "qhankel/qpoly.hpp"

#include <gmpxx.h>

#include <string>

namespace qhankel {

class RatFuncQ {
public:
    RatFuncQ() : den_(1) {}
    RatFuncQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RatFuncQ(const mpz_class& c) : num_(c), den_(1) {}
    explicit RatFuncQ(const mpq_class& c);
    explicit RatFuncQ(QPoly num) : num_(std::move(num)), den_(1) { normalize_content(); }
    /// Throws DivisionByZero when den is zero.
    RatFuncQ(QPoly num, QPoly den);

    /// q^k for any integer k; negative powers become 1/q^|k|.
    static RatFuncQ q_pow(int k);
    static RatFuncQ q() { return q_pow(1); }

    const QPoly& num() const noexcept { return num_; }
    const QPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    RatFuncQ operator-() const;
    RatFuncQ& operator+=(const RatFuncQ& rhs);
    RatFuncQ& operator-=(const RatFuncQ& rhs);
    RatFuncQ& operator*=(const RatFuncQ& rhs);
    RatFuncQ& operator/=(const RatFuncQ& rhs);

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

    /// Throws DivisionByZero for the zero function.
    RatFuncQ inverse() const;
    /// Integer power; negative exponents invert.
    RatFuncQ pow(long e) const;

    /// Exact value at a rational point; throws PoleError if the reduced
    /// denominator vanishes there.
    mpq_class eval_at(const mpq_class& point) const;

    /// Re-runs full canonicalization on an arbitrary num/den pair.
    static RatFuncQ reduce(QPoly num, QPoly den);

    std::string str() const;

private:
    struct Canonical {};
    RatFuncQ(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize_content();

    QPoly num_;
    QPoly den_;
};

/// Operation selector for the generic arithmetic entry point.
enum class ArithOp { add, sub, mul, div };
RatFuncQ ratfunc_arith(const RatFuncQ& lhs, const RatFuncQ& rhs, ArithOp op);

/// (-1)^e as an integer.
inline long parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace qhankel
