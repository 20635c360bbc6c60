#pragma once

/**
 * @file qpoly.hpp
 * @brief Dense univariate polynomials in q with arbitrary-precision integer
 * coefficients.
 *
 * Coefficients are stored in ascending order of degree. The zero polynomial
 * is the empty coefficient vector; every other value has a nonzero last
 * coefficient.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qhankel {

class QPoly {
public:
    QPoly() = default;
    QPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit QPoly(const mpz_class& c);
    explicit QPoly(std::vector<mpz_class> coeffs);
    QPoly(std::initializer_list<long> coeffs);

    /// c * q^k, k >= 0.
    static QPoly monomial(const mpz_class& c, int k);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }

    /// Coefficient of q^i; zero beyond the stored range.
    const mpz_class& operator[](std::size_t i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    mpz_class content() const;
    /// this / content, with the sign chosen so the leading coefficient is positive.
    QPoly primitive_part() const;
    int sign() const;  // sign of the leading coefficient

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);
    QPoly& operator*=(const mpz_class& s);

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    friend QPoly operator*(QPoly lhs, const mpz_class& s) { return lhs *= s; }
    friend QPoly operator*(const mpz_class& s, QPoly rhs) { return rhs *= s; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Multiply by q^k, k >= 0.
    QPoly shifted(int k) const;

    mpq_class eval(const mpq_class& x) const;

    /// Human-readable form such as "1 - 2*q + q^3".
    std::string str(const char* var = "q") const;

private:
    void trim();

    std::vector<mpz_class> c_;
};

/// Quotient a / b; throws InexactDivision when b does not divide a in Z[q].
QPoly divexact(const QPoly& a, const QPoly& b);
QPoly divexact(const QPoly& a, const mpz_class& s);

/// lc(b)^(deg a - deg b + 1) * a mod b.
QPoly pseudo_remainder(const QPoly& a, const QPoly& b);

/// Greatest common divisor over Z[q], normalized primitive with positive
/// leading coefficient. gcd(0, 0) = 0 and gcd(p, 0) = primitive_part(p).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Subresultant remainder sequence without modular shortcuts. Exposed so
/// tests can compare it against the accelerated gcd.
QPoly gcd_subresultant(const QPoly& a, const QPoly& b);

}  // namespace qhankel
