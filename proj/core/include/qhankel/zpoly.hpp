#pragma once

/**
 * @file zpoly.hpp
 * @brief Polynomials in z with coefficients in Q(q).
 */

#include "qhankel/ratfunc.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace qhankel {

class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const RatFuncQ& c);  // NOLINT(google-explicit-constructor)
    ZPoly(long c) : ZPoly(RatFuncQ(c)) {}  // NOLINT(google-explicit-constructor)
    explicit ZPoly(std::vector<RatFuncQ> coeffs);
    ZPoly(std::initializer_list<RatFuncQ> coeffs);

    /// The polynomial z.
    static ZPoly z();
    /// c z^k.
    static ZPoly monomial(const RatFuncQ& c, int k);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    const RatFuncQ& operator[](std::size_t i) const;
    const RatFuncQ& leading() const;
    const std::vector<RatFuncQ>& coeffs() const noexcept { return c_; }

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& rhs);
    ZPoly& operator-=(const ZPoly& rhs);
    ZPoly& operator*=(const RatFuncQ& s);

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const RatFuncQ& s) { return a *= s; }
    friend ZPoly operator*(const RatFuncQ& s, ZPoly a) { return a *= s; }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    RatFuncQ eval(const RatFuncQ& x) const;
    /// this(inner(z)).
    ZPoly compose(const ZPoly& inner) const;
    /// this(u z + v).
    ZPoly compose_affine(const RatFuncQ& u, const RatFuncQ& v) const;

    std::string str() const;

private:
    void trim();

    std::vector<RatFuncQ> c_;
};

}  // namespace qhankel
