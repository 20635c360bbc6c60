#pragma once

/**
 * @file orthopoly.hpp
 * @brief Monic three-term recurrence families and the specialized big
 * q-Jacobi polynomials J_{l,n}, their monic normalization Jt_{l,n} and the
 * rescaled family P_{l,n}.
 *
 *   J_{l,n}(z)  = 3phi2(q^{-n}, -q^{n+l+1}, z; q^{l+1}, 0; q, q)
 *   Jt_{l,n}(z) = (q^{l+1};q)_n / (-q^{n+l+1};q)_n * J_{l,n}(z)
 *   P_{l,n}(z)  = (-1)^n / (q^n (1-q)^n) * Jt_{l,n}((q^2 - q) z + q)
 *
 * Each family is available from its hypergeometric definition and from its
 * recurrence; the two are compared in the test suite.
 */

#include "qhankel/ratfunc.hpp"
#include "qhankel/zpoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qhankel {

/// Recurrence data p_{n+1} = (a_n + z) p_n - b_n p_{n-1}, with p_0 = 1 and
/// p_1 = a_0 + z. `b` is only queried for n >= 1.
struct FavardData {
    std::function<RatFuncQ(int)> a;
    std::function<RatFuncQ(int)> b;
    RatFuncQ mu0{1};
};

/// [p_0, ..., p_upto]. Throws DegeneracyError naming n when b(n) = 0.
std::vector<ZPoly> three_term_build(const FavardData& data, int upto);

enum class FamilyKind { bigQJacobi_J, monic_Jtilde, P_family };

struct FamilyId {
    FamilyKind kind = FamilyKind::P_family;
    int ell = 0;

    std::string name() const;
};

struct ABCoeffs {
    RatFuncQ A;
    RatFuncQ B;
};

struct RecurrenceCoeffs {
    RatFuncQ a;
    RatFuncQ b;  // zero when n = 0
};

/// Coefficients of A J_{n+1} = (A + B - 1 + z) J_n - B J_{n-1}.
ABCoeffs coeffs_AB(int ell, int n);
/// Recurrence coefficients of the monic Jt_{l,n}.
RecurrenceCoeffs coeffs_monic(int ell, int n);
/// Recurrence coefficients of P_{l,n}.
RecurrenceCoeffs coeffs_P(int ell, int n);

FavardData favard_Jtilde(int ell);
FavardData favard_P(int ell);

/// J_{l,n} summed from its 3phi2 with (z;q)_k expanded as a polynomial.
ZPoly build_J_via_phi2(int ell, int n);
/// Jt_{l,n} as the normalizing scalar times J_{l,n}.
ZPoly build_Jtilde_via_scaling(int ell, int n);
/// P_{l,n} summed from its 3phi2 with the parameter q(1 - (1-q)z).
ZPoly build_P_via_phi2(int ell, int n);

/// r_n(z) = u^{-n} p_n(u z + v). Throws InvalidArgument if u = 0.
std::vector<ZPoly> affine_transform(const std::vector<ZPoly>& p, const RatFuncQ& u, const RatFuncQ& v);

/// P_{l,0..upto} from the recurrence.
std::vector<ZPoly> build_P_via_recurrence(int ell, int upto);
/// P_{l,0..upto} as the affine image of Jt_{l,0..upto} (built from 3phi2 scaling).
std::vector<ZPoly> build_P_via_affine(int ell, int upto);

/// Members 0..upto of a family; J from its 3phi2, Jt and P from their recurrences.
std::vector<ZPoly> build_family(const FamilyId& family, int upto);

/// Closed form of P_{1,n}(0).
RatFuncQ P1_at_zero_closed(int n);

}  // namespace qhankel
