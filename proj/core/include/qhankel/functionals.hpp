#pragma once

/**
 * @file functionals.hpp
 * @brief Linear functionals on Q(q)[z] and the q-binomial basis.
 *
 * The basis polynomials are
 *
 *   [m, z choose n]_q = (1/[n]_q!) prod_{k=m-n+1}^{m} ([k]_q + q^k z),
 *
 * and {[n, z choose n]_q} is a basis of Q(q)[z]. Phi and Theta_l are defined
 * on that basis; Xi_l is defined on monomials. Internally every functional
 * is applied through its monomial moments L(z^k).
 */

#include "qhankel/carlitz.hpp"
#include "qhankel/orthopoly.hpp"
#include "qhankel/ratfunc.hpp"
#include "qhankel/serialize.hpp"
#include "qhankel/zpoly.hpp"

#include <string>
#include <vector>

namespace qhankel {

ZPoly qbinom_basis(int m, int n);

/// Coefficients c_0..c_N with P = sum c_n [n, z choose n]_q.
std::vector<RatFuncQ> to_diagonal_basis(const ZPoly& P);

/// Phi([n, z choose n]_q) = 1/(-q^2;q)_n.
RatFuncQ phi_on_basis(int n);
/// Phi by expanding P in the diagonal basis.
RatFuncQ phi_basis_route(const ZPoly& P);
/// Phi by replacing z^k with eps_k.
RatFuncQ phi_moment_route(const ZPoly& P);
/// Phi through its moments.
RatFuncQ phi(const ZPoly& P);

/// Closed form of Phi([m, z choose n]_q) for 0 <= m <= n.
RatFuncQ phi_closed_m_n(int m, int n);
/// Closed form of Phi([n+1, z choose n]_q).
RatFuncQ phi_closed_n1_n(int n);

/// q Phi(P(1 + q z)) + Phi(P(z)) == (1 + q) P(0), with Phi taken on the basis.
bool verify_phi_relation(const ZPoly& P);

/// Theta_l([n, z choose n]_q) = (q^{l+1};q)_n / (q, -q^{l+2}; q)_n.
RatFuncQ theta_on_basis(int ell, int n);
RatFuncQ theta_moment(int ell, int n);
/// Theta_l(z^0..z^upto), sharing one basis expansion.
std::vector<RatFuncQ> theta_moments(int ell, int upto);

/// xi_{l,n} = q^{(l+1)n} (-q;q)_n / (-q^{l+2};q)_n.
RatFuncQ xi_moment(int ell, int n);
std::vector<RatFuncQ> xi_moments(int ell, int upto);

enum class FunctionalKind { Phi, Phi_ell, Theta, Xi };

struct FunctionalId {
    FunctionalKind kind = FunctionalKind::Phi;
    int ell = 0;

    /// Validates ell (Phi_ell needs l in {0, 1}); throws InvalidArgument.
    static FunctionalId make(FunctionalKind kind, int ell = 0);
    std::string name() const;
};

/// L(z^0), ..., L(z^upto).
std::vector<RatFuncQ> moments(const FunctionalId& functional, int upto);
/// sum_k coeff_k(P) * moments[k]; throws InsufficientLength if deg P is too large.
RatFuncQ apply_moments(const std::vector<RatFuncQ>& moments, const ZPoly& P);

/// Values s_0..s_upto of any named sequence (eps, beta, Theta_l moments, xi_l).
MomentSeq make_moment_seq(const SeqId& id, int upto);

struct OrthogonalityFailure {
    int m;
    int n;
    RatFuncQ value;
};

struct OrthogonalityReport {
    std::string functional;
    std::string family;
    int upto = 0;
    RatFuncQ norm0;  // L(p_0)
    std::vector<OrthogonalityFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Checks L(p_0) != 0 and L(p_m p_n) = 0 for all m < n <= upto, with the
/// products fully expanded. Failures record (m, n, value); a vanishing
/// L(p_0) is recorded as (0, 0, 0). Supported pairings: (Phi, P_0),
/// (Phi_l, P_l) for l in {0,1}, (Theta_l, P_l), (Xi_l, Jt_l); anything else
/// throws PairingMismatch.
OrthogonalityReport verify_orthogonality(const FunctionalId& functional, const FamilyId& family, int upto);

/// The pairing-agnostic core of verify_orthogonality: `moments` must reach
/// index 2 * (family.size() - 1).
std::vector<OrthogonalityFailure> orthogonality_failures(const std::vector<RatFuncQ>& moments,
                                                         const std::vector<ZPoly>& family);

Json to_json(const ZPoly& p);
Json to_json(const OrthogonalityReport& report);

}  // namespace qhankel
