#pragma once

/**
 * @file verify.hpp
 * @brief Named identity checks and the suite runner shared by the CLI and
 * the acceptance binary.
 *
 * Every check returns the list of cases it compared. A case records the two
 * routes that were compared and whether they agreed; on disagreement both
 * sides are kept in serialized form.
 */

#include "qhankel/serialize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qhankel {

struct CaseRecord {
    std::string name;
    std::string lhs_method;
    std::string rhs_method;
    bool equal = false;
    std::optional<Json> lhs;  // set only when equal is false
    std::optional<Json> rhs;
};

Json to_json(const CaseRecord& c);

/// True when `cases` is nonempty and every case agrees.
bool all_equal(const std::vector<CaseRecord>& cases);

namespace checks {

/// det over eps for shift in {0,1,2}: bruteforce vs heilermann vs closedform, 0 <= n <= max_n.
std::vector<CaseRecord> theorem1(int shift, int max_n);
/// Closed form at q = 1 against (-1/4)^{C(n+1,2)} prod (k!)^2.
std::vector<CaseRecord> theorem1_q1_limit(int max_n);
/// Explicit sums vs recursions for eps_n and beta_n, 0 <= n <= max_n.
std::vector<CaseRecord> carlitz_definitions(int max_n);
/// q -> 1 values of eps_0..eps_{min(max_n, 9)} against the classical list.
std::vector<CaseRecord> carlitz_limit(int max_n);
std::vector<CaseRecord> chapoton_zeng(int max_n);
/// Expansion of the eps J-fraction for ell against eps_{ell..ell+order}.
std::vector<CaseRecord> jfraction_eps(int ell, int order);
/// Phi(P_{0,n}) = 0 and Phi_1(P_{1,n}) = 0 for 1 <= n <= max_n.
std::vector<CaseRecord> phi_orthogonality(int max_n);
/// Theta_l(P_{l,n}) = 0 for n <= single_max and Theta_l(P_{l,m} P_{l,n}) = 0
/// for m < n <= pair_max, l <= ell_max.
std::vector<CaseRecord> theta_orthogonality(int ell_max, int single_max, int pair_max);
/// Xi_l(Jt_{l,n}) = 0 for l <= ell_max, 1 <= n <= max_n.
std::vector<CaseRecord> xi_orthogonality(int ell_max, int max_n);
/// q Phi(P(1+qz)) + Phi(P) = (1+q) P(0) on `count` random integer polynomials.
std::vector<CaseRecord> phi_relation(int count, int max_degree, std::uint64_t seed);
/// Closed forms of Phi([m,z choose n]) and Phi([n+1,z choose n]) for 0 <= m <= n <= max_n.
std::vector<CaseRecord> phi_basis_closed_forms(int max_n);
/// Phi(z^n) = eps_n through the basis route.
std::vector<CaseRecord> phi_moments(int max_n);
std::vector<CaseRecord> xi_det(int ell_max, int max_n);
std::vector<CaseRecord> theta_det(int ell_max, int max_n);
/// Phi_0 = eps_0 Theta_0 and Phi_1 = eps_1 Theta_1 on z^0..z^max_n.
std::vector<CaseRecord> intertwining(int max_n);
/// P_{l,n} by 3phi2, recurrence and affine image of Jt, l <= ell_max, n <= max_n.
std::vector<CaseRecord> p_family_routes(int ell_max, int max_n);
/// J_{l,n} against the A/B recurrence, l <= ell_max, 1 <= n <= max_n.
std::vector<CaseRecord> j_recurrence(int ell_max, int max_n);
/// P_{1,n}(0) closed form, 0 <= n <= max_n.
std::vector<CaseRecord> p1_at_zero(int max_n);
/// Gram-Schmidt on eps_0..eps_{2d} recovers a_{0,n} for n < d and b_{0,n} for 1 <= n <= d.
std::vector<CaseRecord> jfraction_from_eps(int d);
/// expand then recover for the eps and xi fractions at depths 1..max_d.
std::vector<CaseRecord> jfraction_roundtrip(int max_d);
std::vector<CaseRecord> exponent_integrality(int upto);
/// Forward and reverse q-Chu-Vandermonde on a small grid, N <= max_n.
std::vector<CaseRecord> q_chu_vandermonde(int max_n);
/// (z;q)_n = sum_k (-z)^k q^{C(k,2)} [n choose k]_q as polynomials in z.
std::vector<CaseRecord> q_binomial_theorem(int max_n);
/// Field laws and JSON round trip on random rational functions.
std::vector<CaseRecord> ratcore_laws(int count, std::uint64_t seed);

}  // namespace checks

struct NamedCheck {
    std::string name;
    std::function<std::vector<CaseRecord>(int max_n)> run;
};

/// All checks of the suite, sorted by name.
const std::vector<NamedCheck>& suite_checks();

struct CheckReport {
    std::string name;
    std::vector<CaseRecord> cases;
    std::string error;  // nonempty when the check threw
    double seconds = 0;

    /// No error and no disagreeing case; an empty case list passes.
    bool passed() const;
};

struct SuiteReport {
    int max_n = 0;
    std::vector<CheckReport> checks;  // sorted by name

    bool passed() const;
};

struct SuiteOptions {
    int max_n = 5;
    /// Check names or name prefixes; empty selects everything.
    std::vector<std::string> only;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned jobs = 0;
};

/// Throws InvalidArgument when `only` matches no check.
SuiteReport run_suite(const SuiteOptions& options);

/// Report JSON without timings, so identical options give identical bytes.
Json to_json(const SuiteReport& report);

}  // namespace qhankel
