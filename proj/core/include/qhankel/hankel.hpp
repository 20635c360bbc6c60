#pragma once

/**
 * @file hankel.hpp
 * @brief Hankel determinants of moment sequences over Q(q).
 *
 * Three independent routes are provided: exact elimination on the matrix,
 * the product formula over the J-fraction coefficients, and the known
 * closed-form products. J-fractions can be expanded into their moment series
 * and recovered from a finite moment prefix.
 */

#include "qhankel/carlitz.hpp"
#include "qhankel/ratfunc.hpp"
#include "qhankel/serialize.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qhankel {

using Matrix = std::vector<std::vector<RatFuncQ>>;

/// mu0 / (1 + a_0 x - b_1 x^2 / (1 + a_1 x - b_2 x^2 / ...)).
/// With `depth` set, only a_0..a_{depth-1} and b_1..b_{depth-1} exist and the
/// fraction terminates after level depth-1.
struct JFraction {
    RatFuncQ mu0{1};
    std::function<RatFuncQ(int)> a;
    std::function<RatFuncQ(int)> b;
    std::optional<int> depth;
};

enum class DetMethod { bruteforce, heilermann, closedform };

std::string method_name(DetMethod m);
/// Throws InvalidArgument on an unknown name.
DetMethod parse_method(const std::string& name);

struct HankelResult {
    SeqId seq_id;
    int shift = 0;
    int n = 0;
    RatFuncQ value;
    DetMethod method = DetMethod::bruteforce;
};

Json to_json(const HankelResult& r);

/// M[i][j] = seq[i+j+shift] for 0 <= i, j <= n.
Matrix hankel_matrix(const MomentSeq& seq, int shift, int n);

/// Fraction-free elimination over Z[q] after clearing each row's denominators.
RatFuncQ det_bareiss(const Matrix& m);
/// Laplace expansion; intended for small dimensions.
RatFuncQ det_cofactor(const Matrix& m);
/// det_bareiss, cross-checked against det_cofactor when the dimension is at most 3.
RatFuncQ det_exact(const Matrix& m);

/// mu0^{n+1} prod_{k=1}^{n} b_k^{n+1-k}. Throws DegeneracyError when some b_k = 0.
RatFuncQ det_heilermann(const JFraction& jf, int n);
/// det(mu_{i+j+1}) = det(mu_{i+j}) (-1)^{n+1} p_{n+1}(0), p from the recurrence of jf.
RatFuncQ det_shifted_via_favard(const JFraction& jf, int n);

/// The J-fraction generating eps_{k+ell}, ell in {0, 1}.
JFraction jfraction_for_eps(int ell);
/// The J-fraction generating xi_{ell,k} (monic Jt coefficients, mu0 = 1).
JFraction jfraction_for_xi(int ell);
/// The J-fraction generating Theta_ell(z^k) (P coefficients, mu0 = 1).
JFraction jfraction_for_theta(int ell);

/// mu_0..mu_order of the series expansion.
std::vector<RatFuncQ> jfraction_expand(const JFraction& jf, int order);

/// Recovers a finite J-fraction of depth d = floor((M+1)/2) from mu_0..mu_M by
/// Gram-Schmidt: a_0..a_{d-1} and b_1..b_{d-1}, plus b_d when M is even.
/// Throws VanishingHankel naming the first depth k at which
/// det(mu_{i+j})_{0<=i,j<=k} vanishes.
JFraction jfraction_from_moments(const std::vector<RatFuncQ>& moments);

/// Sum_{k=1}^{n} k^2 and its integrality as C(2n+2,3)/4.
mpz_class exponent_shift0(int n);
/// Sum_{k=1}^{n+1} k^2 and its integrality as C(2n+4,3)/4.
mpz_class exponent_shift12(int n);
/// Checks 4 * Sum k^2 = C(2n+2,3) and the shifted identity for 0 <= n <= upto.
bool verify_exponent_integrality(int upto);

/// Closed-form det(eps_{i+j+shift}), shift in {0, 1, 2}.
RatFuncQ closed_form_theorem1(int shift, int n);
/// Closed-form det(beta_{i+j}).
RatFuncQ closed_form_chapoton_zeng(int n);
/// Closed-form det(Theta_ell(z^{i+j})).
RatFuncQ closed_form_theta_det(int ell, int n);
/// Closed-form det(xi_{ell,i+j}).
RatFuncQ closed_form_xi_det(int ell, int n);

/// Whether a closed form is known for the sequence at this shift.
bool has_closed_form(const SeqId& id, int shift);
/// Dispatches a determinant through the requested method. Throws
/// InvalidArgument when the method does not apply to (id, shift).
HankelResult compute_det(const SeqId& id, int shift, int n, DetMethod method);

}  // namespace qhankel
