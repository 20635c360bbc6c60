#pragma once

/**
 * @file qkit.hpp
 * @brief q-integers, q-factorials, q-binomials, q-Pochhammer symbols and
 * terminating basic hypergeometric sums, all exact in Q(q).
 */

#include "qhankel/ratfunc.hpp"

#include <vector>

namespace qhankel {

/// (A; q^step)_length = prod_{k=0}^{length-1} (1 - A q^{step*k}).
struct PochSpec {
    RatFuncQ base;
    int step = 1;
    int length = 0;
};

/// [m]_q = (1 - q^m)/(1 - q), any integer m.
RatFuncQ q_int(int m);
/// [M]_q!; throws InvalidArgument for M < 0.
RatFuncQ q_factorial(int M);
/// Gaussian binomial; zero unless 0 <= N <= M.
RatFuncQ q_binom(int M, int N);

RatFuncQ q_pochhammer(const PochSpec& spec);
/// (A; q)_N.
RatFuncQ q_pochhammer(const RatFuncQ& base, int length);
/// (q^k; q)_N, the common case of a monomial base.
RatFuncQ q_pochhammer_qpow(int k, int length, int step = 1);
/// (-q^k; q)_N.
RatFuncQ q_pochhammer_neg_qpow(int k, int length, int step = 1);

/// Sum_{k=0}^{terms} [prod (a_i;q)_k / ((q;q)_k prod (b_j;q)_k)] arg^k.
///
/// The sum is cut at `terms`; callers pass terms = n when some numerator
/// parameter is q^{-n}. Throws VanishingDenominator if (q;q)_k or some
/// (b_j;q)_k is zero for k <= terms.
RatFuncQ q_hyper_terminating(const std::vector<RatFuncQ>& num_params,
                             const std::vector<RatFuncQ>& den_params,
                             const RatFuncQ& arg, int terms);

/// Checks 2phi1(a, q^{-N}; c; q, q) = a^N (c/a;q)_N / (c;q)_N. For a = 0 the
/// right side is replaced by its limit (-1)^N q^{N(N-1)/2} c^N / (c;q)_N.
bool verify_q_chu_vandermonde(const RatFuncQ& a, const RatFuncQ& c, int N);

/// Checks 2phi1(a, q^{-N}; c; q, c q^N / a) = (c/a;q)_N / (c;q)_N.
bool verify_q_chu_vandermonde_reverse(const RatFuncQ& a, const RatFuncQ& c, int N);

/// Ordinary binomial coefficient C(n, k) as an exact integer, zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

}  // namespace qhankel
