#include "qhankel/qkit.hpp"

#include "qhankel/errors.hpp"

namespace qhankel {

RatFuncQ q_int(int m) {
    if (m == 0) return RatFuncQ();
    if (m > 0) return RatFuncQ(QPoly(std::vector<mpz_class>(static_cast<std::size_t>(m), mpz_class(1))));
    // [-k]_q = -q^{-k} [k]_q
    return -(RatFuncQ::q_pow(m) * q_int(-m));
}

RatFuncQ q_factorial(int M) {
    if (M < 0) throw InvalidArgument("q_factorial: M must be nonnegative, got " + std::to_string(M));
    RatFuncQ r(1);
    for (int m = 2; m <= M; ++m) r *= q_int(m);
    return r;
}

RatFuncQ q_binom(int M, int N) {
    if (N < 0 || N > M) return RatFuncQ();
    const int lo = std::min(N, M - N);
    // prod_{i=1}^{lo} (1 - q^{M-lo+i}) / (1 - q^i)
    RatFuncQ r(1);
    for (int i = 1; i <= lo; ++i)
        r *= RatFuncQ(QPoly(1) - QPoly::monomial(1, M - lo + i), QPoly(1) - QPoly::monomial(1, i));
    return r;
}

RatFuncQ q_pochhammer(const PochSpec& spec) {
    if (spec.length < 0) throw InvalidArgument("q_pochhammer: length must be nonnegative");
    if (spec.step < 1) throw InvalidArgument("q_pochhammer: step must be at least 1");
    RatFuncQ r(1);
    for (int k = 0; k < spec.length; ++k) {
        r *= RatFuncQ(1) - spec.base * RatFuncQ::q_pow(spec.step * k);
        if (r.is_zero()) break;
    }
    return r;
}

RatFuncQ q_pochhammer(const RatFuncQ& base, int length) { return q_pochhammer(PochSpec{base, 1, length}); }

RatFuncQ q_pochhammer_qpow(int k, int length, int step) {
    return q_pochhammer(PochSpec{RatFuncQ::q_pow(k), step, length});
}

RatFuncQ q_pochhammer_neg_qpow(int k, int length, int step) {
    return q_pochhammer(PochSpec{-RatFuncQ::q_pow(k), step, length});
}

RatFuncQ q_hyper_terminating(const std::vector<RatFuncQ>& num_params,
                             const std::vector<RatFuncQ>& den_params,
                             const RatFuncQ& arg, int terms) {
    if (terms < 0) throw InvalidArgument("q_hyper_terminating: terms must be nonnegative");
    RatFuncQ sum(1), term(1);
    for (int k = 1; k <= terms; ++k) {
        const RatFuncQ qk1 = RatFuncQ::q_pow(k - 1);
        RatFuncQ numer = arg;
        for (const auto& a : num_params) numer *= RatFuncQ(1) - a * qk1;
        RatFuncQ denom = RatFuncQ(1) - RatFuncQ::q_pow(k);
        for (const auto& b : den_params) denom *= RatFuncQ(1) - b * qk1;
        if (denom.is_zero()) throw VanishingDenominator(k);
        if (term.is_zero()) continue;
        term = term * numer / denom;
        sum += term;
    }
    return sum;
}

bool verify_q_chu_vandermonde(const RatFuncQ& a, const RatFuncQ& c, int N) {
    const RatFuncQ lhs = q_hyper_terminating({a, RatFuncQ::q_pow(-N)}, {c}, RatFuncQ::q(), N);
    RatFuncQ rhs;
    if (a.is_zero()) {
        rhs = RatFuncQ(parity_sign(N)) * RatFuncQ::q_pow(N * (N - 1) / 2) * c.pow(N) / q_pochhammer(c, N);
    } else {
        rhs = a.pow(N) * q_pochhammer(c / a, N) / q_pochhammer(c, N);
    }
    return lhs == rhs;
}

bool verify_q_chu_vandermonde_reverse(const RatFuncQ& a, const RatFuncQ& c, int N) {
    const RatFuncQ arg = c * RatFuncQ::q_pow(N) / a;
    const RatFuncQ lhs = q_hyper_terminating({a, RatFuncQ::q_pow(-N)}, {c}, arg, N);
    return lhs == q_pochhammer(c / a, N) / q_pochhammer(c, N);
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace qhankel
