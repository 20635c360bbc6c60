#include <doctest.h>

#include "qhankel/errors.hpp"
#include "qhankel/qkit.hpp"

#include <random>

using namespace qhankel;

namespace {
const RatFuncQ q = RatFuncQ::q();
RatFuncQ P(std::initializer_list<long> c) { return RatFuncQ(QPoly(c)); }
}  // namespace

TEST_CASE("q_int") {
    CHECK(q_int(3) == P({1, 1, 1}));
    CHECK(q_int(0) == RatFuncQ());
    CHECK(q_int(-1) == -RatFuncQ::q_pow(-1));
    for (int m = -10; m <= 10; ++m) CHECK(q_int(m).eval_at(1) == m);
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0) == RatFuncQ(1));
    CHECK(q_factorial(2) == P({1, 1}));
    CHECK(q_factorial(3) == P({1, 1}) * P({1, 1, 1}));
    CHECK_THROWS_AS(q_factorial(-1), InvalidArgument);
}

TEST_CASE("q_binom") {
    CHECK(q_binom(2, 1) == P({1, 1}));
    CHECK(q_binom(1, 3) == RatFuncQ());
    CHECK(q_binom(3, -1) == RatFuncQ());
    CHECK(q_binom(4, 2) == P({1, 0, 1}) * P({1, 1, 1}));
}

TEST_CASE("q_binom Pascal recurrences") {
    for (int M = 1; M <= 12; ++M)
        for (int N = 0; N <= M; ++N) {
            // [M,N] = [M-1,N-1] + q^N [M-1,N] = q^{M-N}[M-1,N-1] + [M-1,N]
            CHECK(q_binom(M, N) == q_binom(M - 1, N - 1) + RatFuncQ::q_pow(N) * q_binom(M - 1, N));
            CHECK(q_binom(M, N) == RatFuncQ::q_pow(M - N) * q_binom(M - 1, N - 1) + q_binom(M - 1, N));
        }
}

TEST_CASE("q_pochhammer") {
    CHECK(q_pochhammer(PochSpec{RatFuncQ::q_pow(2), 1, 1}) == P({1, 0, -1}));
    CHECK(q_pochhammer(PochSpec{-q, 2, 2}) == P({1, 1}) * P({1, 0, 0, 1}));
    CHECK(q_pochhammer(PochSpec{RatFuncQ::q_pow(-2), 1, 3}) == RatFuncQ());
    CHECK(q_pochhammer(PochSpec{q, 1, 0}) == RatFuncQ(1));
    CHECK_THROWS_AS(q_pochhammer(PochSpec{q, 0, 2}), InvalidArgument);
    CHECK_THROWS_AS(q_pochhammer(PochSpec{q, 1, -1}), InvalidArgument);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), len(0, 10), step(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const RatFuncQ A = RatFuncQ(coef(rng)) * RatFuncQ::q_pow(expo(rng)) + RatFuncQ(coef(rng));
        const int s = step(rng), N = len(rng);
        CHECK(q_pochhammer(PochSpec{A, s, N + 1}) ==
              q_pochhammer(PochSpec{A, s, N}) * (RatFuncQ(1) - A * RatFuncQ::q_pow(s * N)));
    }
}

TEST_CASE("q_hyper_terminating") {
    // 2phi1(q^{-1}, 0; -q^2; q, q): the k = 1 term is (1-q^{-1}) q / ((1-q)(1+q^2)) = -1/(1+q^2)
    const RatFuncQ v = q_hyper_terminating({RatFuncQ::q_pow(-1), RatFuncQ()}, {-RatFuncQ::q_pow(2)}, q, 1);
    CHECK(v == RatFuncQ(1) - RatFuncQ(1) / P({1, 0, 1}));
    CHECK(v == RatFuncQ(QPoly{0, 0, 1}, QPoly{1, 0, 1}));
    // same value from the a -> 0 Chu-Vandermonde limit with N = 1: -c/(1-c)
    CHECK(v == RatFuncQ::q_pow(2) / P({1, 0, 1}));
    CHECK(q_hyper_terminating({q}, {q}, q, 0) == RatFuncQ(1));

    // (a, c, N) = (q, -q^2, 2): right side q^2 (1+q)/(1+q^3), computed by hand
    const RatFuncQ lhs = q_hyper_terminating({q, RatFuncQ::q_pow(-2)}, {-RatFuncQ::q_pow(2)}, q, 2);
    CHECK(lhs == RatFuncQ(QPoly{0, 0, 1, 1}, QPoly{1, 0, 0, 1}));

    // (q^{-1}; q)_2 = 0, so the denominator parameter q^{-1} vanishes at k = 2
    try {
        (void)q_hyper_terminating({q}, {RatFuncQ::q_pow(-1)}, q, 3);
        FAIL("expected VanishingDenominator");
    } catch (const VanishingDenominator& e) {
        CHECK(e.term() == 2);
    }
}

TEST_CASE("q-Chu-Vandermonde instances") {
    CHECK(verify_q_chu_vandermonde(q, -RatFuncQ::q_pow(2), 2));
    CHECK(verify_q_chu_vandermonde(q, -RatFuncQ::q_pow(2), 0));
    CHECK(verify_q_chu_vandermonde(-q, -RatFuncQ::q_pow(3), 3));
    // a -> 0 limiting form
    for (int N = 0; N <= 5; ++N) CHECK(verify_q_chu_vandermonde(RatFuncQ(), -RatFuncQ::q_pow(2), N));
    // a wrong right side must be detected: a=q, c=-q^2 is false if we perturb c on one side only
    CHECK_FALSE(q_hyper_terminating({q, RatFuncQ::q_pow(-2)}, {-RatFuncQ::q_pow(2)}, q, 2) ==
                q_pochhammer(-q, 2) / q_pochhammer(-RatFuncQ::q_pow(2), 2));
}

TEST_CASE("q-Chu-Vandermonde grid") {
    const std::vector<RatFuncQ> as{q, -q, RatFuncQ::q_pow(2)};
    const std::vector<RatFuncQ> cs{-RatFuncQ::q_pow(2), -RatFuncQ::q_pow(3), RatFuncQ::q_pow(3)};
    for (const auto& a : as)
        for (const auto& c : cs)
            for (int N = 0; N <= 5; ++N) {
                CHECK(verify_q_chu_vandermonde(a, c, N));
                CHECK(verify_q_chu_vandermonde_reverse(a, c, N));
            }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
}
