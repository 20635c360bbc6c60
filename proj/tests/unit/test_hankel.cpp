#include <doctest.h>

#include "qhankel/errors.hpp"
#include "qhankel/functionals.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/orthopoly.hpp"
#include "qhankel/qkit.hpp"

#include <random>

using namespace qhankel;

namespace {

const RatFuncQ q = RatFuncQ::q();
RatFuncQ P(std::initializer_list<long> c) { return RatFuncQ(QPoly(c)); }

const SeqId kEuler{SeqKind::qeuler, 0};
const SeqId kBernoulli{SeqKind::qbernoulli, 0};

// -q(1+q)/((1+q^2)^2 (1+q^3))
RatFuncQ shift0_n1() { return -(q * P({1, 1})) / (P({1, 0, 1}).pow(2) * P({1, 0, 0, 1})); }

RatFuncQ det_of(const SeqId& id, int shift, int n) {
    return det_exact(hankel_matrix(make_moment_seq(id, 2 * n + shift), shift, n));
}

}  // namespace

TEST_CASE("hankel_matrix layout") {
    const auto eps = make_moment_seq(kEuler, 8);
    CHECK(hankel_matrix(eps, 0, 0) == Matrix{{RatFuncQ(1)}});
    CHECK(hankel_matrix(eps, 0, 1) == Matrix{{eps[0], eps[1]}, {eps[1], eps[2]}});
    const auto m = hankel_matrix(eps, 2, 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(m[i][j] == eps[i + j + 2]);
            if (i > 0 && j + 1 < 4) CHECK(m[i][j] == m[i - 1][j + 1]);
        }
    CHECK_THROWS_AS(hankel_matrix(eps, 1, 4), InsufficientLength);
}

TEST_CASE("det_exact basics") {
    CHECK(det_exact(Matrix{{RatFuncQ(1)}}) == RatFuncQ(1));
    CHECK(det_exact(Matrix{}) == RatFuncQ(1));
    Matrix id(4, std::vector<RatFuncQ>(4));
    for (std::size_t i = 0; i < 4; ++i) id[i][i] = RatFuncQ(1);
    CHECK(det_exact(id) == RatFuncQ(1));

    // A zero leading pivot forces a row swap.
    CHECK(det_exact(Matrix{{RatFuncQ(), RatFuncQ(1)}, {RatFuncQ(1), RatFuncQ()}}) == RatFuncQ(-1));
    CHECK(det_exact(Matrix{{q, q}, {q, q}}) == RatFuncQ());
    CHECK(det_exact(Matrix{{RatFuncQ(), RatFuncQ()}, {RatFuncQ(), q}}) == RatFuncQ());
    CHECK_THROWS_AS(det_exact(Matrix{{RatFuncQ(1), RatFuncQ(2)}}), InvalidArgument);

    CHECK(det_of(kEuler, 0, 1) == shift0_n1());
}

TEST_CASE("elimination agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> c(-3, 3);
    auto entry = [&] { return RatFuncQ(QPoly{c(rng), c(rng), c(rng)}) / RatFuncQ(QPoly{1 + std::abs(c(rng)), c(rng)}); };
    for (int trial = 0; trial < 10; ++trial)
        for (std::size_t dim = 1; dim <= 4; ++dim) {
            Matrix m(dim);
            for (auto& row : m)
                for (std::size_t j = 0; j < dim; ++j) row.push_back(entry());
            CHECK(det_bareiss(m) == det_cofactor(m));
        }
}

TEST_CASE("Heilermann formula") {
    const auto jf0 = jfraction_for_eps(0);
    CHECK(det_heilermann(jf0, 0) == RatFuncQ(1));
    CHECK(det_heilermann(jf0, 1) == shift0_n1());
    CHECK(det_heilermann(jf0, 2) == det_of(kEuler, 0, 2));

    JFraction broken{RatFuncQ(1), [](int) { return RatFuncQ(); }, [](int k) { return k == 2 ? RatFuncQ() : RatFuncQ(1); },
                     std::nullopt};
    CHECK_THROWS_AS(det_heilermann(broken, 3), DegeneracyError);
}

TEST_CASE("shifted determinant through the recurrence") {
    const auto jf0 = jfraction_for_eps(0);
    const RatFuncQ eps1 = -q / P({1, 0, 1});
    CHECK(det_shifted_via_favard(jf0, 0) == eps1);
    for (int n = 0; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(det_shifted_via_favard(jf0, n) == det_of(kEuler, 1, n));
        // shift 2 from the ell = 1 fraction, using the closed form of P_{1,n+1}(0)
        const RatFuncQ via_closed = det_of(kEuler, 1, n) * RatFuncQ(parity_sign(n + 1)) * P1_at_zero_closed(n + 1);
        CHECK(det_shifted_via_favard(jfraction_for_eps(1), n) == via_closed);
        CHECK(via_closed == det_of(kEuler, 2, n));
    }
}

TEST_CASE("J-fractions for eps") {
    const auto jf0 = jfraction_for_eps(0), jf1 = jfraction_for_eps(1);
    CHECK(jf0.mu0 == RatFuncQ(1));
    CHECK(jf0.a(0) == q / P({1, 0, 1}));
    CHECK(jf1.mu0 == -q / P({1, 0, 1}));
    CHECK_THROWS_AS(jfraction_for_eps(2), InvalidArgument);

    CHECK(jfraction_expand(jf0, 0) == std::vector<RatFuncQ>{RatFuncQ(1)});
    CHECK(jfraction_expand(jf0, 1)[1] == -(jf0.a(0) * jf0.mu0));

    const auto eps = q_euler_sequence(13);
    const auto e0 = jfraction_expand(jf0, 12);
    const auto e1 = jfraction_expand(jf1, 10);
    for (std::size_t k = 0; k <= 12; ++k) CHECK(e0[k] == eps[k]);
    for (std::size_t k = 0; k <= 10; ++k) CHECK(e1[k] == eps[k + 1]);
}

TEST_CASE("J-fraction recovered from moments") {
    const auto eps = q_euler_sequence(12);
    const auto jf = jfraction_from_moments(eps);
    REQUIRE(jf.depth == 6);
    for (int n = 0; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(jf.a(n) == coeffs_P(0, n).a);
        if (n > 0) CHECK(jf.b(n) == coeffs_P(0, n).b);
    }
    CHECK(jf.b(6) == coeffs_P(0, 6).b);
    CHECK_THROWS_AS(jf.a(6), InvalidArgument);

    // Chebyshev-like toy (Catalan numbers in the even slots): a = 0, b = 1.
    const std::vector<RatFuncQ> toy{1, 0, 1, 0, 2, 0, 5, 0, 14};
    const auto t = jfraction_from_moments(toy);
    for (int n = 0; n < *t.depth; ++n) {
        CHECK(t.a(n).is_zero());
        if (n > 0) CHECK(t.b(n) == RatFuncQ(1));
    }

    for (int ell = 0; ell <= 3; ++ell) {
        const auto x = jfraction_from_moments(xi_moments(ell, 10));
        for (int n = 0; n < *x.depth; ++n) {
            CHECK(x.a(n) == coeffs_monic(ell, n).a);
            if (n > 0) CHECK(x.b(n) == coeffs_monic(ell, n).b);
        }
    }

    CHECK_THROWS_AS(jfraction_from_moments({RatFuncQ(), RatFuncQ(1)}), VanishingHankel);
    try {
        jfraction_from_moments({RatFuncQ(1), RatFuncQ(1), RatFuncQ(1), RatFuncQ(1)});
        FAIL("expected VanishingHankel");
    } catch (const VanishingHankel& e) {
        CHECK(e.depth() == 1);
    }
}

TEST_CASE("round trip through expansion and recovery") {
    for (int d = 1; d <= 5; ++d) {
        for (const auto& jf : {jfraction_for_eps(0), jfraction_for_xi(1), jfraction_for_xi(3)}) {
            const auto back = jfraction_from_moments(jfraction_expand(jf, 2 * d));
            for (int n = 0; n < d; ++n) {
                CHECK(back.a(n) == jf.a(n));
                if (n > 0) CHECK(back.b(n) == jf.b(n));
            }
        }
    }
    // A finite fraction reproduces its own moments.
    const auto moments = q_euler_sequence(9);
    const auto finite = jfraction_from_moments(moments);
    CHECK(jfraction_expand(finite, 9) == moments);
}

TEST_CASE("exponent integrality") {
    CHECK(verify_exponent_integrality(50));
    CHECK(exponent_shift0(0) == 0);
    CHECK(exponent_shift0(3) == 14);
    CHECK(exponent_shift12(0) == 1);
    CHECK(exponent_shift12(2) == 14);
}

TEST_CASE("closed forms: examples") {
    CHECK(closed_form_theorem1(0, 0) == RatFuncQ(1));
    CHECK(closed_form_theorem1(0, 1) == shift0_n1());
    CHECK(closed_form_theorem1(1, 0) == -q / P({1, 0, 1}));
    CHECK(closed_form_theorem1(0, 1).eval_at(mpq_class(1)) == mpq_class(-1, 4));
    CHECK_THROWS_AS(closed_form_theorem1(3, 1), InvalidArgument);

    CHECK(closed_form_chapoton_zeng(0) == RatFuncQ(1));
    CHECK(closed_form_chapoton_zeng(1) == RatFuncQ(-1) / (P({1, 1}).pow(2) * P({1, 1, 1})));
}

TEST_CASE("closed form at q = 1") {
    for (int n = 0; n <= 5; ++n) {
        mpq_class rhs = 1;
        for (long k = 0; k < static_cast<long>(n) * (n + 1) / 2; ++k) rhs *= mpq_class(-1, 4);
        mpq_class prod = 1;
        for (int k = 1; k <= n; ++k) {
            mpq_class f = 1;
            for (int i = 2; i <= k; ++i) f *= i;
            prod *= f * f;
        }
        CAPTURE(n);
        CHECK(closed_form_theorem1(0, n).eval_at(mpq_class(1)) == rhs * prod);
    }
}

TEST_CASE("three-way agreement for eps") {
    for (int shift = 0; shift <= 2; ++shift)
        for (int n = 0; n <= 5; ++n) {
            CAPTURE(shift);
            CAPTURE(n);
            const RatFuncQ brute = compute_det(kEuler, shift, n, DetMethod::bruteforce).value;
            CHECK(brute == compute_det(kEuler, shift, n, DetMethod::heilermann).value);
            CHECK(brute == compute_det(kEuler, shift, n, DetMethod::closedform).value);
        }
}

TEST_CASE("beta, theta and xi determinants") {
    for (int n = 0; n <= 4; ++n) CHECK(det_of(kBernoulli, 0, n) == closed_form_chapoton_zeng(n));
    for (int ell = 0; ell <= 3; ++ell)
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(ell);
            CAPTURE(n);
            const SeqId xi{SeqKind::xi, ell}, theta{SeqKind::theta, ell};
            CHECK(det_of(xi, 0, n) == closed_form_xi_det(ell, n));
            CHECK(det_heilermann(jfraction_for_xi(ell), n) == closed_form_xi_det(ell, n));
            CHECK(det_of(theta, 0, n) == closed_form_theta_det(ell, n));
        }
    for (int n = 0; n <= 5; ++n) {
        CHECK(closed_form_theta_det(0, n) == closed_form_theorem1(0, n));
        const RatFuncQ eps1 = -q / P({1, 0, 1});
        CHECK(closed_form_theorem1(1, n) == eps1.pow(n + 1) * closed_form_theta_det(1, n));
    }
}

TEST_CASE("compute_det dispatch and JSON") {
    CHECK(compute_det(kEuler, 0, 0, DetMethod::closedform).value == RatFuncQ(1));
    CHECK_THROWS_AS(compute_det(kEuler, 3, 1, DetMethod::closedform), InvalidArgument);
    CHECK_THROWS_AS(compute_det(kBernoulli, 1, 1, DetMethod::closedform), InvalidArgument);
    CHECK(compute_det(kBernoulli, 1, 2, DetMethod::heilermann).value == det_of(kBernoulli, 1, 2));
    CHECK(has_closed_form(SeqId{SeqKind::xi, 2}, 0));
    CHECK_FALSE(has_closed_form(SeqId{SeqKind::theta, 2}, 1));

    const auto r = compute_det(kEuler, 0, 1, DetMethod::closedform);
    const Json j = to_json(r);
    CHECK(j.dump().rfind(R"({"seq":"qeuler","shift":0,"n":1,"method":"closedform","value":{"num":)", 0) == 0);
    CHECK(parse_method("heilermann") == DetMethod::heilermann);
    CHECK_THROWS_AS(parse_method("gauss"), InvalidArgument);
}
