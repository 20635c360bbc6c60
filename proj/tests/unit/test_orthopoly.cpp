#include <doctest.h>

#include "qhankel/errors.hpp"
#include "qhankel/orthopoly.hpp"
#include "qhankel/qkit.hpp"

using namespace qhankel;

namespace {
const RatFuncQ q = RatFuncQ::q();
RatFuncQ P(std::initializer_list<long> c) { return RatFuncQ(QPoly(c)); }
}  // namespace

TEST_CASE("three_term_build on constant data") {
    FavardData data{[](int) { return RatFuncQ(); }, [](int) { return RatFuncQ(1); }, RatFuncQ(1)};
    const auto p = three_term_build(data, 4);
    CHECK(p[2] == ZPoly{RatFuncQ(-1), RatFuncQ(), RatFuncQ(1)});
    for (int n = 0; n <= 4; ++n) {
        CHECK(p[static_cast<std::size_t>(n)].degree() == n);
        CHECK(p[static_cast<std::size_t>(n)].is_monic());
    }
}

TEST_CASE("three_term_build rejects b_n = 0") {
    FavardData data{[](int) { return RatFuncQ(1); }, [](int n) { return n == 2 ? RatFuncQ() : RatFuncQ(1); },
                    RatFuncQ(1)};
    CHECK_NOTHROW(three_term_build(data, 2));
    try {
        (void)three_term_build(data, 5);
        FAIL("expected DegeneracyError");
    } catch (const DegeneracyError& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("coeffs_AB") {
    for (int ell = 0; ell <= 4; ++ell) CHECK(coeffs_AB(ell, 0).B.is_zero());
    CHECK(coeffs_AB(0, 0).A == P({1, -1}) / P({1, 0, 1}));
    for (int ell = 0; ell <= 4; ++ell)
        for (int n = 0; n <= 4; ++n) {
            const auto c = coeffs_AB(ell, n);
            CHECK_NOTHROW((void)c.A.eval_at(1));
            CHECK_NOTHROW((void)c.B.eval_at(1));
        }
}

TEST_CASE("coeffs_monic and coeffs_P values") {
    CHECK(coeffs_monic(0, 0).a == -q * P({1, 1}) / P({1, 0, 1}));
    for (int ell = 0; ell <= 4; ++ell)
        for (int n = 1; n <= 8; ++n) CHECK_FALSE(coeffs_monic(ell, n).b.is_zero());
    CHECK(coeffs_P(0, 0).a == q / P({1, 0, 1}));
    CHECK(coeffs_P(0, 1).b == -q * P({1, 1}) / (P({1, 0, 1}).pow(2) * P({1, 0, 0, 1})));
    // l = 0 substitution (1 + q^0) = 2 in the general formula, evaluated independently
    const RatFuncQ one_minus_q = P({1, -1});
    for (int n = 0; n <= 4; ++n) {
        const RatFuncQ expect = RatFuncQ::q_pow(2 * n) * P({1, 1}) * RatFuncQ(2) /
                                    (one_minus_q * (RatFuncQ(1) + RatFuncQ::q_pow(2 * n)) *
                                     (RatFuncQ(1) + RatFuncQ::q_pow(2 * n + 2))) -
                                RatFuncQ(1) / one_minus_q;
        CHECK(coeffs_P(0, n).a == expect);
    }
}

TEST_CASE("P via 3phi2 small cases") {
    for (int ell = 0; ell <= 3; ++ell) CHECK(build_P_via_phi2(ell, 0) == ZPoly(1));
    CHECK(build_P_via_phi2(0, 1) == ZPoly{q / P({1, 0, 1}), RatFuncQ(1)});
    CHECK(build_P_via_recurrence(0, 1)[1] == ZPoly{q / P({1, 0, 1}), RatFuncQ(1)});
}

TEST_CASE("three routes to P_{l,n} agree") {
    for (int ell = 0; ell <= 3; ++ell) {
        const auto rec = build_P_via_recurrence(ell, 8);
        const auto aff = build_P_via_affine(ell, 8);
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(ell);
            CAPTURE(n);
            const auto& r = rec[static_cast<std::size_t>(n)];
            CHECK(r == build_P_via_phi2(ell, n));
            CHECK(r == aff[static_cast<std::size_t>(n)]);
            CHECK(r.is_monic());
            CHECK(r.degree() == n);
        }
    }
}

TEST_CASE("Jt by scaling equals Jt by recurrence") {
    for (int ell = 0; ell <= 3; ++ell) {
        const auto rec = three_term_build(favard_Jtilde(ell), 8);
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(ell);
            CAPTURE(n);
            CHECK(build_Jtilde_via_scaling(ell, n) == rec[static_cast<std::size_t>(n)]);
            CHECK(rec[static_cast<std::size_t>(n)].is_monic());
        }
    }
}

TEST_CASE("J satisfies the A/B recurrence") {
    for (int ell = 0; ell <= 3; ++ell) {
        std::vector<ZPoly> J;
        for (int n = 0; n <= 7; ++n) J.push_back(build_J_via_phi2(ell, n));
        for (int n = 1; n <= 6; ++n) {
            const auto [A, B] = coeffs_AB(ell, n);
            const auto i = static_cast<std::size_t>(n);
            const ZPoly lhs = A * J[i + 1];
            const ZPoly rhs = ZPoly{A + B - RatFuncQ(1), RatFuncQ(1)} * J[i] - B * J[i - 1];
            CAPTURE(ell);
            CAPTURE(n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("affine_transform") {
    const auto p = build_P_via_recurrence(1, 4);
    CHECK(affine_transform(p, RatFuncQ(1), RatFuncQ()) == p);
    CHECK_THROWS_AS(affine_transform(p, RatFuncQ(), q), InvalidArgument);
    // r satisfies the transformed recurrence (u^{-1}(a_n + v), u^{-2} b_n)
    const RatFuncQ u = P({2, 1}), v = P({0, 3});
    const auto r = affine_transform(p, u, v);
    FavardData moved{[&](int n) { return u.inverse() * (coeffs_P(1, n).a + v); },
                     [&](int n) { return u.pow(-2) * coeffs_P(1, n).b; }, RatFuncQ(1)};
    CHECK(three_term_build(moved, 4) == r);
    for (const auto& rn : r) CHECK(rn.is_monic());
}

TEST_CASE("P_{1,n}(0) closed form") {
    CHECK(P1_at_zero_closed(0) == RatFuncQ(1));
    CHECK(P1_at_zero_closed(1) == coeffs_P(1, 0).a);
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(P1_at_zero_closed(n) == build_P_via_phi2(1, n).eval(RatFuncQ()));
    }
}

TEST_CASE("q-binomial theorem as a ZPoly identity") {
    for (int n = 0; n <= 8; ++n) {
        ZPoly lhs(1);
        for (int j = 0; j < n; ++j) lhs = lhs * ZPoly{RatFuncQ(1), -RatFuncQ::q_pow(j)};
        ZPoly rhs;
        for (int k = 0; k <= n; ++k)
            rhs += ZPoly::monomial(RatFuncQ(parity_sign(k)) * RatFuncQ::q_pow(k * (k - 1) / 2) * q_binom(n, k), k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ZPoly composition") {
    const ZPoly p{RatFuncQ(1), RatFuncQ(2), RatFuncQ(1)};  // (1 + z)^2
    CHECK(p.compose_affine(RatFuncQ(1), RatFuncQ(-1)) == ZPoly::monomial(RatFuncQ(1), 2));
    CHECK(p.eval(q) == P({1, 2, 1}));
    CHECK(p.compose(ZPoly::z()) == p);
}
