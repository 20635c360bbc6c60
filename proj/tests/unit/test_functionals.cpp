#include <doctest.h>

#include "qhankel/errors.hpp"
#include "qhankel/functionals.hpp"
#include "qhankel/qkit.hpp"

#include <random>

using namespace qhankel;

namespace {

const RatFuncQ q = RatFuncQ::q();
RatFuncQ P(std::initializer_list<long> c) { return RatFuncQ(QPoly(c)); }

ZPoly random_zpoly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9);
    std::vector<RatFuncQ> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = RatFuncQ(coef(rng));
    return ZPoly(std::move(c));
}

// Polynomial coefficients in q as well, to exercise Q(q)-coefficients.
ZPoly random_zpoly_q(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4);
    std::vector<RatFuncQ> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = RatFuncQ(QPoly{coef(rng), coef(rng)}) / RatFuncQ(QPoly{1, 0, 1});
    return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("qbinom_basis") {
    CHECK(qbinom_basis(0, 0) == ZPoly(1));
    CHECK(qbinom_basis(1, 1) == ZPoly{RatFuncQ(1), q});
    CHECK(qbinom_basis(0, 1) == ZPoly::z());
    for (int n = 0; n <= 6; ++n) {
        CHECK(qbinom_basis(n, n).degree() == n);
        // [n, 1 + qz choose n] = [n+1, z choose n]
        CHECK(qbinom_basis(n, n).compose_affine(q, RatFuncQ(1)) == qbinom_basis(n + 1, n));
    }
}

TEST_CASE("to_diagonal_basis") {
    CHECK(to_diagonal_basis(ZPoly(1)) == std::vector<RatFuncQ>{RatFuncQ(1)});
    const RatFuncQ inv_q = RatFuncQ::q_pow(-1);
    CHECK(to_diagonal_basis(ZPoly::z()) == std::vector<RatFuncQ>{-inv_q, inv_q});
    CHECK(to_diagonal_basis(ZPoly()).empty());

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        const ZPoly p = random_zpoly_q(rng, 8);
        const auto c = to_diagonal_basis(p);
        ZPoly back;
        for (std::size_t n = 0; n < c.size(); ++n) back += c[n] * qbinom_basis(static_cast<int>(n), static_cast<int>(n));
        CHECK(back == p);
    }
}

TEST_CASE("phi on basis and monomials") {
    CHECK(phi_on_basis(0) == RatFuncQ(1));
    CHECK(phi_on_basis(1) == RatFuncQ(1) / P({1, 0, 1}));
    CHECK(phi_on_basis(2) == RatFuncQ(1) / (P({1, 0, 1}) * P({1, 0, 0, 1})));

    const RatFuncQ eps1 = -q / P({1, 0, 1});
    CHECK(phi_basis_route(ZPoly::z()) == eps1);
    CHECK(phi_moment_route(ZPoly::z()) == eps1);
    CHECK(phi(ZPoly(1)) == RatFuncQ(1));
    CHECK(phi(ZPoly{q / P({1, 0, 1}), RatFuncQ(1)}) == RatFuncQ());

    const auto eps = q_euler_sequence(15);
    for (int n = 0; n <= 15; ++n) {
        CAPTURE(n);
        CHECK(phi_basis_route(ZPoly::monomial(RatFuncQ(1), n)) == eps[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("phi basis route equals moment route") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        const ZPoly p = random_zpoly_q(rng, 10);
        CHECK(phi_basis_route(p) == phi_moment_route(p));
    }
}

TEST_CASE("phi closed forms by exhaustion") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(phi_closed_m_n(n, n) == phi_on_basis(n));
        for (int m = 0; m <= n; ++m) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(phi_closed_m_n(m, n) == phi_basis_route(qbinom_basis(m, n)));
        }
        CHECK(phi_closed_n1_n(n) == phi_basis_route(qbinom_basis(n + 1, n)));
    }
    CHECK(phi_closed_m_n(0, 1) == -q / P({1, 0, 1}));
    CHECK(phi_closed_n1_n(0) == RatFuncQ(1));
    CHECK_THROWS_AS(phi_closed_m_n(3, 2), InvalidArgument);
    CHECK_THROWS_AS(phi_closed_m_n(-1, 2), InvalidArgument);
    CHECK_THROWS_AS(phi_closed_n1_n(-1), InvalidArgument);
}

TEST_CASE("phi relation") {
    CHECK(verify_phi_relation(ZPoly(1)));
    for (int n = 1; n <= 8; ++n) CHECK(verify_phi_relation(ZPoly::monomial(RatFuncQ(1), n)));
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) CHECK(verify_phi_relation(random_zpoly(rng, 8)));
    // A perturbed functional must fail the relation: shift the z^1 moment.
    const ZPoly z = ZPoly::z();
    CHECK_FALSE(q * phi(z.compose_affine(q, RatFuncQ(1))) + phi(z) + RatFuncQ(1) == (RatFuncQ(1) + q) * z.eval(RatFuncQ()));
}

TEST_CASE("Theta moments") {
    CHECK(theta_moment(0, 0) == RatFuncQ(1));
    const auto eps = q_euler_sequence(11);
    const auto th0 = theta_moments(0, 10);
    const auto th1 = theta_moments(1, 10);
    for (int n = 0; n <= 10; ++n) {
        const auto i = static_cast<std::size_t>(n);
        CAPTURE(n);
        CHECK(th0[i] == eps[i]);
        CHECK(th1[i] == eps[i + 1] / eps[1]);
    }
    CHECK(theta_moment(2, 3) == theta_moments(2, 5)[3]);
}

TEST_CASE("xi moments") {
    for (int ell = 0; ell <= 3; ++ell) CHECK(xi_moment(ell, 0) == RatFuncQ(1));
    CHECK(xi_moment(0, 1) == q * P({1, 1}) / P({1, 0, 1}));
    // Xi_l((z;q)_n) = (q^{l+1};q)_n / (-q^{l+2};q)_n
    for (int ell = 0; ell <= 3; ++ell) {
        const auto xi = xi_moments(ell, 8);
        ZPoly poch(1);
        for (int n = 0; n <= 8; ++n) {
            if (n > 0) poch = poch * ZPoly{RatFuncQ(1), -RatFuncQ::q_pow(n - 1)};
            CAPTURE(ell);
            CAPTURE(n);
            CHECK(apply_moments(xi, poch) == q_pochhammer_qpow(ell + 1, n) / q_pochhammer_neg_qpow(ell + 2, n));
        }
    }
}

TEST_CASE("orthogonality reports") {
    const auto phi0 = verify_orthogonality(FunctionalId::make(FunctionalKind::Phi), FamilyId{FamilyKind::P_family, 0}, 6);
    CHECK(phi0.ok());
    CHECK(phi0.norm0 == RatFuncQ(1));

    const auto phi1 =
        verify_orthogonality(FunctionalId::make(FunctionalKind::Phi_ell, 1), FamilyId{FamilyKind::P_family, 1}, 6);
    CHECK(phi1.ok());
    CHECK(phi1.norm0 == -q / P({1, 0, 1}));

    const auto th2 = verify_orthogonality(FunctionalId::make(FunctionalKind::Theta, 2), FamilyId{FamilyKind::P_family, 2}, 5);
    CHECK(th2.ok());

    for (int ell = 0; ell <= 3; ++ell) {
        const auto xi =
            verify_orthogonality(FunctionalId::make(FunctionalKind::Xi, ell), FamilyId{FamilyKind::monic_Jtilde, ell}, 4);
        CHECK(xi.ok());
        CHECK(xi.norm0 == RatFuncQ(1));
    }

    CHECK_THROWS_AS(verify_orthogonality(FunctionalId::make(FunctionalKind::Xi, 1), FamilyId{FamilyKind::P_family, 1}, 3),
                    PairingMismatch);
    CHECK_THROWS_AS(verify_orthogonality(FunctionalId::make(FunctionalKind::Theta, 1), FamilyId{FamilyKind::P_family, 2}, 3),
                    PairingMismatch);
    CHECK_THROWS_AS(FunctionalId::make(FunctionalKind::Phi_ell, 2), InvalidArgument);
}

TEST_CASE("orthogonality failures are reported with indices") {
    // Theta_0 moments against P_1: not orthogonal
    const auto fam = build_P_via_recurrence(1, 3);
    const auto failures = orthogonality_failures(theta_moments(0, 6), fam);
    REQUIRE_FALSE(failures.empty());
    CHECK(failures.front().m == 0);
    CHECK(failures.front().n == 1);
    CHECK_FALSE(failures.front().value.is_zero());

    OrthogonalityReport report{"Theta_0", "P_1", 3, RatFuncQ(1), failures};
    const Json j = to_json(report);
    CHECK(j["functional"] == "Theta_0");
    CHECK(j["failures"][0]["m"] == 0);
    CHECK(j["failures"][0]["value"].contains("num"));

    CHECK_THROWS_AS(apply_moments(theta_moments(0, 2), ZPoly::monomial(RatFuncQ(1), 3)), InsufficientLength);
}

TEST_CASE("make_moment_seq dispatch") {
    CHECK(make_moment_seq(SeqId{SeqKind::qeuler, 0}, 3).values == q_euler_sequence(3));
    CHECK(make_moment_seq(SeqId{SeqKind::xi, 2}, 3).values == xi_moments(2, 3));
    CHECK(make_moment_seq(SeqId{SeqKind::theta, 1}, 3).size() == 4);
}
