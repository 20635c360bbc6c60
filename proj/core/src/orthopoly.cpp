#include "qhankel/orthopoly.hpp"

#include "qhankel/errors.hpp"
#include "qhankel/qkit.hpp"

namespace qhankel {

namespace {

RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }
RatFuncQ one_plus(int k) { return RatFuncQ(1) + qp(k); }
RatFuncQ one_minus(int k) { return RatFuncQ(1) - qp(k); }

void require_index(int ell, int n) {
    if (ell < 0 || n < 0) throw InvalidArgument("family indices must be nonnegative");
}

// sum_k (q^{-n}, -q^{n+l+1}; q)_k q^k / (q, q^{l+1}; q)_k * (c0 + c1 z; q)_k
ZPoly phi32_in_z(int ell, int n, const RatFuncQ& c0, const RatFuncQ& c1) {
    ZPoly sum;
    RatFuncQ coef(1);
    ZPoly poch(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            const RatFuncQ qk1 = qp(k - 1);
            coef *= one_minus(-n + k - 1) * one_plus(n + ell + k) * RatFuncQ::q() /
                    (one_minus(k) * one_minus(ell + k));
            poch = poch * ZPoly{RatFuncQ(1) - c0 * qk1, -(c1 * qk1)};
        }
        sum += coef * poch;
    }
    return sum;
}

}  // namespace

std::string FamilyId::name() const {
    switch (kind) {
        case FamilyKind::bigQJacobi_J: return "J";
        case FamilyKind::monic_Jtilde: return "Jtilde";
        case FamilyKind::P_family: return "P";
    }
    return "unknown";
}

std::vector<ZPoly> three_term_build(const FavardData& data, int upto) {
    if (upto < 0) throw InvalidArgument("three_term_build: upto must be nonnegative");
    std::vector<ZPoly> p;
    p.reserve(static_cast<std::size_t>(upto) + 1);
    p.emplace_back(1);
    if (upto == 0) return p;
    p.push_back(ZPoly{data.a(0), RatFuncQ(1)});
    for (int n = 1; n < upto; ++n) {
        const RatFuncQ bn = data.b(n);
        if (bn.is_zero()) throw DegeneracyError(n);
        const auto& pn = p[static_cast<std::size_t>(n)];
        p.push_back(ZPoly{data.a(n), RatFuncQ(1)} * pn - bn * p[static_cast<std::size_t>(n - 1)]);
    }
    return p;
}

ABCoeffs coeffs_AB(int ell, int n) {
    require_index(ell, n);
    const int m = 2 * n + ell;
    RatFuncQ A = one_minus(2 * n + 2 * ell + 2) / (one_plus(m + 1) * one_plus(m + 2));
    RatFuncQ B = -(qp(2 * n + 2 * ell + 1) * one_minus(2 * n)) / (one_plus(m) * one_plus(m + 1));
    return {std::move(A), std::move(B)};
}

RecurrenceCoeffs coeffs_monic(int ell, int n) {
    require_index(ell, n);
    const int m = 2 * n + ell;
    RatFuncQ a = -(qp(m + 1) * one_plus(1) * one_plus(ell)) / (one_plus(m) * one_plus(m + 2));
    RatFuncQ b;
    if (n >= 1)
        b = -(qp(2 * n + 2 * ell + 1) * one_minus(2 * n) * one_minus(2 * n + 2 * ell)) /
            (one_plus(m - 1) * one_plus(m).pow(2) * one_plus(m + 1));
    return {std::move(a), std::move(b)};
}

RecurrenceCoeffs coeffs_P(int ell, int n) {
    require_index(ell, n);
    const int m = 2 * n + ell;
    const RatFuncQ one_minus_q = one_minus(1);
    RatFuncQ a = qp(m) * one_plus(1) * one_plus(ell) / (one_minus_q * one_plus(m) * one_plus(m + 2)) -
                 RatFuncQ(1) / one_minus_q;
    RatFuncQ b;
    if (n >= 1)
        b = -(qp(2 * n + 2 * ell - 1) * one_minus(2 * n) * one_minus(2 * n + 2 * ell)) /
            (one_minus_q.pow(2) * one_plus(m - 1) * one_plus(m).pow(2) * one_plus(m + 1));
    return {std::move(a), std::move(b)};
}

FavardData favard_Jtilde(int ell) {
    return FavardData{[ell](int n) { return coeffs_monic(ell, n).a; },
                      [ell](int n) { return coeffs_monic(ell, n).b; }, RatFuncQ(1)};
}

FavardData favard_P(int ell) {
    return FavardData{[ell](int n) { return coeffs_P(ell, n).a; },
                      [ell](int n) { return coeffs_P(ell, n).b; }, RatFuncQ(1)};
}

ZPoly build_J_via_phi2(int ell, int n) {
    require_index(ell, n);
    return phi32_in_z(ell, n, RatFuncQ(), RatFuncQ(1));
}

ZPoly build_Jtilde_via_scaling(int ell, int n) {
    require_index(ell, n);
    const RatFuncQ scale = q_pochhammer_qpow(ell + 1, n) / q_pochhammer_neg_qpow(n + ell + 1, n);
    return scale * build_J_via_phi2(ell, n);
}

ZPoly build_P_via_phi2(int ell, int n) {
    require_index(ell, n);
    // q(1 - (1-q) z) = q + (q^2 - q) z
    const RatFuncQ c0 = RatFuncQ::q(), c1 = qp(2) - qp(1);
    const RatFuncQ pref = RatFuncQ(parity_sign(n)) * q_pochhammer_qpow(ell + 1, n) /
                          (qp(n) * one_minus(1).pow(n) * q_pochhammer_neg_qpow(n + ell + 1, n));
    return pref * phi32_in_z(ell, n, c0, c1);
}

std::vector<ZPoly> affine_transform(const std::vector<ZPoly>& p, const RatFuncQ& u, const RatFuncQ& v) {
    if (u.is_zero()) throw InvalidArgument("affine_transform: u must be nonzero");
    std::vector<ZPoly> r;
    r.reserve(p.size());
    const RatFuncQ uinv = u.inverse();
    RatFuncQ scale(1);
    for (const auto& pn : p) {
        r.push_back(scale * pn.compose_affine(u, v));
        scale *= uinv;
    }
    return r;
}

std::vector<ZPoly> build_P_via_recurrence(int ell, int upto) {
    require_index(ell, upto);
    return three_term_build(favard_P(ell), upto);
}

std::vector<ZPoly> build_P_via_affine(int ell, int upto) {
    require_index(ell, upto);
    std::vector<ZPoly> jt;
    for (int n = 0; n <= upto; ++n) jt.push_back(build_Jtilde_via_scaling(ell, n));
    return affine_transform(jt, qp(2) - qp(1), RatFuncQ::q());
}

std::vector<ZPoly> build_family(const FamilyId& family, int upto) {
    require_index(family.ell, upto);
    switch (family.kind) {
        case FamilyKind::bigQJacobi_J: {
            std::vector<ZPoly> out;
            for (int n = 0; n <= upto; ++n) out.push_back(build_J_via_phi2(family.ell, n));
            return out;
        }
        case FamilyKind::monic_Jtilde: return three_term_build(favard_Jtilde(family.ell), upto);
        case FamilyKind::P_family: return build_P_via_recurrence(family.ell, upto);
    }
    throw InvalidArgument("unknown family");
}

RatFuncQ P1_at_zero_closed(int n) {
    if (n < 0) throw InvalidArgument("P1_at_zero_closed: n must be nonnegative");
    const RatFuncQ pref = RatFuncQ(parity_sign(n + 1)) * q_pochhammer_qpow(1, n) /
                          (one_minus(1).pow(n) * q_pochhammer_neg_qpow(n + 1, n + 1));
    return pref * (RatFuncQ(-1) + RatFuncQ(parity_sign(n + 1)) * qp((n + 1) * (n + 1)));
}

}  // namespace qhankel
