#include "qhankel/functionals.hpp"

#include "qhankel/errors.hpp"
#include "qhankel/qkit.hpp"

namespace qhankel {

namespace {

// [n, z choose n]_q for n = 0..upto, each from its predecessor.
std::vector<ZPoly> diagonal_basis(int upto) {
    std::vector<ZPoly> basis{ZPoly(1)};
    for (int n = 1; n <= upto; ++n) {
        const RatFuncQ qn = q_int(n);
        basis.push_back(basis.back() * ZPoly{qn, RatFuncQ::q_pow(n)} * qn.inverse());
    }
    return basis;
}

std::vector<RatFuncQ> expand_in(const std::vector<ZPoly>& basis, ZPoly P) {
    if (P.is_zero()) return {};
    const int N = P.degree();
    std::vector<RatFuncQ> c(static_cast<std::size_t>(N) + 1);
    for (int n = N; n >= 0; --n) {
        const auto i = static_cast<std::size_t>(n);
        if (P[i].is_zero()) continue;
        c[i] = P[i] / basis[i].leading();
        P -= c[i] * basis[i];
    }
    return c;
}

}  // namespace

ZPoly qbinom_basis(int m, int n) {
    if (n < 0) throw InvalidArgument("qbinom_basis: n must be nonnegative");
    ZPoly r(1);
    for (int k = m - n + 1; k <= m; ++k) r = r * ZPoly{q_int(k), RatFuncQ::q_pow(k)};
    return q_factorial(n).inverse() * r;
}

std::vector<RatFuncQ> to_diagonal_basis(const ZPoly& P) {
    return expand_in(diagonal_basis(std::max(P.degree(), 0)), P);
}

RatFuncQ phi_on_basis(int n) {
    if (n < 0) throw InvalidArgument("phi_on_basis: n must be nonnegative");
    return q_pochhammer_neg_qpow(2, n).inverse();
}

RatFuncQ phi_basis_route(const ZPoly& P) {
    const auto c = to_diagonal_basis(P);
    RatFuncQ sum;
    for (std::size_t n = 0; n < c.size(); ++n)
        if (!c[n].is_zero()) sum += c[n] * phi_on_basis(static_cast<int>(n));
    return sum;
}

RatFuncQ phi_moment_route(const ZPoly& P) {
    if (P.is_zero()) return RatFuncQ();
    return apply_moments(q_euler_sequence(P.degree()), P);
}

RatFuncQ phi(const ZPoly& P) { return phi_moment_route(P); }

RatFuncQ phi_closed_m_n(int m, int n) {
    if (m < 0 || m > n) throw InvalidArgument("phi_closed_m_n requires 0 <= m <= n");
    return RatFuncQ(parity_sign(n - m)) * RatFuncQ::q_pow(n - m) / q_pochhammer_neg_qpow(2, n);
}

RatFuncQ phi_closed_n1_n(int n) {
    if (n < 0) throw InvalidArgument("phi_closed_n1_n requires n >= 0");
    const RatFuncQ q = RatFuncQ::q();
    return (RatFuncQ(1) + q) / q - (q * q_pochhammer_neg_qpow(2, n)).inverse();
}

bool verify_phi_relation(const ZPoly& P) {
    const RatFuncQ q = RatFuncQ::q();
    const ZPoly shifted = P.compose_affine(q, RatFuncQ(1));
    const RatFuncQ lhs = q * phi_basis_route(shifted) + phi_basis_route(P);
    return lhs == (RatFuncQ(1) + q) * P.eval(RatFuncQ());
}

RatFuncQ theta_on_basis(int ell, int n) {
    if (ell < 0 || n < 0) throw InvalidArgument("theta_on_basis: indices must be nonnegative");
    return q_pochhammer_qpow(ell + 1, n) / (q_pochhammer_qpow(1, n) * q_pochhammer_neg_qpow(ell + 2, n));
}

std::vector<RatFuncQ> theta_moments(int ell, int upto) {
    if (ell < 0 || upto < 0) throw InvalidArgument("theta_moments: indices must be nonnegative");
    const auto basis = diagonal_basis(upto);
    std::vector<RatFuncQ> on_basis;
    for (int n = 0; n <= upto; ++n) on_basis.push_back(theta_on_basis(ell, n));
    std::vector<RatFuncQ> out;
    for (int k = 0; k <= upto; ++k) {
        const auto c = expand_in(basis, ZPoly::monomial(RatFuncQ(1), k));
        RatFuncQ sum;
        for (std::size_t n = 0; n < c.size(); ++n)
            if (!c[n].is_zero()) sum += c[n] * on_basis[n];
        out.push_back(std::move(sum));
    }
    return out;
}

RatFuncQ theta_moment(int ell, int n) { return theta_moments(ell, n).back(); }

RatFuncQ xi_moment(int ell, int n) {
    if (ell < 0 || n < 0) throw InvalidArgument("xi_moment: indices must be nonnegative");
    return RatFuncQ::q_pow((ell + 1) * n) * q_pochhammer_neg_qpow(1, n) / q_pochhammer_neg_qpow(ell + 2, n);
}

std::vector<RatFuncQ> xi_moments(int ell, int upto) {
    std::vector<RatFuncQ> out;
    for (int n = 0; n <= upto; ++n) out.push_back(xi_moment(ell, n));
    return out;
}

FunctionalId FunctionalId::make(FunctionalKind kind, int ell) {
    if (ell < 0) throw InvalidArgument("functional index must be nonnegative");
    if (kind == FunctionalKind::Phi_ell && ell > 1) throw InvalidArgument("Phi_l is defined for l in {0, 1}");
    if (kind == FunctionalKind::Phi) ell = 0;
    return FunctionalId{kind, ell};
}

std::string FunctionalId::name() const {
    switch (kind) {
        case FunctionalKind::Phi: return "Phi";
        case FunctionalKind::Phi_ell: return "Phi_" + std::to_string(ell);
        case FunctionalKind::Theta: return "Theta_" + std::to_string(ell);
        case FunctionalKind::Xi: return "Xi_" + std::to_string(ell);
    }
    return "unknown";
}

std::vector<RatFuncQ> moments(const FunctionalId& functional, int upto) {
    if (upto < 0) throw InvalidArgument("moments: upto must be nonnegative");
    switch (functional.kind) {
        case FunctionalKind::Phi: return q_euler_sequence(upto);
        case FunctionalKind::Phi_ell: {
            auto eps = q_euler_sequence(upto + functional.ell);
            eps.erase(eps.begin(), eps.begin() + functional.ell);
            return eps;
        }
        case FunctionalKind::Theta: return theta_moments(functional.ell, upto);
        case FunctionalKind::Xi: return xi_moments(functional.ell, upto);
    }
    throw InvalidArgument("unknown functional");
}

RatFuncQ apply_moments(const std::vector<RatFuncQ>& moments, const ZPoly& P) {
    if (P.size() > moments.size()) throw InsufficientLength(P.size(), moments.size());
    RatFuncQ sum;
    for (std::size_t k = 0; k < P.size(); ++k)
        if (!P[k].is_zero()) sum += P[k] * moments[k];
    return sum;
}

MomentSeq make_moment_seq(const SeqId& id, int upto) {
    switch (id.kind) {
        case SeqKind::qeuler: return {id, q_euler_sequence(upto)};
        case SeqKind::qbernoulli: return {id, q_bernoulli_sequence(upto)};
        case SeqKind::theta: return {id, theta_moments(id.ell, upto)};
        case SeqKind::xi: return {id, xi_moments(id.ell, upto)};
    }
    throw InvalidArgument("unknown sequence");
}

OrthogonalityReport verify_orthogonality(const FunctionalId& functional, const FamilyId& family, int upto) {
    if (upto < 0) throw InvalidArgument("verify_orthogonality: upto must be nonnegative");
    const bool paired = [&] {
        switch (functional.kind) {
            case FunctionalKind::Phi: return family.kind == FamilyKind::P_family && family.ell == 0;
            case FunctionalKind::Phi_ell:
            case FunctionalKind::Theta:
                return family.kind == FamilyKind::P_family && family.ell == functional.ell;
            case FunctionalKind::Xi: return family.kind == FamilyKind::monic_Jtilde && family.ell == functional.ell;
        }
        return false;
    }();
    const std::string fam_name = family.name() + "_" + std::to_string(family.ell);
    if (!paired) throw PairingMismatch("functional " + functional.name() + " is not paired with family " + fam_name);

    OrthogonalityReport report{functional.name(), fam_name, upto, RatFuncQ(), {}};
    const auto p = build_family(family, upto);
    const auto mom = moments(functional, 2 * upto);
    report.norm0 = apply_moments(mom, p[0]);
    report.failures = orthogonality_failures(mom, p);
    return report;
}

std::vector<OrthogonalityFailure> orthogonality_failures(const std::vector<RatFuncQ>& moments,
                                                         const std::vector<ZPoly>& family) {
    std::vector<OrthogonalityFailure> failures;
    if (family.empty()) return failures;
    if (apply_moments(moments, family[0]).is_zero()) failures.push_back({0, 0, RatFuncQ()});
    const int upto = static_cast<int>(family.size()) - 1;
    for (int m = 0; m <= upto; ++m)
        for (int n = m + 1; n <= upto; ++n) {
            RatFuncQ v = apply_moments(moments, family[static_cast<std::size_t>(m)] * family[static_cast<std::size_t>(n)]);
            if (!v.is_zero()) failures.push_back({m, n, std::move(v)});
        }
    return failures;
}

Json to_json(const ZPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const OrthogonalityReport& report) {
    Json j = Json::object();
    j["functional"] = report.functional;
    j["family"] = report.family;
    j["upto"] = report.upto;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json item = Json::object();
        item["m"] = f.m;
        item["n"] = f.n;
        item["value"] = to_json(f.value);
        failures.push_back(std::move(item));
    }
    j["failures"] = std::move(failures);
    return j;
}

}  // namespace qhankel
