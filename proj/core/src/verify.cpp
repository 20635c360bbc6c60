#include "qhankel/verify.hpp"

#include "qhankel/carlitz.hpp"
#include "qhankel/errors.hpp"
#include "qhankel/functionals.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/orthopoly.hpp"
#include "qhankel/qkit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <random>
#include <thread>

namespace qhankel {

namespace {

std::string tag(const std::string& base, std::initializer_list<std::pair<const char*, long>> params) {
    std::string s = base;
    for (const auto& [k, v] : params) s += std::string(" ") + k + "=" + std::to_string(v);
    return s;
}

template <class T>
Json as_json(const T& v) {
    return to_json(v);
}

template <>
Json as_json<mpq_class>(const mpq_class& v) {
    return v.get_str();
}

template <>
Json as_json<bool>(const bool& v) {
    return v;
}

template <class T>
void compare(std::vector<CaseRecord>& out, std::string name, std::string lhs_method, std::string rhs_method,
             const T& lhs, const T& rhs) {
    CaseRecord c{std::move(name), std::move(lhs_method), std::move(rhs_method), lhs == rhs, {}, {}};
    if (!c.equal) {
        c.lhs = as_json(lhs);
        c.rhs = as_json(rhs);
    }
    out.push_back(std::move(c));
}

void expect_zero(std::vector<CaseRecord>& out, std::string name, std::string method, const RatFuncQ& value) {
    compare(out, std::move(name), std::move(method), "zero", value, RatFuncQ());
}

RatFuncQ q() { return RatFuncQ::q(); }

RatFuncQ det_brute(const SeqId& id, int shift, int n) { return compute_det(id, shift, n, DetMethod::bruteforce).value; }

mpq_class factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return mpq_class(f);
}

}  // namespace

Json to_json(const CaseRecord& c) {
    Json j = Json::object();
    j["case"] = c.name;
    j["lhs_method"] = c.lhs_method;
    j["rhs_method"] = c.rhs_method;
    j["equal"] = c.equal;
    if (c.lhs) j["lhs"] = *c.lhs;
    if (c.rhs) j["rhs"] = *c.rhs;
    return j;
}

bool all_equal(const std::vector<CaseRecord>& cases) {
    return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.equal; });
}

namespace checks {

std::vector<CaseRecord> theorem1(int shift, int max_n) {
    const SeqId eps{SeqKind::qeuler, 0};
    std::vector<CaseRecord> out;
    for (int n = 0; n <= max_n; ++n) {
        const RatFuncQ brute = det_brute(eps, shift, n);
        const RatFuncQ closed = closed_form_theorem1(shift, n);
        const RatFuncQ heil = compute_det(eps, shift, n, DetMethod::heilermann).value;
        const std::string name = tag("shift" + std::to_string(shift), {{"n", n}});
        compare(out, name, "bruteforce", "closedform", brute, closed);
        compare(out, name, "bruteforce", shift == 2 ? "favard-shifted" : "heilermann", brute, heil);
    }
    return out;
}

std::vector<CaseRecord> theorem1_q1_limit(int max_n) {
    std::vector<CaseRecord> out;
    for (int n = 0; n <= max_n; ++n) {
        mpq_class rhs = 1;
        const long e = static_cast<long>(n) * (n + 1) / 2;
        for (long i = 0; i < e; ++i) rhs *= mpq_class(-1, 4);
        for (int k = 1; k <= n; ++k) rhs *= factorial(k) * factorial(k);
        compare(out, tag("q=1", {{"n", n}}), "closedform", "classical", closed_form_theorem1(0, n).eval_at(mpq_class(1)),
                rhs);
    }
    return out;
}

std::vector<CaseRecord> carlitz_definitions(int max_n) {
    std::vector<CaseRecord> out;
    if (max_n < 0) return out;
    const auto eps = q_euler_sequence(max_n);
    const auto beta = q_bernoulli_sequence(max_n);
    for (int n = 0; n <= max_n; ++n) {
        const auto i = static_cast<std::size_t>(n);
        compare(out, tag("eps", {{"n", n}}), "explicit", "recursive", q_euler_explicit(n), eps[i]);
        compare(out, tag("beta", {{"n", n}}), "explicit", "recursive", q_bernoulli_explicit(n), beta[i]);
    }
    return out;
}

std::vector<CaseRecord> carlitz_limit(int max_n) {
    static const std::vector<mpq_class> classical{1, mpq_class(-1, 2), 0, mpq_class(1, 4), 0,
                                                  mpq_class(-1, 2), 0, mpq_class(17, 8), 0, mpq_class(-31, 2)};
    std::vector<CaseRecord> out;
    const int upto = std::min(max_n, 9);
    for (int n = 0; n <= upto; ++n)
        compare(out, tag("eps q=1", {{"n", n}}), "limit", "classical", limit_q1(SeqKind::qeuler, n),
                classical[static_cast<std::size_t>(n)]);
    return out;
}

std::vector<CaseRecord> chapoton_zeng(int max_n) {
    const SeqId beta{SeqKind::qbernoulli, 0};
    std::vector<CaseRecord> out;
    for (int n = 0; n <= max_n; ++n)
        compare(out, tag("beta", {{"n", n}}), "bruteforce", "closedform", det_brute(beta, 0, n),
                closed_form_chapoton_zeng(n));
    return out;
}

std::vector<CaseRecord> jfraction_eps(int ell, int order) {
    std::vector<CaseRecord> out;
    const auto series = jfraction_expand(jfraction_for_eps(ell), order);
    const auto eps = q_euler_sequence(order + ell);
    for (int k = 0; k <= order; ++k)
        compare(out, tag("eps", {{"ell", ell}, {"k", k}}), "jfraction", "carlitz", series[static_cast<std::size_t>(k)],
                eps[static_cast<std::size_t>(k + ell)]);
    return out;
}

std::vector<CaseRecord> phi_orthogonality(int max_n) {
    std::vector<CaseRecord> out;
    if (max_n < 1) return out;
    for (int ell = 0; ell <= 1; ++ell) {
        const auto fid = ell == 0 ? FunctionalId::make(FunctionalKind::Phi)
                                  : FunctionalId::make(FunctionalKind::Phi_ell, 1);
        const auto mom = moments(fid, max_n);
        const auto P = build_P_via_recurrence(ell, max_n);
        for (int n = 1; n <= max_n; ++n)
            expect_zero(out, tag(fid.name() + "(P)", {{"ell", ell}, {"n", n}}), "moments",
                        apply_moments(mom, P[static_cast<std::size_t>(n)]));
    }
    return out;
}

std::vector<CaseRecord> theta_orthogonality(int ell_max, int single_max, int pair_max) {
    std::vector<CaseRecord> out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        const int top = std::max(single_max, pair_max);
        if (top < 1) continue;
        const auto mom = theta_moments(ell, 2 * top);
        const auto P = build_P_via_recurrence(ell, top);
        for (int n = 1; n <= single_max; ++n)
            expect_zero(out, tag("Theta(P)", {{"ell", ell}, {"n", n}}), "moments",
                        apply_moments(mom, P[static_cast<std::size_t>(n)]));
        for (int m = 0; m <= pair_max; ++m)
            for (int n = m + 1; n <= pair_max; ++n)
                expect_zero(out, tag("Theta(PP)", {{"ell", ell}, {"m", m}, {"n", n}}), "moments",
                            apply_moments(mom, P[static_cast<std::size_t>(m)] * P[static_cast<std::size_t>(n)]));
    }
    return out;
}

std::vector<CaseRecord> xi_orthogonality(int ell_max, int max_n) {
    std::vector<CaseRecord> out;
    if (max_n < 1) return out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        const auto mom = xi_moments(ell, max_n);
        const auto J = build_family(FamilyId{FamilyKind::monic_Jtilde, ell}, max_n);
        for (int n = 1; n <= max_n; ++n)
            expect_zero(out, tag("Xi(Jt)", {{"ell", ell}, {"n", n}}), "moments",
                        apply_moments(mom, J[static_cast<std::size_t>(n)]));
    }
    return out;
}

std::vector<CaseRecord> phi_relation(int count, int max_degree, std::uint64_t seed) {
    std::vector<CaseRecord> out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, std::max(max_degree, 0)), coef(-20, 20);
    for (int t = 0; t < count; ++t) {
        std::vector<RatFuncQ> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = RatFuncQ(coef(rng));
        const ZPoly P(std::move(c));
        const RatFuncQ lhs = q() * phi_basis_route(P.compose_affine(q(), RatFuncQ(1))) + phi_basis_route(P);
        compare(out, tag("random", {{"trial", t}}), "functional", "(1+q)P(0)", lhs,
                (RatFuncQ(1) + q()) * P.eval(RatFuncQ()));
    }
    return out;
}

std::vector<CaseRecord> phi_basis_closed_forms(int max_n) {
    std::vector<CaseRecord> out;
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m)
            compare(out, tag("basis", {{"m", m}, {"n", n}}), "basis-route", "closedform",
                    phi_basis_route(qbinom_basis(m, n)), phi_closed_m_n(m, n));
        compare(out, tag("basis", {{"m", n + 1}, {"n", n}}), "basis-route", "closedform",
                phi_basis_route(qbinom_basis(n + 1, n)), phi_closed_n1_n(n));
    }
    return out;
}

std::vector<CaseRecord> phi_moments(int max_n) {
    std::vector<CaseRecord> out;
    if (max_n < 0) return out;
    const auto eps = q_euler_sequence(max_n);
    for (int n = 0; n <= max_n; ++n)
        compare(out, tag("Phi(z^n)", {{"n", n}}), "basis-route", "carlitz",
                phi_basis_route(ZPoly::monomial(RatFuncQ(1), n)), eps[static_cast<std::size_t>(n)]);
    return out;
}

std::vector<CaseRecord> xi_det(int ell_max, int max_n) {
    std::vector<CaseRecord> out;
    for (int ell = 0; ell <= ell_max; ++ell)
        for (int n = 0; n <= max_n; ++n) {
            const SeqId id{SeqKind::xi, ell};
            const RatFuncQ brute = det_brute(id, 0, n), closed = closed_form_xi_det(ell, n);
            const std::string name = tag("xi", {{"ell", ell}, {"n", n}});
            compare(out, name, "bruteforce", "closedform", brute, closed);
            compare(out, name, "heilermann", "closedform", det_heilermann(jfraction_for_xi(ell), n), closed);
        }
    return out;
}

std::vector<CaseRecord> theta_det(int ell_max, int max_n) {
    std::vector<CaseRecord> out;
    for (int ell = 0; ell <= ell_max; ++ell)
        for (int n = 0; n <= max_n; ++n)
            compare(out, tag("theta", {{"ell", ell}, {"n", n}}), "bruteforce", "closedform",
                    det_brute(SeqId{SeqKind::theta, ell}, 0, n), closed_form_theta_det(ell, n));
    return out;
}

std::vector<CaseRecord> intertwining(int max_n) {
    std::vector<CaseRecord> out;
    if (max_n < 0) return out;
    const auto eps = q_euler_sequence(max_n + 1);
    for (int ell = 0; ell <= 1; ++ell) {
        const auto th = theta_moments(ell, max_n);
        const auto phi_l = moments(FunctionalId::make(FunctionalKind::Phi_ell, ell), max_n);
        for (int n = 0; n <= max_n; ++n) {
            const auto i = static_cast<std::size_t>(n);
            compare(out, tag("z^n", {{"ell", ell}, {"n", n}}), "Phi_l", "eps_l*Theta_l", phi_l[i],
                    eps[static_cast<std::size_t>(ell)] * th[i]);
        }
    }
    return out;
}

std::vector<CaseRecord> p_family_routes(int ell_max, int max_n) {
    std::vector<CaseRecord> out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        const auto rec = build_P_via_recurrence(ell, max_n);
        const auto aff = build_P_via_affine(ell, max_n);
        for (int n = 0; n <= max_n; ++n) {
            const auto i = static_cast<std::size_t>(n);
            const std::string name = tag("P", {{"ell", ell}, {"n", n}});
            const ZPoly phi2 = build_P_via_phi2(ell, n);
            compare(out, name, "3phi2", "recurrence", phi2, rec[i]);
            compare(out, name, "affine", "recurrence", aff[i], rec[i]);
        }
    }
    return out;
}

std::vector<CaseRecord> j_recurrence(int ell_max, int max_n) {
    std::vector<CaseRecord> out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        std::vector<ZPoly> J;
        for (int n = 0; n <= max_n + 1; ++n) J.push_back(build_J_via_phi2(ell, n));
        for (int n = 1; n <= max_n; ++n) {
            const auto [A, B] = coeffs_AB(ell, n);
            const auto i = static_cast<std::size_t>(n);
            compare(out, tag("J", {{"ell", ell}, {"n", n}}), "A*J_{n+1}", "(A+B-1+z)J_n-B*J_{n-1}", A * J[i + 1],
                    ZPoly{A + B - RatFuncQ(1), RatFuncQ(1)} * J[i] - B * J[i - 1]);
        }
    }
    return out;
}

std::vector<CaseRecord> p1_at_zero(int max_n) {
    std::vector<CaseRecord> out;
    if (max_n < 0) return out;
    const auto P = build_P_via_recurrence(1, max_n);
    for (int n = 0; n <= max_n; ++n)
        compare(out, tag("P1(0)", {{"n", n}}), "recurrence", "closedform", P[static_cast<std::size_t>(n)].eval(RatFuncQ()),
                P1_at_zero_closed(n));
    return out;
}

std::vector<CaseRecord> jfraction_from_eps(int d) {
    std::vector<CaseRecord> out;
    if (d < 1) return out;
    const auto jf = jfraction_from_moments(q_euler_sequence(2 * d));
    for (int n = 0; n < d; ++n) compare(out, tag("a", {{"n", n}}), "gram-schmidt", "closedform", jf.a(n), coeffs_P(0, n).a);
    for (int n = 1; n <= d; ++n) compare(out, tag("b", {{"n", n}}), "gram-schmidt", "closedform", jf.b(n), coeffs_P(0, n).b);
    return out;
}

std::vector<CaseRecord> jfraction_roundtrip(int max_d) {
    std::vector<CaseRecord> out;
    const std::vector<std::pair<std::string, JFraction>> fractions{
        {"eps0", jfraction_for_eps(0)}, {"xi0", jfraction_for_xi(0)}, {"xi1", jfraction_for_xi(1)},
        {"xi2", jfraction_for_xi(2)},   {"xi3", jfraction_for_xi(3)}};
    for (const auto& [label, jf] : fractions)
        for (int d = 1; d <= max_d; ++d) {
            const auto back = jfraction_from_moments(jfraction_expand(jf, 2 * d));
            for (int n = 0; n < d; ++n)
                compare(out, tag(label + " a", {{"d", d}, {"n", n}}), "recovered", "original", back.a(n), jf.a(n));
            for (int n = 1; n < d; ++n)
                compare(out, tag(label + " b", {{"d", d}, {"n", n}}), "recovered", "original", back.b(n), jf.b(n));
        }
    return out;
}

std::vector<CaseRecord> exponent_integrality(int upto) {
    std::vector<CaseRecord> out;
    mpz_class sum = 0;
    for (int n = 0; n <= upto; ++n) {
        sum += mpz_class(n) * n;
        const mpz_class c0 = binomial(2L * n + 2, 3), c1 = binomial(2L * n + 4, 3);
        const mpz_class next = sum + mpz_class(n + 1) * (n + 1);
        mpq_class q0(c0, 4), q1(c1, 4);
        q0.canonicalize();
        q1.canonicalize();
        compare(out, tag("C(2n+2,3)/4", {{"n", n}}), "binomial", "sum k^2", q0, mpq_class(sum));
        compare(out, tag("C(2n+4,3)/4", {{"n", n}}), "binomial", "sum k^2", q1, mpq_class(next));
        compare(out, tag("exponent", {{"n", n}}), "closed n(n+1)(2n+1)/6", "sum k^2", mpq_class(exponent_shift0(n)),
                mpq_class(sum));
        compare(out, tag("exponent shifted", {{"n", n}}), "closed (n+1)(n+2)(2n+3)/6", "sum k^2",
                mpq_class(exponent_shift12(n)), mpq_class(next));
        compare(out, tag("integral", {{"n", n}}), "4 | C(2n+2,3)", "4 | C(2n+4,3)", c0 % 4 == 0, c1 % 4 == 0);
    }
    return out;
}

std::vector<CaseRecord> q_chu_vandermonde(int max_n) {
    std::vector<CaseRecord> out;
    const RatFuncQ Q = q();
    const std::vector<std::pair<std::string, RatFuncQ>> as{{"q", Q}, {"-q", -Q}, {"q^2", Q * Q}};
    const std::vector<std::pair<std::string, RatFuncQ>> cs{{"-q^2", -(Q * Q)}, {"-q^3", -Q.pow(3)}, {"q^3", Q.pow(3)}};
    for (int N = 0; N <= max_n; ++N)
        for (const auto& [an, a] : as)
            for (const auto& [cn, c] : cs) {
                const std::string name = tag("a=" + an + " c=" + cn, {{"N", N}});
                compare(out, name, "forward", "holds", verify_q_chu_vandermonde(a, c, N), true);
                compare(out, name, "reverse", "holds", verify_q_chu_vandermonde_reverse(a, c, N), true);
            }
    return out;
}

std::vector<CaseRecord> q_binomial_theorem(int max_n) {
    std::vector<CaseRecord> out;
    ZPoly lhs(1);
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0) lhs = lhs * ZPoly{RatFuncQ(1), -RatFuncQ::q_pow(n - 1)};
        ZPoly rhs;
        for (int k = 0; k <= n; ++k)
            rhs += ZPoly::monomial(RatFuncQ(parity_sign(k)) * RatFuncQ::q_pow(k * (k - 1) / 2) * q_binom(n, k), k);
        compare(out, tag("(z;q)_n", {{"n", n}}), "product", "sum", lhs, rhs);
    }
    return out;
}

std::vector<CaseRecord> ratcore_laws(int count, std::uint64_t seed) {
    std::vector<CaseRecord> out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, 4), coef(-6, 6);
    auto poly = [&] {
        std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coef(rng);
        return QPoly(std::move(c));
    };
    auto ratfunc = [&] {
        QPoly den;
        while (den.is_zero()) den = poly();
        return RatFuncQ(poly(), den);
    };
    for (int t = 0; t < count; ++t) {
        const RatFuncQ f = ratfunc(), g = ratfunc(), h = ratfunc();
        compare(out, tag("distributive", {{"trial", t}}), "f(g+h)", "fg+fh", f * (g + h), f * g + f * h);
        compare(out, tag("associative", {{"trial", t}}), "(fg)h", "f(gh)", (f * g) * h, f * (g * h));
        if (!g.is_zero()) compare(out, tag("inverse", {{"trial", t}}), "(f/g)g", "f", (f / g) * g, f);
        compare(out, tag("json", {{"trial", t}}), "roundtrip", "original",
                deserialize(serialize(f)), f);
    }
    return out;
}

}  // namespace checks

const std::vector<NamedCheck>& suite_checks() {
    using namespace checks;
    static const std::vector<NamedCheck> all = [] {
        std::vector<NamedCheck> v{
            {"carlitz-definitions", [](int n) { return carlitz_definitions(4 * n); }},
            {"carlitz-q1-limit", [](int n) { return carlitz_limit(2 * n); }},
            {"chapoton-zeng", [](int n) { return chapoton_zeng(n); }},
            {"exponent-integrality", [](int n) { return exponent_integrality(10 * n); }},
            {"intertwining", [](int n) { return intertwining(2 * n); }},
            {"jfraction-eps", [](int n) {
                 auto v0 = jfraction_eps(0, 2 * n + 2);
                 auto v1 = jfraction_eps(1, 2 * n + 2);
                 v0.insert(v0.end(), v1.begin(), v1.end());
                 return v0;
             }},
            {"jfraction-from-moments", [](int n) { return jfraction_from_eps(n + 1); }},
            {"jfraction-roundtrip", [](int n) { return jfraction_roundtrip(n); }},
            {"big-q-jacobi-recurrence", [](int n) { return j_recurrence(3, n); }},
            {"p-family-routes", [](int n) { return p_family_routes(3, n); }},
            {"p1-at-zero", [](int n) { return p1_at_zero(n + 1); }},
            {"phi-basis-closed-forms", [](int n) { return phi_basis_closed_forms(n); }},
            {"phi-functional-relation", [](int n) { return phi_relation(20 * n, 8, 2024); }},
            {"phi-moments", [](int n) { return phi_moments(2 * n); }},
            {"phi-orthogonality", [](int n) { return phi_orthogonality(n); }},
            {"q-binomial-theorem", [](int n) { return q_binomial_theorem(n); }},
            {"q-chu-vandermonde", [](int n) { return q_chu_vandermonde(n); }},
            {"ratcore-field-laws", [](int n) { return ratcore_laws(10 * n, 99); }},
            {"theorem1-q1-limit", [](int n) { return theorem1_q1_limit(n); }},
            {"theorem1-shift0", [](int n) { return theorem1(0, n); }},
            {"theorem1-shift1", [](int n) { return theorem1(1, n); }},
            {"theorem1-shift2", [](int n) { return theorem1(2, n); }},
            {"theta-det", [](int n) { return theta_det(3, n); }},
            {"theta-orthogonality", [](int n) { return theta_orthogonality(3, n, n); }},
            {"xi-det", [](int n) { return xi_det(3, n); }},
            {"xi-orthogonality", [](int n) { return xi_orthogonality(3, n); }},
        };
        std::sort(v.begin(), v.end(), [](const NamedCheck& a, const NamedCheck& b) { return a.name < b.name; });
        return v;
    }();
    return all;
}

bool CheckReport::passed() const {
    return error.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.equal; });
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

SuiteReport run_suite(const SuiteOptions& options) {
    if (options.max_n < 0) throw InvalidArgument("max_n must be nonnegative");
    std::vector<const NamedCheck*> selected;
    for (const auto& c : suite_checks()) {
        const bool match = options.only.empty() || std::any_of(options.only.begin(), options.only.end(), [&](const std::string& p) {
                               return c.name.rfind(p, 0) == 0;
                           });
        if (match) selected.push_back(&c);
    }
    if (selected.empty()) throw InvalidArgument("no verification check matches the selection");

    SuiteReport report{options.max_n, std::vector<CheckReport>(selected.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            CheckReport& r = report.checks[i];
            r.name = selected[i]->name;
            const auto start = std::chrono::steady_clock::now();
            try {
                r.cases = selected[i]->run(options.max_n);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };

    unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(selected.size()));
    std::vector<std::future<void>> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();
    // selected is already sorted by name, and each worker writes its own slot.
    return report;
}

Json to_json(const SuiteReport& report) {
    Json j = Json::object();
    j["max_n"] = report.max_n;
    j["passed"] = report.passed();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json item = Json::object();
        item["name"] = c.name;
        item["passed"] = c.passed();
        if (!c.error.empty()) item["error"] = c.error;
        Json cases = Json::array();
        for (const auto& k : c.cases) cases.push_back(to_json(k));
        item["cases"] = std::move(cases);
        checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace qhankel
