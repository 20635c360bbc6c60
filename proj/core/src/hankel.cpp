#include "qhankel/hankel.hpp"

#include "qhankel/errors.hpp"
#include "qhankel/functionals.hpp"
#include "qhankel/orthopoly.hpp"
#include "qhankel/qkit.hpp"
#include "qhankel/zpoly.hpp"

#include <utility>

namespace qhankel {

namespace {

RatFuncQ qp(long k) { return RatFuncQ::q_pow(k); }

long choose2(long n) { return n * (n - 1) / 2; }
long choose3(long n) { return n * (n - 1) * (n - 2) / 6; }

void require_square(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw InvalidArgument("determinant of a non-square matrix");
}

QPoly lcm(const QPoly& a, const QPoly& b) {
    const QPoly g = gcd(a, b);
    return a * divexact(b, g);
}

// One base of a step-2 Pochhammer symbol: (sign * q^exp; q^2)_k.
struct Base {
    bool negated;
    int exp;
};

RatFuncQ base_factor(const Base& b, int k) {
    const RatFuncQ t = qp(b.exp + 2L * k);
    return b.negated ? RatFuncQ(1) + t : RatFuncQ(1) - t;
}

// prod_{k=1}^{n} prod_i (num_i; q^2)_k / prod_j (den_j; q^2)_k
RatFuncQ pochhammer_product(const std::vector<Base>& num, const std::vector<Base>& den, int n) {
    RatFuncQ running(1), total(1);
    for (int k = 1; k <= n; ++k) {
        for (const auto& b : num) running *= base_factor(b, k - 1);
        for (const auto& b : den) running /= base_factor(b, k - 1);
        total *= running;
    }
    return total;
}

RatFuncQ one_minus_q_pow(long e) { return RatFuncQ(QPoly{1, -1}).pow(e); }

std::vector<RatFuncQ> shifted_values(const SeqId& id, int shift, int n) {
    auto values = make_moment_seq(id, 2 * n + shift).values;
    values.erase(values.begin(), values.begin() + shift);
    return values;
}

}  // namespace

std::string method_name(DetMethod m) {
    switch (m) {
        case DetMethod::bruteforce: return "bruteforce";
        case DetMethod::heilermann: return "heilermann";
        case DetMethod::closedform: return "closedform";
    }
    return "unknown";
}

DetMethod parse_method(const std::string& name) {
    if (name == "bruteforce") return DetMethod::bruteforce;
    if (name == "heilermann") return DetMethod::heilermann;
    if (name == "closedform") return DetMethod::closedform;
    throw InvalidArgument("unknown determinant method: " + name);
}

Json to_json(const HankelResult& r) {
    Json j = Json::object();
    j["seq"] = r.seq_id.name();
    if (r.seq_id.kind == SeqKind::theta || r.seq_id.kind == SeqKind::xi) j["ell"] = r.seq_id.ell;
    j["shift"] = r.shift;
    j["n"] = r.n;
    j["method"] = method_name(r.method);
    j["value"] = to_json(r.value);
    return j;
}

Matrix hankel_matrix(const MomentSeq& seq, int shift, int n) {
    if (shift < 0 || n < 0) throw InvalidArgument("hankel_matrix: shift and n must be nonnegative");
    const auto needed = static_cast<std::size_t>(2 * n + shift + 1);
    if (seq.size() < needed) throw InsufficientLength(needed, seq.size());
    Matrix m(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) m[static_cast<std::size_t>(i)].push_back(seq[static_cast<std::size_t>(i + j + shift)]);
    return m;
}

RatFuncQ det_bareiss(const Matrix& m) {
    require_square(m);
    const std::size_t N = m.size();
    if (N == 0) return RatFuncQ(1);

    // Scale row i by its denominator lcm L_i so every entry lies in Z[q].
    std::vector<std::vector<QPoly>> a(N);
    std::vector<QPoly> cleared;
    for (std::size_t i = 0; i < N; ++i) {
        QPoly L(1);
        for (const auto& e : m[i]) L = lcm(L, e.den());
        for (const auto& e : m[i]) a[i].push_back(e.num() * divexact(L, e.den()));
        cleared.push_back(std::move(L));
    }

    long sign = 1;
    QPoly prev(1);
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < N && a[r][k].is_zero()) ++r;
            if (r == N) return RatFuncQ();
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j)
                a[i][j] = divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = QPoly();
        }
        prev = a[k][k];
    }

    RatFuncQ result(sign > 0 ? a[N - 1][N - 1] : QPoly() - a[N - 1][N - 1]);
    for (const auto& L : cleared) result /= RatFuncQ(L);
    return result;
}

RatFuncQ det_cofactor(const Matrix& m) {
    require_square(m);
    const std::size_t N = m.size();
    if (N == 0) return RatFuncQ(1);
    if (N == 1) return m[0][0];
    if (N == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    RatFuncQ sum;
    for (std::size_t j = 0; j < N; ++j) {
        if (m[0][j].is_zero()) continue;
        Matrix minor;
        for (std::size_t i = 1; i < N; ++i) {
            std::vector<RatFuncQ> row;
            for (std::size_t c = 0; c < N; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        const RatFuncQ term = m[0][j] * det_cofactor(minor);
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

RatFuncQ det_exact(const Matrix& m) {
    RatFuncQ d = det_bareiss(m);
    if (m.size() <= 3 && det_cofactor(m) != d)
        throw Error("internal error: elimination and cofactor determinants disagree");
    return d;
}

RatFuncQ det_heilermann(const JFraction& jf, int n) {
    if (n < 0) throw InvalidArgument("det_heilermann: n must be nonnegative");
    RatFuncQ d = jf.mu0.pow(n + 1);
    for (int k = 1; k <= n; ++k) {
        const RatFuncQ bk = jf.b(k);
        if (bk.is_zero()) throw DegeneracyError(k);
        d *= bk.pow(n + 1 - k);
    }
    return d;
}

RatFuncQ det_shifted_via_favard(const JFraction& jf, int n) {
    const RatFuncQ base = det_heilermann(jf, n);
    const auto p = three_term_build(FavardData{jf.a, jf.b, jf.mu0}, n + 1);
    return base * RatFuncQ(parity_sign(n + 1)) * p.back()[0];
}

JFraction jfraction_for_eps(int ell) {
    if (ell != 0 && ell != 1) throw InvalidArgument("jfraction_for_eps: ell must be 0 or 1");
    const FavardData f = favard_P(ell);
    return JFraction{q_euler_sequence(ell).back(), f.a, f.b, std::nullopt};
}

JFraction jfraction_for_xi(int ell) {
    if (ell < 0) throw InvalidArgument("jfraction_for_xi: ell must be nonnegative");
    const FavardData f = favard_Jtilde(ell);
    return JFraction{RatFuncQ(1), f.a, f.b, std::nullopt};
}

JFraction jfraction_for_theta(int ell) {
    if (ell < 0) throw InvalidArgument("jfraction_for_theta: ell must be nonnegative");
    const FavardData f = favard_P(ell);
    return JFraction{RatFuncQ(1), f.a, f.b, std::nullopt};
}

std::vector<RatFuncQ> jfraction_expand(const JFraction& jf, int order) {
    if (order < 0) throw InvalidArgument("jfraction_expand: order must be nonnegative");
    int levels = order / 2 + 1;
    if (jf.depth) levels = std::min(levels, *jf.depth);

    // Tail T_k = N_k / D_k as polynomials in x; T_levels is truncated to 1.
    ZPoly N(1), D(1);
    for (int k = levels - 1; k >= 0; --k) {
        ZPoly next_N = ZPoly{RatFuncQ(1), jf.a(k)} * N;
        if (k + 1 < levels) next_N -= jf.b(k + 1) * ZPoly::monomial(RatFuncQ(1), 2) * D;
        D = std::move(N);
        N = std::move(next_N);
    }
    // mu0 * D / N as a power series; N has constant term 1.
    const auto len = static_cast<std::size_t>(order) + 1;
    std::vector<RatFuncQ> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        RatFuncQ c = i < D.size() ? jf.mu0 * D[i] : RatFuncQ();
        for (std::size_t j = 1; j <= i && j < N.size(); ++j)
            if (!N[j].is_zero()) c -= N[j] * out[i - j];
        out[i] = std::move(c);
    }
    return out;
}

JFraction jfraction_from_moments(const std::vector<RatFuncQ>& moments) {
    if (moments.empty()) throw InsufficientLength(1, 0);
    if (moments[0].is_zero()) throw VanishingHankel(0);
    const int M = static_cast<int>(moments.size()) - 1;
    const int d = (M + 1) / 2;

    // b_d is also recoverable when mu_{2d} is present.
    const int last = (2 * d <= M) ? d : d - 1;
    std::vector<RatFuncQ> a, b{RatFuncQ()};
    ZPoly prev, cur(1);
    RatFuncQ h_prev, h = moments[0];
    for (int n = 0; n <= last; ++n) {
        if (n > 0) {
            h = apply_moments(moments, cur * cur);
            if (h.is_zero()) throw VanishingHankel(n);
            b.push_back(h / h_prev);
        }
        if (n == d) break;
        a.push_back(-(apply_moments(moments, ZPoly::z() * cur * cur) / h));
        ZPoly next = ZPoly{a.back(), RatFuncQ(1)} * cur;
        if (n > 0) next -= b.back() * prev;
        prev = std::move(cur);
        cur = std::move(next);
        h_prev = h;
    }

    JFraction jf;
    jf.mu0 = moments[0];
    jf.depth = d;
    jf.a = [a](int k) {
        if (k < 0 || k >= static_cast<int>(a.size())) throw InvalidArgument("J-fraction a_k outside the recovered prefix");
        return a[static_cast<std::size_t>(k)];
    };
    jf.b = [b](int k) {
        if (k < 1 || k >= static_cast<int>(b.size())) throw InvalidArgument("J-fraction b_k outside the recovered prefix");
        return b[static_cast<std::size_t>(k)];
    };
    return jf;
}

mpz_class exponent_shift0(int n) {
    const mpz_class m = n;
    return m * (m + 1) * (2 * m + 1) / 6;
}

mpz_class exponent_shift12(int n) {
    const mpz_class m = n;
    return (m + 1) * (m + 2) * (2 * m + 3) / 6;
}

bool verify_exponent_integrality(int upto) {
    mpz_class sum = 0;
    for (int n = 0; n <= upto; ++n) {
        sum += mpz_class(n) * n;
        const mpz_class c0 = binomial(2L * n + 2, 3), c1 = binomial(2L * n + 4, 3);
        if (c0 % 4 != 0 || c1 % 4 != 0) return false;
        if (c0 / 4 != sum || exponent_shift0(n) != sum) return false;
        const mpz_class next = sum + mpz_class(n + 1) * (n + 1);
        if (c1 / 4 != next || exponent_shift12(n) != next) return false;
    }
    return true;
}

RatFuncQ closed_form_theorem1(int shift, int n) {
    if (n < 0) throw InvalidArgument("closed_form_theorem1: n must be nonnegative");
    const long nn = n;
    const RatFuncQ denom = one_minus_q_pow(nn * (nn + 1));
    switch (shift) {
        case 0: {
            const RatFuncQ lead = RatFuncQ(parity_sign(choose2(nn + 1))) * qp(exponent_shift0(n).get_si()) / denom;
            return lead * pochhammer_product({{false, 2}, {false, 2}}, {{true, 1}, {true, 2}, {true, 2}, {true, 3}}, n);
        }
        case 1: {
            const RatFuncQ lead = RatFuncQ(parity_sign(choose2(nn + 2))) * qp(exponent_shift12(n).get_si()) /
                                  (denom * RatFuncQ(QPoly{1, 0, 1}).pow(nn + 1));
            return lead * pochhammer_product({{false, 2}, {false, 4}}, {{true, 2}, {true, 3}, {true, 3}, {true, 4}}, n);
        }
        case 2: {
            const RatFuncQ extra = RatFuncQ(1) - RatFuncQ(parity_sign(nn)) * qp((nn + 2) * (nn + 2));
            const RatFuncQ lead = RatFuncQ(parity_sign(choose2(nn + 2))) * qp(exponent_shift12(n).get_si()) *
                                  RatFuncQ(QPoly{1, 1}).pow(nn) * extra /
                                  (denom * RatFuncQ(QPoly{1, 0, 1}).pow(2 * (nn + 1)) *
                                   RatFuncQ(QPoly{1, 0, 0, 1}).pow(nn + 1));
            return lead * pochhammer_product({{false, 4}, {false, 4}}, {{true, 3}, {true, 4}, {true, 4}, {true, 5}}, n);
        }
        default: throw InvalidArgument("closed_form_theorem1: shift must be 0, 1 or 2");
    }
}

RatFuncQ closed_form_chapoton_zeng(int n) {
    if (n < 0) throw InvalidArgument("closed_form_chapoton_zeng: n must be nonnegative");
    RatFuncQ prod(1);
    for (int k = 1; k <= n; ++k) prod *= q_factorial(k).pow(6) / (q_factorial(2 * k) * q_factorial(2 * k + 1));
    return RatFuncQ(parity_sign(choose2(n + 1L))) * qp(choose3(n + 1L)) * prod;
}

namespace {

RatFuncQ theta_xi_common(int ell, int n, long linear_coeff) {
    const long nn = n;
    const long e = 2 * choose3(nn + 2) + linear_coeff * choose2(nn + 1);
    const RatFuncQ lead = RatFuncQ(parity_sign(choose2(nn + 1))) * qp(e);
    return lead * pochhammer_product({{false, 2}, {false, 2 * ell + 2}},
                                     {{true, ell + 1}, {true, ell + 2}, {true, ell + 2}, {true, ell + 3}}, n);
}

}  // namespace

RatFuncQ closed_form_theta_det(int ell, int n) {
    if (ell < 0 || n < 0) throw InvalidArgument("closed_form_theta_det: indices must be nonnegative");
    const long nn = n;
    return theta_xi_common(ell, n, 2L * ell - 1) / one_minus_q_pow(nn * (nn + 1));
}

RatFuncQ closed_form_xi_det(int ell, int n) {
    if (ell < 0 || n < 0) throw InvalidArgument("closed_form_xi_det: indices must be nonnegative");
    return theta_xi_common(ell, n, 2L * ell + 1);
}

bool has_closed_form(const SeqId& id, int shift) {
    switch (id.kind) {
        case SeqKind::qeuler: return shift >= 0 && shift <= 2;
        case SeqKind::qbernoulli:
        case SeqKind::theta:
        case SeqKind::xi: return shift == 0;
    }
    return false;
}

HankelResult compute_det(const SeqId& id, int shift, int n, DetMethod method) {
    if (shift < 0 || n < 0) throw InvalidArgument("shift and n must be nonnegative");
    HankelResult r{id, shift, n, RatFuncQ(), method};
    switch (method) {
        case DetMethod::bruteforce:
            r.value = det_exact(hankel_matrix(make_moment_seq(id, 2 * n + shift), shift, n));
            break;
        case DetMethod::heilermann:
            if (id.kind == SeqKind::qeuler && shift <= 1)
                r.value = det_heilermann(jfraction_for_eps(shift), n);
            else if (id.kind == SeqKind::qeuler && shift == 2)
                r.value = det_shifted_via_favard(jfraction_for_eps(1), n);
            else if (id.kind == SeqKind::xi && shift == 0)
                r.value = det_heilermann(jfraction_for_xi(id.ell), n);
            else if (id.kind == SeqKind::theta && shift == 0)
                r.value = det_heilermann(jfraction_for_theta(id.ell), n);
            else
                // No known J-fraction: recover one from the moments themselves.
                r.value = det_heilermann(jfraction_from_moments(shifted_values(id, shift, n)), n);
            break;
        case DetMethod::closedform:
            if (!has_closed_form(id, shift))
                throw InvalidArgument("no closed form for " + id.name() + " at shift " + std::to_string(shift));
            switch (id.kind) {
                case SeqKind::qeuler: r.value = closed_form_theorem1(shift, n); break;
                case SeqKind::qbernoulli: r.value = closed_form_chapoton_zeng(n); break;
                case SeqKind::theta: r.value = closed_form_theta_det(id.ell, n); break;
                case SeqKind::xi: r.value = closed_form_xi_det(id.ell, n); break;
            }
            break;
    }
    return r;
}

}  // namespace qhankel
