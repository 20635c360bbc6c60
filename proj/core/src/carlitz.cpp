#include "qhankel/carlitz.hpp"

#include "qhankel/errors.hpp"

namespace qhankel {

namespace {

// Row n of Pascal's triangle.
std::vector<mpz_class> pascal_row(int n) {
    std::vector<mpz_class> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<mpz_class> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return row;
}

void require_nonnegative(int n, const char* who) {
    if (n < 0) throw InvalidArgument(std::string(who) + ": index must be nonnegative");
}

// (1 - q)^{-n} sum_k (-1)^k C(n,k) term(k)
template <class Term>
RatFuncQ alternating_binomial_sum(int n, Term term) {
    const auto row = pascal_row(n);
    RatFuncQ sum;
    for (int k = 0; k <= n; ++k) {
        RatFuncQ t = RatFuncQ(mpz_class(parity_sign(k) * row[static_cast<std::size_t>(k)])) * term(k);
        sum += t;
    }
    return sum / RatFuncQ(QPoly{1, -1}).pow(n);
}

}  // namespace

std::string SeqId::name() const {
    switch (kind) {
        case SeqKind::qeuler: return "qeuler";
        case SeqKind::qbernoulli: return "qbernoulli";
        case SeqKind::theta: return "theta";
        case SeqKind::xi: return "xi";
    }
    return "unknown";
}

SeqId SeqId::parse(const std::string& name, int ell) {
    if (name == "qeuler") return {SeqKind::qeuler, 0};
    if (name == "qbernoulli") return {SeqKind::qbernoulli, 0};
    if (ell < 0) throw InvalidArgument("ell must be nonnegative");
    if (name == "theta") return {SeqKind::theta, ell};
    if (name == "xi") return {SeqKind::xi, ell};
    throw InvalidArgument("unknown sequence id: " + name);
}

RatFuncQ q_euler_explicit(int n) {
    require_nonnegative(n, "q_euler_explicit");
    const RatFuncQ one_plus_q(QPoly{1, 1});
    return alternating_binomial_sum(n, [&](int k) {
        return one_plus_q / RatFuncQ(QPoly(1) + QPoly::monomial(1, k + 1));
    });
}

RatFuncQ q_bernoulli_explicit(int n) {
    require_nonnegative(n, "q_bernoulli_explicit");
    // (k+1)/[k+1]_q = (k+1)(1-q)/(1-q^{k+1})
    return alternating_binomial_sum(n, [](int k) {
        return RatFuncQ(QPoly{k + 1, -(k + 1)}, QPoly(1) - QPoly::monomial(1, k + 1));
    });
}

std::vector<RatFuncQ> q_euler_sequence(int upto) {
    require_nonnegative(upto, "q_euler_sequence");
    std::vector<RatFuncQ> eps{RatFuncQ(1)};
    for (int n = 1; n <= upto; ++n) {
        // sum_{k<n} C(n,k) q^{k+1} eps_k + (1 + q^{n+1}) eps_n = 0
        const auto row = pascal_row(n);
        RatFuncQ acc;
        for (int k = 0; k < n; ++k)
            acc += RatFuncQ(row[static_cast<std::size_t>(k)]) * RatFuncQ::q_pow(k + 1) * eps[static_cast<std::size_t>(k)];
        eps.push_back(-acc / RatFuncQ(QPoly(1) + QPoly::monomial(1, n + 1)));
    }
    return eps;
}

std::vector<RatFuncQ> q_bernoulli_sequence(int upto) {
    require_nonnegative(upto, "q_bernoulli_sequence");
    std::vector<RatFuncQ> beta{RatFuncQ(1)};
    for (int n = 1; n <= upto; ++n) {
        // sum_{k<n} C(n,k) q^{k+1} beta_k + (q^{n+1} - 1) beta_n = [n == 1]
        const auto row = pascal_row(n);
        RatFuncQ acc;
        for (int k = 0; k < n; ++k)
            acc += RatFuncQ(row[static_cast<std::size_t>(k)]) * RatFuncQ::q_pow(k + 1) * beta[static_cast<std::size_t>(k)];
        const RatFuncQ rhs = RatFuncQ(n == 1 ? 1 : 0) - acc;
        beta.push_back(rhs / RatFuncQ(QPoly::monomial(1, n + 1) - QPoly(1)));
    }
    return beta;
}

RatFuncQ q_euler_recursive(int n) {
    require_nonnegative(n, "q_euler_recursive");
    return q_euler_sequence(n).back();
}

RatFuncQ q_bernoulli_recursive(int n) {
    require_nonnegative(n, "q_bernoulli_recursive");
    return q_bernoulli_sequence(n).back();
}

mpq_class limit_q1(SeqKind kind, int n) {
    switch (kind) {
        case SeqKind::qeuler: return q_euler_recursive(n).eval_at(mpq_class(1));
        case SeqKind::qbernoulli: return q_bernoulli_recursive(n).eval_at(mpq_class(1));
        default: throw InvalidArgument("limit_q1 supports qeuler and qbernoulli only");
    }
}

}  // namespace qhankel
