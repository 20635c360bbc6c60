#include "qhankel/ratfunc.hpp"

#include "qhankel/errors.hpp"

#include <utility>

namespace qhankel {

RatFuncQ::RatFuncQ(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RatFuncQ::RatFuncQ(QPoly num, QPoly den) {
    *this = reduce(std::move(num), std::move(den));
}

RatFuncQ RatFuncQ::reduce(QPoly num, QPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return RatFuncQ();
    QPoly g = gcd(num, den);
    if (!g.is_one()) {
        num = divexact(num, g);
        den = divexact(den, g);
    }
    RatFuncQ r(std::move(num), std::move(den), Canonical{});
    r.normalize_content();
    return r;
}

// Divides out the common integer content and fixes the sign of den.
void RatFuncQ::normalize_content() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    mpz_class c = num_.content();
    if (c != 1) {
        mpz_class d = den_.content();
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    if (den_.sign() < 0) c = -c;
    if (c != 1) {
        num_ = divexact(num_, c);
        den_ = divexact(den_, c);
    }
}

RatFuncQ RatFuncQ::q_pow(int k) {
    if (k >= 0) return RatFuncQ(QPoly::monomial(1, k), QPoly(1), Canonical{});
    return RatFuncQ(QPoly(1), QPoly::monomial(1, -k), Canonical{});
}

RatFuncQ RatFuncQ::operator-() const { return RatFuncQ(-num_, den_, Canonical{}); }

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) {
            RatFuncQ r(a.num_ + b.num_, a.den_, RatFuncQ::Canonical{});
            if (r.num_.is_zero()) return RatFuncQ();
            return r;
        }
        return RatFuncQ::reduce(a.num_ + b.num_, a.den_);
    }
    // Henrici: with g = gcd(b1, b2), only g can share factors with the new numerator.
    QPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        RatFuncQ r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFuncQ::Canonical{});
        r.normalize_content();
        return r;
    }
    QPoly da = divexact(a.den_, g), db = divexact(b.den_, g);
    QPoly t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return RatFuncQ();
    QPoly g2 = gcd(t, g);
    QPoly den = da * b.den_;
    if (!g2.is_one()) {
        t = divexact(t, g2);
        den = divexact(den, g2);
    }
    RatFuncQ r(std::move(t), std::move(den), RatFuncQ::Canonical{});
    r.normalize_content();
    return r;
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero() || b.is_zero()) return RatFuncQ();
    QPoly g1 = gcd(a.num_, b.den_);
    QPoly g2 = gcd(b.num_, a.den_);
    QPoly n1 = g1.is_one() ? a.num_ : divexact(a.num_, g1);
    QPoly d2 = g1.is_one() ? b.den_ : divexact(b.den_, g1);
    QPoly n2 = g2.is_one() ? b.num_ : divexact(b.num_, g2);
    QPoly d1 = g2.is_one() ? a.den_ : divexact(a.den_, g2);
    RatFuncQ r(n1 * n2, d1 * d2, RatFuncQ::Canonical{});
    r.normalize_content();
    return r;
}

RatFuncQ RatFuncQ::inverse() const {
    if (is_zero()) throw DivisionByZero();
    RatFuncQ r(den_, num_, Canonical{});
    r.normalize_content();
    return r;
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) { return a * b.inverse(); }

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& rhs) { return *this = *this + rhs; }
RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& rhs) { return *this = *this - rhs; }
RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& rhs) { return *this = *this * rhs; }
RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& rhs) { return *this = *this / rhs; }

RatFuncQ RatFuncQ::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    // Powers of a reduced fraction stay reduced.
    QPoly n(1), d(1), bn = num_, bd = den_;
    while (e) {
        if (e & 1) {
            n *= bn;
            d *= bd;
        }
        e >>= 1;
        if (e) {
            bn *= bn;
            bd *= bd;
        }
    }
    RatFuncQ r(std::move(n), std::move(d), Canonical{});
    r.normalize_content();
    return r;
}

mpq_class RatFuncQ::eval_at(const mpq_class& point) const {
    mpq_class d = den_.eval(point);
    if (d == 0) throw PoleError(point.get_str());
    mpq_class r = num_.eval(point) / d;
    r.canonicalize();
    return r;
}

std::string RatFuncQ::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const QPoly& p) {
        std::string s = p.str();
        return p.size() > 1 || p.sign() < 0 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

RatFuncQ ratfunc_arith(const RatFuncQ& lhs, const RatFuncQ& rhs, ArithOp op) {
    switch (op) {
        case ArithOp::add: return lhs + rhs;
        case ArithOp::sub: return lhs - rhs;
        case ArithOp::mul: return lhs * rhs;
        case ArithOp::div: return lhs / rhs;
    }
    throw InvalidArgument("unknown arithmetic operation");
}

}  // namespace qhankel
