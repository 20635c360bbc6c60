#include "qhankel/qpoly.hpp"

#include "qhankel/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

namespace qhankel {

namespace {

const mpz_class& zero_coeff() {
    static const mpz_class z(0);
    return z;
}

// Arithmetic in Z/pZ for a prime p < 2^63.
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kModPrime = 4611686018427387847ULL;  // 2^62 - 57

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

std::vector<u64> reduce_mod(const QPoly& f, u64 p) {
    std::vector<u64> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Degree of gcd(a, b) over Z/pZ via the Euclidean algorithm.
int modular_gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        const u64 inv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            const u64 f = mulmod(a.back(), inv, p);
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                const u64 t = mulmod(f, b[i], p);
                u64& ai = a[off + i];
                ai = ai >= t ? ai - t : ai + (p - t);
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace

QPoly::QPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

QPoly QPoly::monomial(const mpz_class& c, int k) {
    QPoly r;
    if (c == 0) return r;
    r.c_.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
    r.c_.back() = c;
    return r;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& QPoly::operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : zero_coeff();
}

const mpz_class& QPoly::leading() const { return c_.empty() ? zero_coeff() : c_.back(); }

int QPoly::sign() const { return c_.empty() ? 0 : sgn(c_.back()); }

mpz_class QPoly::content() const {
    mpz_class g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (sign() < 0) g = -g;
    if (g == 1) return *this;
    return divexact(*this, g);
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<mpz_class> out(lhs.c_.size() + rhs.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        mpz_srcptr a = lhs.c_[i].get_mpz_t();
        if (mpz_sgn(a) == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a, rhs.c_[j].get_mpz_t());
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

QPoly QPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<mpz_class> out(static_cast<std::size_t>(k), mpz_class(0));
    out.insert(out.end(), c_.begin(), c_.end());
    QPoly r;
    r.c_ = std::move(out);
    return r;
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string QPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

QPoly divexact(const QPoly& a, const mpz_class& s) {
    if (s == 0) throw DivisionByZero();
    std::vector<mpz_class> out = a.coeffs();
    for (auto& v : out) {
        if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t())) throw InexactDivision();
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    }
    return QPoly(std::move(out));
}

QPoly divexact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (b.is_constant()) return divexact(a, b[0]);
    const int da = a.degree(), db = b.degree();
    if (da < db) throw InexactDivision();
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> quo(static_cast<std::size_t>(da - db) + 1);
    const mpz_class& lb = b.leading();
    mpz_class t;
    for (int i = da - db; i >= 0; --i) {
        mpz_class& top = r[static_cast<std::size_t>(i + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw InexactDivision();
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), t.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        quo[static_cast<std::size_t>(i)] = t;
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) throw InexactDivision();
    return QPoly(std::move(quo));
}

QPoly pseudo_remainder(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    const int db = b.degree();
    if (a.degree() < db) return a;
    std::vector<mpz_class> r = a.coeffs();
    const mpz_class& lb = b.leading();
    int steps = a.degree() - db + 1;
    int dr = a.degree();
    mpz_class t;
    while (dr >= db) {
        t = r[static_cast<std::size_t>(dr)];
        for (int i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= lb;
        r[static_cast<std::size_t>(dr)] = 0;
        const int off = dr - db;
        for (int j = 0; j < db; ++j)
            mpz_submul(r[static_cast<std::size_t>(off + j)].get_mpz_t(), t.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        --steps;
        --dr;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    r.resize(static_cast<std::size_t>(dr + 1));
    if (steps > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        for (auto& v : r) v *= f;
    }
    return QPoly(std::move(r));
}

QPoly gcd_subresultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    QPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    if (B.is_constant()) return QPoly(1);
    mpz_class g(1), h(1), t;
    for (;;) {
        const int delta = A.degree() - B.degree();
        QPoly R = pseudo_remainder(A, B);
        if (R.is_zero()) return B.primitive_part();
        if (R.degree() == 0) return QPoly(1);
        A = std::move(B);
        mpz_pow_ui(t.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        B = divexact(R, g * t);
        g = A.leading();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            mpz_class gd, hd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        }
    }
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return QPoly(1);

    QPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    if (A == B) return A;

    // The degree of the gcd modulo a prime not dividing either leading
    // coefficient bounds the degree over Z.
    const u64 p = kModPrime;
    if (mpz_fdiv_ui(A.leading().get_mpz_t(), p) != 0 && mpz_fdiv_ui(B.leading().get_mpz_t(), p) != 0) {
        const int bound = modular_gcd_degree(reduce_mod(A, p), reduce_mod(B, p), p);
        if (bound == 0) return QPoly(1);
        if (bound == B.degree()) {
            try {
                (void)divexact(A, B);
                return B;
            } catch (const InexactDivision&) {
            }
        }
    }
    return gcd_subresultant(A, B);
}

}  // namespace qhankel
