#include "qhankel/zpoly.hpp"

#include <utility>

namespace qhankel {

namespace {
const RatFuncQ& zero_coeff() {
    static const RatFuncQ z;
    return z;
}
}  // namespace

ZPoly::ZPoly(const RatFuncQ& c) {
    if (!c.is_zero()) c_.push_back(c);
}

ZPoly::ZPoly(std::vector<RatFuncQ> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<RatFuncQ> coeffs) : c_(coeffs) { trim(); }

ZPoly ZPoly::z() { return monomial(RatFuncQ(1), 1); }

ZPoly ZPoly::monomial(const RatFuncQ& c, int k) {
    if (c.is_zero()) return {};
    std::vector<RatFuncQ> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return ZPoly(std::move(v));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const RatFuncQ& ZPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_coeff(); }

const RatFuncQ& ZPoly::leading() const { return c_.empty() ? zero_coeff() : c_.back(); }

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const RatFuncQ& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    if (s.is_one()) return *this;
    for (auto& v : c_) v *= s;
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RatFuncQ> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return ZPoly(std::move(out));
}

RatFuncQ ZPoly::eval(const RatFuncQ& x) const {
    RatFuncQ acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ZPoly ZPoly::compose(const ZPoly& inner) const {
    ZPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + ZPoly(*it);
    return acc;
}

ZPoly ZPoly::compose_affine(const RatFuncQ& u, const RatFuncQ& v) const {
    return compose(ZPoly{v, u});
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const RatFuncQ& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string zpart = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        if (i > 0 && c.is_one()) {
            out += zpart;
            continue;
        }
        out += "(" + c.str() + ")";
        if (i > 0) out += "*" + zpart;
    }
    return out;
}

}  // namespace qhankel
