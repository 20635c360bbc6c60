#include "qhankel/serialize.hpp"

#include "qhankel/errors.hpp"

#include <cctype>

namespace qhankel {

namespace {

bool is_decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Json to_json(const QPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

Json to_json(const RatFuncQ& f) {
    Json j = Json::object();
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

Json to_json(const std::vector<RatFuncQ>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    return arr;
}

QPoly qpoly_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError("expected an array of decimal strings", -1, path);
    std::vector<mpz_class> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_string()) throw ParseError("coefficient must be a string", -1, where);
        std::string s = j[i].get<std::string>();
        if (!is_decimal_integer(s)) throw ParseError("not a decimal integer: \"" + s + "\"", -1, where);
        if (s[0] == '+') s.erase(0, 1);
        coeffs.emplace_back(s, 10);
    }
    return QPoly(std::move(coeffs));
}

RatFuncQ ratfunc_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError("expected an object with \"num\" and \"den\"", -1, path);
    for (const char* key : {"num", "den"})
        if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"", -1, path);
    for (const auto& item : j.items())
        if (item.key() != "num" && item.key() != "den")
            throw ParseError("unexpected key \"" + item.key() + "\"", -1, path);
    QPoly num = qpoly_from_json(j.at("num"), path + ".num");
    QPoly den = qpoly_from_json(j.at("den"), path + ".den");
    if (den.is_zero()) throw ParseError("denominator is zero", -1, path + ".den");
    return RatFuncQ::reduce(std::move(num), std::move(den));
}

std::string serialize(const RatFuncQ& f) { return to_json(f).dump(); }

RatFuncQ deserialize(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), static_cast<std::ptrdiff_t>(e.byte));
    }
    return ratfunc_from_json(j);
}

}  // namespace qhankel
