#include "cli.hpp"

#include "qhankel/carlitz.hpp"
#include "qhankel/errors.hpp"
#include "qhankel/functionals.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/orthopoly.hpp"
#include "qhankel/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace qhankel::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string id = "qeuler";
    int ell = 0;
    int shift = 0;
    int n = -1;
    int max_n = 5;
    std::string method = "bruteforce";
    std::string format = "text";
    std::string out;
    std::string at_q;
    std::vector<std::string> only;
    unsigned jobs = 0;
};

// Flag values that parse but are semantically invalid.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<mpq_class> parse_point(const std::string& text) {
    if (text.empty()) return std::nullopt;
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw UsageError("--at-q expects an integer or p/r rational, got '" + text + "'");
    if (v.get_den() == 0) throw UsageError("--at-q has a zero denominator");
    v.canonicalize();
    return v;
}

class Renderer {
public:
    Renderer(std::string format, std::optional<mpq_class> at) : format_(std::move(format)), at_(std::move(at)) {}

    const std::string& format() const { return format_; }
    bool evaluating() const { return at_.has_value(); }

    Json json(const RatFuncQ& f) const {
        if (at_) return f.eval_at(*at_).get_str();
        return to_json(f);
    }
    std::string text(const RatFuncQ& f) const { return at_ ? f.eval_at(*at_).get_str() : f.str(); }
    std::string tex(const RatFuncQ& f) const { return at_ ? latex(f.eval_at(*at_)) : latex(f); }

    Json json(const ZPoly& p) const {
        Json arr = Json::array();
        for (const auto& c : p.coeffs()) arr.push_back(json(c));
        return arr;
    }
    std::string text(const ZPoly& p) const { return at_ ? evaluated(p).str() : p.str(); }
    std::string tex(const ZPoly& p) const { return latex(at_ ? evaluated(p) : p); }

private:
    ZPoly evaluated(const ZPoly& p) const {
        std::vector<RatFuncQ> c;
        for (const auto& v : p.coeffs()) c.emplace_back(v.eval_at(*at_));
        return ZPoly(std::move(c));
    }

    std::string format_;
    std::optional<mpq_class> at_;
};

// A one-line display formula built from aligned rows.
std::string display(const std::vector<std::string>& rows) {
    std::string s = "\\[ \\begin{aligned} ";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) s += " \\\\ ";
        s += rows[i];
    }
    return s + " \\end{aligned} \\]\n";
}

std::string seq_symbol_tex(const SeqId& id, const std::string& index) {
    switch (id.kind) {
        case SeqKind::qeuler: return "\\epsilon_{" + index + "}";
        case SeqKind::qbernoulli: return "\\beta_{" + index + "}";
        case SeqKind::theta: return "\\Theta_{" + std::to_string(id.ell) + "}(z^{" + index + "})";
        case SeqKind::xi: return "\\xi_{" + std::to_string(id.ell) + "," + index + "}";
    }
    return "s_{" + index + "}";
}

std::string seq_symbol_text(const SeqId& id, const std::string& index) {
    switch (id.kind) {
        case SeqKind::qeuler: return "eps[" + index + "]";
        case SeqKind::qbernoulli: return "beta[" + index + "]";
        case SeqKind::theta: return "Theta_" + std::to_string(id.ell) + "(z^" + index + ")";
        case SeqKind::xi: return "xi_" + std::to_string(id.ell) + "[" + index + "]";
    }
    return "s[" + index + "]";
}

SeqId parse_seq(const RunConfig& cfg) {
    try {
        return SeqId::parse(cfg.id, cfg.ell);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

void cmd_seq(const RunConfig& cfg, const Renderer& r, std::ostream& out) {
    const SeqId id = parse_seq(cfg);
    const auto seq = make_moment_seq(id, cfg.max_n);
    if (r.format() == "json") {
        Json arr = Json::array();
        for (const auto& v : seq.values) arr.push_back(r.json(v));
        out << arr.dump() << '\n';
    } else if (r.format() == "latex") {
        std::vector<std::string> rows;
        for (std::size_t k = 0; k < seq.size(); ++k)
            rows.push_back(seq_symbol_tex(id, std::to_string(k)) + " &= " + r.tex(seq[k]));
        out << display(rows);
    } else {
        for (std::size_t k = 0; k < seq.size(); ++k)
            out << seq_symbol_text(id, std::to_string(k)) << " = " << r.text(seq[k]) << '\n';
    }
}

void cmd_poly(const RunConfig& cfg, const Renderer& r, std::ostream& out) {
    FamilyId family{FamilyKind::P_family, cfg.ell};
    if (cfg.id == "P")
        family.kind = FamilyKind::P_family;
    else if (cfg.id == "Jtilde")
        family.kind = FamilyKind::monic_Jtilde;
    else if (cfg.id == "J")
        family.kind = FamilyKind::bigQJacobi_J;
    else
        throw UsageError("poly --id must be one of P, Jtilde, J");
    if (cfg.ell < 0) throw UsageError("--ell must be nonnegative");
    const int lo = cfg.n >= 0 ? cfg.n : 0;
    const int hi = cfg.n >= 0 ? cfg.n : cfg.max_n;
    const auto polys = build_family(family, hi);

    const std::string name = family.name();
    if (r.format() == "json") {
        Json j = Json::object();
        j["family"] = name;
        j["ell"] = cfg.ell;
        if (r.evaluating()) j["at_q"] = cfg.at_q;
        Json list = Json::array();
        for (int n = lo; n <= hi; ++n) {
            Json item = Json::object();
            item["n"] = n;
            item["coeffs"] = r.json(polys[static_cast<std::size_t>(n)]);
            list.push_back(std::move(item));
        }
        j["polynomials"] = std::move(list);
        out << j.dump() << '\n';
    } else if (r.format() == "latex") {
        const std::string sym = name == "P" ? "\\mathcal{P}" : name == "J" ? "\\mathcal{J}" : "\\widetilde{\\mathcal{J}}";
        std::vector<std::string> rows;
        for (int n = lo; n <= hi; ++n)
            rows.push_back(sym + "_{" + std::to_string(cfg.ell) + "," + std::to_string(n) + "}(z) &= " +
                           r.tex(polys[static_cast<std::size_t>(n)]));
        out << display(rows);
    } else {
        for (int n = lo; n <= hi; ++n)
            out << name << "_{" << cfg.ell << "," << n << "}(z) = " << r.text(polys[static_cast<std::size_t>(n)]) << '\n';
    }
}

int cmd_det(const RunConfig& cfg, const Renderer& r, std::ostream& out, std::ostream& err) {
    const SeqId id = parse_seq(cfg);
    if (cfg.n < 0) throw UsageError("det requires --n >= 0");
    if (cfg.shift < 0) throw UsageError("--shift must be nonnegative");

    std::vector<DetMethod> methods;
    if (cfg.method == "all") {
        methods.push_back(DetMethod::bruteforce);
        methods.push_back(DetMethod::heilermann);
        if (has_closed_form(id, cfg.shift)) methods.push_back(DetMethod::closedform);
    } else {
        const DetMethod m = parse_method(cfg.method);
        if (m == DetMethod::closedform && !has_closed_form(id, cfg.shift))
            throw UsageError("no closed form for " + id.name() + " at shift " + std::to_string(cfg.shift));
        methods.push_back(m);
    }

    std::vector<HankelResult> results;
    for (DetMethod m : methods) {
        try {
            results.push_back(compute_det(id, cfg.shift, cfg.n, m));
        } catch (const VanishingHankel& e) {
            // The generic Heilermann route needs a quasi-definite sequence.
            if (cfg.method != "all") throw;
            err << "note: heilermann route unavailable: " << e.what() << '\n';
        }
    }
    const bool agree = std::all_of(results.begin(), results.end(),
                                   [&](const HankelResult& h) { return h.value == results.front().value; });

    auto result_json = [&](const HankelResult& h) {
        Json j = to_json(h);
        if (r.evaluating()) {
            j["at_q"] = cfg.at_q;
            j["value"] = r.json(h.value);
        }
        return j;
    };

    if (r.format() == "json") {
        if (cfg.method == "all") {
            Json j = Json::object();
            Json list = Json::array();
            for (const auto& h : results) list.push_back(result_json(h));
            j["results"] = std::move(list);
            j["agree"] = agree;
            out << j.dump() << '\n';
        } else {
            out << result_json(results.front()).dump() << '\n';
        }
    } else if (r.format() == "latex") {
        const std::string index = cfg.shift == 0 ? "i+j" : "i+j+" + std::to_string(cfg.shift);
        std::vector<std::string> rows;
        for (const auto& h : results)
            rows.push_back("\\det_{0\\le i,j\\le " + std::to_string(cfg.n) + "}\\left(" + seq_symbol_tex(id, index) +
                           "\\right) &= " + r.tex(h.value) + " && \\text{" + method_name(h.method) + "}");
        out << display(rows);
    } else {
        for (const auto& h : results)
            out << "det " << id.name() << (id.kind == SeqKind::theta || id.kind == SeqKind::xi ? "_" + std::to_string(id.ell) : "")
                << " shift=" << cfg.shift << " n=" << cfg.n << " [" << method_name(h.method) << "] = " << r.text(h.value)
                << '\n';
        if (cfg.method == "all") out << (agree ? "all methods agree" : "MISMATCH between methods") << '\n';
    }
    return agree ? kOk : kMismatch;
}

void cmd_jfrac(const RunConfig& cfg, const Renderer& r, std::ostream& out) {
    const SeqId id = parse_seq(cfg);
    if (cfg.shift < 0) throw UsageError("--shift must be nonnegative");
    const int depth = cfg.max_n;

    JFraction jf;
    std::string source = "closedform";
    if (id.kind == SeqKind::qeuler && cfg.shift <= 1)
        jf = jfraction_for_eps(cfg.shift);
    else if (id.kind == SeqKind::xi && cfg.shift == 0)
        jf = jfraction_for_xi(id.ell);
    else if (id.kind == SeqKind::theta && cfg.shift == 0)
        jf = jfraction_for_theta(id.ell);
    else {
        auto values = make_moment_seq(id, 2 * depth + 1 + cfg.shift).values;
        values.erase(values.begin(), values.begin() + cfg.shift);
        jf = jfraction_from_moments(values);
        source = "recovered";
    }
    std::vector<RatFuncQ> a, b;
    for (int k = 0; k <= depth; ++k) a.push_back(jf.a(k));
    for (int k = 1; k <= depth; ++k) b.push_back(jf.b(k));
    const auto series = jfraction_expand(jf, 2 * depth + 1);

    if (r.format() == "json") {
        Json j = Json::object();
        j["seq"] = id.name();
        if (id.kind == SeqKind::theta || id.kind == SeqKind::xi) j["ell"] = id.ell;
        j["shift"] = cfg.shift;
        j["source"] = source;
        if (r.evaluating()) j["at_q"] = cfg.at_q;
        j["mu0"] = r.json(jf.mu0);
        Json ja = Json::array(), jb = Json::array(), js = Json::array();
        for (const auto& v : a) ja.push_back(r.json(v));
        for (const auto& v : b) jb.push_back(r.json(v));
        for (const auto& v : series) js.push_back(r.json(v));
        j["a"] = std::move(ja);
        j["b"] = std::move(jb);
        j["series"] = std::move(js);
        out << j.dump() << '\n';
    } else if (r.format() == "latex") {
        std::vector<std::string> rows{"\\mu_{0} &= " + r.tex(jf.mu0)};
        for (std::size_t k = 0; k < a.size(); ++k) rows.push_back("a_{" + std::to_string(k) + "} &= " + r.tex(a[k]));
        for (std::size_t k = 0; k < b.size(); ++k) rows.push_back("b_{" + std::to_string(k + 1) + "} &= " + r.tex(b[k]));
        out << display(rows);
    } else {
        out << "source: " << source << '\n' << "mu0 = " << r.text(jf.mu0) << '\n';
        for (std::size_t k = 0; k < a.size(); ++k) out << "a[" << k << "] = " << r.text(a[k]) << '\n';
        for (std::size_t k = 0; k < b.size(); ++k) out << "b[" << k + 1 << "] = " << r.text(b[k]) << '\n';
        for (std::size_t k = 0; k < series.size(); ++k) out << "mu[" << k << "] = " << r.text(series[k]) << '\n';
    }
}

int cmd_verify(const RunConfig& cfg, const Renderer& r, std::ostream& out) {
    if (r.evaluating()) throw UsageError("--at-q does not apply to verify");
    SuiteOptions opts;
    opts.max_n = cfg.max_n;
    opts.jobs = cfg.jobs;
    for (const auto& o : cfg.only) {
        std::stringstream ss(o);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) opts.only.push_back(part);
    }
    SuiteReport report;
    try {
        report = run_suite(opts);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }

    if (r.format() == "json") {
        out << to_json(report).dump() << '\n';
    } else if (r.format() == "latex") {
        std::vector<std::string> rows;
        for (const auto& c : report.checks)
            rows.push_back("\\text{" + c.name + "} &: \\text{" + (c.passed() ? "pass" : "FAIL") + " (" +
                           std::to_string(c.cases.size()) + " cases)}");
        out << display(rows);
    } else {
        std::size_t failed = 0;
        for (const auto& c : report.checks) {
            out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases.size() << " cases)\n";
            if (!c.error.empty()) out << "  error: " << c.error << '\n';
            for (const auto& k : c.cases)
                if (!k.equal) out << "  " << to_json(k).dump() << '\n';
            if (!c.passed()) ++failed;
        }
        if (failed == 0)
            out << "all " << report.checks.size() << " checks passed (max-n " << cfg.max_n << ")\n";
        else
            out << failed << " of " << report.checks.size() << " checks failed (max-n " << cfg.max_n << ")\n";
    }
    return report.passed() ? kOk : kMismatch;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    sub->add_option("--out", cfg.out, "Write results to this file instead of stdout");
}

}  // namespace

std::string latex(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const mpz_class& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (i == 0 || mag != 1) s += mag.get_str();
        if (i > 0) s += i == 1 ? "q" : "q^{" + std::to_string(i) + "}";
    }
    return s;
}

std::string latex(const RatFuncQ& f) {
    if (f.den().is_one()) return latex(f.num());
    if (f.num().sign() < 0) return "-\\frac{" + latex(QPoly() - f.num()) + "}{" + latex(f.den()) + "}";
    return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

std::string latex(const mpq_class& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    const mpz_class num = abs(v.get_num());
    return std::string(v < 0 ? "-" : "") + "\\frac{" + num.get_str() + "}{" + v.get_den().get_str() + "}";
}

std::string latex(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const RatFuncQ& c = p[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        const std::string zpart = i == 0 ? "" : i == 1 ? "z" : "z^{" + std::to_string(i) + "}";
        if (i > 0 && c.is_one())
            s += zpart;
        else
            s += "\\left(" + latex(c) + "\\right)" + zpart;
    }
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("QHANKEL_FORMAT"); env != nullptr && *env != '\0') {
        cfg.format = env;
        if (cfg.format != "json" && cfg.format != "text" && cfg.format != "latex") {
            err << "error: QHANKEL_FORMAT must be json, text or latex, got '" << cfg.format << "'\n";
            return kInvalidFlags;
        }
    }
    CLI::App app{"Exact Hankel determinants of q-Euler and related moment sequences", "qhankel"};
    app.require_subcommand(1, 1);

    auto* seq = app.add_subcommand("seq", "Print sequence values s_0..s_max-n");
    seq->add_option("--id", cfg.id, "Sequence: qeuler, qbernoulli, theta, xi")->required();
    seq->add_option("--ell", cfg.ell, "Index l for theta and xi");
    seq->add_option("--max-n", cfg.max_n, "Last index")->check(CLI::NonNegativeNumber);
    seq->add_option("--at-q", cfg.at_q, "Evaluate at a rational q");
    add_common(seq, cfg);

    auto* poly = app.add_subcommand("poly", "Print orthogonal polynomials");
    poly->add_option("--id", cfg.id, "Family: P, Jtilde, J")->required();
    poly->add_option("--ell", cfg.ell, "Family index l");
    poly->add_option("--n", cfg.n, "Single degree")->check(CLI::NonNegativeNumber);
    poly->add_option("--max-n", cfg.max_n, "Degrees 0..max-n when --n is absent")->check(CLI::NonNegativeNumber);
    poly->add_option("--at-q", cfg.at_q, "Evaluate coefficients at a rational q");
    add_common(poly, cfg);

    auto* det = app.add_subcommand("det", "Hankel determinant det(s_{i+j+shift})_{0<=i,j<=n}");
    det->add_option("--id", cfg.id, "Sequence: qeuler, qbernoulli, theta, xi")->required();
    det->add_option("--ell", cfg.ell, "Index l for theta and xi");
    det->add_option("--shift", cfg.shift, "Index shift")->check(CLI::NonNegativeNumber);
    det->add_option("--n", cfg.n, "Matrix size minus one")->required()->check(CLI::NonNegativeNumber);
    det->add_option("--method", cfg.method, "Method")
        ->check(CLI::IsMember({"bruteforce", "heilermann", "closedform", "all"}));
    det->add_option("--at-q", cfg.at_q, "Evaluate at a rational q");
    add_common(det, cfg);

    auto* jfrac = app.add_subcommand("jfrac", "J-fraction coefficients and series of a sequence");
    jfrac->add_option("--id", cfg.id, "Sequence: qeuler, qbernoulli, theta, xi")->required();
    jfrac->add_option("--ell", cfg.ell, "Index l for theta and xi");
    jfrac->add_option("--shift", cfg.shift, "Use s_{k+shift}")->check(CLI::NonNegativeNumber);
    jfrac->add_option("--max-n", cfg.max_n, "Print a_0..a_max-n and b_1..b_max-n")->check(CLI::NonNegativeNumber);
    jfrac->add_option("--at-q", cfg.at_q, "Evaluate at a rational q");
    add_common(jfrac, cfg);

    auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
    verify->add_option("--max-n", cfg.max_n, "Size parameter of every check")->check(CLI::NonNegativeNumber);
    verify->add_option("--only", cfg.only, "Check names or prefixes, comma separated");
    verify->add_option("--jobs", cfg.jobs, "Worker threads (0: hardware concurrency)");
    add_common(verify, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidFlags;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    std::ostringstream buffer;
    int code = kOk;
    try {
        const Renderer r(cfg.format, parse_point(cfg.at_q));
        if (cfg.command == "seq")
            cmd_seq(cfg, r, buffer);
        else if (cfg.command == "poly")
            cmd_poly(cfg, r, buffer);
        else if (cfg.command == "det")
            code = cmd_det(cfg, r, buffer, err);
        else if (cfg.command == "jfrac")
            cmd_jfrac(cfg, r, buffer);
        else
            code = cmd_verify(cfg, r, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidFlags;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidFlags;
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << '\n';
        return kComputationError;
    }

    if (cfg.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file || !(file << buffer.str())) {
            err << "error: cannot write " << cfg.out << '\n';
            return kComputationError;
        }
    }
    return code;
}

}  // namespace qhankel::cli
