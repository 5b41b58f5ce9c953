#pragma once

// Result documents and their serialization.  Every artifact the command-line
// tool can print is wrapped in a ResultDocument holding one of five payload
// kinds (moment polynomial, terminal polynomial in t, certificate, suite
// report, graph list) and rendered to JSON, LaTeX, or plain text.  JSON
// serialization is lossless — every number travels as an exact fraction or
// rational-function string, never a float — and parse_document inverts emit.
// Rendering is deterministic: equal payloads produce byte-identical output.

#include <termdisc/bigint.hpp>
#include <termdisc/certify.hpp>
#include <termdisc/errors.hpp>
#include <termdisc/graphs.hpp>
#include <termdisc/moments.hpp>
#include <termdisc/ratfunc.hpp>
#include <termdisc/upoly.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace termdisc {

/// Version stamp carried by every serialized JSON document.
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, latex, text };

inline OutputFormat parse_output_format(std::string_view s) {
    if (s == "json") return OutputFormat::json;
    if (s == "latex") return OutputFormat::latex;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("unsupported format: '" + std::string(s) +
                                "' (expected json, latex, or text)");
}

// ---------------------------------------------------------------------------
// Payload kinds
// ---------------------------------------------------------------------------

/// One enumerated multigraph with its basic statistics.
struct GraphListEntry {
    std::string edges;  // canonical edge string
    unsigned vertices = 0;
    Int automorphisms = 1;

    friend bool operator==(const GraphListEntry&, const GraphListEntry&) = default;
};

/// The square multigraphs of one total degree, in canonical order.
struct GraphList {
    unsigned degree = 0;
    std::vector<GraphListEntry> graphs;

    friend bool operator==(const GraphList&, const GraphList&) = default;
};

/// Outcome of one verified identity: a short machine name, the mathematical
/// statement that was checked, and the result.
struct SuiteCheck {
    std::string name;
    std::string identity;
    bool pass = false;
    std::string detail;  // empty when passing

    friend bool operator==(const SuiteCheck&, const SuiteCheck&) = default;
};

/// All checks of one verification suite, in a fixed deterministic order.
struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

using DocumentPayload =
    std::variant<MomentPolynomial, TerminalPolynomial, Certificate, SuiteReport, GraphList>;

struct ResultDocument {
    DocumentPayload payload;

    friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

inline std::string document_kind(const ResultDocument& doc) {
    switch (doc.payload.index()) {
        case 0: return "moment-polynomial";
        case 1: return "terminal-polynomial";
        case 2: return "certificate";
        case 3: return "suite-report";
        case 4: return "graph-list";
        default: throw std::invalid_argument("unknown payload kind");
    }
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json moment_json(const MomentPolynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mp, c] : f.terms())
        terms.push_back(nlohmann::json{
            {"parts", mp.parts()},
            {"coefficient", c.str()},
        });
    return nlohmann::json{
        {"centered", f.centered()},
        {"degree", f.degree()},
        {"terms", terms},
    };
}

inline MomentPolynomial moment_from_json(const nlohmann::json& j) {
    MomentPolynomial f = MomentPolynomial::zero_in_mode(j.at("centered").get<bool>());
    for (const auto& t : j.at("terms"))
        f.add_raw_term(t.at("parts").get<std::vector<unsigned>>(),
                       parse_ratfunc(t.at("coefficient").get<std::string>()));
    if (f.degree() != j.at("degree").get<int>())
        throw parse_error("moment polynomial degree metadata does not match its terms");
    return f;
}

inline nlohmann::json terminal_json(const TerminalPolynomial& tp) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = tp.order + 1; i-- > 0;) {
        MomentPolynomial c = tp.poly.coeff(i);
        if (is_zero(c)) continue;
        coeffs.push_back(nlohmann::json{{"power", i}, {"value", moment_json(c)}});
    }
    return nlohmann::json{
        {"order", tp.order},
        {"variable", "t"},
        {"coefficients", coeffs},
    };
}

inline TerminalPolynomial terminal_from_json(const nlohmann::json& j) {
    TerminalPolynomial tp;
    tp.order = j.at("order").get<unsigned>();
    for (const auto& c : j.at("coefficients")) {
        const auto power = c.at("power").get<std::size_t>();
        if (power > tp.order) throw parse_error("coefficient power exceeds the order");
        tp.poly.set_coeff(power, moment_from_json(c.at("value")));
    }
    return tp;
}

inline nlohmann::json certificate_json(const Certificate& c) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : c.entries)
        entries.push_back(nlohmann::json{
            {"graph", e.graph},
            {"convention", e.unordered ? "unordered" : "ordered"},
            {"weight", e.weight.str()},
        });
    nlohmann::json j{
        {"target", c.target},
        {"mode", c.n_value ? "numeric" : "uniform"},
        {"floor", c.floor_n},
        {"entries", entries},
    };
    if (c.n_value) j["n"] = *c.n_value;
    return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    c.target = j.at("target").get<std::string>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "numeric")
        c.n_value = j.at("n").get<long long>();
    else if (mode != "uniform")
        throw parse_error("certificate mode must be 'numeric' or 'uniform'");
    c.floor_n = j.at("floor").get<long long>();
    for (const auto& e : j.at("entries")) {
        const auto convention = e.at("convention").get<std::string>();
        if (convention != "ordered" && convention != "unordered")
            throw parse_error("entry convention must be 'ordered' or 'unordered'");
        c.entries.push_back(CertificateEntry{
            e.at("graph").get<std::string>(),
            convention == "unordered",
            parse_ratfunc(e.at("weight").get<std::string>()),
        });
    }
    return c;
}

inline nlohmann::json suite_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back(nlohmann::json{
            {"name", c.name},
            {"identity", c.identity},
            {"pass", c.pass},
            {"detail", c.detail},
        });
    return nlohmann::json{
        {"suite", r.suite},
        {"passed", r.passed()},
        {"checks", checks},
    };
}

inline SuiteReport suite_from_json(const nlohmann::json& j) {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back(SuiteCheck{
            c.at("name").get<std::string>(),
            c.at("identity").get<std::string>(),
            c.at("pass").get<bool>(),
            c.at("detail").get<std::string>(),
        });
    return r;
}

inline nlohmann::json graph_list_json(const GraphList& g) {
    nlohmann::json graphs = nlohmann::json::array();
    for (const auto& e : g.graphs)
        graphs.push_back(nlohmann::json{
            {"edges", e.edges},
            {"vertices", e.vertices},
            {"automorphisms", int_str(e.automorphisms)},
        });
    return nlohmann::json{{"degree", g.degree}, {"graphs", graphs}};
}

inline GraphList graph_list_from_json(const nlohmann::json& j) {
    GraphList g;
    g.degree = j.at("degree").get<unsigned>();
    for (const auto& e : j.at("graphs"))
        g.graphs.push_back(GraphListEntry{
            e.at("edges").get<std::string>(),
            e.at("vertices").get<unsigned>(),
            Int(e.at("automorphisms").get<std::string>()),
        });
    return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

namespace detail {

/// One moment term as (negative?, body): the monomial joins the coefficient's
/// numerator so a fractional coefficient renders as a single fraction,
/// e.g. coefficient -1/(n^2-n) on p_2 -> {true, "\frac{p_2}{n(n-1)}"}.
inline std::pair<bool, std::string> moment_term_latex(const MomentPartition& mp,
                                                      const RatFuncN& c) {
    NPoly num = c.num();
    const bool negative = num.leading() < 0;
    if (negative) num = -num;
    std::string numerator;
    if (num.is_one()) {
        numerator = mp.empty() ? "1" : mp.latex();
    } else if (num.degree() == 0) {
        numerator = int_str(num.coeff(0)) + (mp.empty() ? "" : mp.latex());
    } else {
        numerator = "(" + num.latex() + ")" + (mp.empty() ? "" : mp.latex());
    }
    if (c.den_is_one()) return {negative, numerator};
    return {negative, "\\frac{" + numerator + "}{" + npoly_product_latex(c.den()) + "}"};
}

inline std::string moment_latex(const MomentPolynomial& f) {
    if (f.terms().empty()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        auto [negative, body] = moment_term_latex(it->first, it->second);
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += body;
    }
    return out;
}

inline std::string t_power_latex(std::size_t i) {
    if (i == 0) return "";
    if (i == 1) return "t";
    if (i < 10) return "t^" + std::to_string(i);
    return "t^{" + std::to_string(i) + "}";
}

inline std::string terminal_latex(const TerminalPolynomial& tp) {
    std::string out = t_power_latex(tp.order);
    for (std::size_t i = tp.order; i-- > 0;) {
        const MomentPolynomial c = tp.poly.coeff(i);
        if (is_zero(c)) continue;
        if (c.terms().size() == 1) {
            const auto& [mp, coeff] = *c.terms().begin();
            auto [negative, body] = moment_term_latex(mp, coeff);
            out += (negative ? "-" : "+") + body + t_power_latex(i);
        } else {
            out += "+\\left(" + moment_latex(c) + "\\right)" + t_power_latex(i);
        }
    }
    return out;
}

inline std::string certificate_latex(const Certificate& c) {
    std::ostringstream out;
    out << "% target " << c.target << ", "
        << (c.n_value ? "n = " + std::to_string(*c.n_value)
                      : "uniform for integers n \\ge " + std::to_string(c.floor_n))
        << "\n\\begin{aligned}\n";
    for (const auto& e : c.entries)
        out << "w\\left[\\texttt{" << e.graph << "}\\right]"
            << (e.unordered ? "" : "^{\\mathrm{ord}}") << " &= " << e.weight.latex()
            << "\\\\\n";
    out << "\\end{aligned}\n";
    return out.str();
}

inline std::string suite_latex(const SuiteReport& r) {
    std::ostringstream out;
    out << "% suite " << r.suite << ": " << (r.passed() ? "pass" : "FAIL")
        << "\n\\begin{itemize}\n";
    for (const auto& c : r.checks) {
        out << "\\item[" << (c.pass ? "\\checkmark" : "\\times") << "] \\texttt{" << c.name
            << "}: $" << c.identity << "$";
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "\\end{itemize}\n";
    return out.str();
}

inline std::string graph_list_latex(const GraphList& g) {
    std::ostringstream out;
    out << "% square multigraphs of degree " << g.degree << "\n\\begin{itemize}\n";
    for (const auto& e : g.graphs)
        out << "\\item \\texttt{" << e.edges << "} ($" << e.vertices
            << "$ vertices, $|\\mathrm{Aut}| = " << int_str(e.automorphisms) << "$)\n";
    out << "\\end{itemize}\n";
    return out.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Plain text
// ---------------------------------------------------------------------------

namespace detail {

inline std::string terminal_text(const TerminalPolynomial& tp) {
    std::string out = "t^" + std::to_string(tp.order);
    for (std::size_t i = tp.order; i-- > 0;) {
        const MomentPolynomial c = tp.poly.coeff(i);
        if (is_zero(c)) continue;
        out += " + (" + c.str() + ")";
        if (i >= 1) {
            out += "*t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string suite_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.identity;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    return out.str();
}

inline std::string graph_list_text(const GraphList& g) {
    std::ostringstream out;
    out << "degree " << g.degree << ": " << g.graphs.size() << " square multigraphs\n";
    for (const auto& e : g.graphs)
        out << "  " << e.edges << "  vertices=" << e.vertices
            << "  aut=" << int_str(e.automorphisms) << "\n";
    return out.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Document-level emit / parse
// ---------------------------------------------------------------------------

inline std::string emit(const ResultDocument& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            nlohmann::json payload = std::visit(
                [](const auto& p) -> nlohmann::json {
                    using T = std::decay_t<decltype(p)>;
                    if constexpr (std::is_same_v<T, MomentPolynomial>)
                        return detail::moment_json(p);
                    else if constexpr (std::is_same_v<T, TerminalPolynomial>)
                        return detail::terminal_json(p);
                    else if constexpr (std::is_same_v<T, Certificate>)
                        return detail::certificate_json(p);
                    else if constexpr (std::is_same_v<T, SuiteReport>)
                        return detail::suite_json(p);
                    else
                        return detail::graph_list_json(p);
                },
                doc.payload);
            nlohmann::json j{
                {"schema_version", kSchemaVersion},
                {"kind", document_kind(doc)},
                {"payload", std::move(payload)},
            };
            return j.dump(2) + "\n";
        }
        case OutputFormat::latex:
            return std::visit(
                [](const auto& p) -> std::string {
                    using T = std::decay_t<decltype(p)>;
                    if constexpr (std::is_same_v<T, MomentPolynomial>)
                        return detail::moment_latex(p) + "\n";
                    else if constexpr (std::is_same_v<T, TerminalPolynomial>)
                        return detail::terminal_latex(p) + "\n";
                    else if constexpr (std::is_same_v<T, Certificate>)
                        return detail::certificate_latex(p);
                    else if constexpr (std::is_same_v<T, SuiteReport>)
                        return detail::suite_latex(p);
                    else
                        return detail::graph_list_latex(p);
                },
                doc.payload);
        case OutputFormat::text:
            return std::visit(
                [](const auto& p) -> std::string {
                    using T = std::decay_t<decltype(p)>;
                    if constexpr (std::is_same_v<T, MomentPolynomial>)
                        return p.str() + "\n";
                    else if constexpr (std::is_same_v<T, TerminalPolynomial>)
                        return detail::terminal_text(p) + "\n";
                    else if constexpr (std::is_same_v<T, Certificate>)
                        return certificate_to_text(p);
                    else if constexpr (std::is_same_v<T, SuiteReport>)
                        return detail::suite_text(p);
                    else
                        return detail::graph_list_text(p);
                },
                doc.payload);
    }
    throw std::invalid_argument("unsupported format");
}

/// Inverse of emit(..., OutputFormat::json).  Throws parse_error on any
/// malformed or version-mismatched document.
inline ResultDocument parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON document: ") + e.what());
    }
    try {
        if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
            throw parse_error("unsupported schema version");
        const auto kind = j.at("kind").get<std::string>();
        const nlohmann::json& p = j.at("payload");
        if (kind == "moment-polynomial") return {detail::moment_from_json(p)};
        if (kind == "terminal-polynomial") return {detail::terminal_from_json(p)};
        if (kind == "certificate") return {detail::certificate_from_json(p)};
        if (kind == "suite-report") return {detail::suite_from_json(p)};
        if (kind == "graph-list") return {detail::graph_list_from_json(p)};
        throw parse_error("unknown document kind: " + kind);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed document payload: ") + e.what());
    }
}

/// Convenience: the multigraphs of one degree as a serializable list.
inline GraphList graph_list_for_degree(unsigned degree, unsigned degree_cap = 12) {
    GraphList out;
    out.degree = degree;
    for (const auto& g : enumerate_square_graphs(degree, degree_cap))
        out.graphs.push_back(GraphListEntry{g.str(), g.vertex_count(), automorphism_count(g)});
    return out;
}

}  // namespace termdisc
