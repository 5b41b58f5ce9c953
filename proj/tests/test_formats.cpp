// Serialization: versioned JSON documents with lossless round-trips, LaTeX
// rendering, plain-text rendering, and byte-level determinism.

#include <termdisc/termdisc.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <string>

using namespace termdisc;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("output format names parse") {
    CHECK(parse_output_format("json") == OutputFormat::json);
    CHECK(parse_output_format("latex") == OutputFormat::latex);
    CHECK(parse_output_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_output_format("yaml"), std::invalid_argument);
}

TEST_CASE("moment polynomial JSON round-trip") {
    const ResultDocument doc{terminal_disc(3)};
    const std::string json = emit(doc, OutputFormat::json);
    CHECK(contains(json, "\"schema_version\": 1"));
    CHECK(contains(json, "\"kind\": \"moment-polynomial\""));
    const ResultDocument back = parse_document(json);
    CHECK(back == doc);

    // The zero polynomial keeps its degree metadata and an empty term list.
    MomentPolynomial zero = MomentPolynomial::zero_in_mode(true);
    const std::string zjson = emit({zero}, OutputFormat::json);
    CHECK(contains(zjson, "\"terms\": []"));
    CHECK(parse_document(zjson) == ResultDocument{zero});
}

TEST_CASE("terminal polynomial documents in all formats") {
    const TerminalPolynomial J2 = terminal_polynomial(2);
    const ResultDocument doc{J2};

    const std::string json = emit(doc, OutputFormat::json);
    CHECK(contains(json, "\"kind\": \"terminal-polynomial\""));
    CHECK(contains(json, "\"variable\": \"t\""));
    CHECK(parse_document(json) == doc);

    const std::string latex = emit(doc, OutputFormat::latex);
    CHECK(contains(latex, "t^2"));
    CHECK(contains(latex, "\\frac{p_2}{n(n-1)}"));

    const std::string text = emit(doc, OutputFormat::text);
    CHECK(contains(text, "t^2"));

    // Higher order: the quintic emission round-trips too.
    const ResultDocument q{terminal_polynomial(5)};
    CHECK(parse_document(emit(q, OutputFormat::json)) == q);
}

TEST_CASE("certificate documents in all formats") {
    for (const Certificate& c : {symbolic_cubic_certificate(), cubic_certificate(5)}) {
        const ResultDocument doc{c};
        const std::string json = emit(doc, OutputFormat::json);
        CHECK(contains(json, "\"kind\": \"certificate\""));
        CHECK(parse_document(json) == doc);
        CHECK_FALSE(emit(doc, OutputFormat::latex).empty());
        CHECK_FALSE(emit(doc, OutputFormat::text).empty());
    }
    // The numeric instance at n = 5 shows the exact weights in text form.
    const std::string text = emit({cubic_certificate(5)}, OutputFormat::text);
    CHECK(contains(text, "2/5"));
    CHECK(contains(text, "1/30"));
    CHECK(contains(text, "1/60"));
    CHECK(contains(text, "1/360"));
}

TEST_CASE("suite report and graph list round-trip") {
    SuiteReport rep;
    rep.suite = "demo";
    rep.checks.push_back(SuiteCheck{"first", "1 = 1", true, ""});
    rep.checks.push_back(SuiteCheck{"second", "2 = 3", false, "off by one"});
    CHECK_FALSE(rep.passed());
    const ResultDocument doc{rep};
    const std::string json = emit(doc, OutputFormat::json);
    CHECK(contains(json, "\"kind\": \"suite-report\""));
    CHECK(contains(json, "\"passed\": false"));
    CHECK(parse_document(json) == doc);
    const std::string text = emit(doc, OutputFormat::text);
    CHECK(contains(text, "FAIL"));
    CHECK(contains(text, "off by one"));

    const GraphList gl = graph_list_for_degree(4);
    REQUIRE(gl.graphs.size() == 3);
    const ResultDocument gdoc{gl};
    const std::string gjson = emit(gdoc, OutputFormat::json);
    CHECK(contains(gjson, "\"kind\": \"graph-list\""));
    CHECK(parse_document(gjson) == gdoc);
    CHECK(contains(emit(gdoc, OutputFormat::text), "1-2:4"));
}

TEST_CASE("JSON emission is byte-deterministic") {
    const ResultDocument doc{terminal_polynomial(4)};
    CHECK(emit(doc, OutputFormat::json) == emit(doc, OutputFormat::json));
    const ResultDocument cert{symbolic_cubic_certificate()};
    CHECK(emit(cert, OutputFormat::json) == emit(cert, OutputFormat::json));
    // Two independently built equal values serialize identically.
    CHECK(emit({terminal_disc(3)}, OutputFormat::json) ==
          emit({terminal_disc(3)}, OutputFormat::json));
}

TEST_CASE("malformed documents are rejected with parse errors") {
    CHECK_THROWS_AS(parse_document("not json at all"), parse_error);
    CHECK_THROWS_AS(parse_document("{}"), parse_error);
    CHECK_THROWS_AS(parse_document(R"({"schema_version": 99, "kind": "certificate"})"),
                    parse_error);
    CHECK_THROWS_AS(
        parse_document(R"({"schema_version": 1, "kind": "no-such-kind", "payload": {}})"),
        parse_error);
    // Degree metadata inconsistent with the term list.
    CHECK_THROWS_AS(parse_document(R"({"schema_version": 1, "kind": "moment-polynomial",
        "payload": {"centered": true, "degree": 4, "terms":
        [{"parts": [2], "coefficient": "1"}]}})"),
                    parse_error);
}

TEST_CASE("certificate and graph latex rendering") {
    const std::string latex = emit({symbolic_cubic_certificate()}, OutputFormat::latex);
    CHECK(contains(latex, "\\texttt{"));
    CHECK(contains(latex, "\\frac{1}"));

    const std::string glatex = emit({graph_list_for_degree(4)}, OutputFormat::latex);
    CHECK(contains(glatex, "\\mathrm{Aut}"));
}
