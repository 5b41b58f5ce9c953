#pragma once

// Verification suites.  Each suite checks one family of exact identities —
// Newton values, the closed quadratic/cubic/quartic/quintic discriminant
// formulas against independent resultant oracles, the degree-six graph
// expansions, the cubic recombination certificate, and the square
// polarization identity — and returns a SuiteReport.  Failures become report
// entries with details, never exceptions, and all randomness is seeded, so
// identical invocations produce identical reports.

#include <termdisc/certify.hpp>
#include <termdisc/emit.hpp>
#include <termdisc/graphs.hpp>
#include <termdisc/moments.hpp>
#include <termdisc/multipoly.hpp>
#include <termdisc/rational.hpp>
#include <termdisc/resultant.hpp>
#include <termdisc/upoly.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace termdisc {

/// Tunables for the randomized oracle comparisons.  Every suite draws its
/// root lists from a generator seeded here, so reports are reproducible.
struct VerifyOptions {
    unsigned lists_per_n = 3;        // random root lists per n in oracle checks
    unsigned brute_force_n_max = 7;  // largest n for brute-force index sums
    std::uint64_t seed = 20260819;
};

namespace detail {

inline std::vector<Rational> random_root_list(std::mt19937_64& rng, unsigned n) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    std::vector<Rational> roots;
    roots.reserve(n);
    for (unsigned i = 0; i < n; ++i) roots.emplace_back(num(rng), den(rng));
    return roots;
}

/// Discriminant of the (n-r)-th derivative of the monic polynomial with the
/// given n roots, via the Sylvester resultant — the independent oracle the
/// closed formulas are checked against.
inline Rational derivative_disc_oracle(const std::vector<Rational>& roots, unsigned r) {
    UPoly<Rational> f = UPoly<Rational>::expand_from_roots(roots);
    auto d = derivative_k(f, static_cast<unsigned>(roots.size()) - r);
    return discriminant(d.poly);
}

/// Full discriminant value predicted by a closed formula at one root list.
inline Rational closed_formula_value(const ClosedFormula& cf, const std::vector<Rational>& roots) {
    const long long n0 = static_cast<long long>(roots.size());
    return cf.prefactor.eval_at(n0) * moment_eval(cf.moment, roots, n0);
}

/// One oracle-vs-closed-formula check over a range of n with seeded random
/// root lists; returns a passing check or the first mismatch found.
inline SuiteCheck oracle_check(const std::string& name, const std::string& identity,
                               const ClosedFormula& cf, unsigned r, unsigned n_min,
                               unsigned n_max, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    for (unsigned n = n_min; n <= n_max; ++n)
        for (unsigned i = 0; i < opt.lists_per_n; ++i) {
            const auto roots = random_root_list(rng, n);
            const Rational lhs = closed_formula_value(cf, roots);
            const Rational rhs = derivative_disc_oracle(roots, r);
            if (!(lhs == rhs)) {
                std::ostringstream detail;
                detail << "mismatch at n = " << n << ", list " << i << ": closed " << lhs.str()
                       << ", oracle " << rhs.str();
                return {name, identity, false, detail.str()};
            }
        }
    return {name, identity, true, ""};
}

inline SuiteCheck equality_check(const std::string& name, const std::string& identity,
                                 bool equal, const std::string& on_mismatch) {
    return {name, identity, equal, equal ? "" : on_mismatch};
}

/// Runs body() and converts a thrown exception into a failing check, so a
/// suite never crashes the report.
template <class Body>
inline void guarded(SuiteReport& report, const std::string& name, const std::string& identity,
                    Body&& body) {
    try {
        report.checks.push_back(body());
    } catch (const std::exception& e) {
        report.checks.push_back(
            {name, identity, false, std::string("exception: ") + e.what()});
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual suites
// ---------------------------------------------------------------------------

/// Centered elementary symmetric values from Newton's recursion.
inline SuiteReport verify_newton_suite(const VerifyOptions& = {}) {
    SuiteReport report;
    report.suite = "newton";
    const MomentPolynomial p2 = MomentPolynomial::power_sum(2);
    const MomentPolynomial p3 = MomentPolynomial::power_sum(3);
    const MomentPolynomial p4 = MomentPolynomial::power_sum(4);
    const MomentPolynomial p5 = MomentPolynomial::power_sum(5);
    const auto half = RatFuncN(Rational(1, 2));

    detail::guarded(report, "e1", "e_1 = 0 (centered)", [&] {
        return detail::equality_check("e1", "e_1 = 0 (centered)",
                                      is_zero(newton_e_from_p(1)), "e_1 is not zero");
    });
    detail::guarded(report, "e2", "e_2 = -p_2/2", [&] {
        return detail::equality_check("e2", "e_2 = -p_2/2",
                                      newton_e_from_p(2) == -(half * p2), "e_2 differs");
    });
    detail::guarded(report, "e3", "e_3 = p_3/3", [&] {
        return detail::equality_check("e3", "e_3 = p_3/3",
                                      newton_e_from_p(3) == RatFuncN(Rational(1, 3)) * p3,
                                      "e_3 differs");
    });
    detail::guarded(report, "e4", "e_4 = p_2^2/8 - p_4/4", [&] {
        const MomentPolynomial expected =
            RatFuncN(Rational(1, 8)) * (p2 * p2) - RatFuncN(Rational(1, 4)) * p4;
        return detail::equality_check("e4", "e_4 = p_2^2/8 - p_4/4",
                                      newton_e_from_p(4) == expected, "e_4 differs");
    });
    detail::guarded(report, "e5", "e_5 = p_5/5 - p_2 p_3/6", [&] {
        const MomentPolynomial expected =
            RatFuncN(Rational(1, 5)) * p5 - RatFuncN(Rational(1, 6)) * (p2 * p3);
        return detail::equality_check("e5", "e_5 = p_5/5 - p_2 p_3/6",
                                      newton_e_from_p(5) == expected, "e_5 differs");
    });
    return report;
}

/// Closed quadratic discriminant formula against the resultant oracle.
inline SuiteReport verify_quadratic_suite(const VerifyOptions& opt = {}) {
    SuiteReport report;
    report.suite = "quadratic";
    const std::string identity =
        "disc of the (n-2)nd derivative = ((n-2)!)^2 * n(n-1) p_2";
    detail::guarded(report, "moment-part", identity, [&] {
        const MomentPolynomial expected =
            RatFuncN(NPoly::var() * NPoly({-1, 1})) * MomentPolynomial::power_sum(2);
        return detail::equality_check("moment-part", "moment part = n(n-1) p_2",
                                      closed_quadratic().moment == expected,
                                      "moment part differs");
    });
    detail::guarded(report, "oracle", identity, [&] {
        return detail::oracle_check("oracle", identity, closed_quadratic(), 2, 2, 8, opt);
    });
    return report;
}

/// Closed cubic discriminant formula against the resultant oracle, the
/// symbolic elimination, and the fixed instance with roots (0, 1, 2).
inline SuiteReport verify_cubic_suite(const VerifyOptions& opt = {}) {
    SuiteReport report;
    report.suite = "cubic";
    const std::string identity =
        "disc of the (n-3)rd derivative = n!((n-2)!)^3/12 * (p_2^3 - n(n-1)/(n-2)^2 p_3^2)";
    detail::guarded(report, "oracle", identity, [&] {
        return detail::oracle_check("oracle", identity, closed_cubic(), 3, 3, 8, opt);
    });
    detail::guarded(report, "symbolic-elimination",
                    "moment part = (n(n-1))^3/108 * disc(monic cubic)", [&] {
                        const NPoly nn1 = NPoly::var() * NPoly({-1, 1});
                        const RatFuncN scale(nn1 * nn1 * nn1, NPoly(108));
                        return detail::equality_check(
                            "symbolic-elimination",
                            "moment part = (n(n-1))^3/108 * disc(monic cubic)",
                            closed_cubic().moment == scale * terminal_disc(3),
                            "elimination result differs");
                    });
    detail::guarded(report, "instance-0-1-2", "roots (0,1,2), n = 3: disc = 4", [&] {
        const std::vector<Rational> roots{Rational(0), Rational(1), Rational(2)};
        const Rational oracle = detail::derivative_disc_oracle(roots, 3);
        const Rational closed = detail::closed_formula_value(closed_cubic(), roots);
        const bool ok = oracle == Rational(4) && closed == Rational(4);
        return detail::equality_check("instance-0-1-2", "roots (0,1,2), n = 3: disc = 4", ok,
                                      "got oracle " + oracle.str() + ", closed " +
                                          closed.str());
    });
    return report;
}

/// Closed quartic discriminant formula, the symbolic elimination, and the
/// odd-moment-free slice factorization.
inline SuiteReport verify_quartic_suite(const VerifyOptions& opt = {}) {
    SuiteReport report;
    report.suite = "quartic";
    const std::string identity =
        "disc of the (n-4)th derivative = (n!)^6/24^6 * disc(normalized quartic)";
    detail::guarded(report, "symbolic-elimination",
                    "six-term quartic expansion = Sylvester elimination", [&] {
                        return detail::equality_check(
                            "symbolic-elimination",
                            "six-term quartic expansion = Sylvester elimination",
                            closed_quartic().moment == terminal_disc(4),
                            "expansion differs from elimination");
                    });
    detail::guarded(report, "oracle", identity, [&] {
        return detail::oracle_check("oracle", identity, closed_quartic(), 4, 4, 8, opt);
    });
    detail::guarded(report, "odd-free-slice",
                    "p_3 = 0 slice: disc = 16 c0 (c2^2 - 4 c0)^2", [&] {
                        const TerminalPolynomial j4 = terminal_polynomial(4);
                        const MomentPolynomial alpha = j4.poly.coeff(2);
                        const MomentPolynomial gamma = j4.poly.coeff(0);
                        const MomentPolynomial rhs =
                            RatFuncN(16) * gamma *
                            pow(alpha * alpha - RatFuncN(4) * gamma, 2);
                        return detail::equality_check(
                            "odd-free-slice", "p_3 = 0 slice: disc = 16 c0 (c2^2 - 4 c0)^2",
                            terminal_disc(4).with_part_zeroed(3) == rhs,
                            "slice factorization differs");
                    });
    return report;
}

/// Quintic terminal polynomial: displayed coefficients and the scaled
/// resultant oracle.
inline SuiteReport verify_quintic_suite(const VerifyOptions& opt = {}) {
    SuiteReport report;
    report.suite = "quintic";
    detail::guarded(report, "displayed-coefficients",
                    "monic quintic: -10p_2/(n)_2 t^3 - 20p_3/(n)_3 t^2 + "
                    "(15p_2^2-30p_4)/(n)_4 t + (20p_2p_3-24p_5)/(n)_5",
                    [&] {
                        const TerminalPolynomial j5 = terminal_polynomial(5);
                        const MomentPolynomial p2 = MomentPolynomial::power_sum(2);
                        const MomentPolynomial p3 = MomentPolynomial::power_sum(3);
                        const MomentPolynomial p4 = MomentPolynomial::power_sum(4);
                        const MomentPolynomial p5 = MomentPolynomial::power_sum(5);
                        auto inv_fall = [](unsigned j) {
                            return RatFuncN(1) / RatFuncN(falling_factorial_poly(j));
                        };
                        const bool ok =
                            j5.order == 5 && j5.poly.coeff(5) == MomentPolynomial(1) &&
                            is_zero(j5.poly.coeff(4)) &&
                            j5.poly.coeff(3) == (RatFuncN(-10) * inv_fall(2)) * p2 &&
                            j5.poly.coeff(2) == (RatFuncN(-20) * inv_fall(3)) * p3 &&
                            j5.poly.coeff(1) ==
                                inv_fall(4) * (RatFuncN(15) * (p2 * p2) - RatFuncN(30) * p4) &&
                            j5.poly.coeff(0) ==
                                inv_fall(5) * (RatFuncN(20) * (p2 * p3) - RatFuncN(24) * p5);
                        return detail::equality_check(
                            "displayed-coefficients", "all five quintic coefficients", ok,
                            "a coefficient differs from the displayed value");
                    });
    detail::guarded(report, "oracle",
                    "(n!/5!)^8 * disc(monic quintic at sample moments) = resultant oracle",
                    [&] {
                        const MomentPolynomial d5 = terminal_disc(5);
                        std::mt19937_64 rng(opt.seed);
                        for (unsigned n = 5; n <= 8; ++n)
                            for (unsigned i = 0; i < opt.lists_per_n; ++i) {
                                const auto roots = detail::random_root_list(rng, n);
                                Rational scale =
                                    Rational(factorial(n)) / Rational(factorial(5));
                                const Rational lhs = pow(scale, 8) *
                                                     moment_eval(d5, roots,
                                                                 static_cast<long long>(n));
                                const Rational rhs =
                                    detail::derivative_disc_oracle(roots, 5);
                                if (!(lhs == rhs)) {
                                    std::ostringstream detail_s;
                                    detail_s << "mismatch at n = " << n << ", list " << i;
                                    return SuiteCheck{"oracle",
                                                      "(n!/5!)^8 * disc = resultant oracle",
                                                      false, detail_s.str()};
                                }
                            }
                        return SuiteCheck{"oracle",
                                          "(n!/5!)^8 * disc = resultant oracle", true, ""};
                    });
    return report;
}

/// The four degree-six square-graph expansions, symbolically and by
/// brute-force index sums on random data.
inline SuiteReport verify_degree_six_suite(const VerifyOptions& opt = {}) {
    SuiteReport report;
    report.suite = "degree-six-expansions";
    const DegreeSixReport expansions = verify_degree_six_expansions();
    for (const auto& chk : expansions.checks) {
        const std::string name = "expansion-" + chk.label;
        const std::string identity =
            "ordered index sum of " + chk.canonical + " matches its displayed expansion";
        report.checks.push_back(detail::equality_check(
            name, identity, chk.match, "symbolic expansion differs from the reference"));
    }
    detail::guarded(report, "brute-force", "expansions match direct index sums", [&] {
        std::mt19937_64 rng(opt.seed);
        for (const auto& ref : degree_six_reference_expansions()) {
            const Multigraph g = parse_graph_spec(ref.spec);
            for (unsigned n = 4; n <= opt.brute_force_n_max; ++n)
                for (unsigned i = 0; i < opt.lists_per_n; ++i) {
                    const auto roots = detail::random_root_list(rng, n);
                    const Rational direct =
                        evaluate_ordered_sum(g, roots) /
                        Rational(static_cast<long long>(ref.ordered_multiple));
                    const Rational symbolic =
                        moment_eval(ref.reference, roots, static_cast<long long>(n));
                    if (!(direct == symbolic))
                        return SuiteCheck{"brute-force",
                                          "expansions match direct index sums", false,
                                          ref.label + " differs at n = " + std::to_string(n)};
                }
        }
        return SuiteCheck{"brute-force", "expansions match direct index sums", true, ""};
    });
    return report;
}

/// The cubic recombination identity and its certificates.
inline SuiteReport verify_recombination_suite(const VerifyOptions& = {}) {
    SuiteReport report;
    report.suite = "cubic-recombination";
    detail::guarded(report, "identity",
                    "weighted graph sums recombine to p_2^3 - n(n-1)/(n-2)^2 p_3^2", [&] {
                        const CubicIdentityReport rep = verify_cubic_recombination();
                        std::string bad;
                        if (!rep.identity) bad += " identity";
                        if (!rep.cleared_identity) bad += " cleared-identity";
                        if (!rep.coefficient_sums_ok) bad += " coefficient-sums";
                        return detail::equality_check(
                            "identity",
                            "weighted graph sums recombine to p_2^3 - n(n-1)/(n-2)^2 p_3^2",
                            rep.all, "failing parts:" + bad);
                    });
    detail::guarded(report, "uniform-certificate",
                    "the uniform weight table verifies for all integers n >= 3", [&] {
                        const CertificateVerification v =
                            verify_certificate(symbolic_cubic_certificate());
                        return detail::equality_check(
                            "uniform-certificate",
                            "the uniform weight table verifies for all integers n >= 3", v.ok,
                            v.detail);
                    });
    detail::guarded(report, "numeric-instances",
                    "numeric certificates at n = 3, 5, 8 recombine exactly", [&] {
                        for (long long n0 : {3, 5, 8}) {
                            const CertificateVerification v =
                                verify_certificate(cubic_certificate(n0));
                            if (!v.ok)
                                return SuiteCheck{
                                    "numeric-instances",
                                    "numeric certificates at n = 3, 5, 8 recombine exactly",
                                    false, "n = " + std::to_string(n0) + ": " + v.detail};
                        }
                        return SuiteCheck{"numeric-instances",
                                          "numeric certificates at n = 3, 5, 8 recombine exactly",
                                          true, ""};
                    });
    detail::guarded(report, "weights-at-5",
                    "weights at n = 5 are 2/5, 1/30, 1/60, 1/360", [&] {
                        const Certificate c = cubic_certificate(5);
                        const std::vector<Rational> expected{
                            Rational(2, 5), Rational(1, 30), Rational(1, 60), Rational(1, 360)};
                        bool ok = c.entries.size() == expected.size();
                        for (std::size_t i = 0; ok && i < expected.size(); ++i)
                            ok = c.entries[i].weight == RatFuncN(expected[i]);
                        return detail::equality_check(
                            "weights-at-5", "weights at n = 5 are 2/5, 1/30, 1/60, 1/360", ok,
                            "a weight differs");
                    });
    return report;
}

/// The square polarization identity used to reduce mixed products.
inline SuiteReport verify_polarization_suite(const VerifyOptions& = {}) {
    SuiteReport report;
    report.suite = "polarization";
    detail::guarded(report, "identity",
                    "(x-y)(y-z) = ((x-z)^2 - (x-y)^2 - (y-z)^2)/2", [&] {
                        return detail::equality_check(
                            "identity", "(x-y)(y-z) = ((x-z)^2 - (x-y)^2 - (y-z)^2)/2",
                            verify_polarization_identity(), "polynomial identity differs");
                    });
    return report;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Runs one suite by its command-line name ("lemma9" and "theorem9" are the
/// surface tokens for the degree-six-expansion and cubic-recombination
/// suites); "all" concatenates every suite in a fixed order with prefixed
/// check names.  Throws std::invalid_argument for an unknown name.
inline SuiteReport run_verify_suite(const std::string& suite, const VerifyOptions& opt = {}) {
    if (suite == "newton") return verify_newton_suite(opt);
    if (suite == "quadratic") return verify_quadratic_suite(opt);
    if (suite == "cubic") return verify_cubic_suite(opt);
    if (suite == "quartic") return verify_quartic_suite(opt);
    if (suite == "quintic") return verify_quintic_suite(opt);
    if (suite == "lemma9") return verify_degree_six_suite(opt);
    if (suite == "theorem9") return verify_recombination_suite(opt);
    if (suite == "polarization") return verify_polarization_suite(opt);
    if (suite == "all") {
        SuiteReport all;
        all.suite = "all";
        const std::vector<std::string> order{"newton",  "quadratic", "cubic",
                                             "quartic", "quintic",   "lemma9",
                                             "theorem9", "polarization"};
        for (const auto& name : order) {
            SuiteReport sub = run_verify_suite(name, opt);
            for (auto& chk : sub.checks) {
                chk.name = sub.suite + "/" + chk.name;
                all.checks.push_back(std::move(chk));
            }
        }
        return all;
    }
    throw std::invalid_argument(
        "unknown suite: '" + suite +
        "' (expected newton, quadratic, cubic, quartic, quintic, lemma9, theorem9, "
        "polarization, or all)");
}

}  // namespace termdisc
