// End-to-end acceptance gate.  Twelve independent criteria, each printed as
// exactly one pass/fail line with its measured runtime; a criterion also
// fails if it exceeds its time budget.  Exit code = number of failures.

#include <termdisc/termdisc.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace termdisc;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

int g_failures = 0;

void run(int index, const std::string& what, double budget_seconds,
         const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome oc;
    try {
        oc = body();
    } catch (const std::exception& e) {
        oc.pass = false;
        oc.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (oc.pass && secs > budget_seconds) {
        oc.pass = false;
        oc.note = "exceeded time budget";
    }
    if (!oc.pass) ++g_failures;
    std::ostringstream line;
    line << "criterion " << std::setw(2) << std::setfill('0') << index << " "
         << (oc.pass ? "pass" : "FAIL") << "  " << what << "  [" << std::fixed
         << std::setprecision(2) << secs << "s / " << std::setprecision(0) << budget_seconds
         << "s]";
    if (!oc.note.empty()) line << "  -- " << oc.note;
    std::cout << line.str() << std::endl;
}

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    return Rational(num(rng), den(rng));
}

std::vector<Rational> rand_roots(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> r(n);
    for (auto& x : r) x = rand_rational(rng);
    return r;
}

/// Closed formula against the discriminant of the (n-r)-th derivative
/// computed directly from random roots; empty string on success.
std::string oracle_sweep(const ClosedFormula& cf, unsigned r, long long n_min, long long n_max,
                         int lists_per_n, std::mt19937_64& rng) {
    for (long long n = n_min; n <= n_max; ++n) {
        for (int t = 0; t < lists_per_n; ++t) {
            const auto roots = rand_roots(rng, static_cast<std::size_t>(n));
            const UPoly<Rational> P = UPoly<Rational>::expand_from_roots(roots);
            const auto d = derivative_k(P, static_cast<unsigned>(n) - r);
            if (d.degenerate) return "degenerate derivative";
            const Rational oracle = discriminant(d.poly);
            const Rational closed =
                cf.prefactor.eval_at(n) * moment_eval(cf.moment, roots, n);
            if (!(closed == oracle))
                return "mismatch at n = " + std::to_string(n) + ": closed " + closed.str() +
                       ", oracle " + oracle.str();
        }
    }
    return "";
}

MomentPolynomial psum(unsigned r) { return MomentPolynomial::power_sum(r); }

}  // namespace

int main() {
    std::cout << "acceptance: exact discriminants of high-order derivatives in moment "
                 "coordinates\n";

    run(1, "quadratic closed formula vs resultant oracle, n = 2..8, 10 lists each", 1.0, [] {
        std::mt19937_64 rng(101);
        const std::string err = oracle_sweep(closed_quadratic(), 2, 2, 8, 10, rng);
        return Outcome{err.empty(), err};
    });

    run(2, "cubic closed formula vs oracle, n = 3..8, plus roots (0,1,2) giving 4", 1.0, [] {
        std::mt19937_64 rng(102);
        std::string err = oracle_sweep(closed_cubic(), 3, 3, 8, 10, rng);
        if (err.empty()) {
            const std::vector<Rational> roots{Rational(0), Rational(1), Rational(2)};
            const Rational oracle =
                discriminant(derivative_k(UPoly<Rational>::expand_from_roots(roots), 0).poly);
            const Rational closed = closed_cubic().prefactor.eval_at(3) *
                                    moment_eval(closed_cubic().moment, roots, 3);
            if (!(oracle == Rational(4) && closed == Rational(4)))
                err = "instance (0,1,2): oracle " + oracle.str() + ", closed " + closed.str();
        }
        return Outcome{err.empty(), err};
    });

    run(3, "quartic closed formula vs oracle, n = 4..8, and the odd-free slice", 5.0, [] {
        std::mt19937_64 rng(103);
        std::string err = oracle_sweep(closed_quartic(), 4, 4, 8, 10, rng);
        if (err.empty()) {
            const TerminalPolynomial j4 = terminal_polynomial(4);
            const MomentPolynomial alpha = j4.poly.coeff(2);
            const MomentPolynomial gamma = j4.poly.coeff(0);
            const MomentPolynomial rhs =
                RatFuncN(16) * gamma * pow(alpha * alpha - RatFuncN(4) * gamma, 2);
            if (!(terminal_disc(4).with_part_zeroed(3) == rhs))
                err = "slice factorization differs";
        }
        return Outcome{err.empty(), err};
    });

    run(4, "quintic coefficients symbolically and scaled discriminant vs oracle, n = 5..8",
        30.0, [] {
            const TerminalPolynomial j5 = terminal_polynomial(5);
            auto inv_fall = [](unsigned j) {
                return RatFuncN(1) / RatFuncN(falling_factorial_poly(j));
            };
            const bool coeffs_ok =
                j5.poly.coeff(5) == MomentPolynomial(1) && is_zero(j5.poly.coeff(4)) &&
                j5.poly.coeff(3) == (RatFuncN(-10) * inv_fall(2)) * psum(2) &&
                j5.poly.coeff(2) == (RatFuncN(-20) * inv_fall(3)) * psum(3) &&
                j5.poly.coeff(1) ==
                    inv_fall(4) * (RatFuncN(15) * (psum(2) * psum(2)) - RatFuncN(30) * psum(4)) &&
                j5.poly.coeff(0) ==
                    inv_fall(5) * (RatFuncN(20) * (psum(2) * psum(3)) - RatFuncN(24) * psum(5));
            if (!coeffs_ok) return Outcome{false, "a displayed coefficient differs"};

            const MomentPolynomial d5 = terminal_disc(5);
            std::mt19937_64 rng(104);
            for (long long n = 5; n <= 8; ++n) {
                for (int t = 0; t < 5; ++t) {
                    const auto roots = rand_roots(rng, static_cast<std::size_t>(n));
                    const UPoly<Rational> P = UPoly<Rational>::expand_from_roots(roots);
                    const Rational oracle =
                        discriminant(derivative_k(P, static_cast<unsigned>(n) - 5).poly);
                    const Rational scale = pow(
                        Rational(factorial(static_cast<unsigned>(n))) / Rational(factorial(5)),
                        8);
                    if (!(scale * moment_eval(d5, roots, n) == oracle))
                        return Outcome{false, "scaled quintic discriminant mismatch at n = " +
                                                  std::to_string(n)};
                }
            }
            return Outcome{true, ""};
        });

    run(5, "Newton recursion: centered e_2..e_5 match the displayed values", 1.0, [] {
        const bool ok =
            newton_e_from_p(2) == RatFuncN(Rational(-1, 2)) * psum(2) &&
            newton_e_from_p(3) == RatFuncN(Rational(1, 3)) * psum(3) &&
            newton_e_from_p(4) == RatFuncN(Rational(1, 8)) * (psum(2) * psum(2)) -
                                      RatFuncN(Rational(1, 4)) * psum(4) &&
            newton_e_from_p(5) == RatFuncN(Rational(1, 5)) * psum(5) -
                                      RatFuncN(Rational(1, 6)) * (psum(2) * psum(3));
        return Outcome{ok, ok ? "" : "an elementary symmetric value differs"};
    });

    run(6, "four degree-six expansions: displayed forms and brute force, n = 4..7", 10.0, [] {
        const DegreeSixReport rep = verify_degree_six_expansions();
        if (!rep.all_match) {
            for (const auto& c : rep.checks)
                if (!c.match) return Outcome{false, c.label + " differs from displayed form"};
        }
        std::mt19937_64 rng(106);
        for (const auto& ref : degree_six_reference_expansions()) {
            const Multigraph g = parse_graph_spec(ref.spec);
            for (long long n = 4; n <= 7; ++n) {
                for (int t = 0; t < 2; ++t) {
                    const auto roots = rand_roots(rng, static_cast<std::size_t>(n));
                    const Rational brute = evaluate_ordered_sum(g, roots);
                    const Rational via =
                        Rational(static_cast<long long>(ref.ordered_multiple)) *
                        moment_eval(ref.reference, roots, n);
                    if (!(brute == via))
                        return Outcome{false, ref.label + " brute-force mismatch at n = " +
                                                  std::to_string(n)};
                }
            }
        }
        return Outcome{true, ""};
    });

    run(7, "cubic recombination identity, cleared by 8n(n-2)^2, with coefficient sums", 1.0,
        [] {
            const CubicIdentityReport rep = verify_cubic_recombination();
            if (!rep.identity) return Outcome{false, "identity fails"};
            if (!rep.cleared_identity) return Outcome{false, "cleared identity fails"};
            const RatFuncN expected_p3(NPoly{0, 1, -1}, NPoly{4, -4, 1});
            if (!(rep.sum_p2_cubed == RatFuncN(1)))
                return Outcome{false, "p_2^3 coefficient sum is " + rep.sum_p2_cubed.str()};
            if (!(rep.sum_p3_squared == expected_p3))
                return Outcome{false, "p_3^2 coefficient sum is " + rep.sum_p3_squared.str()};
            if (!rep.sum_p4_p2.is_zero() || !rep.sum_p6.is_zero())
                return Outcome{false, "mixed coefficient sums are nonzero"};
            return Outcome{rep.all, rep.all ? "" : "report flags disagree"};
        });

    run(8, "numeric certificates at n = 3, 5, 8; weights at 5 are 2/5, 1/30, 1/60, 1/360",
        1.0, [] {
            for (long long n0 : {3, 5, 8}) {
                const Certificate c = cubic_certificate(n0);
                const CertificateVerification v = verify_certificate(c);
                if (!v.ok)
                    return Outcome{false,
                                   "n = " + std::to_string(n0) + " failed: " + v.detail};
            }
            const Certificate c5 = cubic_certificate(5);
            const std::vector<Rational> expected{Rational(2, 5), Rational(1, 30),
                                                 Rational(1, 60), Rational(1, 360)};
            if (c5.entries.size() != expected.size())
                return Outcome{false, "unexpected number of generators at n = 5"};
            for (std::size_t i = 0; i < expected.size(); ++i)
                if (!(c5.entries[i].weight == RatFuncN(expected[i])))
                    return Outcome{false, "weight " + std::to_string(i) + " is " +
                                              c5.entries[i].weight.str()};
            return Outcome{true, ""};
        });

    run(9, "cone membership at n = 6 and uniform search over n = 3..8 recover the table",
        30.0, [] {
            const ConeMembershipResult res = cone_membership("terminal-cubic", 6, 6);
            if (!res.feasible) return Outcome{false, "membership at n = 6 infeasible"};
            if (!verify_certificate(res.certificate).ok)
                return Outcome{false, "membership certificate failed re-verification"};

            UniformSearchOptions opt;
            opt.r = 3;
            opt.samples = {3, 4, 5, 6, 7, 8};
            opt.generators = {"1-2:2,2-3:2,3-1:2", "1-2:2,2-3:2,3-4:2", "1-2:4,3-4:2",
                              "1-2:2,3-4:2,5-6:2"};
            const UniformSearchOutcome out = uniform_search(opt);
            if (!out.success)
                return Outcome{false, "search failed at " + out.failing_stage + ": " +
                                          out.detail};
            const NPoly n = NPoly::var();
            const NPoly nn2 = n * (n - NPoly(2));
            std::map<std::string, RatFuncN> table;
            table[canonical_string(parse_graph_spec("1-2:2,2-3:2,3-1:2"))] =
                RatFuncN(NPoly(1), nn2);
            table[canonical_string(parse_graph_spec("1-2:2,2-3:2,3-4:2"))] =
                RatFuncN(NPoly(1), Int(2) * nn2);
            table[canonical_string(parse_graph_spec("1-2:4,3-4:2"))] =
                RatFuncN(NPoly(1), Int(4) * nn2);
            table[canonical_string(parse_graph_spec("1-2:2,3-4:2,5-6:2"))] =
                RatFuncN(NPoly(1), Int(8) * nn2 * (n - NPoly(2)));
            if (out.certificate.entries.size() != table.size())
                return Outcome{false, "unexpected generator support"};
            for (const auto& e : out.certificate.entries) {
                const auto it = table.find(e.graph);
                if (it == table.end()) return Outcome{false, "unexpected generator " + e.graph};
                if (!(e.weight == it->second))
                    return Outcome{false, "weight for " + e.graph + " is " + e.weight.str() +
                                              ", expected " + it->second.str()};
            }
            if (!verify_certificate(out.certificate).ok)
                return Outcome{false, "uniform certificate failed re-verification"};
            return Outcome{true, ""};
        });

    run(10, "two-level configurations: equality iff multiplicity is 1 or n-1, n = 3..8", 1.0,
        [] {
            std::mt19937_64 rng(110);
            const MomentPolynomial cubic_moment = closed_cubic().moment;
            for (long long n = 3; n <= 8; ++n) {
                for (long long rmult = 1; rmult < n; ++rmult) {
                    Rational a = rand_rational(rng);
                    if (a.is_zero()) a = Rational(1, 3);
                    const TwoLevelMoments tl = two_level_config(n, rmult, a);
                    const Rational v = moment_eval(cubic_moment, tl.roots, n);
                    const bool extremal = (rmult == 1 || rmult == n - 1);
                    if (extremal && !v.is_zero())
                        return Outcome{false, "expected zero at n = " + std::to_string(n) +
                                                  ", multiplicity " + std::to_string(rmult)};
                    if (!extremal && !(v.sign() > 0))
                        return Outcome{false, "expected positive at n = " + std::to_string(n) +
                                                  ", multiplicity " + std::to_string(rmult)};
                }
            }
            return Outcome{true, ""};
        });

    run(11, "terminal discriminants are nonnegative: 100 root lists per (n, r), r <= 5",
        60.0, [] {
            std::mt19937_64 rng(111);
            for (unsigned r = 2; r <= 5; ++r) {
                const MomentPolynomial d = terminal_disc(r);
                for (long long n = r; n <= 8; ++n) {
                    for (int t = 0; t < 100; ++t) {
                        const auto roots = rand_roots(rng, static_cast<std::size_t>(n));
                        if (moment_eval(d, roots, n).sign() < 0)
                            return Outcome{false,
                                           "negative discriminant at n = " + std::to_string(n) +
                                               ", r = " + std::to_string(r)};
                    }
                }
            }
            return Outcome{true, ""};
        });

    run(12, "quartic uniform search returns a verified certificate or a structured report",
        600.0, [] {
            UniformSearchOptions opt;
            opt.r = 4;
            opt.samples = {4, 5, 6, 7, 8, 9, 10, 11};
            opt.degree_cap = 12;  // effective cap shrinks to samples - 2
            const UniformSearchOutcome out = uniform_search(opt);
            if (out.success) {
                const CertificateVerification v = verify_certificate(out.certificate);
                if (!v.ok)
                    return Outcome{false, "claimed certificate fails verification: " + v.detail};
                if (!(out.certificate.floor_n >= 4))
                    return Outcome{false, "certificate floor below the order"};
                return Outcome{true, "found a certificate, floor " +
                                         std::to_string(out.certificate.floor_n)};
            }
            if (out.failing_stage.empty())
                return Outcome{false, "inconclusive without a named failing stage"};
            if (out.stage_log.empty()) return Outcome{false, "no stage log recorded"};
            return Outcome{true, "inconclusive at stage: " + out.failing_stage};
        });

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criterion(s) failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
