// Exact linear programming over rationals, certificate construction and
// re-verification, cone membership at fixed n, and the uniform-in-n search.

#include <termdisc/termdisc.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace termdisc;

namespace {

std::vector<Rational> rvec(std::initializer_list<long long> xs) {
    std::vector<Rational> v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("phase-1 simplex on small systems") {
    // x*(1,0) + y*(1,1) = (3,2) has the nonnegative solution (1,2).
    {
        const auto lp = solve_nonnegative_combination({rvec({1, 0}), rvec({1, 1})},
                                                      rvec({3, 2}));
        REQUIRE(lp.feasible);
        REQUIRE(lp.solution.size() == 2);
        CHECK(lp.solution[0] * Rational(1) + lp.solution[1] * Rational(1) == Rational(3));
        CHECK(lp.solution[1] == Rational(2));
        for (const auto& x : lp.solution) CHECK(x.sign() >= 0);
    }
    // (1,0) and (0,1) cannot reach a target with a negative coordinate.
    {
        const auto lp = solve_nonnegative_combination({rvec({1, 0}), rvec({0, 1})},
                                                      rvec({1, -1}));
        REQUIRE_FALSE(lp.feasible);
        // The separating functional certifies infeasibility: y . target > 0
        // while y . column <= 0 for every column.
        REQUIRE(lp.separating.size() == 2);
        const Rational dot =
            lp.separating[0] * Rational(1) + lp.separating[1] * Rational(-1);
        CHECK(dot.sign() > 0);
        CHECK((lp.separating[0] * Rational(1)).sign() <= 0);  // y . (1,0)
        CHECK((lp.separating[1] * Rational(1)).sign() <= 0);  // y . (0,1)
    }
    // Zero target is trivially feasible with the zero combination.
    {
        const auto lp = solve_nonnegative_combination({rvec({2, 3})}, rvec({0, 0}));
        REQUIRE(lp.feasible);
        CHECK(lp.solution[0] == Rational(0));
    }
    // Exact fractions: 1/3 * (3,6) = (1,2).
    {
        const auto lp = solve_nonnegative_combination({rvec({3, 6})}, rvec({1, 2}));
        REQUIRE(lp.feasible);
        CHECK(lp.solution[0] == Rational(1, 3));
    }
    CHECK_THROWS_AS(solve_nonnegative_combination({rvec({1})}, rvec({1, 2})),
                    std::invalid_argument);
}

TEST_CASE("unique combination solver distinguishes dependence") {
    // Independent columns with an exact solution.
    const auto sol = detail::solve_unique_combination(
        {rvec({1, 0, 1}), rvec({0, 2, 1})}, rvec({3, 4, 5}));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(3));
    CHECK((*sol)[1] == Rational(2));

    // Inconsistent system.
    CHECK_FALSE(detail::solve_unique_combination({rvec({1, 0})}, rvec({1, 1})).has_value());
    // Dependent columns (no unique answer).
    CHECK_FALSE(detail::solve_unique_combination({rvec({1, 1}), rvec({2, 2})}, rvec({3, 3}))
                    .has_value());
}

TEST_CASE("polytope vertex enumeration and barycenter") {
    // {x >= 0 : x0 + x1 = 1} in one equation: vertices (1,0) and (0,1),
    // barycenter (1/2, 1/2).
    const std::vector<std::vector<Rational>> cols{rvec({1}), rvec({1})};
    const auto verts = detail::polytope_vertices(cols, rvec({1}));
    REQUIRE(verts.size() == 2);
    const auto bary = detail::vertex_barycenter(verts);
    CHECK(bary == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    CHECK(detail::column_rank(cols, 1) == 1);
    CHECK(detail::column_rank({rvec({1, 2}), rvec({2, 4}), rvec({0, 1})}, 2) == 2);
}

TEST_CASE("weight nonnegativity over integer tails") {
    const NPoly n = NPoly::var();
    CHECK(nonnegative_for_integers_from(RatFuncN(NPoly(1), n * (n - NPoly(2))), 3));
    CHECK_FALSE(nonnegative_for_integers_from(RatFuncN(NPoly(1), n - NPoly(10)), 3));
    // (n-10)/(n-2) is negative between the roots, nonnegative from 10 on.
    const RatFuncN f(n - NPoly(10), n - NPoly(2));
    CHECK_FALSE(nonnegative_for_integers_from(f, 3));
    CHECK(nonnegative_for_integers_from(f, 10));
    CHECK(nonnegative_for_integers_from(RatFuncN(0), 3));
}

TEST_CASE("ordered expansions of the four reference shapes are dependent") {
    // 2(n-3) T - 6 P + 3 Q = 0 identically, where T, P, Q are the ordered
    // distinct-index sums of the doubled triangle, the doubled path, and the
    // quadrupled-plus-doubled edge.  (This is why the weight table is an
    // interior point, not a vertex, of the solution set.)
    const NPoly n = NPoly::var();
    const MomentPolynomial T =
        ordered_graph_sum(parse_graph_spec("1-2:2,2-3:2,3-1:2"), true);
    const MomentPolynomial P =
        ordered_graph_sum(parse_graph_spec("1-2:2,2-3:2,3-4:2"), true);
    const MomentPolynomial Q = ordered_graph_sum(parse_graph_spec("1-2:4,3-4:2"), true);
    const MomentPolynomial zero = RatFuncN(Int(2) * (n - NPoly(3))) * T -
                                  RatFuncN(NPoly(6)) * P + RatFuncN(NPoly(3)) * Q;
    CHECK(zero.is_zero());
}

TEST_CASE("cubic certificates recombine exactly") {
    const CubicIdentityReport rep = verify_cubic_recombination();
    CHECK(rep.identity);
    CHECK(rep.cleared_identity);
    CHECK(rep.coefficient_sums_ok);
    CHECK(rep.all);

    // Numeric instances.
    for (long long n0 : {3, 5, 8}) {
        const Certificate c = cubic_certificate(n0);
        CHECK(c.n_value.has_value());
        const CertificateVerification v = verify_certificate(c);
        INFO("n = " << n0 << ": " << v.detail);
        CHECK(v.ok);
    }

    // The uniform table verifies symbolically for every integer n >= 3.
    const Certificate u = symbolic_cubic_certificate();
    CHECK_FALSE(u.n_value.has_value());
    CHECK(u.floor_n == 3);
    CHECK(verify_certificate(u).ok);

    // Tampering with a weight must break re-verification.
    Certificate bad = u;
    bad.entries[0].weight = bad.entries[0].weight * RatFuncN(2);
    CHECK_FALSE(verify_certificate(bad).ok);

    // Unknown target names fail verification instead of throwing.
    Certificate unknown = u;
    unknown.target = "no-such-target";
    CHECK_FALSE(verify_certificate(unknown).ok);
}

TEST_CASE("certificate text round-trips") {
    for (const Certificate& c : {symbolic_cubic_certificate(), cubic_certificate(5)}) {
        const std::string text = certificate_to_text(c);
        const Certificate back = parse_certificate_text(text);
        REQUIRE(back == c);
    }
    CHECK_THROWS_AS(parse_certificate_text("garbage"), parse_error);
}

TEST_CASE("cone membership at fixed n") {
    const ConeMembershipResult res = cone_membership("terminal-cubic", 6, 6);
    REQUIRE(res.feasible);
    CHECK(res.certificate.n_value == 6);
    CHECK(verify_certificate(res.certificate).ok);
    // Weights are nonnegative and the entries name enumerated generators.
    for (const auto& e : res.certificate.entries) {
        CHECK(e.weight.eval(6).sign() >= 0);
        CHECK_FALSE(e.unordered);
    }

    CHECK_THROWS_AS(cone_membership("nonsense", 6, 6), std::invalid_argument);
}

TEST_CASE("custom cone membership targets") {
    // p_2^3 is itself a square expansion up to positive scale, so it is in
    // the cone at any fixed n; the result must re-verify against the custom
    // target, whose name is not resolvable.
    MomentPolynomial target = MomentPolynomial::zero_in_mode(true);
    target.add_raw_term({2, 2, 2}, RatFuncN(1));
    const ConeMembershipResult res = cone_membership_poly(target, "custom", 5, 6);
    REQUIRE(res.feasible);
    CHECK(verify_certificate_against(res.certificate, target).ok);

    // -p_2^3 cannot be a nonnegative combination: every generator expansion
    // is a sum of squares, nonnegative on real data.
    const ConeMembershipResult neg =
        cone_membership_poly(RatFuncN(-1) * target, "custom", 5, 6);
    REQUIRE_FALSE(neg.feasible);
    CHECK_FALSE(neg.separating.empty());
}

TEST_CASE("uniform search recovers the reference weight table") {
    UniformSearchOptions opt;
    opt.r = 3;
    opt.samples = {3, 4, 5, 6, 7, 8};
    opt.generators = {"1-2:2,2-3:2,3-1:2", "1-2:2,2-3:2,3-4:2", "1-2:4,3-4:2",
                      "1-2:2,3-4:2,5-6:2"};
    const UniformSearchOutcome out = uniform_search(opt);
    INFO(out.failing_stage << ": " << out.detail);
    REQUIRE(out.success);
    REQUIRE(out.certificate.entries.size() == 4);
    CHECK(out.certificate.floor_n == 3);
    CHECK(verify_certificate(out.certificate).ok);

    const NPoly n = NPoly::var();
    const NPoly nn2 = n * (n - NPoly(2));
    std::map<std::string, RatFuncN> expect;
    expect[canonical_string(parse_graph_spec("1-2:2,2-3:2,3-1:2"))] =
        RatFuncN(NPoly(1), nn2);
    expect[canonical_string(parse_graph_spec("1-2:2,2-3:2,3-4:2"))] =
        RatFuncN(NPoly(1), Int(2) * nn2);
    expect[canonical_string(parse_graph_spec("1-2:4,3-4:2"))] =
        RatFuncN(NPoly(1), Int(4) * nn2);
    expect[canonical_string(parse_graph_spec("1-2:2,3-4:2,5-6:2"))] =
        RatFuncN(NPoly(1), Int(8) * n * (n - NPoly(2)) * (n - NPoly(2)));
    for (const auto& e : out.certificate.entries) {
        REQUIRE(expect.count(e.graph) == 1);
        INFO(e.graph);
        CHECK(e.weight == expect[e.graph]);
        CHECK_FALSE(e.unordered);
    }
}

TEST_CASE("uniform search reports structured failures") {
    // Too few samples to even fit a constant weight reliably.
    UniformSearchOptions opt;
    opt.r = 3;
    opt.samples = {3};
    const UniformSearchOutcome out = uniform_search(opt);
    CHECK_FALSE(out.success);
    CHECK_FALSE(out.failing_stage.empty());
    CHECK_FALSE(out.stage_log.empty());

    // Invalid sample below r.
    UniformSearchOptions bad;
    bad.r = 3;
    bad.samples = {2, 3, 4, 5, 6, 7};
    const UniformSearchOutcome out2 = uniform_search(bad);
    CHECK_FALSE(out2.success);
    CHECK(out2.failing_stage == "sample-validation");
}
