// Multigraphs with even edge multiplicities: parsing, canonical forms,
// automorphisms, enumeration by total degree, and the expansion of
// distinct-index graph sums into centered power sums.

#include <termdisc/termdisc.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace termdisc;

namespace {

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

}  // namespace

TEST_CASE("graph specs parse and reject malformed input with a position") {
    const Multigraph g = parse_graph_spec("1-2:2,2-3:2,3-1:2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.total_degree() == 6);

    // Odd multiplicities parse (general multigraphs); evenness is a property.
    CHECK_FALSE(parse_graph_spec("1-2:3").all_multiplicities_even());
    CHECK(g.all_multiplicities_even());

    CHECK_THROWS_AS(parse_graph_spec(""), parse_error);
    CHECK_THROWS_AS(parse_graph_spec("1-1:2"), parse_error);  // self-loop
    CHECK_THROWS_AS(parse_graph_spec("1-2"), parse_error);    // missing multiplicity
    CHECK_THROWS_AS(parse_graph_spec("1-2:2,,3-4:2"), parse_error);
    try {
        parse_graph_spec("1-2:2,xx");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position >= 6);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    // The same path written three ways.
    const std::string canon = canonical_string(parse_graph_spec("1-2:2,2-3:2"));
    CHECK(canonical_string(parse_graph_spec("3-2:2,1-3:2")) == canon);
    CHECK(canonical_string(parse_graph_spec("5-9:2,9-7:2")) == canon);
    // A different graph maps elsewhere.
    CHECK(canonical_string(parse_graph_spec("1-2:4")) != canon);

    std::mt19937_64 rng(20260819);
    // Random relabelings of a fixed graph all share one canonical string.
    const Multigraph base = parse_graph_spec("1-2:2,2-3:2,3-4:2,1-4:2,1-3:4");
    const std::string base_canon = canonical_string(base);
    std::vector<unsigned> perm{1, 2, 3, 4};
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::string spec;
        auto edge = [&](unsigned a, unsigned b, unsigned m) {
            spec += (spec.empty() ? "" : ",") + std::to_string(perm[a - 1]) + "-" +
                    std::to_string(perm[b - 1]) + ":" + std::to_string(m);
        };
        edge(1, 2, 2);
        edge(2, 3, 2);
        edge(3, 4, 2);
        edge(1, 4, 2);
        edge(1, 3, 4);
        REQUIRE(canonical_string(parse_graph_spec(spec)) == base_canon);
    }
}

TEST_CASE("automorphism counts of the reference shapes") {
    CHECK(automorphism_count(parse_graph_spec("1-2:2")) == 2);
    CHECK(automorphism_count(parse_graph_spec("1-2:2,2-3:2,3-1:2")) == 6);   // triangle
    CHECK(automorphism_count(parse_graph_spec("1-2:2,2-3:2")) == 2);         // path
    CHECK(automorphism_count(parse_graph_spec("1-2:4,3-4:2")) == 4);         // mixed pair
    CHECK(automorphism_count(parse_graph_spec("1-2:2,3-4:2,5-6:2")) == 48);  // 2^3 * 3!
    CHECK(automorphism_count(parse_graph_spec("1-2:2,2-3:2,3-4:2")) == 2);   // 3-path
    CHECK(automorphism_count(parse_graph_spec("1-2:6")) == 2);
}

TEST_CASE("square graph enumeration counts by degree") {
    CHECK(enumerate_square_graphs(2).size() == 1);
    CHECK(enumerate_square_graphs(4).size() == 3);
    CHECK(enumerate_square_graphs(6).size() == 8);
    CHECK(enumerate_square_graphs(8).size() == 23);
    CHECK(enumerate_square_graphs(10, 12).size() == 66);
    CHECK(enumerate_square_graphs(12, 12).size() == 212);
    CHECK_THROWS_AS(enumerate_square_graphs(14, 12), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_square_graphs(3, 12), std::invalid_argument);

    // Every enumerated graph is canonical, has only even multiplicities,
    // and the list is duplicate-free.
    const auto gs = enumerate_square_graphs(8);
    std::vector<std::string> keys;
    for (const auto& g : gs) {
        REQUIRE(canonical_string(g) == g.str());
        REQUIRE(g.total_degree() == 8);
        for (const auto& [i, j, mult] : g.edges()) REQUIRE(mult % 2 == 0);
        keys.push_back(g.str());
    }
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("distinct-index sums match brute force on random data") {
    std::mt19937_64 rng(20260819);
    const std::vector<std::string> specs{
        "1-2:2",                 // single doubled edge
        "1-2:4",                 // quadrupled edge
        "1-2:2,3-4:2",           // doubled matching
        "1-2:2,2-3:2",           // doubled path
        "1-2:2,2-3:2,3-1:2",     // doubled triangle
        "1-2:4,3-4:2",           // mixed pair
        "1-2:2,2-3:2,3-4:2",     // longer path
    };
    for (const auto& spec : specs) {
        const Multigraph g = parse_graph_spec(spec);
        const MomentPolynomial f = ordered_graph_sum(g, true);
        for (long long n = g.vertex_count(); n <= 6; ++n) {
            const auto roots = rand_roots(rng, static_cast<std::size_t>(n));
            REQUIRE(moment_eval(f, roots, n) == evaluate_ordered_sum(g, roots));
        }
    }
}

TEST_CASE("isomorphic graphs expand identically") {
    const MomentPolynomial a = ordered_graph_sum(parse_graph_spec("1-2:2,2-3:2"), true);
    const MomentPolynomial b = ordered_graph_sum(parse_graph_spec("7-4:2,4-9:2"), true);
    CHECK(a == b);
}

TEST_CASE("expansion of the doubled edge and the doubled triangle") {
    const NPoly n = NPoly::var();
    // Sum over ordered pairs of (x_i - x_j)^2 with centered data is 2 n p_2.
    const MomentPolynomial pair = ordered_graph_sum(parse_graph_spec("1-2:2"), true);
    MomentPolynomial expect = MomentPolynomial::zero_in_mode(true);
    expect.add_raw_term({2}, RatFuncN(Int(2) * n));
    CHECK(pair == expect);

    // The doubled triangle over ordered triples: every unordered triangle is
    // visited |Aut| = 6 times, giving 6 * (-p_2^3 - n p_3^2 + n p_2 p_4).
    const MomentPolynomial tri =
        ordered_graph_sum(parse_graph_spec("1-2:2,2-3:2,3-1:2"), true);
    MomentPolynomial t = MomentPolynomial::zero_in_mode(true);
    t.add_raw_term({2, 2, 2}, RatFuncN(NPoly(-6)));
    t.add_raw_term({3, 3}, RatFuncN(Int(-6) * n));
    t.add_raw_term({4, 2}, RatFuncN(Int(6) * n));
    CHECK(tri == t);
}

TEST_CASE("degree-six reference expansions verify symbolically") {
    const DegreeSixReport rep = verify_degree_six_expansions();
    CHECK(rep.all_match);
    CHECK(rep.checks.size() == 4);
    for (const auto& c : rep.checks) {
        INFO(c.label);
        CHECK(c.match);
    }
}

TEST_CASE("symmetrization factor and polarization identity") {
    const Multigraph tri = parse_graph_spec("1-2:2,2-3:2,3-1:2");
    CHECK(symmetrization_factor(tri, 5) == 2);   // (5-3)!
    CHECK(symmetrization_factor(tri, 3) == 1);
    CHECK_THROWS_AS(symmetrization_factor(tri, 2), std::invalid_argument);
    CHECK(verify_polarization_identity());
}

TEST_CASE("set partition machinery") {
    // Partition counts of {1..m}: Bell numbers 1, 2, 5, 15, 52.
    for (auto [m, bell] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 1}, {2, 2}, {3, 5}, {4, 15}, {5, 52}}) {
        unsigned count = 0;
        detail::for_each_set_partition(m, [&](const std::vector<unsigned>&) { ++count; });
        REQUIRE(count == bell);
    }
}
