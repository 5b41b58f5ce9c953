#pragma once

// Nonnegative-combination certificates: writing a target moment polynomial as
// a nonnegative combination of distinct-index square-graph expansions.
// Membership at a fixed n is decided by an exact rational-arithmetic LP
// (phase-1 simplex, Bland's rule, with a verified separating functional on
// infeasibility).  Uniform-in-n certificates are searched by sampling several
// n values, reconstructing each weight as a rational function of n, verifying
// the recombination identity symbolically, and bounding the range of n where
// every weight is nonnegative.

#include <termdisc/bigint.hpp>
#include <termdisc/errors.hpp>
#include <termdisc/graphs.hpp>
#include <termdisc/interpolate.hpp>
#include <termdisc/moments.hpp>
#include <termdisc/ratfunc.hpp>
#include <termdisc/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace termdisc {

// ---------------------------------------------------------------------------
// Coordinates on homogeneous moment polynomials
// ---------------------------------------------------------------------------

/// All moment monomials of total degree d with every part >= 2 (the monomials
/// that can appear in a centered expansion), in increasing monomial order,
/// e.g. d = 6: p2^3, p3^2, p4 p2, p6.
inline std::vector<MomentPartition> degree_basis(unsigned d) {
    std::vector<MomentPartition> basis;
    std::vector<unsigned> parts;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            basis.push_back(MomentPartition(parts));
            return;
        }
        for (unsigned part = std::min(remaining, max_part); part >= 2; --part) {
            if (remaining - part == 1) continue;  // cannot finish with a part of 1
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    if (d >= 2) rec(rec, d, d);
    std::sort(basis.begin(), basis.end());
    return basis;
}

/// Coefficient vector of a homogeneous centered moment polynomial on the
/// given basis, with the Q(n) coefficients evaluated at n = n0.
inline std::vector<Rational> to_vector(const MomentPolynomial& f, long long n0,
                                       const std::vector<MomentPartition>& basis) {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [mp, coeff] : f.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), mp);
        if (it == basis.end() || !(*it == mp))
            throw std::invalid_argument("moment monomial " + mp.str() +
                                        " is outside the degree basis");
        v[static_cast<std::size_t>(it - basis.begin())] = coeff.eval(n0);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Exact nonnegative-combination LP
// ---------------------------------------------------------------------------

/// Outcome of deciding whether target = sum_j x_j * column_j has a solution
/// with every x_j >= 0.  On infeasibility, `separating` holds an exactly
/// verified functional y with y . column_j <= 0 for all j and y . target > 0.
struct ExactLpResult {
    bool feasible = false;
    std::vector<Rational> solution;    // size = #columns when feasible
    std::vector<Rational> separating;  // size = #rows when infeasible
};

/// Phase-1 simplex with Bland's rule over exact rationals.
inline ExactLpResult solve_nonnegative_combination(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& target) {
    const std::size_t m = target.size();
    const std::size_t k = columns.size();
    for (const auto& col : columns)
        if (col.size() != m) throw std::invalid_argument("column length mismatch");

    // Tableau rows: [x columns | artificial identity | rhs], rhs >= 0.
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(k + m + 1, Rational(0)));
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        row_sign[i] = target[i].sign() < 0 ? -1 : 1;
        const Rational s(row_sign[i]);
        for (std::size_t j = 0; j < k; ++j) tab[i][j] = s * columns[j][i];
        tab[i][k + i] = Rational(1);
        tab[i][k + m] = s * target[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    // Reduced costs for minimizing the sum of artificial variables.
    auto reduced_cost = [&](std::size_t j) {
        Rational c = j >= k ? Rational(1) : Rational(0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= k) c -= tab[i][j];
        return c;
    };

    for (;;) {
        // Bland: smallest index with negative reduced cost enters.
        std::size_t enter = k + m;
        for (std::size_t j = 0; j < k + m; ++j) {
            if (reduced_cost(j).sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == k + m) break;  // optimal
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter].sign() <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            const Rational cur = tab[i][k + m] / tab[i][enter];
            const Rational best = tab[leave][k + m] / tab[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m)
            throw arithmetic_error("phase-1 objective unbounded");  // cannot happen
        const Rational pivot = tab[leave][enter];
        for (auto& cell : tab[leave]) cell = cell / pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter].is_zero()) continue;
            const Rational factor = tab[i][enter];
            for (std::size_t j = 0; j <= k + m; ++j)
                tab[i][j] -= factor * tab[leave][j];
        }
        basis[leave] = enter;
    }

    Rational objective(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= k) objective += tab[i][k + m];

    ExactLpResult result;
    if (objective.is_zero()) {
        result.feasible = true;
        result.solution.assign(k, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < k) result.solution[basis[i]] = tab[i][k + m];
        for (std::size_t i = 0; i < m; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < k; ++j) acc += result.solution[j] * columns[j][i];
            if (!(acc == target[i]))
                throw arithmetic_error("combination failed exact re-verification");
        }
    } else {
        result.feasible = false;
        result.separating.assign(m, Rational(0));
        // Dual values: y_i = 1 - reduced cost of artificial i, undoing the
        // row sign normalization.
        for (std::size_t i = 0; i < m; ++i)
            result.separating[i] = Rational(row_sign[i]) * (Rational(1) - reduced_cost(k + i));
        Rational ydotb(0);
        for (std::size_t i = 0; i < m; ++i) ydotb += result.separating[i] * target[i];
        if (!(ydotb.sign() > 0))
            throw arithmetic_error("separating functional failed verification");
        for (std::size_t j = 0; j < k; ++j) {
            Rational ydota(0);
            for (std::size_t i = 0; i < m; ++i) ydota += result.separating[i] * columns[j][i];
            if (ydota.sign() > 0)
                throw arithmetic_error("separating functional failed verification");
        }
    }
    return result;
}

namespace detail {

/// Unique exact solution of sum_j w_j col_j = b, or nullopt when the columns
/// are dependent or the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_unique_combination(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b) {
    const std::size_t m = b.size();
    const std::size_t k = columns.size();
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k] = b[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(k, m);
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t pr = row;
        while (pr < m && aug[pr][col].is_zero()) ++pr;
        if (pr == m) return std::nullopt;  // dependent columns
        std::swap(aug[pr], aug[row]);
        const Rational inv = aug[row][col];
        for (auto& cell : aug[row]) cell = cell / inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col].is_zero()) continue;
            const Rational f = aug[i][col];
            for (std::size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    if (row < k) return std::nullopt;
    for (std::size_t i = row; i < m; ++i)
        if (!aug[i][k].is_zero()) return std::nullopt;  // inconsistent
    std::vector<Rational> w(k, Rational(0));
    for (std::size_t col = 0; col < k; ++col) w[col] = aug[pivot_row[col]][k];
    return w;
}

/// Rank of the matrix whose columns are the given vectors of length m.
inline std::size_t column_rank(const std::vector<std::vector<Rational>>& columns,
                               std::size_t m) {
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(columns.size()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < columns.size(); ++j) a[i][j] = columns[j][i];
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns.size() && rank < m; ++col) {
        std::size_t pr = rank;
        while (pr < m && a[pr][col].is_zero()) ++pr;
        if (pr == m) continue;
        std::swap(a[pr], a[rank]);
        const Rational inv = a[rank][col];
        for (auto& cell : a[rank]) cell = cell / inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < columns.size(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// All vertices (basic feasible solutions) of {x >= 0 : sum x_j col_j = b},
/// deduplicated, by exhaustive enumeration of independent column subsets.
/// Exponential in the column count; callers guard the size.
inline std::vector<std::vector<Rational>> polytope_vertices(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b) {
    const std::size_t k = columns.size();
    const std::size_t r0 = column_rank(columns, b.size());
    std::set<std::vector<Rational>> seen;
    std::vector<std::vector<Rational>> verts;
    std::vector<std::size_t> subset;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        {
            std::vector<std::vector<Rational>> sub;
            for (std::size_t j : subset) sub.push_back(columns[j]);
            if (auto w = solve_unique_combination(sub, b)) {
                bool nonneg = true;
                for (const Rational& x : *w) nonneg = nonneg && x.sign() >= 0;
                if (nonneg) {
                    std::vector<Rational> full(k, Rational(0));
                    for (std::size_t t = 0; t < subset.size(); ++t) full[subset[t]] = (*w)[t];
                    if (seen.insert(full).second) verts.push_back(full);
                }
            }
        }
        if (subset.size() == r0) return;
        for (std::size_t j = start; j < k; ++j) {
            subset.push_back(j);
            self(self, j + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return verts;
}

/// Exact barycenter of a nonempty vertex list: the canonical relative-interior
/// point of the solution polytope, independent of column order.
inline std::vector<Rational> vertex_barycenter(const std::vector<std::vector<Rational>>& verts) {
    std::vector<Rational> c(verts.front().size(), Rational(0));
    for (const auto& v : verts)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += v[i];
    const Rational inv(1, static_cast<long long>(verts.size()));
    for (auto& x : c) x = x * inv;
    return c;
}

/// All real roots of p lie strictly below this integer (Cauchy bound).
inline long long integer_root_bound(const NPoly& p) {
    if (p.is_zero() || p.degree() == 0) return 0;
    const Int lead = int_abs(p.leading());
    Int mx = 0;
    for (unsigned i = 0; i < p.degree(); ++i) mx = std::max(mx, int_abs(p.coeff(i)));
    const Int q = (mx + lead - 1) / lead;
    if (q > Int(1'000'000'000)) throw arithmetic_error("root bound too large");
    return 1 + q.convert_to<long long>();
}

}  // namespace detail

/// True when f(n0) is defined and nonnegative for every integer n0 >= from:
/// checks every integer up to the root bounds of numerator and denominator,
/// beyond which the sign is the (constant) asymptotic sign.
inline bool nonnegative_for_integers_from(const RatFuncN& f, long long from) {
    if (f.is_zero()) return true;
    const long long bound =
        std::max(detail::integer_root_bound(f.num()), detail::integer_root_bound(f.den()));
    for (long long n0 = from; n0 <= std::max(from, bound); ++n0) {
        if (f.den().eval(Int(n0)) == 0) return false;
        if (f.eval(n0).sign() < 0) return false;
    }
    const int asym = int_sign(f.num().leading()) * int_sign(f.den().leading());
    return asym >= 0;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// One generator line: a graph (canonical edge string), the convention its
/// weight applies to (ordered distinct-index sum, or that sum divided by the
/// automorphism count), and the weight as a rational function of n (a
/// constant for numeric certificates).
struct CertificateEntry {
    std::string graph;
    bool unordered = false;
    RatFuncN weight;
};

/// A claimed nonnegative-combination certificate for a named target, either
/// at one numeric n (n_value set) or uniformly in n for all integers
/// n >= floor_n.
struct Certificate {
    std::string target;
    std::optional<long long> n_value;
    long long floor_n = 0;
    std::vector<CertificateEntry> entries;
};

inline bool operator==(const CertificateEntry& a, const CertificateEntry& b) {
    return a.graph == b.graph && a.unordered == b.unordered && a.weight == b.weight;
}

inline bool operator==(const Certificate& a, const Certificate& b) {
    return a.target == b.target && a.n_value == b.n_value && a.floor_n == b.floor_n &&
           a.entries == b.entries;
}

/// Targets a certificate can claim: the moment part of the discriminant of
/// the (n-r)-th derivative, normalized as in the closed formulas.
inline MomentPolynomial resolve_certificate_target(const std::string& name) {
    if (name == "terminal-quadratic") return closed_quadratic().moment;
    if (name == "terminal-cubic") return closed_cubic().moment;
    if (name == "terminal-quartic") return terminal_disc(4);
    if (name == "terminal-quintic") return terminal_disc(5);
    throw std::invalid_argument("unknown certificate target: " + name);
}

inline std::string certificate_target_for_order(unsigned r) {
    switch (r) {
        case 2: return "terminal-quadratic";
        case 3: return "terminal-cubic";
        case 4: return "terminal-quartic";
        case 5: return "terminal-quintic";
        default: throw std::invalid_argument("no certificate target for this order");
    }
}

/// Symbolic combination claimed by a certificate: sum of weight * expansion,
/// where unordered entries divide the ordered expansion by the automorphism
/// count of the graph.
inline MomentPolynomial certificate_combination(const Certificate& cert) {
    MomentPolynomial acc = MomentPolynomial::zero_in_mode(true);
    for (const auto& entry : cert.entries) {
        Multigraph g = parse_graph_spec(entry.graph);
        MomentPolynomial expansion = ordered_graph_sum(g, true);
        RatFuncN w = entry.weight;
        if (entry.unordered) w = w * RatFuncN(Rational(1, automorphism_count(g)));
        acc += w * expansion;
    }
    return acc;
}

struct CertificateVerification {
    bool ok = false;
    std::string detail;
};

/// Exact re-verification of a certificate against an explicitly given target
/// polynomial: the recombination identity (symbolically for uniform
/// certificates, at n_value otherwise) and the nonnegativity of every weight
/// on the claimed range.
inline CertificateVerification verify_certificate_against(const Certificate& cert,
                                                          const MomentPolynomial& target) {
    CertificateVerification v;
    MomentPolynomial combo = certificate_combination(cert);
    if (cert.n_value) {
        const long long n0 = *cert.n_value;
        std::vector<MomentPartition> basis = degree_basis(target.degree());
        if (!(to_vector(combo, n0, basis) == to_vector(target, n0, basis))) {
            v.detail = "recombination does not match the target at n = " + std::to_string(n0);
            return v;
        }
        for (const auto& entry : cert.entries) {
            Rational w;
            try {
                w = entry.weight.eval(n0);
            } catch (const pole_error&) {
                v.detail = "weight for " + entry.graph + " undefined at n = " + std::to_string(n0);
                return v;
            }
            if (w.sign() < 0) {
                v.detail = "negative weight for " + entry.graph;
                return v;
            }
        }
    } else {
        if (!(combo == target)) {
            v.detail = "recombination does not match the target identically in n";
            return v;
        }
        for (const auto& entry : cert.entries) {
            if (!nonnegative_for_integers_from(entry.weight, cert.floor_n)) {
                v.detail = "weight for " + entry.graph + " is negative or undefined for some n >= " +
                           std::to_string(cert.floor_n);
                return v;
            }
        }
    }
    v.ok = true;
    v.detail = "verified";
    return v;
}

/// Re-verification with the target looked up by its name; an unknown target
/// name is a failed verification, not an exception.
inline CertificateVerification verify_certificate(const Certificate& cert) {
    MomentPolynomial target;
    try {
        target = resolve_certificate_target(cert.target);
    } catch (const std::invalid_argument& e) {
        CertificateVerification v;
        v.detail = e.what();
        return v;
    }
    return verify_certificate_against(cert, target);
}

// --- text format -----------------------------------------------------------

/// Serializes a certificate:
///   target <name>
///   mode uniform | mode numeric <n>
///   floor <n>
///   generator <edges> <ordered|unordered> <weight>
inline std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream out;
    out << "target " << cert.target << "\n";
    if (cert.n_value)
        out << "mode numeric " << *cert.n_value << "\n";
    else
        out << "mode uniform\n";
    out << "floor " << cert.floor_n << "\n";
    for (const auto& entry : cert.entries)
        out << "generator " << entry.graph << " " << (entry.unordered ? "unordered" : "ordered")
            << " " << entry.weight.str() << "\n";
    return out.str();
}

/// Parses the text format above; parse_error positions are 1-based line
/// numbers.  Callers should re-verify with verify_certificate.
inline Certificate parse_certificate_text(const std::string& text) {
    Certificate cert;
    bool saw_target = false, saw_mode = false, saw_floor = false;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "target") {
            if (!(ls >> cert.target)) throw parse_error("missing target name", lineno);
            saw_target = true;
        } else if (key == "mode") {
            std::string mode;
            if (!(ls >> mode)) throw parse_error("missing mode", lineno);
            if (mode == "uniform") {
                cert.n_value.reset();
            } else if (mode == "numeric") {
                long long n0 = 0;
                if (!(ls >> n0)) throw parse_error("missing n value", lineno);
                cert.n_value = n0;
            } else {
                throw parse_error("mode must be 'uniform' or 'numeric'", lineno);
            }
            saw_mode = true;
        } else if (key == "floor") {
            if (!(ls >> cert.floor_n)) throw parse_error("missing floor value", lineno);
            saw_floor = true;
        } else if (key == "generator") {
            CertificateEntry entry;
            std::string convention, weight;
            if (!(ls >> entry.graph >> convention >> weight))
                throw parse_error("generator line needs: edges, convention, weight", lineno);
            if (convention == "unordered")
                entry.unordered = true;
            else if (convention == "ordered")
                entry.unordered = false;
            else
                throw parse_error("convention must be 'ordered' or 'unordered'", lineno);
            try {
                Multigraph g = parse_graph_spec(entry.graph);
                entry.graph = g.str();
                entry.weight = parse_ratfunc(weight);
            } catch (const parse_error& e) {
                throw parse_error(std::string(e.what()) + " (in generator line)", lineno);
            }
            cert.entries.push_back(std::move(entry));
        } else {
            throw parse_error("unknown key '" + key + "'", lineno);
        }
    }
    if (!saw_target) throw parse_error("certificate has no target line", lineno);
    if (!saw_mode) throw parse_error("certificate has no mode line", lineno);
    if (!saw_floor) throw parse_error("certificate has no floor line", lineno);
    return cert;
}

// ---------------------------------------------------------------------------
// The degree-six certificate and its identity
// ---------------------------------------------------------------------------

/// The uniform-in-n certificate for the cubic target on the four degree-six
/// reference generators, with weights
///   6/(n(n-2)), 1/(2n(n-2)), 1/(4n(n-2)), 1/(8n(n-2)^2)
/// on the doubled triangle (per-subset convention), doubled path, mixed pair,
/// and triple matching.  Valid for every integer n >= 3.
inline Certificate symbolic_cubic_certificate() {
    Certificate cert;
    cert.target = "terminal-cubic";
    cert.floor_n = 3;
    const NPoly n_n2 = NPoly{0, -2, 1};          // n(n-2)
    const NPoly n_n2sq = NPoly{0, 4, -4, 1};     // n(n-2)^2
    auto canon = [](const char* spec) { return canonical_string(parse_graph_spec(spec)); };
    cert.entries.push_back({canon("1-2:2,2-3:2,3-1:2"), true,
                            RatFuncN(NPoly(6), n_n2)});
    cert.entries.push_back({canon("1-2:2,2-3:2,3-4:2"), false,
                            RatFuncN(NPoly(1), Int(2) * n_n2)});
    cert.entries.push_back({canon("1-2:4,3-4:2"), false,
                            RatFuncN(NPoly(1), Int(4) * n_n2)});
    cert.entries.push_back({canon("1-2:2,3-4:2,5-6:2"), false,
                            RatFuncN(NPoly(1), Int(8) * n_n2sq)});
    return cert;
}

/// The same certificate with weights evaluated at one integer n0 >= 3.
inline Certificate cubic_certificate(long long n0) {
    if (n0 < 3) throw std::invalid_argument("the cubic certificate requires n >= 3");
    Certificate cert = symbolic_cubic_certificate();
    cert.n_value = n0;
    cert.floor_n = n0;
    for (auto& entry : cert.entries) entry.weight = RatFuncN(entry.weight.eval(n0));
    return cert;
}

/// Symbolic verification of the degree-six recombination identity: after
/// clearing the common denominator 8n(n-2)^2 both sides are polynomial in n,
/// and the combined coefficients on p2^3, p3^2, p4 p2, p6 are
/// 1, -n(n-1)/(n-2)^2, 0, 0.
struct CubicIdentityReport {
    bool identity = false;            // combination == target, identically in n
    bool cleared_identity = false;    // after clearing 8n(n-2)^2, with polynomial entries
    bool coefficient_sums_ok = false; // the four combined coefficients below
    RatFuncN sum_p2_cubed;
    RatFuncN sum_p3_squared;
    RatFuncN sum_p4_p2;
    RatFuncN sum_p6;
    bool all = false;
};

inline CubicIdentityReport verify_cubic_recombination() {
    CubicIdentityReport rep;
    const MomentPolynomial target = closed_cubic().moment;
    const MomentPolynomial combo = certificate_combination(symbolic_cubic_certificate());
    rep.identity = (combo == target);

    const RatFuncN clear(NPoly{0, 32, -32, 8});  // 8n(n-2)^2
    const MomentPolynomial lhs = clear * combo;
    const MomentPolynomial rhs = clear * target;
    bool poly_entries = true;
    for (const auto& [mp, c] : lhs.terms()) poly_entries = poly_entries && c.den_is_one();
    for (const auto& [mp, c] : rhs.terms()) poly_entries = poly_entries && c.den_is_one();
    rep.cleared_identity = poly_entries && (lhs == rhs);

    rep.sum_p2_cubed = combo.coeff(MomentPartition({2, 2, 2}));
    rep.sum_p3_squared = combo.coeff(MomentPartition({3, 3}));
    rep.sum_p4_p2 = combo.coeff(MomentPartition({4, 2}));
    rep.sum_p6 = combo.coeff(MomentPartition({6}));
    const RatFuncN expected_p3(NPoly{0, 1, -1}, NPoly{4, -4, 1});  // -n(n-1)/(n-2)^2
    rep.coefficient_sums_ok = rep.sum_p2_cubed == RatFuncN(1) &&
                              rep.sum_p3_squared == expected_p3 &&
                              rep.sum_p4_p2.is_zero() && rep.sum_p6.is_zero();
    rep.all = rep.identity && rep.cleared_identity && rep.coefficient_sums_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// Cone membership at a fixed n
// ---------------------------------------------------------------------------

struct ConeMembershipResult {
    bool feasible = false;
    Certificate certificate;              // populated when feasible
    std::vector<Rational> separating;     // populated when infeasible
    std::vector<MomentPartition> basis;   // coordinates used by `separating`
    std::vector<std::string> generators;  // canonical strings, column order
};

/// Decides membership of the named target, at integer n0, in the cone spanned
/// by the ordered expansions of all square graphs of the target's degree.
inline ConeMembershipResult cone_membership_poly(const MomentPolynomial& target,
                                                 const std::string& target_name, long long n0,
                                                 unsigned generator_cap = 12) {
    if (!target.is_homogeneous() || target.is_zero())
        throw std::invalid_argument("cone membership needs a homogeneous nonzero target");
    const unsigned d = target.degree();
    ConeMembershipResult result;
    result.basis = degree_basis(d);
    std::vector<Multigraph> gens = enumerate_square_graphs(d, generator_cap);
    std::vector<std::vector<Rational>> columns;
    for (const auto& g : gens) {
        result.generators.push_back(g.str());
        columns.push_back(to_vector(ordered_graph_sum(g, true), n0, result.basis));
    }
    const std::vector<Rational> b = to_vector(target, n0, result.basis);
    ExactLpResult lp = solve_nonnegative_combination(columns, b);
    result.feasible = lp.feasible;
    if (lp.feasible) {
        result.certificate.target = target_name;
        result.certificate.n_value = n0;
        result.certificate.floor_n = n0;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (!lp.solution[j].is_zero())
                result.certificate.entries.push_back(
                    {result.generators[j], false, RatFuncN(lp.solution[j])});
        CertificateVerification check = verify_certificate_against(result.certificate, target);
        if (!check.ok) throw arithmetic_error("certificate failed re-verification: " + check.detail);
    } else {
        result.separating = lp.separating;
    }
    return result;
}

inline ConeMembershipResult cone_membership(const std::string& target_name, long long n0,
                                            unsigned generator_cap = 12) {
    MomentPolynomial target = resolve_certificate_target(target_name);
    return cone_membership_poly(target, target_name, n0, generator_cap);
}

// ---------------------------------------------------------------------------
// Uniform-in-n certificate search
// ---------------------------------------------------------------------------

struct UniformSearchOptions {
    unsigned r = 3;                        // derivative order: target as for r
    std::vector<long long> samples;        // integer n values to sample
    std::optional<unsigned> degree_cap;    // max num+den degree of each weight
    std::vector<std::string> generators;   // optional restriction (graph specs)
};

struct UniformSearchOutcome {
    bool success = false;
    std::string failing_stage;  // empty on success; otherwise one of
                                // sample-validation, generator-enumeration,
                                // sample-feasibility, support-selection,
                                // weight-reconstruction, symbolic-verification,
                                // nonnegativity-floor
    std::string detail;
    Certificate certificate;    // populated on success
    unsigned effective_cap = 0;
    bool cap_reduced = false;
    std::vector<std::string> generator_keys;
    std::vector<std::string> stage_log;
};

/// Searches for a uniform-in-n certificate for the order-r target: solves the
/// membership LP at each sample, selects a common support, reconstructs each
/// weight as a rational function of n of total degree at most the cap,
/// verifies the recombination identity symbolically, and computes the
/// smallest floor from which every weight is nonnegative.  Failures stop at a
/// named stage with an explanatory detail instead of throwing.
inline UniformSearchOutcome uniform_search(const UniformSearchOptions& opt) {
    UniformSearchOutcome out;
    auto fail = [&](const std::string& stage, const std::string& detail) {
        out.failing_stage = stage;
        out.detail = detail;
        out.stage_log.push_back(stage + ": " + detail);
        return out;
    };

    // --- sample validation ---
    if (opt.r < 2 || opt.r > 5)
        return fail("sample-validation", "order must be between 2 and 5");
    std::vector<long long> samples = opt.samples;
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    if (samples.size() < 2)
        return fail("sample-validation", "need at least two distinct samples");
    if (samples.front() < static_cast<long long>(opt.r))
        return fail("sample-validation",
                    "samples must be at least the order r = " + std::to_string(opt.r));
    const unsigned requested_cap = opt.degree_cap.value_or(2 * opt.r * (opt.r - 1));
    out.effective_cap =
        std::min<unsigned>(requested_cap, static_cast<unsigned>(samples.size()) - 2);
    out.cap_reduced = out.effective_cap < requested_cap;
    {
        std::ostringstream log;
        log << "sample-validation: " << samples.size() << " samples, weight degree cap "
            << out.effective_cap;
        if (out.cap_reduced)
            log << " (reduced from " << requested_cap << "; more samples raise it)";
        out.stage_log.push_back(log.str());
    }

    // --- generators and their symbolic expansions ---
    const std::string target_name = certificate_target_for_order(opt.r);
    const MomentPolynomial target = resolve_certificate_target(target_name);
    const unsigned d = target.degree();
    std::vector<Multigraph> gens;
    try {
        if (opt.generators.empty()) {
            gens = enumerate_square_graphs(d);
        } else {
            std::set<std::string> seen;
            for (const auto& spec : opt.generators) {
                Multigraph g = canonical_form(parse_graph_spec(spec));
                if (g.total_degree() != d)
                    return fail("generator-enumeration",
                                "generator " + spec + " has total degree " +
                                    std::to_string(g.total_degree()) + ", target needs " +
                                    std::to_string(d));
                if (!g.all_multiplicities_even())
                    return fail("generator-enumeration",
                                "generator " + spec + " has an odd multiplicity");
                if (seen.insert(g.str()).second) gens.push_back(g);
            }
            std::sort(gens.begin(), gens.end(),
                      [](const Multigraph& a, const Multigraph& b) { return a.str() < b.str(); });
        }
    } catch (const std::exception& e) {
        return fail("generator-enumeration", e.what());
    }
    if (gens.empty()) return fail("generator-enumeration", "no generators");
    std::vector<MomentPolynomial> expansions;
    for (const auto& g : gens) {
        out.generator_keys.push_back(g.str());
        expansions.push_back(ordered_graph_sum(g, true));
    }
    out.stage_log.push_back("generator-enumeration: " + std::to_string(gens.size()) +
                            " generators of degree " + std::to_string(d));

    // --- per-sample LPs and support minimization ---
    const std::vector<MomentPartition> basis = degree_basis(d);
    const std::size_t k = gens.size();
    std::vector<std::vector<std::vector<Rational>>> sample_columns;  // per sample, per gen
    std::vector<std::vector<Rational>> sample_b;
    std::vector<std::set<std::size_t>> sample_support;
    for (long long n0 : samples) {
        std::vector<std::vector<Rational>> columns;
        for (const auto& e : expansions) columns.push_back(to_vector(e, n0, basis));
        std::vector<Rational> b = to_vector(target, n0, basis);
        ExactLpResult lp = solve_nonnegative_combination(columns, b);
        if (!lp.feasible)
            return fail("sample-feasibility",
                        "no nonnegative combination exists at n = " + std::to_string(n0) +
                            " (exact separating functional found)");
        // Greedy support minimization in canonical column order.
        std::set<std::size_t> support;
        for (std::size_t j = 0; j < k; ++j)
            if (!lp.solution[j].is_zero()) support.insert(j);
        for (std::size_t j = 0; j < k; ++j) {
            if (!support.count(j)) continue;
            std::set<std::size_t> trial = support;
            trial.erase(j);
            std::vector<std::vector<Rational>> sub;
            for (std::size_t t : trial) sub.push_back(columns[t]);
            if (solve_nonnegative_combination(sub, b).feasible) support = std::move(trial);
        }
        sample_columns.push_back(std::move(columns));
        sample_b.push_back(std::move(b));
        sample_support.push_back(std::move(support));
    }
    out.stage_log.push_back("sample-feasibility: all " + std::to_string(samples.size()) +
                            " sample memberships verified");

    // --- support selection ---
    std::vector<std::size_t> support;
    std::vector<std::vector<Rational>> weights_at_sample;  // per sample, per support index
    bool chosen = false;
    std::string strategy;

    // Strategy 1: canonical interior point.  When the expansions are linearly
    // dependent the nonnegative solutions form a polytope and any single
    // simplex vertex is an arbitrary extreme choice; the barycenter of the
    // full vertex set is exact, deterministic, and independent of generator
    // order.  It needs exhaustive vertex enumeration, so it only runs for
    // small generator sets; it requires the barycenter's support to agree
    // across samples.
    constexpr std::size_t kVertexEnumCap = 16;
    std::vector<std::vector<std::vector<Rational>>> sample_vertices;  // per sample
    if (k <= kVertexEnumCap) {
        for (std::size_t s = 0; s < samples.size(); ++s)
            sample_vertices.push_back(
                detail::polytope_vertices(sample_columns[s], sample_b[s]));
        std::vector<std::vector<Rational>> bary;
        bool ok = true;
        for (const auto& verts : sample_vertices) {
            ok = ok && !verts.empty();
            if (ok) bary.push_back(detail::vertex_barycenter(verts));
        }
        if (ok) {
            std::set<std::size_t> sup0;
            for (std::size_t j = 0; j < k; ++j)
                if (!bary.front()[j].is_zero()) sup0.insert(j);
            bool consistent = !sup0.empty();
            for (const auto& v : bary) {
                std::set<std::size_t> s2;
                for (std::size_t j = 0; j < k; ++j)
                    if (!v[j].is_zero()) s2.insert(j);
                consistent = consistent && s2 == sup0;
            }
            if (consistent) {
                support.assign(sup0.begin(), sup0.end());
                for (const auto& v : bary) {
                    std::vector<Rational> w;
                    for (std::size_t j : support) w.push_back(v[j]);
                    weights_at_sample.push_back(std::move(w));
                }
                chosen = true;
                strategy = "vertex barycenter";
            }
        }
    }

    // Strategy 2: a support that solves uniquely with nonnegative weights at
    // every sample, tried in order: each minimized per-sample support, their
    // intersection, then every vertex support at the smallest sample (when
    // enumerated).
    if (!chosen) {
        std::vector<std::set<std::size_t>> candidates;
        auto add_candidate = [&](const std::set<std::size_t>& cand) {
            if (!cand.empty() &&
                std::find(candidates.begin(), candidates.end(), cand) == candidates.end())
                candidates.push_back(cand);
        };
        for (const auto& s : sample_support) add_candidate(s);
        {
            std::set<std::size_t> inter = sample_support.front();
            for (const auto& s : sample_support) {
                std::set<std::size_t> next;
                std::set_intersection(inter.begin(), inter.end(), s.begin(), s.end(),
                                      std::inserter(next, next.begin()));
                inter = std::move(next);
            }
            add_candidate(inter);
        }
        if (!sample_vertices.empty())
            for (const auto& v : sample_vertices.front()) {
                std::set<std::size_t> sup;
                for (std::size_t j = 0; j < k; ++j)
                    if (!v[j].is_zero()) sup.insert(j);
                add_candidate(sup);
            }
        for (const auto& cand : candidates) {
            std::vector<std::size_t> cols(cand.begin(), cand.end());
            std::vector<std::vector<Rational>> per_sample;
            bool ok = true;
            for (std::size_t s = 0; s < samples.size() && ok; ++s) {
                std::vector<std::vector<Rational>> sub;
                for (std::size_t j : cols) sub.push_back(sample_columns[s][j]);
                auto w = detail::solve_unique_combination(sub, sample_b[s]);
                ok = w.has_value();
                if (ok)
                    for (const Rational& x : *w) ok = ok && x.sign() >= 0;
                if (ok) per_sample.push_back(std::move(*w));
            }
            if (ok) {
                support = std::move(cols);
                weights_at_sample = std::move(per_sample);
                chosen = true;
                strategy = "common support";
                break;
            }
        }
    }
    if (!chosen) {
        std::ostringstream detail;
        detail << "per-sample supports do not admit a common uniquely-solvable support; "
                  "supports seen:";
        for (std::size_t s = 0; s < samples.size(); ++s) {
            detail << " n=" << samples[s] << ":{";
            bool first = true;
            for (std::size_t j : sample_support[s]) {
                if (!first) detail << "; ";
                detail << "[" << out.generator_keys[j] << "]";
                first = false;
            }
            detail << "}";
        }
        return fail("support-selection", detail.str());
    }
    {
        std::ostringstream log;
        log << "support-selection (" << strategy << "): " << support.size() << " generators:";
        for (std::size_t j : support) log << " " << out.generator_keys[j];
        out.stage_log.push_back(log.str());
    }

    // --- weight reconstruction as rational functions of n ---
    std::vector<RatFuncN> weights;
    for (std::size_t t = 0; t < support.size(); ++t) {
        std::vector<std::pair<long long, Rational>> pts;
        for (std::size_t s = 0; s < samples.size(); ++s)
            pts.push_back({samples[s], weights_at_sample[s][t]});
        std::optional<RatFuncN> w;
        for (unsigned dtot = 0; dtot <= out.effective_cap && !w; ++dtot)
            for (unsigned dn = 0; dn <= dtot && !w; ++dn)
                w = ratfunc_reconstruct(pts, dn, dtot - dn);
        if (!w)
            return fail("weight-reconstruction",
                        "no rational function of total degree <= " +
                            std::to_string(out.effective_cap) + " fits the weight of " +
                            out.generator_keys[support[t]] +
                            " (a higher cap or more samples may help)");
        weights.push_back(std::move(*w));
    }
    out.stage_log.push_back("weight-reconstruction: all " + std::to_string(support.size()) +
                            " weights reconstructed");

    // --- symbolic verification of the recombination identity ---
    {
        MomentPolynomial combo = MomentPolynomial::zero_in_mode(true);
        for (std::size_t t = 0; t < support.size(); ++t)
            combo += weights[t] * expansions[support[t]];
        if (!(combo == target))
            return fail("symbolic-verification",
                        "reconstructed weights match every sample but not the identity in n "
                        "(more samples may pin the weights down)");
    }
    out.stage_log.push_back("symbolic-verification: recombination identity holds in n");

    // --- nonnegativity floor ---
    long long floor_n = -1;
    for (long long f = static_cast<long long>(opt.r); f <= static_cast<long long>(opt.r) + 64;
         ++f) {
        bool all_ok = true;
        for (const auto& w : weights) all_ok = all_ok && nonnegative_for_integers_from(w, f);
        if (all_ok) {
            floor_n = f;
            break;
        }
    }
    if (floor_n < 0)
        return fail("nonnegativity-floor",
                    "some reconstructed weight is negative or undefined for arbitrarily large n");
    out.stage_log.push_back("nonnegativity-floor: weights nonnegative for all integers n >= " +
                            std::to_string(floor_n));

    out.certificate.target = target_name;
    out.certificate.n_value.reset();
    out.certificate.floor_n = floor_n;
    for (std::size_t t = 0; t < support.size(); ++t)
        if (!weights[t].is_zero())
            out.certificate.entries.push_back({out.generator_keys[support[t]], false, weights[t]});
    CertificateVerification check = verify_certificate(out.certificate);
    if (!check.ok) return fail("symbolic-verification", check.detail);
    out.success = true;
    out.stage_log.push_back("certificate: verified, floor n >= " + std::to_string(floor_n));
    return out;
}

}  // namespace termdisc
