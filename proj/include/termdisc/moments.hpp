#pragma once

#include <termdisc/bigint.hpp>
#include <termdisc/errors.hpp>
#include <termdisc/ratfunc.hpp>
#include <termdisc/rational.hpp>
#include <termdisc/resultant.hpp>
#include <termdisc/upoly.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace termdisc {

/// A product of power sums p_{r1}···p_{rk}, stored as the descending
/// multiset (r1 >= r2 >= ... >= 1) of its indices. The empty partition is
/// the constant monomial 1. Factors p_0 never appear here: they are
/// resolved to the symbol n at insertion time, and in centered mode p_1 is
/// resolved to 0 (so centered partitions only carry parts >= 2).
class MomentPartition {
public:
    MomentPartition() = default;
    explicit MomentPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (unsigned p : parts_)
            if (p < 1) throw arithmetic_error("partition parts must be >= 1 once p_0 is resolved");
        std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    unsigned degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    bool has_part(unsigned r) const {
        return std::find(parts_.begin(), parts_.end(), r) != parts_.end();
    }
    unsigned max_part() const { return parts_.empty() ? 0u : parts_.front(); }

    static MomentPartition merged(const MomentPartition& a, const MomentPartition& b) {
        std::vector<unsigned> m;
        m.reserve(a.parts_.size() + b.parts_.size());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                   std::back_inserter(m), std::greater<unsigned>());
        MomentPartition r;
        r.parts_ = std::move(m);
        return r;
    }

    /// Multiset quotient a / b, or nullopt when b is not contained in a.
    static std::optional<MomentPartition> quotient(const MomentPartition& a,
                                                   const MomentPartition& b) {
        std::vector<unsigned> rest = a.parts_;
        for (unsigned p : b.parts_) {
            auto it = std::find(rest.begin(), rest.end(), p);
            if (it == rest.end()) return std::nullopt;
            rest.erase(it);
        }
        MomentPartition r;
        r.parts_ = std::move(rest);
        return r;
    }

    /// Graded order, ties broken lexicographically on the descending part
    /// tuples (so the degree-6 basis runs (2,2,2), (3,3), (4,2), (6)).
    friend std::strong_ordering operator<=>(const MomentPartition& a,
                                            const MomentPartition& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const MomentPartition& a, const MomentPartition& b) = default;

    std::string str() const {
        if (parts_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (!out.empty()) out += "*";
            out += "p" + std::to_string(parts_[i]);
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }

    std::string latex() const {
        if (parts_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            out += "p_" + std::to_string(parts_[i]);
            if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
            i = j;
        }
        return out;
    }

private:
    std::vector<unsigned> parts_; // descending
};

/// Polynomial in the power sums p_1, p_2, ... with RatFuncN coefficients.
/// In centered mode (the default) p_1 is identically zero, so no stored
/// partition contains a part 1; factors p_0 are absorbed as powers of n
/// into the coefficient in both modes.
class MomentPolynomial {
public:
    using TermMap = std::map<MomentPartition, RatFuncN>;

    MomentPolynomial() = default;
    MomentPolynomial(long long c) : MomentPolynomial(RatFuncN(c)) {}
    MomentPolynomial(const RatFuncN& c) {
        if (!c.is_zero()) terms_.emplace(MomentPartition{}, c);
    }

    /// Zero polynomial in the given mode (centered is the default mode of
    /// every other constructor).
    static MomentPolynomial zero_in_mode(bool centered) {
        MomentPolynomial f;
        f.centered_ = centered;
        return f;
    }

    /// The power sum p_r itself. p_0 becomes the constant n; p_1 in
    /// centered mode becomes 0.
    static MomentPolynomial power_sum(unsigned r, bool centered = true) {
        MomentPolynomial f = zero_in_mode(centered);
        f.add_raw_term({r}, RatFuncN(1));
        return f;
    }

    bool centered() const { return centered_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    RatFuncN coeff(const MomentPartition& mp) const {
        auto it = terms_.find(mp);
        return it == terms_.end() ? RatFuncN(0) : it->second;
    }

    /// Total moment degree of the leading partition; -1 when zero.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_.rbegin()->first.degree();
        for (const auto& [mp, c] : terms_)
            if (mp.degree() != d) return false;
        return true;
    }

    unsigned max_part() const {
        unsigned m = 0;
        for (const auto& [mp, c] : terms_) m = std::max(m, mp.max_part());
        return m;
    }

    MomentPolynomial operator-() const {
        MomentPolynomial r = *this;
        for (auto& [mp, c] : r.terms_) c = -c;
        return r;
    }

    friend MomentPolynomial operator+(const MomentPolynomial& a, const MomentPolynomial& b) {
        MomentPolynomial r = a;
        r.centered_ = a.centered_ && b.centered_;
        for (const auto& [mp, c] : b.terms_) r.add_term(mp, c);
        return r;
    }
    friend MomentPolynomial operator-(const MomentPolynomial& a, const MomentPolynomial& b) {
        MomentPolynomial r = a;
        r.centered_ = a.centered_ && b.centered_;
        for (const auto& [mp, c] : b.terms_) r.add_term(mp, -c);
        return r;
    }
    friend MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b) {
        MomentPolynomial r = zero_in_mode(a.centered_ && b.centered_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(MomentPartition::merged(ma, mb), ca * cb);
        return r;
    }
    friend MomentPolynomial operator*(const RatFuncN& s, const MomentPolynomial& f) {
        if (s.is_zero()) return zero_in_mode(f.centered());
        MomentPolynomial r = f;
        for (auto& [mp, c] : r.terms_) c = s * c;
        return r;
    }
    MomentPolynomial& operator+=(const MomentPolynomial& o) { return *this = *this + o; }
    MomentPolynomial& operator-=(const MomentPolynomial& o) { return *this = *this - o; }
    MomentPolynomial& operator*=(const MomentPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const MomentPolynomial& a, const MomentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Substitutes p_r = 0 (drops every term whose partition contains r).
    MomentPolynomial with_part_zeroed(unsigned r) const {
        MomentPolynomial out = zero_in_mode(centered_);
        for (const auto& [mp, c] : terms_)
            if (!mp.has_part(r)) out.terms_.emplace(mp, c);
        return out;
    }

    /// Exact value given the numeric power sums: p_values[r] must hold p_r
    /// for every part r that occurs. Coefficients are evaluated at n = n0.
    Rational eval_at_moments(const std::vector<Rational>& p_values, long long n0) const {
        Rational acc(0);
        for (const auto& [mp, c] : terms_) {
            Rational term = c.eval(n0);
            for (unsigned r : mp.parts()) {
                if (r >= p_values.size())
                    throw arithmetic_error("missing power-sum value for evaluation");
                term *= p_values[r];
            }
            acc += term;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.str() + ")";
            if (!it->first.empty()) out += "*" + it->first.str();
        }
        return out;
    }

    /// Inserts coefficient * prod p_{raw[i]} with p_0 -> n resolution and
    /// (in centered mode) p_1 -> 0.
    void add_raw_term(std::vector<unsigned> raw, RatFuncN coefficient) {
        unsigned zeros = 0;
        std::vector<unsigned> kept;
        kept.reserve(raw.size());
        for (unsigned p : raw) {
            if (p == 0) {
                ++zeros;
            } else if (p == 1 && centered_) {
                return; // p_1 = 0 kills the term
            } else {
                kept.push_back(p);
            }
        }
        if (zeros) coefficient = coefficient * pow(RatFuncN::var(), zeros);
        add_term(MomentPartition(std::move(kept)), coefficient);
    }

private:
    friend MomentPolynomial exact_div(const MomentPolynomial&, const MomentPolynomial&);

    void add_term(const MomentPartition& mp, const RatFuncN& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(mp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool centered_ = true;
    TermMap terms_;
};

inline bool is_zero(const MomentPolynomial& f) { return f.is_zero(); }

/// Exact division by leading-term peeling; the coefficient ring RatFuncN is
/// a field, so only the monomial (partition multiset) divisibility can fail,
/// which signals an inexact division.
inline MomentPolynomial exact_div(const MomentPolynomial& a, const MomentPolynomial& b) {
    if (b.is_zero()) throw arithmetic_error("moment-polynomial division by zero");
    MomentPolynomial r = a;
    MomentPolynomial q = MomentPolynomial::zero_in_mode(a.centered() && b.centered());
    const auto& ltb = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms_.rbegin();
        auto qm = MomentPartition::quotient(ltr.first, ltb.first);
        if (!qm)
            throw arithmetic_error("moment-polynomial division was not exact");
        MomentPolynomial t = MomentPolynomial::zero_in_mode(q.centered());
        t.terms_.emplace(*qm, ltr.second / ltb.second);
        q += t;
        r -= t * b;
    }
    return q;
}

inline MomentPolynomial pow(const MomentPolynomial& base, unsigned e) {
    MomentPolynomial r(1);
    MomentPolynomial b = base;
    while (e) {
        if (e & 1u) r *= b;
        if (e >>= 1u) b *= b;
    }
    return r;
}

/// Elementary symmetric e_j in power sums via Newton's recursion
/// j*e_j = sum_{i=1..j} (-1)^{i-1} e_{j-i} p_i, with p_1 = 0 substituted in
/// centered mode. Implemented generically for all j.
inline MomentPolynomial newton_e_from_p(unsigned j, bool centered = true) {
    std::vector<MomentPolynomial> e;
    e.reserve(j + 1);
    e.emplace_back(1); // e_0
    for (unsigned m = 1; m <= j; ++m) {
        MomentPolynomial acc = MomentPolynomial::zero_in_mode(centered);
        for (unsigned i = 1; i <= m; ++i) {
            MomentPolynomial term = e[m - i] * MomentPolynomial::power_sum(i, centered);
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        e.push_back(RatFuncN(Rational(1, m)) * acc);
    }
    return e[j];
}

/// Monic depressed degree-r polynomial in t whose coefficients are
/// universal moment polynomials: coefficient of t^{r-j} is
/// (-1)^j (r)_falling_j / (n)_falling_j * e_j.
struct TerminalPolynomial {
    unsigned order;
    UPoly<MomentPolynomial> poly;

    friend bool operator==(const TerminalPolynomial& a, const TerminalPolynomial& b) {
        return a.order == b.order && a.poly == b.poly;
    }
};

inline TerminalPolynomial terminal_polynomial(unsigned r) {
    if (r < 2) throw arithmetic_error("terminal order must be >= 2");
    UPoly<MomentPolynomial> J;
    J.set_coeff(r, MomentPolynomial(1));
    for (unsigned j = 2; j <= r; ++j) {
        Rational rfall(falling_factorial(Int(r), j));
        RatFuncN scale = RatFuncN(rfall) / RatFuncN(falling_factorial_poly(j));
        if (j % 2 == 1) scale = -scale;
        MomentPolynomial cj = scale * newton_e_from_p(j, true);
        J.set_coeff(r - j, cj);
    }
    return {r, J};
}

/// disc(J_{n,r}) as a moment polynomial, homogeneous of degree r(r-1).
/// Computed by the Sylvester resultant over the moment-polynomial ring.
/// To keep the elimination in denominator-free coordinates, J is first
/// scaled by c = r! * (n)_falling_r (which clears every coefficient
/// denominator), and the homogeneity rule disc(c*f) = c^{2r-2} disc(f)
/// undoes the scaling afterwards.
inline MomentPolynomial terminal_disc(unsigned r, unsigned r_cap = 5) {
    if (r < 2) throw arithmetic_error("terminal order must be >= 2");
    if (r > r_cap) throw arithmetic_error("terminal order above configured cap");
    TerminalPolynomial tp = terminal_polynomial(r);
    RatFuncN c = RatFuncN(Rational(factorial(r))) * RatFuncN(falling_factorial_poly(r));
    UPoly<MomentPolynomial> scaled = MomentPolynomial(c) * tp.poly;
    MomentPolynomial d = discriminant(scaled);
    RatFuncN undo = RatFuncN(1) / pow(c, 2 * r - 2);
    return undo * d;
}

/// Product of factorial powers scalar * prod_k ((n-k)!)^e_k. Factorials are
/// not rational functions of n, so closed formulas carry them as a separate
/// symbolic descriptor, materialized only at fixed n.
class FactorialPrefactor {
public:
    FactorialPrefactor() : scalar_(1) {}
    explicit FactorialPrefactor(Rational scalar) : scalar_(std::move(scalar)) {}
    FactorialPrefactor(Rational scalar, std::map<unsigned, int> powers)
        : scalar_(std::move(scalar)), powers_(std::move(powers)) {
        prune();
    }

    const Rational& scalar() const { return scalar_; }
    const std::map<unsigned, int>& powers() const { return powers_; }

    friend FactorialPrefactor operator*(const FactorialPrefactor& a,
                                        const FactorialPrefactor& b) {
        FactorialPrefactor r(a.scalar_ * b.scalar_, a.powers_);
        for (const auto& [k, e] : b.powers_) r.powers_[k] += e;
        r.prune();
        return r;
    }

    FactorialPrefactor pow_u(unsigned e) const {
        FactorialPrefactor r(termdisc::pow(scalar_, e), powers_);
        for (auto& [k, ex] : r.powers_) ex *= static_cast<int>(e);
        r.prune();
        return r;
    }

    Rational eval_at(long long n0) const {
        Rational v = scalar_;
        for (const auto& [k, e] : powers_) {
            if (n0 < static_cast<long long>(k))
                throw arithmetic_error("factorial of a negative argument");
            Rational f(factorial(static_cast<unsigned>(n0 - static_cast<long long>(k))));
            for (int i = 0; i < (e > 0 ? e : -e); ++i)
                v = e > 0 ? v * f : v / f;
        }
        return v;
    }

    /// this / other as a rational function of n — defined exactly when the
    /// factorial exponents cancel in total, so the mismatch telescopes into
    /// falling factorials: (n-a)!/(n-b)! = (n-a)(n-a-1)...(n-b+1) for a < b.
    std::optional<RatFuncN> ratio_to(const FactorialPrefactor& other) const {
        std::map<unsigned, int> net = powers_;
        for (const auto& [k, e] : other.powers_) net[k] -= e;
        int total = 0;
        for (const auto& [k, e] : net) total += e;
        if (total != 0) return std::nullopt;
        // Rewrite each (n-k)! as (n-k)(n-k-1)...(n-K+1) * (n-K)! with K the
        // largest offset present; the (n-K)! powers then cancel exactly.
        unsigned K = 0;
        for (const auto& [k, e] : net)
            if (e != 0) K = std::max(K, k);
        RatFuncN ratio(1);
        for (const auto& [k, e] : net) {
            if (e == 0 || k == K) continue;
            NPoly seg(1);
            for (unsigned i = k; i < K; ++i)
                seg = seg * NPoly(std::vector<Int>{-Int(i), Int(1)});
            RatFuncN segf(seg);
            for (int i = 0; i < (e > 0 ? e : -e); ++i)
                ratio = e > 0 ? ratio * segf : ratio / segf;
        }
        return RatFuncN(Rational(scalar_ / other.scalar_)) * ratio;
    }

private:
    void prune() {
        for (auto it = powers_.begin(); it != powers_.end();)
            it = it->second == 0 ? powers_.erase(it) : std::next(it);
    }

    Rational scalar_;
    std::map<unsigned, int> powers_; // offset k -> exponent of (n-k)!
};

/// A closed terminal-discriminant formula: full value at fixed n is
/// prefactor(n) times the moment part evaluated on centered power sums.
struct ClosedFormula {
    MomentPolynomial moment;
    FactorialPrefactor prefactor;
};

/// n(n-1) p_2 with prefactor ((n-2)!)^2.
inline ClosedFormula closed_quadratic() {
    NPoly nn1 = NPoly::var() * NPoly({-1, 1}); // n(n-1)
    MomentPolynomial m = RatFuncN(nn1) * MomentPolynomial::power_sum(2);
    return {m, FactorialPrefactor(Rational(1), {{2, 2}})};
}

/// p_2^3 - n(n-1)/(n-2)^2 p_3^2 with prefactor n!((n-2)!)^3 / 12.
inline ClosedFormula closed_cubic() {
    MomentPolynomial p2 = MomentPolynomial::power_sum(2);
    MomentPolynomial p3 = MomentPolynomial::power_sum(3);
    RatFuncN ratio(NPoly::var() * NPoly({-1, 1}), NPoly({-2, 1}) * NPoly({-2, 1}));
    MomentPolynomial m = pow(p2, 3) - ratio * (p3 * p3);
    return {m, FactorialPrefactor(Rational(1, 12), {{0, 1}, {2, 3}})};
}

/// The six-term quartic discriminant
/// 256A^3D^3 - 128A^2B^2D^2 + 144A^2BC^2D - 27A^2C^4 + 16AB^4D - 4AB^3C^2
/// evaluated on the normalized quartic coefficient table (each table entry
/// divided by n!, which turns its factorial into a rational function), so
/// the moment part is exactly disc of the monic normalized quartic and the
/// deferred prefactor is (n!)^6/24^6.
inline ClosedFormula closed_quartic() {
    auto inv_fall = [](unsigned j) {
        return RatFuncN(1) / RatFuncN(falling_factorial_poly(j));
    };
    MomentPolynomial p2 = MomentPolynomial::power_sum(2);
    MomentPolynomial p3 = MomentPolynomial::power_sum(3);
    MomentPolynomial p4 = MomentPolynomial::power_sum(4);

    MomentPolynomial A{RatFuncN(Rational(1, 24))};
    MomentPolynomial B = (RatFuncN(Rational(-1, 4)) * inv_fall(2)) * p2;
    MomentPolynomial C = (RatFuncN(Rational(-1, 3)) * inv_fall(3)) * p3;
    MomentPolynomial D =
        inv_fall(4) * (RatFuncN(Rational(1, 8)) * (p2 * p2) - RatFuncN(Rational(1, 4)) * p4);

    MomentPolynomial disc6 = RatFuncN(256) * pow(A, 3) * pow(D, 3) -
                             RatFuncN(128) * pow(A, 2) * pow(B, 2) * pow(D, 2) +
                             RatFuncN(144) * pow(A, 2) * B * pow(C, 2) * D -
                             RatFuncN(27) * pow(A, 2) * pow(C, 4) +
                             RatFuncN(16) * A * pow(B, 4) * D -
                             RatFuncN(4) * A * pow(B, 3) * pow(C, 2);

    Rational s(int_pow(Int(24), 6));
    MomentPolynomial m = RatFuncN(s) * disc6;
    return {m, FactorialPrefactor(Rational(1) / s, {{0, 6}})};
}

/// Centered power sums p_0..p_max of a root list (p_0 = n, p_1 = 0).
inline std::vector<Rational> centered_power_sums(const std::vector<Rational>& roots,
                                                 unsigned max_r) {
    if (roots.empty()) throw arithmetic_error("power sums of an empty root list");
    Rational mean(0);
    for (const Rational& x : roots) mean += x;
    mean = mean / Rational(static_cast<long long>(roots.size()));
    std::vector<Rational> p(max_r + 1, Rational(0));
    p[0] = Rational(static_cast<long long>(roots.size()));
    for (const Rational& x : roots) {
        Rational z = x - mean;
        Rational zp = z;
        for (unsigned r = 1; r <= max_r; ++r) {
            p[r] += zp;
            zp *= z;
        }
    }
    return p;
}

/// Exact evaluation of a moment polynomial on a concrete root list: center
/// the roots, form the power sums, substitute, and evaluate every
/// coefficient at n = n0. Requires |roots| = n0.
inline Rational moment_eval(const MomentPolynomial& f, const std::vector<Rational>& roots,
                            long long n0) {
    if (static_cast<long long>(roots.size()) != n0)
        throw arithmetic_error("root count must equal n");
    unsigned mx = std::max(1u, f.max_part());
    return f.eval_at_moments(centered_power_sums(roots, mx), n0);
}

/// Centered two-valued configuration: rmult entries equal a*(n-rmult) and
/// n-rmult entries equal -a*rmult (mean zero by construction). Returns the
/// exact (p_2, p_3); these satisfy p_3^2 * rmult*(n-rmult)*n =
/// (n-2*rmult)^2 * p_2^3, the squared extremal identity.
struct TwoLevelMoments {
    Rational p2;
    Rational p3;
    std::vector<Rational> roots; // the centered configuration itself
};

inline TwoLevelMoments two_level_config(long long n, long long rmult, const Rational& a) {
    if (rmult < 1 || rmult > n - 1)
        throw arithmetic_error("two-level multiplicity out of range");
    if (a.is_zero()) throw arithmetic_error("two-level scale must be nonzero");
    Rational u = a * Rational(n - rmult);
    Rational v = -a * Rational(rmult);
    std::vector<Rational> z;
    z.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < rmult; ++i) z.push_back(u);
    for (long long i = rmult; i < n; ++i) z.push_back(v);
    Rational base = Rational(rmult * (n - rmult) * n);
    Rational p2 = a * a * base;
    Rational p3 = a * a * a * base * Rational(n - 2 * rmult);
    return {p2, p3, std::move(z)};
}

} // namespace termdisc
