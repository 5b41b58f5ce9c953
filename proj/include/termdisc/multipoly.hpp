#pragma once

#include <termdisc/errors.hpp>
#include <termdisc/rational.hpp>
#include <termdisc/resultant.hpp>
#include <termdisc/upoly.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace termdisc {

namespace detail {

/// Graded lexicographic order on exponent vectors (implicit zero padding),
/// so the map's largest key is the leading monomial.
struct GradedLex {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da < db;
        std::size_t len = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < len; ++i) {
            unsigned ai = i < a.size() ? a[i] : 0u;
            unsigned bi = i < b.size() ? b[i] : 0u;
            if (ai != bi) return ai < bi;
        }
        return false;
    }
};

} // namespace detail

/// Sparse multivariate polynomial over Rational in variables x_1..x_{nvars}.
/// Every stored exponent vector has length exactly nvars and no zero
/// coefficients are kept. Mixed-arity arithmetic promotes both operands to
/// the larger variable count.
class MultiPoly {
public:
    using Monomial = std::vector<unsigned>;
    using TermMap = std::map<Monomial, Rational, detail::GradedLex>;

    MultiPoly() = default;
    MultiPoly(long long c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }

    /// The variable x_i (1-indexed), in an nvars-variable ring.
    static MultiPoly var(unsigned i, unsigned nvars) {
        if (i < 1 || i > nvars)
            throw arithmetic_error("variable index out of range");
        MultiPoly p;
        p.nvars_ = nvars;
        Monomial m(nvars, 0u);
        m[i - 1] = 1u;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        if (terms_.empty()) return -1;
        const Monomial& lead = terms_.rbegin()->first;
        return static_cast<int>(std::accumulate(lead.begin(), lead.end(), 0u));
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = static_cast<unsigned>(total_degree());
        for (const auto& [m, c] : terms_)
            if (std::accumulate(m.begin(), m.end(), 0u) != d) return false;
        return true;
    }

    Rational coeff(const Monomial& m) const {
        Monomial key = m;
        key.resize(std::max<std::size_t>(nvars_, m.size()), 0u);
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a.promoted(std::max(a.nvars_, b.nvars_));
        for (const auto& [m, c] : b.terms_) r.add_term(b.pad(m, r.nvars_), c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a.promoted(std::max(a.nvars_, b.nvars_));
        for (const auto& [m, c] : b.terms_) r.add_term(b.pad(m, r.nvars_), -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        r.nvars_ = std::max(a.nvars_, b.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(r.nvars_, 0u);
                for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
                for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p) {
        if (s.is_zero()) return MultiPoly();
        MultiPoly r = p;
        for (auto& [m, c] : r.terms_) c = s * c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->second != ib->second) return false;
            std::size_t len = std::max(ia->first.size(), ib->first.size());
            for (std::size_t i = 0; i < len; ++i) {
                unsigned ea = i < ia->first.size() ? ia->first[i] : 0u;
                unsigned eb = i < ib->first.size() ? ib->first[i] : 0u;
                if (ea != eb) return false;
            }
        }
        return true;
    }

    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() < nvars_)
            throw arithmetic_error("evaluation point has too few coordinates");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) term *= pow(point[i], m[i]);
            acc += term;
        }
        return acc;
    }

    /// Applies a permutation of the variables: x_i -> x_{perm[i-1]}
    /// (perm is 1-indexed values, length nvars).
    MultiPoly permute_vars(const std::vector<unsigned>& perm) const {
        if (perm.size() != nvars_)
            throw arithmetic_error("permutation length mismatch");
        MultiPoly r;
        r.nvars_ = nvars_;
        for (const auto& [m, c] : terms_) {
            Monomial pm(nvars_, 0u);
            for (std::size_t i = 0; i < m.size(); ++i) pm[perm[i] - 1] = m[i];
            r.add_term(std::move(pm), c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += it->second.str();
            for (std::size_t i = 0; i < it->first.size(); ++i)
                if (it->first[i]) {
                    out += "*x" + std::to_string(i + 1);
                    if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
                }
        }
        return out;
    }

private:
    friend MultiPoly exact_div(const MultiPoly&, const MultiPoly&);

    MultiPoly promoted(unsigned nv) const {
        MultiPoly r;
        r.nvars_ = nv;
        for (const auto& [m, c] : terms_) r.terms_.emplace(pad(m, nv), c);
        return r;
    }

    static Monomial pad(const Monomial& m, unsigned nv) {
        Monomial r = m;
        r.resize(std::max<std::size_t>(nv, m.size()), 0u);
        return r;
    }

    void add_term(Monomial m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    unsigned nvars_ = 0;
    TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Exact single-divisor division by leading-term peeling: when a = q*b in
/// the polynomial ring, repeatedly cancelling leading terms reconstructs q;
/// any step where lt(b) fails to divide lt(remainder) proves inexactness.
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw arithmetic_error("multivariate division by zero");
    MultiPoly r = a;
    MultiPoly q;
    q.nvars_ = std::max(a.nvars(), b.nvars());
    const auto& ltb = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms_.rbegin();
        MultiPoly::Monomial qm(q.nvars_, 0u);
        for (std::size_t i = 0; i < qm.size(); ++i) {
            unsigned er = i < ltr.first.size() ? ltr.first[i] : 0u;
            unsigned eb = i < ltb.first.size() ? ltb.first[i] : 0u;
            if (er < eb)
                throw arithmetic_error("multivariate division was not exact");
            qm[i] = er - eb;
        }
        Rational qc = ltr.second / ltb.second;
        MultiPoly t;
        t.nvars_ = q.nvars_;
        t.terms_.emplace(qm, qc);
        q += t;
        r -= t * b;
    }
    return q;
}

inline MultiPoly pow(const MultiPoly& base, unsigned e) {
    MultiPoly r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        if (e >>= 1u) b *= b;
    }
    return r;
}

/// disc(P^{(k)}) for the generic monic P(t) = prod_{i=1..n} (t - x_i),
/// as an exact polynomial in the root variables x_1..x_n: symmetric,
/// translation-invariant, homogeneous of degree (n-k)(n-k-1).
/// The symbolic variable count is capped (term counts explode); the cap is
/// configuration, not mathematics.
inline MultiPoly disc_derivative_symbolic(unsigned n, unsigned k, unsigned n_cap = 7) {
    if (n < 2 || n > n_cap)
        throw arithmetic_error("symbolic root count out of configured range");
    if (k > n - 2)
        throw arithmetic_error("derivative order must leave degree >= 2");
    std::vector<MultiPoly> roots;
    roots.reserve(n);
    for (unsigned i = 1; i <= n; ++i) roots.push_back(MultiPoly::var(i, n));
    UPoly<MultiPoly> f = UPoly<MultiPoly>::expand_from_roots(roots);
    for (unsigned i = 0; i < k; ++i) f = f.derivative();
    return discriminant(f);
}

} // namespace termdisc
