#pragma once

#include <termdisc/errors.hpp>
#include <termdisc/npoly.hpp>
#include <termdisc/rational.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace termdisc {

/// Exact rational function of the symbolic parameter n, the universal
/// coefficient ring of every symbolic computation here. Canonical form:
/// gcd(num, den) = 1 in Z[n] (integer content included) and den has a
/// positive leading coefficient.
class RatFuncN {
public:
    RatFuncN() : num_(), den_(1) {}
    RatFuncN(long long c) : num_(c), den_(1) {}
    RatFuncN(const Int& c) : num_(c), den_(1) {}
    RatFuncN(const Rational& r) : num_(r.num()), den_(r.den()) {}
    RatFuncN(NPoly p) : num_(std::move(p)), den_(1) {}
    RatFuncN(NPoly num, NPoly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    /// The rational function n itself.
    static RatFuncN var() { return RatFuncN(NPoly::var()); }

    const NPoly& num() const { return num_; }
    const NPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool den_is_one() const { return den_.is_one(); }

    RatFuncN operator-() const {
        RatFuncN r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFuncN operator+(const RatFuncN& a, const RatFuncN& b) {
        if (a.den_.is_one() && b.den_.is_one())
            return from_reduced(a.num_ + b.num_, NPoly(1));
        return RatFuncN(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncN operator-(const RatFuncN& a, const RatFuncN& b) {
        if (a.den_.is_one() && b.den_.is_one())
            return from_reduced(a.num_ - b.num_, NPoly(1));
        return RatFuncN(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncN operator*(const RatFuncN& a, const RatFuncN& b) {
        if (a.den_.is_one() && b.den_.is_one())
            return from_reduced(a.num_ * b.num_, NPoly(1));
        return RatFuncN(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncN operator/(const RatFuncN& a, const RatFuncN& b) {
        if (b.is_zero())
            throw arithmetic_error("division by the zero rational function");
        return RatFuncN(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFuncN& operator+=(const RatFuncN& o) { return *this = *this + o; }
    RatFuncN& operator-=(const RatFuncN& o) { return *this = *this - o; }
    RatFuncN& operator*=(const RatFuncN& o) { return *this = *this * o; }
    RatFuncN& operator/=(const RatFuncN& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncN& a, const RatFuncN& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact value at integer n = n0; throws pole_error when den(n0) = 0.
    Rational eval(long long n0) const {
        Int d = den_.eval(Int(n0));
        if (d == 0) throw pole_error(n0);
        return Rational(num_.eval(Int(n0)), d);
    }

    /// "num/den" in expanded normal form; den omitted when it is 1.
    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string d = den_.str();
        bool needs_paren = den_.degree() > 0 || d.find_first_of("+-") != std::string::npos;
        return wrap(num_) + "/" + (needs_paren ? "(" + d + ")" : d);
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFuncN& f) {
        return os << f.str();
    }

    /// LaTeX with the denominator factored over its integer roots,
    /// e.g. "\frac{108}{n^{3}(n-1)^{3}}". Falls back to the expanded
    /// denominator when integer-root extraction does not apply.
    std::string latex() const;

private:
    static RatFuncN from_reduced(NPoly num, NPoly den) {
        RatFuncN r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    static std::string wrap(const NPoly& p) {
        std::string s = p.str();
        // parenthesize sums so that "a/b" re-parses unambiguously
        if (s.find_first_of("+-", 1) != std::string::npos || s[0] == '-')
            return "(" + s + ")";
        return s;
    }

    void canonicalize() {
        if (den_.is_zero())
            throw arithmetic_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = NPoly(1);
            return;
        }
        NPoly g = npoly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    NPoly num_;
    NPoly den_;
};

inline bool is_zero(const RatFuncN& f) { return f.is_zero(); }

inline RatFuncN exact_div(const RatFuncN& a, const RatFuncN& b) {
    // Field division, with a cheap den-free path for the elimination code,
    // where quotients of denominator-free values stay denominator-free.
    if (a.den_is_one() && b.den_is_one() && !b.num().is_zero() && !a.is_zero()) {
        if (a.num().degree() >= b.num().degree()) {
            try {
                return RatFuncN(exact_div(a.num(), b.num()));
            } catch (const arithmetic_error&) {
                // fall through to general division
            }
        }
    }
    return a / b;
}

inline RatFuncN pow(const RatFuncN& base, unsigned e) {
    RatFuncN r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        if (e >>= 1u) b *= b;
    }
    return r;
}

/// Parses the expanded normal form produced by RatFuncN::str():
/// integer polynomial in n, optionally followed by "/(den)" or "/const".
RatFuncN parse_ratfunc(std::string_view s);

namespace detail {

// Parses "4*n^2-24*n+30" style expanded integer polynomials (also accepts
// "4n^2" and a leading '+'). Position-reporting on malformed input.
inline NPoly parse_npoly(std::string_view s, std::size_t offset = 0) {
    NPoly out;
    std::size_t i = 0;
    auto fail = [&](const char* m) { throw parse_error(m, offset + i); };
    if (s.empty()) fail("empty polynomial");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i > 0) {
            fail("expected '+' or '-' between terms");
        }
        if (i >= s.size()) fail("dangling sign");
        Int coeff = 1;
        bool saw_digits = false;
        if (s[i] >= '0' && s[i] <= '9') {
            std::size_t start = i;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            coeff = Int(std::string(s.substr(start, i - start)));
            saw_digits = true;
        }
        bool saw_star = false;
        if (i < s.size() && s[i] == '*') {
            ++i;
            saw_star = true;
        }
        unsigned deg = 0;
        if (i < s.size() && s[i] == 'n') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || s[i] < '0' || s[i] > '9') fail("missing exponent");
                deg = 0;
                while (i < s.size() && s[i] >= '0' && s[i] <= '9')
                    deg = deg * 10 + static_cast<unsigned>(s[i++] - '0');
            }
        } else if (saw_star) {
            fail("expected 'n' after '*'");
        } else if (!saw_digits) {
            fail("expected coefficient or 'n'");
        }
        std::vector<Int> mono(deg + 1, Int(0));
        mono[deg] = sign * coeff;
        out += NPoly(std::move(mono));
    }
    return out;
}

/// Integer-root factorization p = content * prod (n - root)^mult * rest,
/// with rest primitive, free of integer roots, and positive-leading.
struct IntegerRootFactors {
    Int content;                                  // sign carried here
    std::vector<std::pair<Int, unsigned>> linear; // (root, multiplicity)
    NPoly rest;
};

inline IntegerRootFactors factor_integer_roots(const NPoly& p) {
    IntegerRootFactors f;
    if (p.is_zero()) {
        f.content = 0;
        f.rest = NPoly();
        return f;
    }
    f.content = p.content();
    if (p.leading() < 0) f.content = -f.content;
    NPoly q = p.primitive_part();

    // Roots at n = 0 come off as powers of n.
    unsigned at_zero = 0;
    while (!q.is_one() && q.coeff(0) == 0) {
        q = exact_div(q, NPoly::var());
        ++at_zero;
    }
    if (at_zero) f.linear.emplace_back(Int(0), at_zero);

    // Remaining integer roots divide the constant term. Trial division is
    // plenty here (denominators are products of n - k for small k); give up
    // gracefully on an implausibly large constant term.
    Int c0 = int_abs(q.coeff(0));
    if (q.degree() >= 1 && c0 != 0 && c0 <= 1000000000) {
        std::vector<Int> divisors;
        for (Int d = 1; d * d <= c0; ++d)
            if (c0 % d == 0) {
                divisors.push_back(d);
                if (d * d != c0) divisors.push_back(c0 / d);
            }
        std::sort(divisors.begin(), divisors.end());
        for (const Int& d : divisors) {
            for (int sign : {1, -1}) {
                Int a = sign * d;
                unsigned mult = 0;
                while (q.degree() >= 1 && q.eval(a) == 0) {
                    q = exact_div(q, NPoly(std::vector<Int>{-a, Int(1)}));
                    ++mult;
                }
                if (mult) f.linear.emplace_back(a, mult);
            }
        }
        std::sort(f.linear.begin(), f.linear.end());
    }
    f.rest = q;
    return f;
}

} // namespace detail

namespace detail {

/// LaTeX for a polynomial written as a product of its integer-root linear
/// factors, e.g. 6n^2-12n -> "6n(n-2)".
inline std::string npoly_product_latex(const NPoly& p) {
    auto f = factor_integer_roots(p);
    std::string d;
    if (f.content != 1) d += int_str(f.content);
    for (const auto& [root, mult] : f.linear) {
        std::string base = root == 0 ? "n" : "(n" + (root > 0 ? "-" + int_str(root) : "+" + int_str(-root)) + ")";
        d += base;
        if (mult > 1) d += "^{" + std::to_string(mult) + "}";
    }
    if (!f.rest.is_one()) {
        std::string r = f.rest.latex();
        d += d.empty() ? r : "(" + r + ")";
    }
    if (d.empty()) d = "1";
    return d;
}

} // namespace detail

inline std::string RatFuncN::latex() const {
    if (den_.is_one()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + detail::npoly_product_latex(den_) + "}";
}

inline RatFuncN parse_ratfunc(std::string_view s) {
    // strip blanks
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) throw parse_error("empty rational function");

    // split at the top-level '/'
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        else if (t[i] == ')') --depth;
        else if (t[i] == '/' && depth == 0) {
            if (slash != std::string::npos) throw parse_error("multiple '/'", i);
            slash = i;
        }
    }
    auto strip_parens = [](std::string_view v) {
        while (v.size() >= 2 && v.front() == '(' && v.back() == ')') {
            int d = 0;
            bool whole = true;
            for (std::size_t i = 0; i + 1 < v.size(); ++i) {
                if (v[i] == '(') ++d;
                else if (v[i] == ')') --d;
                if (d == 0) { whole = false; break; }
            }
            if (!whole) break;
            v = v.substr(1, v.size() - 2);
        }
        return v;
    };
    if (slash == std::string::npos)
        return RatFuncN(detail::parse_npoly(strip_parens(t)));
    NPoly num = detail::parse_npoly(strip_parens(std::string_view(t).substr(0, slash)));
    NPoly den = detail::parse_npoly(strip_parens(std::string_view(t).substr(slash + 1)),
                                    slash + 1);
    return RatFuncN(std::move(num), std::move(den));
}

} // namespace termdisc
