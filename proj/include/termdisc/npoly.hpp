#pragma once

#include <termdisc/bigint.hpp>
#include <termdisc/errors.hpp>
#include <termdisc/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace termdisc {

/// Integer-coefficient polynomial in the symbolic parameter n.
/// Coefficients are stored lowest degree first; the zero polynomial is the
/// empty sequence, so the leading coefficient is always nonzero.
class NPoly {
public:
    NPoly() = default;
    NPoly(long long c) { if (c != 0) c_.push_back(Int(c)); }
    NPoly(Int c) { if (c != 0) c_.push_back(std::move(c)); }
    explicit NPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    NPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    /// The monomial n.
    static NPoly var() { return NPoly(std::vector<Int>{0, 1}); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    Rational eval(const Rational& x) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
        return acc;
    }

    NPoly operator-() const {
        NPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend NPoly operator+(const NPoly& a, const NPoly& b) {
        NPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend NPoly operator-(const NPoly& a, const NPoly& b) {
        NPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    friend NPoly operator*(const NPoly& a, const NPoly& b) {
        if (a.is_zero() || b.is_zero()) return NPoly();
        NPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    NPoly& operator+=(const NPoly& o) { return *this = *this + o; }
    NPoly& operator-=(const NPoly& o) { return *this = *this - o; }
    NPoly& operator*=(const NPoly& o) { return *this = *this * o; }

    friend bool operator==(const NPoly& a, const NPoly& b) { return a.c_ == b.c_; }

    /// gcd of all coefficients, zero for the zero polynomial. Always >= 0.
    Int content() const {
        Int g = 0;
        for (const auto& v : c_) {
            g = int_gcd(g, int_abs(v));
            if (g == 1) break;
        }
        return g;
    }

    /// Content 1 and positive leading coefficient.
    NPoly primitive_part() const {
        if (is_zero()) return NPoly();
        Int g = content();
        if (leading() < 0) g = -g;
        NPoly r = *this;
        for (auto& v : r.c_) v /= g;
        return r;
    }

    void divide_content(const Int& g) {
        for (auto& v : c_) v /= g;
    }

    std::string str() const { return format("n", false); }
    std::string latex() const { return format("n", true); }

    friend std::ostream& operator<<(std::ostream& os, const NPoly& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    // Expanded normal form, e.g. "4*n^2-24*n+30" (or "4n^2-24n+30" in latex).
    std::string format(const std::string& v, bool latex) const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Int& a = c_[i];
            if (a == 0) continue;
            bool first = out.empty();
            if (a < 0)
                out += '-';
            else if (!first)
                out += '+';
            Int m = int_abs(a);
            if (i == 0) {
                out += m.str();
            } else {
                if (m != 1) {
                    out += m.str();
                    if (!latex) out += '*';
                }
                out += v;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    std::vector<Int> c_;
};

inline bool is_zero(const NPoly& p) { return p.is_zero(); }

inline NPoly operator*(const Int& c, const NPoly& p) { return NPoly(c) * p; }

inline NPoly pow(const NPoly& base, unsigned e) {
    NPoly r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        if (e >>= 1u) b *= b;
    }
    return r;
}

/// Quotient of an exact division in Z[n]; throws if the division is inexact.
inline NPoly exact_div(const NPoly& a, const NPoly& b) {
    if (b.is_zero()) throw arithmetic_error("polynomial division by zero");
    if (a.is_zero()) return NPoly();
    if (a.degree() < b.degree())
        throw arithmetic_error("inexact polynomial division (degree)");
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(a.coeffs().size() - b.coeffs().size() + 1, Int(0));
    const auto& bc = b.coeffs();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int& lead = rem[k + bc.size() - 1];
        if (lead == 0) continue;
        if (lead % bc.back() != 0)
            throw arithmetic_error("inexact polynomial division (coefficient)");
        q[k] = lead / bc.back();
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q[k] * bc[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw arithmetic_error("inexact polynomial division (remainder)");
    return NPoly(std::move(q));
}

namespace detail {

// Pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b, all in Z[n].
inline NPoly pseudo_rem(NPoly a, const NPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        std::vector<Int> m(static_cast<std::size_t>(shift) + 1, Int(0));
        m.back() = a.leading();
        a = NPoly(Int(b.leading())) * a - NPoly(std::move(m)) * b;
        // degree strictly drops each round
    }
    return a;
}

} // namespace detail

/// gcd in Z[n], including integer content; result has positive leading
/// coefficient. Primitive PRS: good enough for the small degrees here.
inline NPoly npoly_gcd(NPoly a, NPoly b) {
    if (a.is_zero()) return b.is_zero() ? NPoly() : b.primitive_part() * NPoly(b.content());
    if (b.is_zero()) return a.primitive_part() * NPoly(a.content());
    Int cont = int_gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        NPoly r = detail::pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return NPoly(cont) * a;
}

/// (n)_{down j} ... (n - j + 1) as a polynomial in n; the symbolic
/// counterpart of falling_factorial on integers.
inline NPoly falling_factorial_poly(unsigned j) {
    NPoly r(1);
    for (unsigned i = 0; i < j; ++i) r *= NPoly({-static_cast<long long>(i), 1});
    return r;
}

} // namespace termdisc
