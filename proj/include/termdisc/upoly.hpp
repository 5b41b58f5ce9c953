#pragma once

#include <termdisc/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace termdisc {

/// Dense univariate polynomial over an arbitrary exact commutative ring R.
/// Coefficients are stored lowest-degree first and kept trimmed (the zero
/// polynomial is the empty vector). R must provide ring arithmetic,
/// construction from int, operator==, and an ADL-visible free is_zero(R);
/// the elimination routines additionally need exact_div(R, R).
template <class R>
class UPoly {
public:
    UPoly() = default;
    UPoly(R constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    /// The monomial t (the polynomial variable itself).
    static UPoly var() { return UPoly(std::vector<R>{R(0), R(1)}); }

    /// Monic product prod_i (t - roots[i]); rejects an empty root list,
    /// which would silently degenerate to the constant 1.
    static UPoly expand_from_roots(const std::vector<R>& roots) {
        if (roots.empty())
            throw arithmetic_error("expand_from_roots requires at least one root");
        UPoly f(R(1));
        for (const R& r : roots) f = f * UPoly(std::vector<R>{-r, R(1)});
        return f;
    }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const R& leading() const { return c_.back(); }
    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
    const std::vector<R>& coeffs() const { return c_; }

    void set_coeff(std::size_t k, R value) {
        if (k >= c_.size()) c_.resize(k + 1, R(0));
        c_[k] = std::move(value);
        trim();
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (R& x : r.c_) x = -x;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return UPoly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const R& s, const UPoly& p) {
        UPoly r = p;
        for (R& x : r.c_) x = s * x;
        r.trim();
        return r;
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// First derivative with respect to the polynomial variable.
    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<R> c(c_.size() - 1, R(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = R(static_cast<int>(i)) * c_[i];
        return UPoly(std::move(c));
    }

    R eval(const R& x) const {
        R acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string str(const std::string& var_name = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeff_str(c_[i]) + ")";
            if (i >= 1) {
                out += "*" + var_name;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    template <class T>
    static auto coeff_str(const T& x) -> decltype(x.str()) {
        return x.str();
    }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const UPoly<R>& p) {
    return p.is_zero_poly();
}

/// k-fold derivative together with a degeneracy marker: the result is a
/// constant (possibly zero) exactly when k >= deg f, in which case no
/// discriminant of the derivative is meaningful.
template <class R>
struct DerivativeResult {
    UPoly<R> poly;
    bool degenerate;
};

template <class R>
DerivativeResult<R> derivative_k(const UPoly<R>& f, unsigned k) {
    DerivativeResult<R> r{f, f.degree() < static_cast<int>(k) + 1};
    for (unsigned i = 0; i < k && !r.poly.is_zero_poly(); ++i)
        r.poly = r.poly.derivative();
    return r;
}

template <class R>
UPoly<R> pow(const UPoly<R>& base, unsigned e) {
    UPoly<R> r(R(1)), b = base;
    while (e) {
        if (e & 1u) r *= b;
        if (e >>= 1u) b *= b;
    }
    return r;
}

} // namespace termdisc
