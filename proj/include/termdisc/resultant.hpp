#pragma once

#include <termdisc/errors.hpp>
#include <termdisc/upoly.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace termdisc {
namespace detail {

/// Fraction-free (Bareiss) determinant over an exact integral domain.
/// Every division performed is exact by the Bareiss identity, so the
/// ring only needs exact_div, not general division. Row swaps flip the
/// sign; a pivot column with no nonzero entry short-circuits to zero.
/// Consumes the matrix.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m[pivot][k])) ++pivot;
        if (pivot == n) return R(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = k == 0 ? std::move(t) : exact_div(t, prev);
            }
            m[i][k] = R(0);
        }
        prev = m[k][k];
    }
    R det = std::move(m[n - 1][n - 1]);
    return negate ? -det : det;
}

} // namespace detail

/// Resultant of f and g via the Sylvester matrix, evaluated with a single
/// fraction-free elimination. Rows 0..deg(g)-1 carry the coefficients of f
/// (highest degree first), rows deg(g)..deg(g)+deg(f)-1 carry those of g.
/// Degree-zero polynomials are allowed: Res(f, c) = c^deg(f).
template <class R>
R sylvester_resultant(const UPoly<R>& f, const UPoly<R>& g) {
    if (f.is_zero_poly() || g.is_zero_poly())
        throw arithmetic_error("resultant of the zero polynomial is undefined");
    const std::size_t df = static_cast<std::size_t>(f.degree());
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    const std::size_t n = df + dg;
    if (n == 0) return R(1);
    std::vector<std::vector<R>> m(n, std::vector<R>(n, R(0)));
    for (std::size_t row = 0; row < dg; ++row)
        for (std::size_t j = 0; j <= df; ++j)
            m[row][row + j] = f.coeff(df - j);
    for (std::size_t row = 0; row < df; ++row)
        for (std::size_t j = 0; j <= dg; ++j)
            m[dg + row][row + j] = g.coeff(dg - j);
    return detail::bareiss_det(std::move(m));
}

/// Discriminant disc(f) = (-1)^{m(m-1)/2} Res(f, f') / lc(f) for deg f >= 1.
/// The division by the leading coefficient is checked by multiplying back,
/// so a ring whose exact_div silently misbehaves is caught here.
template <class R>
R discriminant(const UPoly<R>& f) {
    const int m = f.degree();
    if (m < 1)
        throw arithmetic_error("discriminant requires degree >= 1");
    if (m == 1) return R(1);
    R res = sylvester_resultant(f, f.derivative());
    R q = exact_div(res, f.leading());
    if (!(q * f.leading() == res))
        throw arithmetic_error("leading-coefficient division was not exact");
    const unsigned mm = static_cast<unsigned>(m);
    if (((mm * (mm - 1)) / 2) % 2 == 1) q = -q;
    return q;
}

} // namespace termdisc
