#pragma once

#include <termdisc/errors.hpp>
#include <termdisc/ratfunc.hpp>
#include <termdisc/rational.hpp>
#include <termdisc/upoly.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace termdisc {

/// Interpolating polynomial in n (rational coefficients, lowest degree
/// first as UPoly<Rational>) through the given (n_i, v_i) points, by Newton
/// divided differences. Returns nullopt when a degree cap is supplied and
/// the unique interpolant exceeds it. Duplicate abscissae are an error.
inline std::optional<UPoly<Rational>> poly_interpolate(
    const std::vector<std::pair<long long, Rational>>& points,
    std::optional<unsigned> degree_cap = std::nullopt) {
    if (points.empty())
        throw arithmetic_error("interpolation requires at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw arithmetic_error("duplicate interpolation abscissa");

    // Divided-difference coefficients d_k = f[x_0..x_k].
    std::vector<Rational> d;
    d.reserve(points.size());
    for (const auto& [x, v] : points) d.push_back(v);
    for (std::size_t level = 1; level < points.size(); ++level)
        for (std::size_t i = points.size() - 1; i >= level; --i)
            d[i] = (d[i] - d[i - 1]) /
                   Rational(points[i].first - points[i - level].first);

    // Horner assembly of the Newton form into monomial coefficients.
    UPoly<Rational> result(d.back());
    for (std::size_t i = points.size() - 1; i-- > 0;) {
        UPoly<Rational> shift{Rational(-points[i].first), Rational(1)};
        result = result * shift + UPoly<Rational>(d[i]);
    }
    if (degree_cap && result.degree() > static_cast<int>(*degree_cap))
        return std::nullopt;
    return result;
}

namespace detail {

/// One nonzero kernel vector of the (rows x cols) rational matrix, found by
/// exact Gauss-Jordan elimination; nullopt if the kernel is trivial.
inline std::optional<std::vector<Rational>> nullspace_vector(
    std::vector<std::vector<Rational>> m, std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // First free column (lowest index not a pivot) gives the kernel vector.
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) return std::nullopt;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        v[pivot_col[r]] = -m[r][free_col];
    return v;
}

/// Clears rational denominators of a polynomial-in-n with rational
/// coefficients into an integer-coefficient polynomial and the (positive
/// integer) common denominator it was multiplied by.
inline std::pair<NPoly, Int> clear_denominators(const UPoly<Rational>& p) {
    Int lcm(1);
    for (const Rational& c : p.coeffs())
        lcm = lcm / int_gcd(lcm, c.den()) * c.den();
    std::vector<Int> ints;
    ints.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) ints.push_back(c.num() * (lcm / c.den()));
    return {NPoly(std::move(ints)), lcm};
}

} // namespace detail

/// Reconstructs a rational function in n with deg num <= num_deg and
/// deg den <= den_deg from exact integer-point samples, by solving the
/// homogeneous linear system num(x) - v*den(x) = 0 and verifying the
/// candidate against every sample. Returns nullopt when no such function
/// fits (including the degenerate all-zero solve).
inline std::optional<RatFuncN> ratfunc_reconstruct(
    const std::vector<std::pair<long long, Rational>>& samples,
    unsigned num_deg, unsigned den_deg) {
    if (samples.empty()) return std::nullopt;
    const std::size_t cols = (num_deg + 1) + (den_deg + 1);
    std::vector<std::vector<Rational>> m;
    m.reserve(samples.size());
    for (const auto& [x, v] : samples) {
        std::vector<Rational> row;
        row.reserve(cols);
        Rational xp(1);
        for (unsigned i = 0; i <= num_deg; ++i) {
            row.push_back(xp);
            xp *= Rational(x);
        }
        xp = Rational(1);
        for (unsigned j = 0; j <= den_deg; ++j) {
            row.push_back(-v * xp);
            xp *= Rational(x);
        }
        m.push_back(std::move(row));
    }
    auto kernel = detail::nullspace_vector(std::move(m), cols);
    if (!kernel) return std::nullopt;

    std::vector<Rational> num_c(kernel->begin(), kernel->begin() + num_deg + 1);
    std::vector<Rational> den_c(kernel->begin() + num_deg + 1, kernel->end());
    UPoly<Rational> nump{std::vector<Rational>(num_c)};
    UPoly<Rational> denp{std::vector<Rational>(den_c)};
    if (denp.is_zero_poly()) return std::nullopt;

    auto [num_int, s1] = detail::clear_denominators(nump);
    auto [den_int, s2] = detail::clear_denominators(denp);
    // f = (num/s1) / (den/s2) = (s2*num)/(s1*den)
    RatFuncN f(s2 * num_int, s1 * den_int);

    for (const auto& [x, v] : samples) {
        if (f.den().eval(Int(x)) == 0) return std::nullopt;
        if (f.eval(x) != v) return std::nullopt;
    }
    return f;
}

} // namespace termdisc
