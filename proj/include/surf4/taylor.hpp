#pragma once

// Truncated bivariate Taylor arithmetic.
//
// A Taylor2<N> holds the Taylor coefficients c(i,j) of a smooth function of
// (x,y) about a base point, for all i+j <= N. Arithmetic on these values is
// exact up to order N (forward-mode automatic differentiation), so the value
// and every partial derivative up to order N come out at full precision.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "surf4/error.hpp"

namespace surf4 {

template <int N>
class Taylor2
{
    static_assert(N >= 0, "order must be non-negative");

public:
    static constexpr int order = N;
    static constexpr std::size_t size = static_cast<std::size_t>((N + 1) * (N + 2) / 2);

    /// Storage index of the coefficient of x^i y^j. Coefficients are grouped
    /// by total degree, then by the power of y.
    static constexpr std::size_t index(int i, int j) noexcept
    {
        const int d = i + j;
        return static_cast<std::size_t>(d * (d + 1) / 2 + j);
    }

    constexpr Taylor2() noexcept = default;

    constexpr Taylor2(double constant) noexcept { c_[0] = constant; }

    static constexpr Taylor2 variable_x(double x0) noexcept
    {
        Taylor2 t{x0};
        if constexpr (N >= 1)
            t.c_[index(1, 0)] = 1.0;
        return t;
    }

    static constexpr Taylor2 variable_y(double y0) noexcept
    {
        Taylor2 t{y0};
        if constexpr (N >= 1)
            t.c_[index(0, 1)] = 1.0;
        return t;
    }

    constexpr double coeff(int i, int j) const noexcept { return c_[index(i, j)]; }
    constexpr double& coeff(int i, int j) noexcept { return c_[index(i, j)]; }

    constexpr const std::array<double, size>& coefficients() const noexcept { return c_; }

    /// Partial derivative d^(i+j) / dx^i dy^j at the base point.
    constexpr double partial(int i, int j) const noexcept
    {
        return c_[index(i, j)] * factorial(i) * factorial(j);
    }

    constexpr double value() const noexcept { return c_[0]; }

    // Named partials; only available when the order carries them.
    constexpr double f() const noexcept { return c_[0]; }
    constexpr double fx() const noexcept requires(N >= 1) { return partial(1, 0); }
    constexpr double fy() const noexcept requires(N >= 1) { return partial(0, 1); }
    constexpr double fxx() const noexcept requires(N >= 2) { return partial(2, 0); }
    constexpr double fxy() const noexcept requires(N >= 2) { return partial(1, 1); }
    constexpr double fyy() const noexcept requires(N >= 2) { return partial(0, 2); }
    constexpr double fxxx() const noexcept requires(N >= 3) { return partial(3, 0); }
    constexpr double fxxy() const noexcept requires(N >= 3) { return partial(2, 1); }
    constexpr double fxyy() const noexcept requires(N >= 3) { return partial(1, 2); }
    constexpr double fyyy() const noexcept requires(N >= 3) { return partial(0, 3); }

    /// Build a jet from its partial derivatives, listed by total degree then
    /// by power of y: f, fx, fy, fxx, fxy, fyy, ...
    static constexpr Taylor2 from_partials(const std::array<double, size>& d) noexcept
    {
        Taylor2 t;
        for (int deg = 0; deg <= N; ++deg)
            for (int j = 0; j <= deg; ++j) {
                const int i = deg - j;
                t.c_[index(i, j)] = d[index(i, j)] / (factorial(i) * factorial(j));
            }
        return t;
    }

    bool all_finite() const noexcept
    {
        for (double v : c_)
            if (!std::isfinite(v))
                return false;
        return true;
    }

    /// d/dx, one order lower.
    constexpr Taylor2<(N > 0 ? N - 1 : 0)> dx() const noexcept requires(N >= 1)
    {
        Taylor2<N - 1> r;
        for (int deg = 1; deg <= N; ++deg)
            for (int j = 0; j < deg; ++j) {
                const int i = deg - j;
                r.coeff(i - 1, j) = i * coeff(i, j);
            }
        return r;
    }

    /// d/dy, one order lower.
    constexpr Taylor2<(N > 0 ? N - 1 : 0)> dy() const noexcept requires(N >= 1)
    {
        Taylor2<N - 1> r;
        for (int deg = 1; deg <= N; ++deg)
            for (int j = 1; j <= deg; ++j) {
                const int i = deg - j;
                r.coeff(i, j - 1) = j * coeff(i, j);
            }
        return r;
    }

    /// Drop all terms above order M.
    template <int M>
    constexpr Taylor2<M> truncate() const noexcept requires(M <= N)
    {
        Taylor2<M> r;
        for (std::size_t k = 0; k < Taylor2<M>::size; ++k)
            r.coeff_at(k) = c_[k];
        return r;
    }

    constexpr double& coeff_at(std::size_t k) noexcept { return c_[k]; }
    constexpr double coeff_at(std::size_t k) const noexcept { return c_[k]; }

    constexpr Taylor2& operator+=(const Taylor2& o) noexcept
    {
        for (std::size_t k = 0; k < size; ++k)
            c_[k] += o.c_[k];
        return *this;
    }

    constexpr Taylor2& operator-=(const Taylor2& o) noexcept
    {
        for (std::size_t k = 0; k < size; ++k)
            c_[k] -= o.c_[k];
        return *this;
    }

    constexpr Taylor2& operator*=(double s) noexcept
    {
        for (double& v : c_)
            v *= s;
        return *this;
    }

    constexpr Taylor2 operator-() const noexcept
    {
        Taylor2 r = *this;
        r *= -1.0;
        return r;
    }

    friend constexpr Taylor2 operator+(Taylor2 a, const Taylor2& b) noexcept { return a += b; }
    friend constexpr Taylor2 operator-(Taylor2 a, const Taylor2& b) noexcept { return a -= b; }
    friend constexpr Taylor2 operator*(Taylor2 a, double s) noexcept { return a *= s; }
    friend constexpr Taylor2 operator*(double s, Taylor2 a) noexcept { return a *= s; }

    friend constexpr Taylor2 operator*(const Taylor2& a, const Taylor2& b) noexcept
    {
        Taylor2 r;
        for (int d1 = 0; d1 <= N; ++d1)
            for (int j1 = 0; j1 <= d1; ++j1) {
                const double av = a.c_[index(d1 - j1, j1)];
                if (av == 0.0)
                    continue;
                for (int d2 = 0; d2 <= N - d1; ++d2)
                    for (int j2 = 0; j2 <= d2; ++j2)
                        r.c_[index(d1 - j1 + d2 - j2, j1 + j2)] += av * b.c_[index(d2 - j2, j2)];
            }
        return r;
    }

    friend Taylor2 operator/(const Taylor2& a, const Taylor2& b) { return a * reciprocal(b); }
    friend Taylor2 operator/(const Taylor2& a, double s)
    {
        if (s == 0.0)
            throw EvalError("division by zero");
        return a * (1.0 / s);
    }
    friend Taylor2 operator/(double s, const Taylor2& b) { return s * reciprocal(b); }

    friend constexpr bool operator==(const Taylor2&, const Taylor2&) = default;

    /// g(t) where g has derivatives g^(k)(t0) = derivs[k] at t0 = t.value().
    static constexpr Taylor2 compose(const Taylor2& t, const std::array<double, N + 1>& derivs) noexcept
    {
        Taylor2 h = t;
        h.c_[0] = 0.0;
        Taylor2 r{derivs[N] / factorial(N)};
        for (int k = N - 1; k >= 0; --k) {
            r = r * h;
            r.c_[0] += derivs[k] / factorial(k);
        }
        return r;
    }

    static constexpr double factorial(int n) noexcept
    {
        double r = 1.0;
        for (int k = 2; k <= n; ++k)
            r *= k;
        return r;
    }

private:
    std::array<double, size> c_{};
};

template <int N>
Taylor2<N> reciprocal(const Taylor2<N>& t)
{
    const double a = t.value();
    if (a == 0.0)
        throw EvalError("division by zero");
    std::array<double, N + 1> d{};
    double p = 1.0 / a;
    for (int k = 0; k <= N; ++k) {
        d[k] = (k % 2 == 0 ? 1.0 : -1.0) * Taylor2<N>::factorial(k) * p;
        p /= a;
    }
    return Taylor2<N>::compose(t, d);
}

template <int N>
Taylor2<N> exp(const Taylor2<N>& t)
{
    std::array<double, N + 1> d{};
    d.fill(std::exp(t.value()));
    return Taylor2<N>::compose(t, d);
}

template <int N>
Taylor2<N> log(const Taylor2<N>& t)
{
    const double a = t.value();
    if (!(a > 0.0))
        throw EvalError("log of non-positive argument");
    std::array<double, N + 1> d{};
    d[0] = std::log(a);
    double p = 1.0 / a;
    for (int k = 1; k <= N; ++k) {
        d[k] = (k % 2 == 1 ? 1.0 : -1.0) * Taylor2<N>::factorial(k - 1) * p;
        p /= a;
    }
    return Taylor2<N>::compose(t, d);
}

template <int N>
Taylor2<N> sqrt(const Taylor2<N>& t)
{
    const double a = t.value();
    if (!(a > 0.0))
        throw EvalError("sqrt of non-positive argument");
    std::array<double, N + 1> d{};
    double coef = 1.0;
    for (int k = 0; k <= N; ++k) {
        d[k] = coef * std::pow(a, 0.5 - k);
        coef *= 0.5 - k;
    }
    return Taylor2<N>::compose(t, d);
}

template <int N>
Taylor2<N> sin(const Taylor2<N>& t)
{
    const double s = std::sin(t.value()), c = std::cos(t.value());
    const double cycle[4] = {s, c, -s, -c};
    std::array<double, N + 1> d{};
    for (int k = 0; k <= N; ++k)
        d[k] = cycle[k % 4];
    return Taylor2<N>::compose(t, d);
}

template <int N>
Taylor2<N> cos(const Taylor2<N>& t)
{
    const double s = std::sin(t.value()), c = std::cos(t.value());
    const double cycle[4] = {c, -s, -c, s};
    std::array<double, N + 1> d{};
    for (int k = 0; k <= N; ++k)
        d[k] = cycle[k % 4];
    return Taylor2<N>::compose(t, d);
}

template <int N>
Taylor2<N> tan(const Taylor2<N>& t)
{
    const double c = std::cos(t.value());
    if (std::abs(c) < 1e-15)
        throw EvalError("tan at a pole");
    return sin(t) / cos(t);
}

/// Integer power by repeated multiplication; negative exponents go through
/// the reciprocal.
template <int N>
Taylor2<N> ipow(const Taylor2<N>& t, long n)
{
    if (n < 0)
        return reciprocal(ipow(t, -n));
    Taylor2<N> result{1.0};
    Taylor2<N> base = t;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

/// t^p. Integral p uses ipow; otherwise exp(p log t), which requires t > 0.
template <int N>
Taylor2<N> pow(const Taylor2<N>& t, double p)
{
    if (p == std::trunc(p) && std::abs(p) <= 1e9)
        return ipow(t, static_cast<long>(p));
    if (!(t.value() > 0.0))
        throw EvalError("non-integer power of non-positive base");
    return exp(log(t) * p);
}

using Jet3 = Taylor2<3>;

} // namespace surf4
