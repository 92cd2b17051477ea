#pragma once
/**
 * @file   numerics.hpp
 * @brief  Complex scalars, tolerance policy, principal argument and grids.
 */

#include <helicover/error.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace helicover
{
    /// A point u + iv of the plane. Every operation rejects non-finite parts.
    using Complex = std::complex<double>;

    inline constexpr double kPi = std::numbers::pi;
    inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

    /**
     * @brief Absolute/relative comparison policy.
     *
     * Two quantities at magnitude `scale` are considered equal when they differ
     * by at most `bound(scale) = max(abs_eps, rel_eps * scale)`.
     */
    struct Tolerance
    {
        double abs_eps = 1e-12;
        double rel_eps = 1e-12;

        [[nodiscard]] constexpr double bound (double scale) const noexcept
        {
            return std::max (abs_eps, rel_eps * (scale < 0 ? -scale : scale));
        }

        [[nodiscard]] bool valid () const noexcept
        {
            return std::isfinite (abs_eps) && std::isfinite (rel_eps) && abs_eps > 0 && rel_eps > 0;
        }
    };

    /// Sampling rectangle [u_min, u_max] x [v_min, v_max] with nu x nv samples.
    struct GridSpec
    {
        double u_min = 0.0;
        double u_max = 1.0;
        double v_min = 0.0;
        double v_max = 1.0;
        std::size_t nu = 2;
        std::size_t nv = 2;

        [[nodiscard]] bool valid () const noexcept
        {
            return std::isfinite (u_min) && std::isfinite (u_max) && std::isfinite (v_min) && std::isfinite (v_max)
                   && u_min < u_max && v_min < v_max && nu >= 2 && nv >= 2;
        }

        [[nodiscard]] std::size_t size () const noexcept { return nu * nv; }
    };

    [[nodiscard]] inline bool is_finite (Complex z) noexcept { return std::isfinite (z.real ()) && std::isfinite (z.imag ()); }

    inline void require_finite (Complex z, const char *what)
    {
        if (!is_finite (z))
            throw Error (ErrorKind::InvalidArgument, std::string (what) + " must be finite");
    }

    inline void require_valid (const Tolerance &tol)
    {
        if (!tol.valid ())
            throw Error (ErrorKind::InvalidArgument, "tolerances must be finite and strictly positive");
    }

    /**
     * @brief Principal argument in (-pi, pi], closed at +pi.
     *
     * atan2 returns -pi for (negative, -0.0); that value is folded onto +pi so the
     * branch cut belongs to the upper edge.
     */
    [[nodiscard]] inline double principal_arg (Complex w, const Tolerance &tol = {})
    {
        require_finite (w, "argument");
        if (std::abs (w) <= tol.abs_eps)
            throw Error (ErrorKind::ZeroMagnitude, "argument of a value at the puncture 0 is undefined");
        const double theta = std::atan2 (w.imag (), w.real ());
        return theta == -kPi ? kPi : theta;
    }

    /// e^u as a checked scalar; refuses rather than saturating to infinity.
    [[nodiscard]] inline double checked_exp (double u)
    {
        const double r = std::exp (u);
        if (!std::isfinite (r))
            throw Error (ErrorKind::Overflow, "e^u overflows binary64 for u = " + std::to_string (u) + "; restrict the strip");
        return r;
    }

    /// e^z = e^u (cos v + i sin v), evaluated from the real exponential and sin/cos.
    [[nodiscard]] inline Complex complex_exp (Complex z)
    {
        require_finite (z, "exponent");
        const double r = checked_exp (z.real ());
        return {r * std::cos (z.imag ()), r * std::sin (z.imag ())};
    }

    /// Row-major grid: u is the outer index, v the inner one; corners included.
    [[nodiscard]] inline std::vector<Complex> make_grid (const GridSpec &spec)
    {
        if (!spec.valid ())
            throw Error (ErrorKind::InvalidArgument, "grid needs u_min < u_max, v_min < v_max, nu >= 2, nv >= 2");

        std::vector<Complex> out;
        out.reserve (spec.size ());
        const double du = static_cast<double> (spec.nu - 1);
        const double dv = static_cast<double> (spec.nv - 1);
        for (std::size_t i = 0; i < spec.nu; ++i)
        {
            const double u = std::lerp (spec.u_min, spec.u_max, static_cast<double> (i) / du);
            for (std::size_t j = 0; j < spec.nv; ++j)
                out.emplace_back (u, std::lerp (spec.v_min, spec.v_max, static_cast<double> (j) / dv));
        }
        return out;
    }

} // namespace helicover
