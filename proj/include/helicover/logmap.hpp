#pragma once
/**
 * @file   logmap.hpp
 * @brief  Inverses of the helicoid field, sheet bookkeeping, and the realization
 *         maps between the helicoid in R^3 and the graph surface Sigma_log in R^4.
 */

#include <helicover/helicoid.hpp>

#include <cfloat>
#include <cmath>

namespace helicover
{
    /// Logarithm value split as principal part plus deck count: principal + 2 pi i sheet.
    struct SheetedLog
    {
        Complex principal; ///< ln|K| + i Arg K with Arg in (-pi, pi]
        long sheet = 0;

        [[nodiscard]] Complex value () const noexcept
        {
            return principal + Complex (0.0, kTwoPi * static_cast<double> (sheet));
        }
    };

    /// (u, v, e^u cos v, e^u sin v) in R^4.
    struct SigmaLogPoint
    {
        double u = 0.0;
        double v = 0.0;
        double x = 0.0;
        double y = 0.0;

        friend bool operator== (const SigmaLogPoint &, const SigmaLogPoint &) = default;
    };

    namespace detail
    {
        inline double planar_log_modulus (const HelicoidPoint &q, const Tolerance &tol)
        {
            if (!q.finite ())
                throw Error (ErrorKind::InvalidArgument, "helicoid point must be finite");
            const double r = std::hypot (q.x, q.y);
            if (r <= tol.abs_eps)
                throw Error (ErrorKind::ZeroMagnitude, "planar part lies on the axis {0} x R");
            return std::log (r);
        }

        /// Residual test |e^u cos v - x|, |e^u sin v - y| <= max(abs_eps, rel_eps e^u).
        inline bool on_graph (double u, double v, double x, double y, const Tolerance &tol)
        {
            const double r = checked_exp (u);
            const double bound = tol.bound (r);
            return std::abs (r * std::cos (v) - x) <= bound && std::abs (r * std::sin (v) - y) <= bound;
        }
    } // namespace detail

    /// Log_n(K, L) = ln|K| + i n L, the inverse of Exp_{1/n}.
    [[nodiscard]] inline Complex log_field (unsigned long n, const HelicoidPoint &q, const Tolerance &tol = {})
    {
        if (n == 0)
            throw Error (ErrorKind::InvalidArgument, "approximant index n must be >= 1");
        return {detail::planar_log_modulus (q, tol), static_cast<double> (n) * q.h};
    }

    /// ln|K| + i h / a, the inverse of Exp_a; defined on all of (C \ {0}) x R.
    [[nodiscard]] inline Complex log_general (const HelicoidParams &p, const HelicoidPoint &q, const Tolerance &tol = {})
    {
        return {detail::planar_log_modulus (q, tol), q.h / p.a ()};
    }

    /**
     * @brief The k with Im z - 2 pi k in (-pi, pi].
     *
     * Values within a few ulps of an odd multiple of pi are treated as lying on the
     * cut and therefore on its upper (+pi) side. Without this, Im z = -5 pi would be
     * assigned a sheet by the sign of the rounding error in the product 5 * pi.
     */
    [[nodiscard]] inline long sheet_index (Complex z)
    {
        require_finite (z, "z");
        const double v = z.imag ();
        double k = std::round (v / kTwoPi);
        const double r = v - k * kTwoPi;
        const double slack = 4.0 * DBL_EPSILON * std::max (1.0, std::abs (v));
        if (r <= -kPi + slack)
            k -= 1.0;
        else if (r > kPi + slack)
            k += 1.0;
        return static_cast<long> (k);
    }

    /// Principal logarithm of K on the given sheet: ln|K| + i (Arg K + 2 pi sheet).
    [[nodiscard]] inline SheetedLog sheeted_log (Complex K, long sheet, const Tolerance &tol = {})
    {
        const double arg = principal_arg (K, tol);
        return {Complex (std::log (std::abs (K)), arg), sheet};
    }

    [[nodiscard]] inline Complex limit_log (Complex K, long sheet, const Tolerance &tol = {})
    {
        return sheeted_log (K, sheet, tol).value ();
    }

    /**
     * @brief Xi: helicoid point (e^u cos v, e^u sin v, a v) -> (u, v, e^u cos v, e^u sin v).
     *
     * u comes from the norm of the planar part, v from the height. The planar
     * coordinates are carried over unchanged, then checked against e^u (cos v, sin v).
     */
    [[nodiscard]] inline SigmaLogPoint xi_realize (const HelicoidParams &p, const HelicoidPoint &q, const Tolerance &tol = {})
    {
        const double u = detail::planar_log_modulus (q, tol);
        const double v = q.h / p.a ();
        if (!detail::on_graph (u, v, q.x, q.y, tol))
            throw Error (ErrorKind::NotOnSurface, "point is not on the helicoid of pitch " + std::to_string (p.a ()));
        return {u, v, q.x, q.y};
    }

    /// Omega = Xi^{-1}: (u, v, x, y) -> (x, y, a v).
    [[nodiscard]] inline HelicoidPoint omega_realize (const HelicoidParams &p, const SigmaLogPoint &s, const Tolerance &tol = {})
    {
        if (!(std::isfinite (s.u) && std::isfinite (s.v) && std::isfinite (s.x) && std::isfinite (s.y)))
            throw Error (ErrorKind::InvalidArgument, "Sigma_log point must be finite");
        if (!detail::on_graph (s.u, s.v, s.x, s.y, tol))
            throw Error (ErrorKind::NotOnSurface, "point violates x = e^u cos v, y = e^u sin v");
        return {s.x, s.y, p.a () * s.v};
    }

} // namespace helicover
