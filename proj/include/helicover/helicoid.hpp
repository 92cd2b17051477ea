#pragma once
/**
 * @file   helicoid.hpp
 * @brief  The exponential helicoid field z -> (e^z, a Im z) and its sampling.
 */

#include <helicover/numerics.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace helicover
{
    /// Pitch a > 0 of the helicoid (u, v) -> (e^u cos v, e^u sin v, a v).
    class HelicoidParams
    {
      public:
        explicit HelicoidParams (double a) : a_ (a)
        {
            if (!(std::isfinite (a) && a > 0.0))
                throw Error (ErrorKind::InvalidArgument, "helicoid pitch a must be finite and > 0");
        }

        /// The helicoid of the n-th approximant, a = 1/n.
        [[nodiscard]] static HelicoidParams from_n (unsigned long n)
        {
            if (n == 0)
                throw Error (ErrorKind::InvalidArgument, "approximant index n must be >= 1");
            return HelicoidParams (1.0 / static_cast<double> (n));
        }

        [[nodiscard]] double a () const noexcept { return a_; }

      private:
        double a_;
    };

    /// A point of C x R = R^3: planar part x + iy and height h.
    struct HelicoidPoint
    {
        double x = 0.0;
        double y = 0.0;
        double h = 0.0;

        [[nodiscard]] Complex planar () const noexcept { return {x, y}; }
        [[nodiscard]] bool finite () const noexcept { return std::isfinite (x) && std::isfinite (y) && std::isfinite (h); }

        friend bool operator== (const HelicoidPoint &, const HelicoidPoint &) = default;
    };

    [[nodiscard]] inline double distance (const HelicoidPoint &p, const HelicoidPoint &q) noexcept
    {
        return std::hypot (p.x - q.x, p.y - q.y, p.h - q.h);
    }

    /// Tangent direction A e1 + B e2 of the (u, v) chart.
    struct TangentWeights
    {
        double A = 1.0;
        double B = 0.0;
    };

    /// Exp_a(z) = (e^u cos v, e^u sin v, a v) for z = u + iv.
    [[nodiscard]] inline HelicoidPoint exp_field (const HelicoidParams &p, Complex z)
    {
        const Complex w = complex_exp (z);
        return {w.real (), w.imag (), p.a () * z.imag ()};
    }

    /// Drops the height; project_to_plane(exp_field(p, z)) == complex_exp(z).
    [[nodiscard]] inline Complex project_to_plane (const HelicoidPoint &q)
    {
        if (!q.finite ())
            throw Error (ErrorKind::InvalidArgument, "helicoid point must be finite");
        return q.planar ();
    }

    /**
     * @brief Cosine of the angle in R^3 between Exp_a(u + iv) and the horizontal vector (A, B, 0).
     *
     * cos = e^u (A cos v + B sin v) / (sqrt(e^{2u} + a^2 v^2) sqrt(A^2 + B^2)),
     * evaluated as a product of two bounded ratios so e^{2u} never overflows first.
     * Results that overshoot [-1, 1] by at most abs_eps are clamped.
     */
    [[nodiscard]] inline double angle_cos (const HelicoidParams &p, const TangentWeights &w, Complex z, const Tolerance &tol = {})
    {
        require_finite (z, "z");
        if (!(std::isfinite (w.A) && std::isfinite (w.B)))
            throw Error (ErrorKind::InvalidArgument, "tangent weights must be finite");
        if (std::abs (w.A) + std::abs (w.B) == 0.0)
            throw Error (ErrorKind::DegenerateWeights, "tangent weights need |A| + |B| != 0");

        const double u = z.real ();
        const double v = z.imag ();
        const double r = checked_exp (u);
        const double height = p.a () * v;

        double radial; // e^u / |Exp_a(z)|
        if (height == 0.0)
            radial = 1.0;
        else
            radial = r / std::hypot (r, height);

        const double directional = (w.A * std::cos (v) + w.B * std::sin (v)) / std::hypot (w.A, w.B);
        double c = radial * directional;
        if (c > 1.0 && c - 1.0 <= tol.abs_eps)
            c = 1.0;
        else if (c < -1.0 && -1.0 - c <= tol.abs_eps)
            c = -1.0;
        return c;
    }

    /// exp_field over make_grid(spec), same row-major order.
    [[nodiscard]] inline std::vector<HelicoidPoint> sample_surface (const HelicoidParams &p, const GridSpec &spec)
    {
        const auto grid = make_grid (spec);
        std::vector<HelicoidPoint> out;
        out.reserve (grid.size ());
        for (const Complex z : grid)
            out.push_back (exp_field (p, z));
        return out;
    }

} // namespace helicover
