#pragma once
/**
 * @file   multi.hpp
 * @brief  Product of m helicoid fields on C^m.
 *
 * Every operation is the tuple of the single-factor operations. Errors carry the
 * zero-based index of the offending component.
 */

#include <helicover/limits.hpp>

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace helicover
{
    struct MultiComplex
    {
        std::vector<Complex> entries;

        [[nodiscard]] std::size_t dim () const noexcept { return entries.size (); }
        friend bool operator== (const MultiComplex &, const MultiComplex &) = default;
    };

    /// A value in (C \ {0})^m x R^m.
    struct MultiHelicoidPoint
    {
        std::vector<Complex> planar;
        std::vector<double> heights;

        [[nodiscard]] std::size_t dim () const noexcept { return planar.size (); }
        [[nodiscard]] HelicoidPoint component (std::size_t k) const { return {planar.at (k).real (), planar.at (k).imag (), heights.at (k)}; }
        friend bool operator== (const MultiHelicoidPoint &, const MultiHelicoidPoint &) = default;
    };

    class MultiParams
    {
      public:
        explicit MultiParams (std::vector<double> a)
        {
            if (a.empty ())
                throw Error (ErrorKind::InvalidArgument, "need at least one factor");
            factors_.reserve (a.size ());
            for (std::size_t k = 0; k < a.size (); ++k)
            {
                if (!(std::isfinite (a[k]) && a[k] > 0.0))
                    throw Error (ErrorKind::InvalidArgument, "pitch a_" + std::to_string (k) + " must be finite and > 0", k);
                factors_.emplace_back (a[k]);
            }
        }

        /// a_1 = ... = a_m = 1/n.
        [[nodiscard]] static MultiParams uniform_n (std::size_t m, unsigned long n)
        {
            if (n == 0)
                throw Error (ErrorKind::InvalidArgument, "approximant index n must be >= 1");
            return MultiParams (std::vector<double> (m, 1.0 / static_cast<double> (n)));
        }

        [[nodiscard]] std::size_t dim () const noexcept { return factors_.size (); }
        [[nodiscard]] const HelicoidParams &operator[] (std::size_t k) const { return factors_.at (k); }

      private:
        std::vector<HelicoidParams> factors_;
    };

    namespace detail
    {
        inline void require_dim (std::size_t expected, std::size_t got, const char *what)
        {
            if (expected != got)
                throw Error (ErrorKind::DimensionMismatch,
                             std::string (what) + " has " + std::to_string (got) + " components, expected " + std::to_string (expected));
        }

        /// Re-throws a single-factor error with the component index attached.
        template <typename F> auto at_component (std::size_t k, F &&f) -> decltype (f ())
        {
            try
            {
                return f ();
            }
            catch (const Error &e)
            {
                throw Error (e.kind (), "component " + std::to_string (k) + ": " + e.what (), k);
            }
        }
    } // namespace detail

    [[nodiscard]] inline MultiHelicoidPoint multi_exp (const MultiParams &p, const MultiComplex &z)
    {
        detail::require_dim (p.dim (), z.dim (), "argument");
        MultiHelicoidPoint out;
        out.planar.reserve (z.dim ());
        out.heights.reserve (z.dim ());
        for (std::size_t k = 0; k < z.dim (); ++k)
        {
            const HelicoidPoint q = detail::at_component (k, [&] { return exp_field (p[k], z.entries[k]); });
            out.planar.push_back (q.planar ());
            out.heights.push_back (q.h);
        }
        return out;
    }

    [[nodiscard]] inline MultiComplex multi_log (const MultiParams &p, const MultiHelicoidPoint &q, const Tolerance &tol = {})
    {
        detail::require_dim (q.planar.size (), q.heights.size (), "heights");
        detail::require_dim (p.dim (), q.dim (), "point");
        MultiComplex out;
        out.entries.reserve (q.dim ());
        for (std::size_t k = 0; k < q.dim (); ++k)
            out.entries.push_back (detail::at_component (k, [&] { return log_general (p[k], q.component (k), tol); }));
        return out;
    }

    /// Theta_{n,m} applied to every factor.
    [[nodiscard]] inline MultiHelicoidPoint multi_theta (unsigned long n, unsigned long m, const MultiHelicoidPoint &q)
    {
        detail::require_dim (q.planar.size (), q.heights.size (), "heights");
        MultiHelicoidPoint out = q;
        for (std::size_t k = 0; k < q.dim (); ++k)
            out.heights[k] = detail::at_component (k, [&] { return theta_map (n, m, q.component (k)).h; });
        return out;
    }

    struct MultiConvergenceReport
    {
        std::vector<ConvergenceReport> components;
        double aggregate_observed = 0.0;  ///< sup over the product grid of the Euclidean norm of component gaps
        double aggregate_predicted = 0.0; ///< sqrt(sum M_k^2) / n
        bool pass = false;
    };

    /**
     * @brief Per-component and aggregate sup gaps of Exp_{1/n, ..., 1/n} on a multi-strip.
     *
     * The product grid is never materialized: component gaps depend on disjoint
     * coordinates, so the sup of their Euclidean norm is the norm of the sups.
     */
    [[nodiscard]] inline MultiConvergenceReport multi_strip_convergence (unsigned long n, std::span<const StripSpec> strips, std::size_t nu,
                                                                         std::size_t nv, const Tolerance &tol = {})
    {
        if (strips.empty ())
            throw Error (ErrorKind::InvalidArgument, "need at least one strip");

        MultiConvergenceReport out;
        double observed_sq = 0.0;
        double predicted_sq = 0.0;
        bool pass = true;
        for (std::size_t k = 0; k < strips.size (); ++k)
        {
            const ConvergenceReport r = detail::at_component (k, [&] { return strip_convergence (n, strips[k], nu, nv, tol); });
            observed_sq += r.sup_observed * r.sup_observed;
            predicted_sq += strips[k].M * strips[k].M;
            pass = pass && r.pass;
            out.components.push_back (r);
        }
        out.aggregate_observed = std::sqrt (observed_sq);
        out.aggregate_predicted = std::sqrt (predicted_sq) / static_cast<double> (n);
        out.pass = pass && out.aggregate_observed <= out.aggregate_predicted + tol.abs_eps;
        return out;
    }

} // namespace helicover
