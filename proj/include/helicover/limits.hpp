#pragma once
/**
 * @file   limits.hpp
 * @brief  Transition maps between the Exp_n helicoids and convergence diagnostics
 *         of Exp_n towards (exp, 0).
 */

#include <helicover/logmap.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace helicover
{
    /// Strip |Im z| <= M, sampled over the real window [u_min, u_max].
    struct StripSpec
    {
        double M = 1.0;
        double u_min = -1.0;
        double u_max = 1.0;

        [[nodiscard]] bool valid () const noexcept
        {
            return std::isfinite (M) && std::isfinite (u_min) && std::isfinite (u_max) && M > 0.0 && u_min < u_max;
        }
    };

    struct ConvergenceReport
    {
        unsigned long n = 1;
        double M = 0.0;
        double sup_observed = 0.0;
        double sup_predicted = 0.0; ///< M / n
        std::size_t samples = 0;
        bool pass = false;          ///< sup_observed <= sup_predicted + abs_eps
    };

    /// Theta_{n,m}: (exp z, Im z / n) -> (exp z, Im z / m); the height is rescaled by n/m.
    [[nodiscard]] inline HelicoidPoint theta_map (unsigned long n, unsigned long m, const HelicoidPoint &q)
    {
        if (n == 0 || m == 0)
            throw Error (ErrorKind::InvalidArgument, "Theta indices must be >= 1");
        if (!q.finite ())
            throw Error (ErrorKind::InvalidArgument, "helicoid point must be finite");
        return {q.x, q.y, q.h * (static_cast<double> (n) / static_cast<double> (m))};
    }

    /// || Exp_{1/n}(z) - (exp z, 0) ||, which is |Im z| / n.
    [[nodiscard]] inline double pointwise_gap (unsigned long n, Complex z)
    {
        const HelicoidPoint q = exp_field (HelicoidParams::from_n (n), z);
        const Complex w = complex_exp (z);
        return std::hypot (q.x - w.real (), q.y - w.imag (), q.h);
    }

    /**
     * @brief Sup of pointwise_gap over the closed strip [u_min, u_max] x [-M, M].
     *
     * The sup over the open strip equals the sup over its closure, so the grid
     * includes the edges v = +-M.
     */
    [[nodiscard]] inline ConvergenceReport strip_convergence (unsigned long n, const StripSpec &strip, std::size_t nu, std::size_t nv,
                                                              const Tolerance &tol = {})
    {
        if (!strip.valid ())
            throw Error (ErrorKind::InvalidArgument, "strip needs M > 0 and u_min < u_max");
        if (n == 0)
            throw Error (ErrorKind::InvalidArgument, "approximant index n must be >= 1");

        const GridSpec spec{strip.u_min, strip.u_max, -strip.M, strip.M, nu, nv};
        ConvergenceReport report;
        report.n = n;
        report.M = strip.M;
        report.sup_predicted = strip.M / static_cast<double> (n);
        for (const Complex z : make_grid (spec))
            report.sup_observed = std::max (report.sup_observed, pointwise_gap (n, z));
        report.samples = spec.size ();
        report.pass = report.sup_observed <= report.sup_predicted + tol.abs_eps;
        return report;
    }

    struct InjectivityRow
    {
        unsigned long n = 1;
        std::size_t i = 0;
        std::size_t j = 0;
        double helicoid_separation = 0.0; ///< ||Exp_n(z_i) - Exp_n(z_j)||
        double planar_separation = 0.0;   ///< |exp z_i - exp z_j|
        double gap = 0.0;                 ///< helicoid_separation - planar_separation
        double bound = 0.0;               ///< (|Im z_i| + |Im z_j|) / n
        bool holds = false;               ///< 0 <= gap <= bound, up to tolerance
    };

    struct InjectivityTable
    {
        std::vector<InjectivityRow> rows;
        bool all_hold = true;
    };

    /**
     * @brief Separation of pairs under Exp_n versus exp, for each n of a schedule.
     *
     * Checks the triangle-inequality chain: the helicoid separation dominates the
     * planar one and exceeds it by at most (|Im z| + |Im w|) / n.
     */
    [[nodiscard]] inline InjectivityTable injectivity_in_limit (std::span<const Complex> zs, std::span<const unsigned long> n_schedule,
                                                                const Tolerance &tol = {})
    {
        for (std::size_t i = 0; i < zs.size (); ++i)
        {
            require_finite (zs[i], "sample");
            for (std::size_t j = 0; j < i; ++j)
                if (zs[i] == zs[j])
                    throw Error (ErrorKind::InvalidArgument, "samples must be pairwise distinct", i);
        }
        for (std::size_t k = 0; k < n_schedule.size (); ++k)
        {
            if (n_schedule[k] == 0)
                throw Error (ErrorKind::InvalidArgument, "schedule entries must be >= 1", k);
            if (k > 0 && n_schedule[k] <= n_schedule[k - 1])
                throw Error (ErrorKind::InvalidArgument, "schedule must be strictly increasing", k);
        }

        std::vector<Complex> planar;
        planar.reserve (zs.size ());
        for (const Complex z : zs)
            planar.push_back (complex_exp (z));

        InjectivityTable table;
        for (const unsigned long n : n_schedule)
        {
            const HelicoidParams p = HelicoidParams::from_n (n);
            std::vector<HelicoidPoint> lifted;
            lifted.reserve (zs.size ());
            for (const Complex z : zs)
                lifted.push_back (exp_field (p, z));

            for (std::size_t i = 0; i < zs.size (); ++i)
                for (std::size_t j = i + 1; j < zs.size (); ++j)
                {
                    InjectivityRow row;
                    row.n = n;
                    row.i = i;
                    row.j = j;
                    row.helicoid_separation = distance (lifted[i], lifted[j]);
                    row.planar_separation = std::abs (planar[i] - planar[j]);
                    row.gap = row.helicoid_separation - row.planar_separation;
                    row.bound = (std::abs (zs[i].imag ()) + std::abs (zs[j].imag ())) / static_cast<double> (n);
                    const double slack = tol.bound (row.helicoid_separation);
                    row.holds = row.gap >= -slack && row.gap <= row.bound + slack;
                    table.all_hold = table.all_hold && row.holds;
                    table.rows.push_back (row);
                }
        }
        return table;
    }

} // namespace helicover
