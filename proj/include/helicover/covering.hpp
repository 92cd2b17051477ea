#pragma once
/**
 * @file   covering.hpp
 * @brief  Path lifting through the covering exp : C -> C \ {0}, deck translations,
 *         winding numbers and loop monodromy.
 */

#include <helicover/logmap.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace helicover
{
    /// Polyline in C \ {0}. A closed path repeats its first sample at the end.
    struct SampledPath
    {
        std::vector<Complex> points;
        bool closed = false;
    };

    struct LiftedPath
    {
        std::vector<Complex> points; ///< in the total space C; exp(points[k]) == base[k]
        long start_sheet = 0;
        long end_sheet = 0;
    };

    struct LiftPolicy
    {
        double margin = 0.1; ///< consecutive samples must turn by less than pi - margin
        Tolerance tol{};
    };

    namespace detail
    {
        /// Signed turning angle of each step, validating the path on the way.
        inline std::vector<double> step_angles (const SampledPath &path, const LiftPolicy &policy)
        {
            require_valid (policy.tol);
            if (!(policy.margin >= 0.0 && policy.margin < kPi))
                throw Error (ErrorKind::InvalidArgument, "lift margin must lie in [0, pi)");
            if (path.points.empty ())
                throw Error (ErrorKind::InvalidArgument, "path has no samples");

            for (std::size_t k = 0; k < path.points.size (); ++k)
            {
                if (!is_finite (path.points[k]))
                    throw Error (ErrorKind::InvalidArgument, "path sample " + std::to_string (k) + " is not finite", k);
                if (std::abs (path.points[k]) <= policy.tol.abs_eps)
                    throw Error (ErrorKind::ZeroMagnitude, "path sample " + std::to_string (k) + " sits on the puncture", k);
            }
            if (path.closed && std::abs (path.points.back () - path.points.front ()) > policy.tol.abs_eps)
                throw Error (ErrorKind::NotClosed, "closed path must end where it starts");

            std::vector<double> angles;
            angles.reserve (path.points.size () - 1);
            for (std::size_t k = 0; k + 1 < path.points.size (); ++k)
            {
                const double theta = principal_arg (path.points[k + 1] / path.points[k], policy.tol);
                if (std::abs (theta) >= kPi - policy.margin)
                    throw Error (ErrorKind::StepTooLarge,
                                 "step " + std::to_string (k) + " -> " + std::to_string (k + 1) + " turns by " + std::to_string (theta)
                                     + " rad; resample the path",
                                 k);
                angles.push_back (theta);
            }
            return angles;
        }
    } // namespace detail

    /// z + 2 pi i k.
    [[nodiscard]] inline Complex deck_transform (Complex z, long k) noexcept
    {
        return z + Complex (0.0, kTwoPi * static_cast<double> (k));
    }

    /**
     * @brief Unique continuous lift of a path starting on the given sheet.
     *
     * Heights are accumulated as an offset from the first lift, so lifts of the
     * same path from different sheets differ by exactly the deck translation up
     * to one final rounding. The real part is ln|p_k| directly.
     *
     * For closed paths the end sheet is start_sheet plus the number of 2 pi turns
     * between first and last lift, which stays exact even when the base point sits
     * on the branch cut.
     */
    [[nodiscard]] inline LiftedPath lift_path (const SampledPath &path, long start_sheet, const LiftPolicy &policy = {})
    {
        const std::vector<double> angles = detail::step_angles (path, policy);

        LiftedPath out;
        out.start_sheet = start_sheet;
        out.points.reserve (path.points.size ());

        const Complex first = limit_log (path.points.front (), start_sheet, policy.tol);
        out.points.push_back (first);
        double turned = 0.0;
        for (std::size_t k = 1; k < path.points.size (); ++k)
        {
            turned += angles[k - 1];
            out.points.emplace_back (std::log (std::abs (path.points[k])), first.imag () + turned);
        }

        if (path.closed)
            out.end_sheet = start_sheet + std::lround ((out.points.back ().imag () - first.imag ()) / kTwoPi);
        else
            out.end_sheet = sheet_index (out.points.back ());
        return out;
    }

    /// Total turning of a closed path around 0, in whole turns.
    [[nodiscard]] inline long winding_number (const SampledPath &path, const LiftPolicy &policy = {})
    {
        if (!path.closed)
            throw Error (ErrorKind::NotClosed, "winding number needs a closed path");
        double total = 0.0;
        for (const double theta : detail::step_angles (path, policy))
            total += theta;

        const double turns = total / kTwoPi;
        const double rounded = std::round (turns);
        if (std::abs (turns - rounded) > 1e-9)
            throw Error (ErrorKind::WindingResidual, "accumulated angle is " + std::to_string (turns) + " turns, not an integer");
        return static_cast<long> (rounded);
    }

    /// Sheet shift of the lift of a closed path; equals its winding number.
    [[nodiscard]] inline long monodromy_check (const SampledPath &path, long start_sheet, const LiftPolicy &policy = {})
    {
        if (!path.closed)
            throw Error (ErrorKind::NotClosed, "monodromy needs a closed path");
        const LiftedPath lifted = lift_path (path, start_sheet, policy);
        return lifted.end_sheet - lifted.start_sheet;
    }

} // namespace helicover
