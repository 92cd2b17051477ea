#pragma once
/**
 * @file   sampling.hpp
 * @brief  Seeded random inputs for diagnostics: points in boxes and closed loops
 *         of known winding number.
 */

#include <helicover/covering.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace helicover
{
    /**
     * @brief mt19937_64 with a hand-rolled uniform map.
     *
     * std::uniform_real_distribution is implementation-defined, which would make
     * seeded reports differ between standard libraries.
     */
    class Rng
    {
      public:
        explicit Rng (std::uint64_t seed) : engine_ (seed) {}

        /// Uniform in [lo, hi).
        double uniform (double lo, double hi) { return lo + (hi - lo) * unit (); }

        /// Uniform integer in [lo, hi].
        long integer (long lo, long hi)
        {
            const auto span = static_cast<std::uint64_t> (hi - lo) + 1;
            return lo + static_cast<long> (engine_ () % span);
        }

        Complex complex_in_box (double re_bound, double im_bound)
        {
            const double re = uniform (-re_bound, re_bound);
            return {re, uniform (-im_bound, im_bound)};
        }

      private:
        double unit () { return static_cast<double> (engine_ () >> 11) * 0x1.0p-53; }

        std::mt19937_64 engine_;
    };

    /// A closed loop together with the winding number it was built to have.
    struct KnownLoop
    {
        SampledPath path;
        long winding = 0;
    };

    namespace detail
    {
        /// Samples r e^{i theta} for theta from `from` to `to`, excluding the start.
        inline void append_arc (std::vector<Complex> &pts, double r, double from, double to, double max_step)
        {
            const auto steps = static_cast<std::size_t> (std::ceil (std::abs (to - from) / max_step));
            for (std::size_t s = 1; s <= steps; ++s)
                pts.push_back (std::polar (r, std::lerp (from, to, static_cast<double> (s) / static_cast<double> (steps))));
        }

        inline void append_radial (std::vector<Complex> &pts, double from, double to, double theta, double max_step)
        {
            const auto steps = static_cast<std::size_t> (std::ceil (std::abs (to - from) / max_step));
            for (std::size_t s = 1; s <= steps; ++s)
                pts.push_back (std::polar (std::lerp (from, to, static_cast<double> (s) / static_cast<double> (steps)), theta));
        }

        /// Small circle around c that does not enclose 0, starting and ending at `at`.
        inline void append_detour (std::vector<Complex> &pts, Complex at, double rho, bool ccw)
        {
            const Complex centre = at * (1.0 + rho / std::abs (at));
            const double phase = std::arg (at - centre);
            constexpr std::size_t steps = 48;
            for (std::size_t s = 1; s <= steps; ++s)
            {
                const double t = kTwoPi * static_cast<double> (s) / static_cast<double> (steps);
                pts.push_back (centre + std::polar (rho, phase + (ccw ? t : -t)));
            }
            pts.back () = at;
        }
    } // namespace detail

    /**
     * @brief Random closed loop made of arcs about 0, radial segments and detours
     *        that do not enclose 0; its winding is `winding` by construction.
     *
     * The arcs sweep angles that sum to 2 pi winding, legs may run backwards, and
     * the last sample is an exact copy of the first.
     */
    [[nodiscard]] inline KnownLoop random_arc_loop (Rng &rng, long winding, double max_step = 0.2)
    {
        const double r0 = rng.uniform (0.5, 2.0);
        const double theta0 = rng.uniform (-kPi, kPi);
        const long legs = rng.integer (1, 5);

        std::vector<double> sweeps;
        double swept = 0.0;
        for (long k = 0; k + 1 < legs; ++k)
        {
            sweeps.push_back (rng.uniform (-3.0 * kPi, 3.0 * kPi));
            swept += sweeps.back ();
        }
        sweeps.push_back (kTwoPi * static_cast<double> (winding) - swept);

        std::vector<Complex> pts{std::polar (r0, theta0)};
        double r = r0;
        double theta = theta0;
        for (std::size_t k = 0; k < sweeps.size (); ++k)
        {
            detail::append_arc (pts, r, theta, theta + sweeps[k], max_step);
            theta += sweeps[k];
            if (rng.uniform (0.0, 1.0) < 0.5)
                detail::append_detour (pts, pts.back (), 0.3 * r, rng.uniform (0.0, 1.0) < 0.5);
            const double next_r = k + 1 == sweeps.size () ? r0 : rng.uniform (0.5, 2.0);
            detail::append_radial (pts, r, next_r, theta, max_step);
            r = next_r;
        }
        if (pts.size () == 1)
            pts.push_back (pts.front ());
        pts.back () = pts.front ();
        return {{std::move (pts), true}, winding};
    }

    /// `turns` full circles of radius r about 0 (negative turns run clockwise).
    [[nodiscard]] inline SampledPath circle_loop (double r, long turns, std::size_t samples_per_turn)
    {
        std::vector<Complex> pts;
        const std::size_t total = samples_per_turn * static_cast<std::size_t> (std::max (1L, std::abs (turns)));
        for (std::size_t k = 0; k <= total; ++k)
        {
            const double t = kTwoPi * static_cast<double> (k) / static_cast<double> (samples_per_turn);
            pts.push_back (std::polar (r, turns >= 0 ? t : -t));
        }
        if (turns == 0)
            pts.assign (total + 1, Complex (r, 0.0));
        pts.back () = pts.front ();
        return {std::move (pts), true};
    }

} // namespace helicover
