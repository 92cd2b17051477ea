#include <helicover/limits.hpp>
#include <helicover/sampling.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace helicover;

TEST (ThetaMap, Examples)
{
    const HelicoidPoint q{0.3, -0.7, 12.5};
    for (unsigned long n = 1; n <= 9; ++n)
        EXPECT_EQ (theta_map (n, n, q), q);

    EXPECT_EQ (theta_map (1, 2, {1, 0, kTwoPi}), (HelicoidPoint{1, 0, kPi}));
    // factor n/m = 2/6 = 1/3; mpmath: pi/6 = 0.52359877559829887308
    const HelicoidPoint r = theta_map (2, 6, {-1, 0, kPi / 2});
    EXPECT_EQ (r.x, -1.0);
    EXPECT_EQ (r.y, 0.0);
    EXPECT_NEAR (r.h, 0.52359877559829887308, 1e-15);
    EXPECT_THROW ((void) theta_map (0, 1, q), Error);
}

TEST (ThetaMap, CompositionLaw)
{
    Rng rng (31);
    for (int s = 0; s < 100; ++s)
        for (unsigned long n = 1; n <= 6; ++n)
        {
            const HelicoidPoint q = exp_field (HelicoidParams::from_n (n), rng.complex_in_box (5.0, 50.0));
            for (unsigned long m = 1; m <= 6; ++m)
                for (unsigned long k = 1; k <= 6; ++k)
                    EXPECT_LE (distance (theta_map (m, k, theta_map (n, m, q)), theta_map (n, k, q)), 1e-12);
        }
}

TEST (ThetaMap, AgreesWithLogThenExp)
{
    Rng rng (32);
    for (int s = 0; s < 500; ++s)
    {
        const auto n = static_cast<unsigned long> (rng.integer (1, 50));
        const auto m = static_cast<unsigned long> (rng.integer (1, 50));
        const HelicoidPoint q = exp_field (HelicoidParams::from_n (n), rng.complex_in_box (5.0, 50.0));
        const HelicoidPoint via_inverse = exp_field (HelicoidParams::from_n (m), log_field (n, q));
        EXPECT_LE (distance (theta_map (n, m, q), via_inverse), 1e-12 * std::max (1.0, std::hypot (q.x, q.y, q.h)));
    }
}

TEST (PointwiseGap, Examples)
{
    EXPECT_NEAR (pointwise_gap (10, {0, 1}), 0.1, 1e-16);
    for (unsigned long n : {1ul, 7ul, 1000ul})
        EXPECT_EQ (pointwise_gap (n, {2.5, 0.0}), 0.0);
    // direct norm: |-8| / 4
    EXPECT_EQ (pointwise_gap (4, {3, -8}), 2.0);
}

TEST (PointwiseGap, ExactOneOverNRate)
{
    Rng rng (33);
    for (int s = 0; s < 1000; ++s)
    {
        const Complex z = rng.complex_in_box (5.0, 50.0);
        for (unsigned long n : {1ul, 3ul, 10ul, 128ul, 1000ul, 99991ul})
            EXPECT_LE (std::abs (pointwise_gap (n, z) * static_cast<double> (n) - std::abs (z.imag ())), 1e-12 * std::abs (z.imag ()));
    }
}

TEST (StripConvergence, BoundAtHundred)
{
    const ConvergenceReport r = strip_convergence (100, {kPi, -2.0, 2.0}, 51, 51);
    EXPECT_TRUE (r.pass);
    EXPECT_LE (r.sup_observed, kPi / 100 + 1e-12);
    EXPECT_DOUBLE_EQ (r.sup_predicted, kPi / 100);
    EXPECT_EQ (r.samples, 51u * 51u);
}

TEST (StripConvergence, VanishingStrip)
{
    const ConvergenceReport r = strip_convergence (1, {1e-9, 0.0, 1.0}, 11, 11);
    EXPECT_LE (r.sup_observed, 1e-9);
    EXPECT_TRUE (r.pass);
}

TEST (StripConvergence, DoublingNHalvesSup)
{
    const ConvergenceReport r8 = strip_convergence (8, {2.0, -1.0, 1.0}, 21, 21);
    const ConvergenceReport r16 = strip_convergence (16, {2.0, -1.0, 1.0}, 21, 21);
    EXPECT_NEAR (r8.sup_observed / r16.sup_observed, 2.0, 2.0 * 1e-12);
}

TEST (StripConvergence, InvalidInputs)
{
    EXPECT_THROW ((void) strip_convergence (1, {0.0, 0.0, 1.0}, 5, 5), Error);
    EXPECT_THROW ((void) strip_convergence (1, {1.0, 1.0, 0.0}, 5, 5), Error);
    EXPECT_THROW ((void) strip_convergence (0, {1.0, 0.0, 1.0}, 5, 5), Error);
    EXPECT_THROW ((void) strip_convergence (1, {1.0, 800.0, 801.0}, 5, 5), Error);
}

TEST (InjectivityInLimit, DeckPairSeparatesOnlyThroughHeight)
{
    const std::array<Complex, 2> zs{Complex (0, 0), Complex (0, kTwoPi)};
    const std::array<unsigned long, 4> schedule{1, 10, 100, 1000};
    const InjectivityTable t = injectivity_in_limit (zs, schedule);
    ASSERT_EQ (t.rows.size (), 4u);
    EXPECT_TRUE (t.all_hold);
    // mpmath: separation 2 pi / n; planar separation 0
    EXPECT_NEAR (t.rows[0].helicoid_separation, 6.2831853071795864769, 1e-14);
    EXPECT_NEAR (t.rows[0].planar_separation, 0.0, 1e-15);
    for (const auto &row : t.rows)
        EXPECT_NEAR (row.helicoid_separation * static_cast<double> (row.n), kTwoPi, 1e-13);
}

TEST (InjectivityInLimit, GapBoundOnRandomPairs)
{
    Rng rng (34);
    std::vector<Complex> zs;
    for (int k = 0; k < 200; ++k)
        zs.push_back (rng.complex_in_box (3.0, 20.0));
    const std::array<unsigned long, 3> schedule{1, 10, 100};
    for (std::size_t k = 0; k + 1 < zs.size (); k += 2)
    {
        const InjectivityTable t = injectivity_in_limit (std::span (zs).subspan (k, 2), schedule);
        EXPECT_TRUE (t.all_hold);
        for (const auto &row : t.rows)
        {
            EXPECT_GE (row.gap, -1e-12);
            EXPECT_LE (row.gap, row.bound + 1e-12);
        }
    }
}

TEST (InjectivityInLimit, RejectsBadInputs)
{
    const std::array<Complex, 2> dup{Complex (1, 1), Complex (1, 1)};
    const std::array<unsigned long, 1> one{1};
    EXPECT_THROW ((void) injectivity_in_limit (dup, one), Error);
    const std::array<Complex, 2> ok{Complex (1, 1), Complex (1, 2)};
    const std::array<unsigned long, 2> decreasing{10, 1};
    EXPECT_THROW ((void) injectivity_in_limit (ok, decreasing), Error);
}
