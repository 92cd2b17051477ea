#include <helicover/numerics.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <bit>
#include <cstdint>
#include <random>

using namespace helicover;

TEST (PrincipalArg, AxisValues)
{
    EXPECT_EQ (principal_arg ({1.0, 0.0}), 0.0);
    EXPECT_EQ (principal_arg ({-1.0, 0.0}), kPi);
    EXPECT_EQ (principal_arg ({-2.0, -0.0}), kPi); // atan2 gives -pi here; folded onto +pi
    EXPECT_DOUBLE_EQ (principal_arg ({0.0, -2.0}), -kPi / 2);
}

TEST (PrincipalArg, RejectsPuncture)
{
    try
    {
        (void) principal_arg ({1e-13, 0.0});
        FAIL () << "expected ZeroMagnitude";
    }
    catch (const Error &e)
    {
        EXPECT_EQ (e.kind (), ErrorKind::ZeroMagnitude);
    }
    EXPECT_THROW ((void) principal_arg ({NAN, 1.0}), Error);
}

TEST (PrincipalArg, InvertsExpOnPrincipalInterval)
{
    std::mt19937_64 gen (7);
    std::uniform_real_distribution<double> dist (-kPi, kPi);
    for (int k = 0; k < 2000; ++k)
    {
        double v = dist (gen);
        if (v == -kPi)
            v = kPi;
        EXPECT_NEAR (principal_arg (complex_exp ({0.0, v})), v, 1e-12) << v;
    }
    EXPECT_NEAR (principal_arg (complex_exp ({0.0, kPi})), kPi, 1e-12);
}

TEST (ComplexExp, Examples)
{
    EXPECT_EQ (complex_exp ({0.0, 0.0}), Complex (1.0, 0.0));
    const Complex euler = complex_exp ({0.0, kPi});
    EXPECT_EQ (euler.real (), -1.0);
    EXPECT_NEAR (euler.imag (), 0.0, 1e-15);
    // mpmath: e = 2.7182818284590452354
    EXPECT_DOUBLE_EQ (complex_exp ({1.0, 0.0}).real (), 2.718281828459045);
    EXPECT_EQ (complex_exp ({1.0, 0.0}).imag (), 0.0);
}

TEST (ComplexExp, MagnitudeIsExpOfRealPart)
{
    std::mt19937_64 gen (11);
    std::uniform_real_distribution<double> re (-300.0, 300.0);
    std::uniform_real_distribution<double> im (-100.0, 100.0);
    for (int k = 0; k < 2000; ++k)
    {
        const Complex z (re (gen), im (gen));
        const double expected = std::exp (z.real ());
        EXPECT_LE (std::abs (std::abs (complex_exp (z)) - expected), 1e-12 * expected) << z;
    }
}

TEST (ComplexExp, OverflowRefused)
{
    try
    {
        (void) complex_exp ({710.0, 0.0});
        FAIL ();
    }
    catch (const Error &e)
    {
        EXPECT_EQ (e.kind (), ErrorKind::Overflow);
    }
    EXPECT_NO_THROW ((void) complex_exp ({709.0, 1.0}));
}

TEST (MakeGrid, CornerGridIsRowMajorUThenV)
{
    const auto g = make_grid ({0, 1, 0, 1, 2, 2});
    ASSERT_EQ (g.size (), 4u);
    EXPECT_EQ (g[0], Complex (0, 0));
    EXPECT_EQ (g[1], Complex (0, 1));
    EXPECT_EQ (g[2], Complex (1, 0));
    EXPECT_EQ (g[3], Complex (1, 1));
}

TEST (MakeGrid, SymmetricGridHasCentre)
{
    const auto g = make_grid ({-1, 1, -1, 1, 3, 3});
    ASSERT_EQ (g.size (), 9u);
    EXPECT_EQ (g[4], Complex (0, 0));
}

TEST (MakeGrid, EndpointsExactAndUniform)
{
    const GridSpec spec{-0.3, 2.9, 1.1, 7.7, 17, 23};
    const auto g = make_grid (spec);
    EXPECT_EQ (g.front (), Complex (spec.u_min, spec.v_min));
    EXPECT_EQ (g.back (), Complex (spec.u_max, spec.v_max));
    const double dv = (spec.v_max - spec.v_min) / 22.0;
    for (std::size_t j = 1; j < spec.nv; ++j)
        EXPECT_NEAR (g[j].imag () - g[j - 1].imag (), dv, 1e-14);
}

TEST (MakeGrid, PureFunction)
{
    const GridSpec spec{-2.5, 3.25, -9.0, 9.0, 31, 47};
    const auto a = make_grid (spec);
    const auto b = make_grid (spec);
    ASSERT_EQ (a.size (), b.size ());
    for (std::size_t k = 0; k < a.size (); ++k)
    {
        EXPECT_EQ (std::bit_cast<std::uint64_t> (a[k].real ()), std::bit_cast<std::uint64_t> (b[k].real ()));
        EXPECT_EQ (std::bit_cast<std::uint64_t> (a[k].imag ()), std::bit_cast<std::uint64_t> (b[k].imag ()));
    }
}

TEST (MakeGrid, RejectsInvalidSpecs)
{
    EXPECT_THROW ((void) make_grid ({1, 0, 0, 1, 2, 2}), Error);
    EXPECT_THROW ((void) make_grid ({0, 1, 0, 0, 2, 2}), Error);
    EXPECT_THROW ((void) make_grid ({0, 1, 0, 1, 1, 2}), Error);
    EXPECT_THROW ((void) make_grid ({0, INFINITY, 0, 1, 2, 2}), Error);
}

TEST (Tolerance, CombinedBound)
{
    const Tolerance tol;
    EXPECT_EQ (tol.bound (0.5), 1e-12);
    EXPECT_EQ (tol.bound (1e6), 1e-6);
    EXPECT_FALSE ((Tolerance{0.0, 1e-12}.valid ()));
}
