#include <helicover/io.hpp>
#include <helicover/sampling.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace helicover;

TEST (ParseComplex, Forms)
{
    EXPECT_EQ (parse_complex ("0+0i"), Complex (0, 0));
    EXPECT_EQ (parse_complex ("0+3.141592653589793i"), Complex (0, 3.141592653589793));
    EXPECT_EQ (parse_complex ("1-2i"), Complex (1, -2));
    EXPECT_EQ (parse_complex ("-1.5e-3+2E+2i"), Complex (-1.5e-3, 200));
    EXPECT_EQ (parse_complex ("+2-1e-5i"), Complex (2, -1e-5));
}

TEST (ParseComplex, Rejects)
{
    for (const char *bad : {"", "1", "i", "1+i", "1 + 2i", "1+2", "1+-2i", "abc", "1+2j", "nan+1i", "1e400+0i"})
        EXPECT_THROW ((void) parse_complex (bad), ParseError) << bad;
}

TEST (ParseComplex, RoundTripsFormattedValues)
{
    Rng rng (61);
    for (int s = 0; s < 500; ++s)
    {
        const Complex z = rng.complex_in_box (1e3, 1e-3);
        const std::string text = format_double (z.real ()) + (z.imag () < 0 ? "-" : "+") + format_double (std::abs (z.imag ())) + "i";
        EXPECT_EQ (parse_complex (text), z) << text;
    }
}

TEST (CanonicalJson, SortedKeysAndSeventeenDigits)
{
    const Json j = to_json (HelicoidPoint{1.0, 0.0, 0.1});
    EXPECT_EQ (to_canonical_json (j), R"({"h":0.10000000000000001,"x":1,"y":0})");
    EXPECT_EQ (to_canonical_json (Json{{"b", true}, {"a", Json::array ({1, 2.5})}, {"s", "q\""}}), R"({"a":[1,2.5],"b":true,"s":"q\""})");
}

TEST (CanonicalJson, NumbersReparseExactly)
{
    Rng rng (62);
    for (int s = 0; s < 200; ++s)
    {
        const double d = rng.uniform (-1e6, 1e6) * std::pow (10.0, rng.uniform (-20, 20));
        EXPECT_EQ (Json::parse (to_canonical_json (Json (d))).get<double> (), d);
    }
}

TEST (PathCsv, HeaderOptional)
{
    std::istringstream with ("re,im\n1,0\n0,1\n\n-1, 0\n");
    const auto a = read_path_csv (with);
    ASSERT_EQ (a.size (), 3u);
    EXPECT_EQ (a[2], Complex (-1, 0));
    std::istringstream without ("1,0\r\n0.5,0.5\r\n");
    EXPECT_EQ (read_path_csv (without).size (), 2u);
}

TEST (PathCsv, BadRowNamed)
{
    std::istringstream in ("re,im\n1,0\n0,x\n");
    try
    {
        (void) read_path_csv (in);
        FAIL ();
    }
    catch (const ParseError &e)
    {
        EXPECT_EQ (e.row (), 3u);
        EXPECT_NE (std::string (e.what ()).find ("row 3"), std::string::npos);
    }
}

TEST (PathJson, ArrayOfPairs)
{
    std::istringstream in ("[[1, 0], [0, 1.5]]");
    const auto pts = read_path_json (in);
    ASSERT_EQ (pts.size (), 2u);
    EXPECT_EQ (pts[1], Complex (0, 1.5));
    std::istringstream bad ("[[1, 0], [0]]");
    EXPECT_THROW ((void) read_path_json (bad), ParseError);
    std::istringstream garbage ("[[1, 0");
    EXPECT_THROW ((void) read_path_json (garbage), ParseError);
}

TEST (MultiPointJson, RoundTrip)
{
    Rng rng (63);
    MultiHelicoidPoint q;
    for (int k = 0; k < 4; ++k)
    {
        q.planar.push_back (rng.complex_in_box (3, 3));
        q.heights.push_back (rng.uniform (-9, 9));
    }
    const std::string text = to_canonical_json (to_json (q));
    EXPECT_EQ (multi_point_from_json (Json::parse (text)), q);
    EXPECT_THROW ((void) multi_point_from_json (Json::parse (R"({"planar":[[1,0]],"heights":[]})")), Error);
    EXPECT_THROW ((void) multi_point_from_json (Json::parse (R"({"planar":[[1]],"heights":[0]})")), ParseError);
}

TEST (Obj, SingleQuad)
{
    const GridSpec spec{0, 1, 0, 1, 2, 2};
    std::ostringstream out;
    write_obj (out, sample_surface (HelicoidParams (1.0), spec), spec);
    const std::string text = out.str ();
    EXPECT_EQ (text.find ('\r'), std::string::npos);
    EXPECT_EQ (text.substr (0, 8), "v 1 0 0\n");
    EXPECT_NE (text.find ("f 1 3 4\nf 1 4 2\n"), std::string::npos);
    std::size_t v = 0;
    std::size_t f = 0;
    std::istringstream lines (text);
    for (std::string line; std::getline (lines, line);)
        (line[0] == 'v' ? v : f)++;
    EXPECT_EQ (v, 4u);
    EXPECT_EQ (f, 2u);
}
