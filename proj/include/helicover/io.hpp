#pragma once
/**
 * @file   io.hpp
 * @brief  Text formats: complex literals, path CSV/JSON input, canonical JSON
 *         output and Wavefront OBJ meshes.
 *
 * JSON output is compact, key-sorted, and prints every number with 17
 * significant digits (%.17g), so identical values always give identical bytes.
 */

#include <helicover/covering.hpp>
#include <helicover/multi.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace helicover
{
    /// Unreadable input or unwritable output file.
    class IoError : public std::runtime_error
    {
      public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed text input; `row()` is the 1-based line of the offending record when known.
    class ParseError : public std::runtime_error
    {
      public:
        explicit ParseError (const std::string &what, std::size_t row = 0) : std::runtime_error (what), row_ (row) {}
        [[nodiscard]] std::size_t row () const noexcept { return row_; }

      private:
        std::size_t row_;
    };

    using Json = nlohmann::json;

    [[nodiscard]] inline std::string format_double (double d)
    {
        char buf[32];
        std::snprintf (buf, sizeof buf, "%.17g", d);
        return buf;
    }

    namespace detail
    {
        inline std::string_view trim (std::string_view s)
        {
            while (!s.empty () && std::isspace (static_cast<unsigned char> (s.front ())))
                s.remove_prefix (1);
            while (!s.empty () && std::isspace (static_cast<unsigned char> (s.back ())))
                s.remove_suffix (1);
            return s;
        }

        /// Whole-string decimal parse; std::from_chars rejects a leading '+', so skip it here.
        inline bool parse_real (std::string_view s, double &out)
        {
            if (!s.empty () && s.front () == '+')
                s.remove_prefix (1);
            if (s.empty ())
                return false;
            const auto [ptr, ec] = std::from_chars (s.data (), s.data () + s.size (), out);
            return ec == std::errc{} && ptr == s.data () + s.size () && std::isfinite (out);
        }

        inline void dump_canonical (const Json &j, std::string &out)
        {
            switch (j.type ())
            {
            case Json::value_t::object:
            {
                out += '{';
                bool first = true;
                for (const auto &[key, value] : j.items ())
                {
                    if (!first)
                        out += ',';
                    first = false;
                    out += Json (key).dump ();
                    out += ':';
                    dump_canonical (value, out);
                }
                out += '}';
                break;
            }
            case Json::value_t::array:
            {
                out += '[';
                for (std::size_t i = 0; i < j.size (); ++i)
                {
                    if (i > 0)
                        out += ',';
                    dump_canonical (j[i], out);
                }
                out += ']';
                break;
            }
            case Json::value_t::number_float: out += format_double (j.get<double> ()); break;
            default: out += j.dump (); break;
            }
        }
    } // namespace detail

    /// Compact JSON with sorted keys and %.17g numbers.
    [[nodiscard]] inline std::string to_canonical_json (const Json &j)
    {
        std::string out;
        detail::dump_canonical (j, out);
        return out;
    }

    /**
     * @brief Parses `a+bi` / `a-bi` (no spaces), e.g. `0+3.141592653589793i`, `-1e-3-2i`.
     *
     * The split is at the last sign that is not the exponent sign of `a`.
     */
    [[nodiscard]] inline Complex parse_complex (std::string_view text)
    {
        const auto fail = [&] { return ParseError ("malformed complex literal '" + std::string (text) + "', expected a+bi or a-bi"); };
        if (text.size () < 3 || text.back () != 'i')
            throw fail ();
        const std::string_view body = text.substr (0, text.size () - 1);

        std::size_t split = std::string_view::npos;
        for (std::size_t k = body.size () - 1; k > 0; --k)
        {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
            {
                split = k;
                break;
            }
        }
        if (split == std::string_view::npos)
            throw fail ();

        double re = 0.0;
        double im = 0.0;
        std::string_view imag_part = body.substr (split);
        const bool negative = imag_part.front () == '-';
        imag_part.remove_prefix (1);
        if (imag_part.empty () || imag_part.front () == '+' || imag_part.front () == '-')
            throw fail ();
        if (!detail::parse_real (body.substr (0, split), re) || !detail::parse_real (imag_part, im))
            throw fail ();
        return {re, negative ? -im : im};
    }

    /**
     * @brief Reads `re,im` rows. A first line that does not parse as two numbers is
     *        taken as a header; blank lines are skipped. Errors name the 1-based line.
     */
    [[nodiscard]] inline std::vector<Complex> read_path_csv (std::istream &in)
    {
        std::vector<Complex> points;
        std::string line;
        std::size_t row = 0;
        while (std::getline (in, line))
        {
            ++row;
            std::string_view s = detail::trim (line);
            if (s.empty ())
                continue;
            const auto comma = s.find (',');
            double re = 0.0;
            double im = 0.0;
            const bool ok = comma != std::string_view::npos && detail::parse_real (detail::trim (s.substr (0, comma)), re)
                            && detail::parse_real (detail::trim (s.substr (comma + 1)), im);
            if (!ok)
            {
                if (row == 1)
                    continue;
                throw ParseError ("row " + std::to_string (row) + ": expected 're,im', got '" + std::string (s) + "'", row);
            }
            points.emplace_back (re, im);
        }
        return points;
    }

    /// Reads a JSON array of [re, im] pairs; errors name the 1-based element.
    [[nodiscard]] inline std::vector<Complex> read_path_json (std::istream &in)
    {
        Json doc;
        try
        {
            doc = Json::parse (in);
        }
        catch (const Json::parse_error &e)
        {
            throw ParseError (std::string ("invalid JSON: ") + e.what ());
        }
        if (!doc.is_array ())
            throw ParseError ("path JSON must be an array of [re, im] pairs");
        std::vector<Complex> points;
        for (std::size_t k = 0; k < doc.size (); ++k)
        {
            const Json &e = doc[k];
            if (!e.is_array () || e.size () != 2 || !e[0].is_number () || !e[1].is_number ())
                throw ParseError ("row " + std::to_string (k + 1) + ": expected [re, im]", k + 1);
            points.emplace_back (e[0].get<double> (), e[1].get<double> ());
        }
        return points;
    }

    /// Dispatches on the extension: `.json` is JSON, anything else CSV.
    [[nodiscard]] inline std::vector<Complex> read_path_file (const std::string &path)
    {
        std::ifstream in (path);
        if (!in)
            throw IoError ("cannot open '" + path + "' for reading");
        try
        {
            const bool json = path.size () >= 5 && path.compare (path.size () - 5, 5, ".json") == 0;
            return json ? read_path_json (in) : read_path_csv (in);
        }
        catch (const ParseError &e)
        {
            throw ParseError (path + ": " + e.what (), e.row ());
        }
    }

    [[nodiscard]] inline Json complex_to_json (Complex z) { return Json::array ({z.real (), z.imag ()}); }

    [[nodiscard]] inline Json to_json (const HelicoidPoint &q) { return {{"x", q.x}, {"y", q.y}, {"h", q.h}}; }

    [[nodiscard]] inline Json to_json (const ConvergenceReport &r)
    {
        return {{"n", r.n}, {"M", r.M}, {"sup_observed", r.sup_observed}, {"sup_predicted", r.sup_predicted}, {"samples", r.samples}, {"pass", r.pass}};
    }

    [[nodiscard]] inline Json to_json (const MultiConvergenceReport &r)
    {
        Json components = Json::array ();
        for (const auto &c : r.components)
            components.push_back (to_json (c));
        return {{"components", components}, {"aggregate_observed", r.aggregate_observed}, {"aggregate_predicted", r.aggregate_predicted}, {"pass", r.pass}};
    }

    [[nodiscard]] inline Json to_json (const LiftedPath &lifted)
    {
        Json points = Json::array ();
        for (const Complex z : lifted.points)
            points.push_back (complex_to_json (z));
        return {{"points", points}, {"start_sheet", lifted.start_sheet}, {"end_sheet", lifted.end_sheet}};
    }

    /// {"planar": [[re, im], ...], "heights": [...]}
    [[nodiscard]] inline Json to_json (const MultiHelicoidPoint &q)
    {
        Json planar = Json::array ();
        for (const Complex z : q.planar)
            planar.push_back (complex_to_json (z));
        return {{"planar", planar}, {"heights", q.heights}};
    }

    [[nodiscard]] inline MultiHelicoidPoint multi_point_from_json (const Json &j)
    {
        if (!j.is_object () || !j.contains ("planar") || !j.contains ("heights") || !j["planar"].is_array () || !j["heights"].is_array ())
            throw ParseError ("multi point needs arrays 'planar' and 'heights'");
        MultiHelicoidPoint q;
        for (std::size_t k = 0; k < j["planar"].size (); ++k)
        {
            const Json &e = j["planar"][k];
            if (!e.is_array () || e.size () != 2 || !e[0].is_number () || !e[1].is_number ())
                throw ParseError ("planar[" + std::to_string (k) + "]: expected [re, im]", k + 1);
            q.planar.emplace_back (e[0].get<double> (), e[1].get<double> ());
        }
        for (std::size_t k = 0; k < j["heights"].size (); ++k)
        {
            if (!j["heights"][k].is_number ())
                throw ParseError ("heights[" + std::to_string (k) + "]: expected a number", k + 1);
            q.heights.push_back (j["heights"][k].get<double> ());
        }
        if (q.planar.size () != q.heights.size ())
            throw Error (ErrorKind::DimensionMismatch, "planar and heights differ in length");
        return q;
    }

    /**
     * @brief Wavefront OBJ of a sampled helicoid grid.
     *
     * `v x y h` per sample in row-major order, then two faces per grid quad split
     * along the (i, j) -> (i+1, j+1) diagonal; 1-based indices, LF endings.
     */
    inline void write_obj (std::ostream &out, std::span<const HelicoidPoint> points, const GridSpec &spec)
    {
        if (points.size () != spec.size ())
            throw Error (ErrorKind::DimensionMismatch, "point count does not match the grid");
        for (const HelicoidPoint &q : points)
            out << "v " << format_double (q.x) << ' ' << format_double (q.y) << ' ' << format_double (q.h) << '\n';
        const auto index = [&] (std::size_t i, std::size_t j) { return i * spec.nv + j + 1; };
        for (std::size_t i = 0; i + 1 < spec.nu; ++i)
            for (std::size_t j = 0; j + 1 < spec.nv; ++j)
            {
                out << "f " << index (i, j) << ' ' << index (i + 1, j) << ' ' << index (i + 1, j + 1) << '\n';
                out << "f " << index (i, j) << ' ' << index (i + 1, j + 1) << ' ' << index (i, j + 1) << '\n';
            }
    }

} // namespace helicover
