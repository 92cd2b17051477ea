#pragma once
/**
 * @file   helicover_cli.hpp
 * @brief  Command-line front end. `run` is the whole program minus process
 *         plumbing, so tests can drive it in-process.
 *
 * Exit codes: 0 success, 1 usage or input, 2 numeric domain, 3 I/O.
 */

#include <helicover/helicover.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace helicover::cli
{
    enum ExitCode : int
    {
        kOk = 0,
        kUsage = 1,
        kDomain = 2,
        kIo = 3,
    };

    [[nodiscard]] inline int exit_code_for (ErrorKind kind) noexcept
    {
        switch (kind)
        {
        case ErrorKind::ZeroMagnitude:
        case ErrorKind::Overflow:
        case ErrorKind::NotOnSurface: return kDomain;
        default: return kUsage;
        }
    }

    /// HELICOVER_EPS sets abs_eps and rel_eps together; `--eps` wins over it.
    [[nodiscard]] inline Tolerance resolve_tolerance (std::optional<double> flag)
    {
        Tolerance tol;
        std::optional<double> eps = flag;
        if (!eps)
            if (const char *env = std::getenv ("HELICOVER_EPS"); env != nullptr && *env != '\0')
            {
                double value = 0.0;
                if (!detail::parse_real (env, value))
                    throw ParseError (std::string ("HELICOVER_EPS is not a number: '") + env + "'");
                eps = value;
            }
        if (eps)
            tol = Tolerance{*eps, *eps};
        if (!tol.valid ())
            throw ParseError ("tolerance override must be finite and > 0");
        return tol;
    }

    namespace detail
    {
        struct PitchArgs
        {
            std::optional<double> a;
            std::optional<unsigned long> n;

            void attach (CLI::App &cmd)
            {
                auto *opt_a = cmd.add_option ("--a", a, "helicoid pitch a > 0");
                auto *opt_n = cmd.add_option ("--n", n, "approximant index; a = 1/n");
                opt_a->excludes (opt_n);
            }

            [[nodiscard]] HelicoidParams params () const
            {
                if (n)
                    return HelicoidParams::from_n (*n);
                if (!a)
                    throw ParseError ("one of --a or --n is required");
                return HelicoidParams (*a);
            }
        };

        struct GridArgs
        {
            GridSpec spec{0.0, 1.0, 0.0, kTwoPi, 32, 256};

            void attach (CLI::App &cmd)
            {
                cmd.add_option ("--u-min", spec.u_min)->capture_default_str ();
                cmd.add_option ("--u-max", spec.u_max)->capture_default_str ();
                cmd.add_option ("--v-min", spec.v_min)->capture_default_str ();
                cmd.add_option ("--v-max", spec.v_max)->capture_default_str ();
                cmd.add_option ("--nu", spec.nu)->capture_default_str ();
                cmd.add_option ("--nv", spec.nv)->capture_default_str ();
            }
        };

        inline void emit (std::ostream &out, const Json &j) { out << to_canonical_json (j) << '\n'; }

        inline void write_file (const std::string &path, const std::string &contents)
        {
            std::ofstream file (path, std::ios::binary | std::ios::trunc);
            if (!file)
                throw IoError ("cannot open '" + path + "' for writing");
            file << contents;
            file.flush ();
            if (!file)
                throw IoError ("failed writing '" + path + "'");
        }

        inline Json loop_entry (const std::string &source, const SampledPath &path, std::optional<long> expected, const LiftPolicy &policy)
        {
            const long monodromy = monodromy_check (path, 0, policy);
            const long winding = winding_number (path, policy);
            Json entry{{"source", source}, {"monodromy", monodromy}, {"winding", winding}};
            bool pass = monodromy == winding;
            if (expected)
            {
                entry["expected"] = *expected;
                pass = pass && winding == *expected;
            }
            entry["pass"] = pass;
            return entry;
        }
    } // namespace detail

    /// Runs one command line (argv[0] is the program name); returns the exit code.
    inline int run (int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"helicover: helicoid approximations of the Riemann surface of the logarithm"};
        app.require_subcommand (1);
        std::optional<double> eps;
        app.add_option ("--eps", eps, "absolute and relative tolerance (default 1e-12, or HELICOVER_EPS)");

        // eval
        auto *eval = app.add_subcommand ("eval", "evaluate Exp_a(z) -> {x, y, h}");
        detail::PitchArgs eval_pitch;
        eval_pitch.attach (*eval);
        std::string eval_z;
        eval->add_option ("--z", eval_z, "complex literal a+bi")->required ();

        // invert
        auto *invert = app.add_subcommand ("invert", "invert a helicoid point -> {re, im, sheet}");
        invert->set_help_flag ("--help", "print this help message and exit"); // frees -h for the height
        detail::PitchArgs invert_pitch;
        invert_pitch.attach (*invert);
        double inv_x = 0.0;
        double inv_y = 0.0;
        double inv_h = 0.0;
        invert->add_option ("--x", inv_x)->required ();
        invert->add_option ("--y", inv_y)->required ();
        invert->add_option ("--h", inv_h)->required ();

        // converge
        auto *converge = app.add_subcommand ("converge", "sup gap of Exp_n vs exp on the strip |Im z| <= M");
        unsigned long conv_n = 1;
        std::vector<double> conv_m;
        double conv_u_min = -1.0;
        double conv_u_max = 1.0;
        std::size_t conv_nu = 201;
        std::size_t conv_nv = 201;
        converge->add_option ("--n", conv_n, "approximant index")->required ();
        converge->add_option ("--M", conv_m, "strip bound(s); several values run the multi-strip report")->required ();
        converge->add_option ("--u-min", conv_u_min)->capture_default_str ();
        converge->add_option ("--u-max", conv_u_max)->capture_default_str ();
        converge->add_option ("--nu", conv_nu)->capture_default_str ();
        converge->add_option ("--nv", conv_nv)->capture_default_str ();

        // lift
        auto *lift = app.add_subcommand ("lift", "lift a sampled path through exp");
        std::string lift_input;
        long lift_sheet = 0;
        bool lift_closed = false;
        double lift_margin = 0.1;
        lift->add_option ("--input", lift_input, "CSV (re,im) or .json array of [re, im]")->required ();
        lift->add_option ("--start-sheet", lift_sheet)->capture_default_str ();
        lift->add_flag ("--closed", lift_closed, "treat the path as a loop and report monodromy");
        lift->add_option ("--margin", lift_margin, "step margin below pi (rad)")->capture_default_str ();

        // mesh
        auto *mesh = app.add_subcommand ("mesh", "write the sampled helicoid as Wavefront OBJ");
        detail::PitchArgs mesh_pitch;
        mesh_pitch.attach (*mesh);
        detail::GridArgs mesh_grid;
        mesh_grid.attach (*mesh);
        std::string mesh_out;
        mesh->add_option ("--out", mesh_out, "output .obj path")->required ();

        // report
        auto *report = app.add_subcommand ("report", "seeded bundle of injectivity, strip and monodromy diagnostics");
        std::uint64_t rep_seed = 42;
        std::vector<unsigned long> rep_schedule{1, 10, 100};
        double rep_m = kPi;
        double rep_u_min = -1.0;
        double rep_u_max = 1.0;
        std::size_t rep_nu = 101;
        std::size_t rep_nv = 101;
        std::size_t rep_samples = 20;
        std::size_t rep_loops = 20;
        std::vector<std::string> rep_paths;
        report->add_option ("--seed", rep_seed)->capture_default_str ();
        report->add_option ("--n", rep_schedule, "increasing n schedule")->capture_default_str ();
        report->add_option ("--M", rep_m)->capture_default_str ();
        report->add_option ("--u-min", rep_u_min)->capture_default_str ();
        report->add_option ("--u-max", rep_u_max)->capture_default_str ();
        report->add_option ("--nu", rep_nu)->capture_default_str ();
        report->add_option ("--nv", rep_nv)->capture_default_str ();
        report->add_option ("--samples", rep_samples, "random points for the injectivity table")->capture_default_str ();
        report->add_option ("--loops", rep_loops, "random loops for the monodromy check")->capture_default_str ();
        report->add_option ("--path", rep_paths, "closed path files to include");

        try
        {
            app.parse (argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            return app.exit (e, out, err) == 0 ? kOk : kUsage;
        }

        try
        {
            const Tolerance tol = resolve_tolerance (eps);

            if (*eval)
            {
                const HelicoidPoint q = exp_field (eval_pitch.params (), parse_complex (eval_z));
                detail::emit (out, to_json (q));
            }
            else if (*invert)
            {
                const HelicoidPoint q{inv_x, inv_y, inv_h};
                const Complex z = invert_pitch.n ? log_field (*invert_pitch.n, q, tol) : log_general (invert_pitch.params (), q, tol);
                detail::emit (out, {{"re", z.real ()}, {"im", z.imag ()}, {"sheet", sheet_index (z)}});
            }
            else if (*converge)
            {
                if (conv_m.size () == 1)
                    detail::emit (out, to_json (strip_convergence (conv_n, StripSpec{conv_m[0], conv_u_min, conv_u_max}, conv_nu, conv_nv, tol)));
                else
                {
                    std::vector<StripSpec> strips;
                    for (const double m : conv_m)
                        strips.push_back ({m, conv_u_min, conv_u_max});
                    detail::emit (out, to_json (multi_strip_convergence (conv_n, strips, conv_nu, conv_nv, tol)));
                }
            }
            else if (*lift)
            {
                const SampledPath path{read_path_file (lift_input), lift_closed};
                const LiftPolicy policy{lift_margin, tol};
                const LiftedPath lifted = lift_path (path, lift_sheet, policy);
                Json j = to_json (lifted);
                if (lift_closed)
                {
                    const long winding = winding_number (path, policy);
                    const long monodromy = lifted.end_sheet - lifted.start_sheet;
                    j["monodromy"] = monodromy;
                    j["winding"] = winding;
                    j["agree"] = monodromy == winding;
                }
                detail::emit (out, j);
            }
            else if (*mesh)
            {
                const HelicoidParams p = mesh_pitch.params ();
                const auto points = sample_surface (p, mesh_grid.spec);
                std::ostringstream obj;
                write_obj (obj, points, mesh_grid.spec);
                detail::write_file (mesh_out, obj.str ());
                const std::size_t faces = 2 * (mesh_grid.spec.nu - 1) * (mesh_grid.spec.nv - 1);
                detail::emit (out, {{"out", mesh_out}, {"vertices", points.size ()}, {"faces", faces}});
            }
            else if (*report)
            {
                Rng rng (rep_seed);
                Json doc{{"seed", rep_seed}};
                bool pass = true;

                std::vector<Complex> zs{{0.0, 0.0}, {0.0, kTwoPi}};
                while (zs.size () < rep_samples + 2)
                {
                    const Complex z = rng.complex_in_box (2.0, 10.0);
                    if (std::find (zs.begin (), zs.end (), z) == zs.end ())
                        zs.push_back (z);
                }
                const InjectivityTable table = injectivity_in_limit (zs, rep_schedule, tol);
                double worst = 0.0;
                for (const auto &row : table.rows)
                    if (row.bound > 0.0)
                        worst = std::max (worst, row.gap / row.bound);
                doc["injectivity"] = {{"samples", zs.size ()}, {"pairs", table.rows.size ()}, {"schedule", rep_schedule},
                                      {"max_gap_over_bound", worst}, {"pass", table.all_hold}};
                pass = pass && table.all_hold;

                Json strips = Json::array ();
                for (const unsigned long n : rep_schedule)
                {
                    const ConvergenceReport r = strip_convergence (n, StripSpec{rep_m, rep_u_min, rep_u_max}, rep_nu, rep_nv, tol);
                    pass = pass && r.pass;
                    strips.push_back (to_json (r));
                }
                doc["strip"] = strips;

                const LiftPolicy policy{0.1, tol};
                Json loops = Json::array ();
                for (std::size_t k = 0; k < rep_loops; ++k)
                {
                    const long w = rng.integer (-5, 5);
                    const KnownLoop loop = random_arc_loop (rng, w);
                    loops.push_back (detail::loop_entry ("random:" + std::to_string (k), loop.path, w, policy));
                }
                for (const std::string &file : rep_paths)
                    loops.push_back (detail::loop_entry (file, SampledPath{read_path_file (file), true}, std::nullopt, policy));
                for (const auto &entry : loops)
                    pass = pass && entry["pass"].get<bool> ();
                doc["monodromy"] = loops;
                doc["pass"] = pass;
                detail::emit (out, doc);
            }
            return kOk;
        }
        catch (const Error &e)
        {
            err << "error: " << e.what () << '\n';
            return exit_code_for (e.kind ());
        }
        catch (const ParseError &e)
        {
            err << "error: " << e.what () << '\n';
            return kUsage;
        }
        catch (const IoError &e)
        {
            err << "error: " << e.what () << '\n';
            return kIo;
        }
    }

    /// Convenience overload for tests: args excludes the program name.
    inline int run (const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        std::vector<const char *> argv{"helicover"};
        for (const auto &a : args)
            argv.push_back (a.c_str ());
        return run (static_cast<int> (argv.size ()), argv.data (), out, err);
    }

} // namespace helicover::cli
