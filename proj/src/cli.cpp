#include "paradot/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>

#include <CLI11.hpp>

#include "paradot/errors.hpp"
#include "paradot/experiments.hpp"

namespace paradot
{
namespace
{
std::uint64_t env_limit(char const* name, std::uint64_t fallback)
{
    char const* raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    std::uint64_t value = 0;
    std::string_view const text(raw);
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw InvalidArgument(std::string(name) + " must be a positive integer");
    return value;
}

FieldBudget field_budget(bool allow_large)
{
    FieldBudget b;
    if (allow_large)
    {
        b.max_points = std::numeric_limits<std::uint64_t>::max();
        b.max_pairs = std::numeric_limits<std::uint64_t>::max();
    }
    b.max_points = env_limit("PARADOT_FF_MAX_POINTS", b.max_points);
    b.max_pairs = env_limit("PARADOT_FF_MAX_PAIRS", b.max_pairs);
    return b;
}

std::string utc_now()
{
    auto const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Command
{
    CLI::App* app = nullptr;
    CLI::Option* seed = nullptr;
    bool randomized = false;
    std::function<Report()> action;
};

template<class T>
CLI::Option* list_option(CLI::App* app, std::string name, std::vector<T>& v, std::string help)
{
    return app->add_option(std::move(name), v, std::move(help))->delimiter(',')->capture_default_str();
}
}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Numerical experiments for paraboloid-lift distance set estimates", "paradot"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 0;
    bool allow_large = false;
    std::vector<Command> commands;
    commands.reserve(16);

    auto add = [&](std::string name, std::string help, bool randomized) -> Command& {
        Command cmd;
        cmd.app = app.add_subcommand(std::move(name), std::move(help));
        cmd.randomized = randomized;
        cmd.app->add_option("--format", format, "Report format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd.app->add_option("--out", out_path, "Write the report to this file instead of stdout");
        cmd.seed = cmd.app->add_option("--seed", seed,
                                       randomized ? "Random seed (required)" : "Random seed");
        commands.push_back(std::move(cmd));
        return commands.back();
    };

    //-----------------------------------------------------------------------//
    IdentityConfig identity;
    std::vector<double> identity_a;
    {
        auto& c = add("identity-check",
                      "Lift dot-product identity for the paraboloid map: randomized float "
                      "residuals plus exact rational cases",
                      true);
        list_option(c.app, "--d", identity.dims, "Ambient dimensions");
        auto* a = list_option(c.app, "--a", identity_a,
                              "Fixed translation a_bar..., a_d (random per sample if absent)");
        c.app->add_option("--samples", identity.samples, "Random samples per dimension")
            ->capture_default_str();
        c.app->add_option("--rational-cases", identity.rational_cases)->capture_default_str();
        c.app->add_option("--tol", identity.tolerance, "Residual tolerance")->capture_default_str();
        c.app->add_option("--min-weight", identity.min_weight, "Lower bound on ||x|^2 + a_d|")
            ->capture_default_str();
        c.app->add_option("--range", identity.range, "Coordinate sampling range")
            ->capture_default_str();
        c.action = [&, a] {
            if (a->count())
                identity.a = identity_a;
            identity.seed = seed;
            return identity_experiment(identity);
        };
    }

    JacobianConfig jacobian;
    {
        auto& c = add("jacobian-check",
                      "Closed-form Jacobian of the lift map against central differences, and "
                      "its vanishing on the degenerate sphere",
                      true);
        list_option(c.app, "--d", jacobian.dims, "Ambient dimensions");
        c.app->add_option("--samples", jacobian.samples)->capture_default_str();
        c.app->add_option("--sphere-points", jacobian.sphere_points)->capture_default_str();
        c.app->add_option("--step", jacobian.step, "Finite-difference step")->capture_default_str();
        c.app->add_option("--rel-tol", jacobian.rel_tol)->capture_default_str();
        c.app->add_option("--abs-tol", jacobian.abs_tol)->capture_default_str();
        c.app->add_option("--min-weight", jacobian.min_weight)->capture_default_str();
        c.app->add_option("--range", jacobian.range)->capture_default_str();
        c.action = [&] {
            jacobian.seed = seed;
            return jacobian_experiment(jacobian);
        };
    }

    RegionConfig region;
    {
        auto& c = add("region-report",
                      "Singular sphere and degenerate hyperplane of the lift map for one "
                      "translation",
                      false);
        list_option(c.app, "--a", region.a, "Translation a_bar..., a_d");
        auto* d = c.app->add_option("--d", region.d, "Ambient dimension (defaults to len(a))");
        c.app->add_option("--tol", region.tolerance)->capture_default_str();
        c.action = [&, d] {
            if (!d->count())
                region.d = static_cast<int>(region.a.size());
            return region_experiment(region);
        };
    }

    RotationConfig rotation;
    {
        auto& c = add("rotation-check",
                      "Degenerate points on the hyperplane and the rotation that flattens it", true);
        c.app->add_option("--d", rotation.d)->capture_default_str();
        c.app->add_option("--translations", rotation.translations)->capture_default_str();
        c.app->add_option("--points", rotation.points, "Points per translation")
            ->capture_default_str();
        c.app->add_option("--plane-tol", rotation.plane_tol)->capture_default_str();
        c.app->add_option("--rotation-tol", rotation.rotation_tol)->capture_default_str();
        c.app->add_option("--range", rotation.range)->capture_default_str();
        c.action = [&] {
            rotation.seed = seed;
            return rotation_experiment(rotation);
        };
    }

    //-----------------------------------------------------------------------//
    TubeConfig tube;
    {
        auto& c = add("tube-check",
                      "Extent of delta-tubes through the origin meeting a curved surface, "
                      "over dyadic delta",
                      true);
        c.app->add_option("--surface", tube.surface)
            ->check(CLI::IsMember({"sphere", "ellipsoid", "visible-sphere"}))
            ->capture_default_str();
        list_option(c.app, "--center", tube.center, "Surface center");
        c.app->add_option("--radius", tube.radius)->capture_default_str();
        list_option(c.app, "--semi-axes", tube.semi_axes, "Ellipsoid semi-axes");
        c.app->add_option("--margin", tube.margin, "Angular margin from tangency")
            ->capture_default_str();
        c.app->add_option("--kmin", tube.kmin)->capture_default_str();
        c.app->add_option("--kmax", tube.kmax)->capture_default_str();
        c.app->add_option("--directions", tube.directions)->capture_default_str();
        c.app->add_option("--resolution", tube.resolution, "Cap samples per tube")
            ->capture_default_str();
        c.app->add_option("--ratio-tol", tube.ratio_tol)->capture_default_str();
        c.action = [&] {
            tube.seed = seed;
            return tube_experiment(tube);
        };
    }

    TangentConfig tangent;
    {
        auto& c = add("tangent-check",
                      "Tube tangent to a circle: extent ~ delta^(1/2) and ball cover count", false);
        list_option(c.app, "--center", tangent.center, "Circle center");
        c.app->add_option("--radius", tangent.radius)->capture_default_str();
        c.app->add_option("--base", tangent.base, "delta = base^-k")->capture_default_str();
        c.app->add_option("--kmin", tangent.kmin)->capture_default_str();
        c.app->add_option("--kmax", tangent.kmax)->capture_default_str();
        c.app->add_option("--cover-samples", tangent.cover_samples)->capture_default_str();
        c.app->add_option("--slope-tol", tangent.slope_tol)->capture_default_str();
        c.app->add_option("--cover-slope-tol", tangent.cover_slope_tol)->capture_default_str();
        c.action = [&] { return tangent_experiment(tangent); };
    }

    //-----------------------------------------------------------------------//
    FractalCoverConfig fractal;
    {
        auto& c = add("fractal-cover",
                      "Dot-product interval covers of lattice-approximation sets, Euclidean "
                      "and paraboloid, with log-log slope in q",
                      false);
        c.app->add_option("--mode", fractal.mode)
            ->check(CLI::IsMember({"euclidean", "paraboloid"}))
            ->capture_default_str();
        c.app->add_option("--s", fractal.s)->capture_default_str();
        list_option(c.app, "--q", fractal.qs, "Lattice parameters");
        c.app->add_option("--dim", fractal.dim)->capture_default_str();
        c.app->add_option("--soundness", fractal.soundness,
                          "Sampled pairs per q (needs --seed)")
            ->capture_default_str();
        c.app->add_option("--slope-tol", fractal.slope_tol)->capture_default_str();
        c.action = [&, opt = c.seed] {
            if (opt->count())
                fractal.seed = seed;
            return fractal_cover_experiment(fractal);
        };
    }

    BoxDimConfig boxdim;
    std::vector<std::uint64_t> boxdim_seq;
    double boxdim_target = 0;
    {
        auto& c = add("boxdim", "Dyadic box-counting dimension of lattice-approximation sets",
                      false);
        c.app->add_option("--s", boxdim.s)->capture_default_str();
        c.app->add_option("--q", boxdim.q, "Initial lattice parameter")->capture_default_str();
        c.app->add_option("--dim", boxdim.dim)->capture_default_str();
        c.app->add_option("--depth", boxdim.depth)->capture_default_str();
        auto* seq = list_option(c.app, "--q-sequence", boxdim_seq, "Explicit lattice parameters");
        c.app->add_flag("--cube", boxdim.cube, "Estimate the full unit cube instead");
        c.app->add_option("--cube-levels", boxdim.cube_levels)->capture_default_str();
        auto* target = c.app->add_option("--target", boxdim_target,
                                         "Expected dimension (default s*dim, or dim for --cube)");
        c.app->add_option("--tol", boxdim.tolerance)->capture_default_str();
        c.action = [&, seq, target] {
            if (seq->count())
                boxdim.q_sequence = boxdim_seq;
            if (target->count())
                boxdim.target = boxdim_target;
            return boxdim_experiment(boxdim);
        };
    }

    ParabolaConfig parabola;
    {
        auto& c = add("parabola-check",
                      "Planar parabola lift identity, randomized and exact", true);
        c.app->add_option("--samples", parabola.samples)->capture_default_str();
        c.app->add_option("--rational-cases", parabola.rational_cases)->capture_default_str();
        c.app->add_option("--tol", parabola.tolerance)->capture_default_str();
        c.action = [&] {
            parabola.seed = seed;
            return parabola_experiment(parabola);
        };
    }

    //-----------------------------------------------------------------------//
    FfScanConfig scan;
    {
        auto& c = add("ff-scan",
                      "Dot-product sets of random subsets of the finite-field paraboloid, "
                      "sized around p^(5/4); --seed needed unless every size is the full set",
                      false);
        list_option(c.app, "--p", scan.primes, "Primes");
        c.app->add_option("--d", scan.d)->capture_default_str();
        list_option(c.app, "--sizes", scan.sizes, "Subset sizes");
        c.app->add_option("--trials", scan.trials)->capture_default_str();
        c.app->add_flag("--allow-large", allow_large, "Lift the finite-field size budget");
        c.action = [&, opt = c.seed] {
            if (opt->count())
                scan.seed = seed;
            scan.budget = field_budget(allow_large);
            return ff_scan_experiment(scan);
        };
    }

    FfIsotropicConfig isotropic;
    {
        auto& c = add("ff-isotropic", "Nonzero vectors with x.x = 0 over F_p", false);
        list_option(c.app, "--p", isotropic.primes, "Primes");
        c.app->add_option("--d", isotropic.d)->capture_default_str();
        c.app->add_flag("--allow-large", allow_large, "Lift the finite-field size budget");
        c.action = [&] {
            isotropic.budget = field_budget(allow_large);
            return ff_isotropic_experiment(isotropic);
        };
    }

    PushforwardConfig push;
    {
        auto& c = add("pushforward-check",
                      "Fourier transform of the dot-product push-forward of atomic measures", true);
        c.app->add_option("--measures", push.measures)->capture_default_str();
        c.app->add_option("--atoms", push.atoms)->capture_default_str();
        c.app->add_option("--dim", push.dim)->capture_default_str();
        c.app->add_option("--t-values", push.t_values)->capture_default_str();
        c.app->add_option("--t-max", push.t_max)->capture_default_str();
        c.app->add_option("--tol", push.tolerance)->capture_default_str();
        c.action = [&] {
            push.seed = seed;
            return pushforward_experiment(push);
        };
    }

    //-----------------------------------------------------------------------//
    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    Command const* chosen = nullptr;
    for (auto const& c : commands)
    {
        if (c.app->parsed())
            chosen = &c;
    }
    if (chosen->randomized && !chosen->seed->count())
    {
        err << "error: " << chosen->app->get_name() << " is randomized; pass --seed\n";
        return exit_usage;
    }

    Report report;
    try
    {
        report = chosen->action();
    }
    catch (Error const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    auto const fmt = format == "json" ? ReportFormat::json : ReportFormat::csv;
    err << "# paradot " << report.command << " generated " << utc_now() << '\n';
    if (out_path.empty())
    {
        write_report(report, fmt, out);
    }
    else
    {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
        {
            err << "error: cannot open " << out_path << '\n';
            return exit_usage;
        }
        write_report(report, fmt, file);
        if (!file)
        {
            err << "error: failed writing " << out_path << '\n';
            return exit_usage;
        }
    }
    return report.passed ? exit_pass : exit_fail;
}

}  // namespace paradot
