#include "paradot/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "paradot/core_geometry.hpp"
#include "paradot/errors.hpp"
#include "paradot/fractal_lab.hpp"
#include "paradot/measure_fourier.hpp"
#include "paradot/numeric.hpp"
#include "paradot/tube_geometry.hpp"

namespace paradot
{
namespace
{
constexpr int kAttemptsPerSample = 1000;

Point uniform_point(Rng& rng, std::size_t dim, double range)
{
    Point p(dim);
    for (auto& c : p)
        c = rng.uniform(-range, range);
    return p;
}

Point unit_vector(Rng& rng, std::size_t dim)
{
    Point p(dim);
    double n = 0;
    while (!(n > 1e-12))
    {
        for (auto& c : p)
            c = rng.normal();
        n = std::sqrt(squared_norm(p));
    }
    p *= 1 / n;
    return p;
}

Rational small_rational(Rng& rng)
{
    auto const num = static_cast<long long>(rng.below(41)) - 20;
    auto const den = static_cast<long long>(rng.below(9)) + 1;
    return Rational(num, den);
}

RationalPoint rational_point(Rng& rng, std::size_t dim)
{
    RationalPoint p(dim);
    for (auto& c : p)
        c = small_rational(rng);
    return p;
}

Json to_json(Point const& p)
{
    Json out = Json::array();
    for (double c : p)
        out.push_back(c);
    return out;
}

TranslationVector translation_from(std::vector<double> const& a, int d)
{
    if (a.size() != static_cast<std::size_t>(d))
    {
        throw DimensionMismatch("translation needs " + std::to_string(d) + " entries, got "
                                + std::to_string(a.size()));
    }
    return TranslationVector(Point(std::vector<double>(a.begin(), a.end() - 1)), a.back());
}

RationalTranslationVector exact_translation(TranslationVector const& a)
{
    RationalPoint abar(a.a_bar.dim());
    for (std::size_t i = 0; i < abar.dim(); ++i)
        abar[i] = Rational(a.a_bar[i]);
    return RationalTranslationVector(abar, Rational(a.a_d));
}

void require_dim(int d, int lowest)
{
    if (d < lowest)
        throw InvalidArgument("dimension must be at least " + std::to_string(lowest));
}

void require_positive(int value, char const* what)
{
    if (value < 1)
        throw InvalidArgument(std::string(what) + " must be positive");
}

// Draw until the predicate holds, bounded so bad configurations fail loudly.
template<class Draw, class Accept>
auto draw_until(Draw&& draw, Accept&& accept)
{
    for (int attempt = 0; attempt < kAttemptsPerSample; ++attempt)
    {
        auto value = draw();
        if (accept(value))
            return value;
    }
    throw InvalidArgument("could not draw an admissible sample; widen the sampling range");
}
}  // namespace

//---------------------------------------------------------------------------//
Report identity_experiment(IdentityConfig const& cfg)
{
    require_positive(cfg.samples, "samples");
    if (cfg.a && cfg.dims.size() != 1)
        throw InvalidArgument("a fixed translation needs exactly one dimension");

    Report report;
    report.command = "identity-check";
    auto& table = report.table(
        "identity", {"d", "samples", "max_residual", "rational_cases", "rational_nonzero"});
    Rng rng(cfg.seed);
    double overall = 0;
    int nonzero_total = 0;
    for (int d : cfg.dims)
    {
        require_dim(d, 2);
        auto const m = static_cast<std::size_t>(d - 1);
        std::optional<TranslationVector> fixed;
        if (cfg.a)
            fixed = translation_from(*cfg.a, d);

        double worst = 0;
        for (int k = 0; k < cfg.samples; ++k)
        {
            struct Draw
            {
                Point x, y;
                TranslationVector a;
            };
            auto const s = draw_until(
                [&] {
                    Point x = uniform_point(rng, m, cfg.range);
                    Point y = uniform_point(rng, m, cfg.range);
                    TranslationVector a = fixed ? *fixed
                                                : TranslationVector(uniform_point(rng, m, cfg.range),
                                                                    rng.uniform(-cfg.range, cfg.range));
                    return Draw{x, y, a};
                },
                [&](Draw const& s) {
                    return std::fabs(squared_norm(s.x) + s.a.a_d) >= cfg.min_weight;
                });
            worst = std::max(worst, std::fabs(identity_residual(s.x, s.y, s.a)));
        }

        int nonzero = 0;
        for (int k = 0; k < cfg.rational_cases; ++k)
        {
            struct Draw
            {
                RationalPoint x, y;
                RationalTranslationVector a;
            };
            auto const s = draw_until(
                [&] {
                    RationalPoint x = rational_point(rng, m);
                    RationalPoint y = rational_point(rng, m);
                    RationalTranslationVector a
                        = fixed ? exact_translation(*fixed)
                                : RationalTranslationVector(rational_point(rng, m),
                                                            small_rational(rng));
                    return Draw{x, y, a};
                },
                [](Draw const& s) { return squared_norm(s.x) + s.a.a_d != 0; });
            if (identity_residual(s.x, s.y, s.a) != 0)
                ++nonzero;
        }
        table.add_row({d, cfg.samples, worst, cfg.rational_cases, nonzero});
        overall = std::max(overall, worst);
        nonzero_total += nonzero;
    }
    report.note("max_residual", overall);
    report.note("tolerance", cfg.tolerance);
    report.check("residual_within_tolerance", overall < cfg.tolerance);
    report.check("rational_residual_exact", nonzero_total == 0);
    return report;
}

Report jacobian_experiment(JacobianConfig const& cfg)
{
    require_positive(cfg.samples, "samples");
    Report report;
    report.command = "jacobian-check";
    auto& table = report.table("jacobian", {"d", "samples", "max_abs_error", "max_rel_error",
                                            "max_error_over_allowance", "sphere_points",
                                            "sphere_nonzero"});
    Rng rng(cfg.seed);
    double worst_excess = 0;
    int nonzero_total = 0;
    for (int d : cfg.dims)
    {
        require_dim(d, 2);
        auto const m = static_cast<std::size_t>(d - 1);
        double max_abs = 0, max_rel = 0, max_excess = 0;
        for (int k = 0; k < cfg.samples; ++k)
        {
            auto const s = draw_until(
                [&] {
                    return std::pair{uniform_point(rng, m, cfg.range),
                                     TranslationVector(uniform_point(rng, m, cfg.range),
                                                       rng.uniform(-cfg.range, cfg.range))};
                },
                [&](auto const& s) {
                    return std::fabs(squared_norm(s.first) + s.second.a_d) >= cfg.min_weight;
                });
            double const closed = jacobian_closed(s.first, s.second);
            double const numeric = jacobian_numeric(s.first, s.second, cfg.step);
            double const err = std::fabs(closed - numeric);
            double const allowance = std::max(cfg.rel_tol * std::fabs(closed), cfg.abs_tol);
            max_abs = std::max(max_abs, err);
            if (closed != 0)
                max_rel = std::max(max_rel, err / std::fabs(closed));
            max_excess = std::max(max_excess, err / allowance);
        }

        // Rational points of the degenerate sphere: pick y_bar and a_bar, then
        // a_d = |y_bar|^2 - |a_bar|^2 puts x_bar = y_bar - a_bar on the sphere.
        int nonzero = 0;
        for (int k = 0; k < cfg.sphere_points; ++k)
        {
            auto const s = draw_until(
                [&] {
                    RationalPoint abar = rational_point(rng, m);
                    RationalPoint y = rational_point(rng, m);
                    Rational const a_d = squared_norm(y) - squared_norm(abar);
                    return std::pair{RationalPoint(y - abar), RationalTranslationVector(abar, a_d)};
                },
                [](auto const& s) { return squared_norm(s.first) + s.second.a_d != 0; });
            if (jacobian_closed(s.first, s.second) != 0)
                ++nonzero;
        }
        table.add_row({d, cfg.samples, max_abs, max_rel, max_excess, cfg.sphere_points, nonzero});
        worst_excess = std::max(worst_excess, max_excess);
        nonzero_total += nonzero;
    }
    report.note("rel_tol", cfg.rel_tol);
    report.note("abs_tol", cfg.abs_tol);
    report.note("step", cfg.step);
    report.check("closed_matches_numeric", worst_excess <= 1);
    report.check("zero_on_degenerate_sphere", nonzero_total == 0);
    return report;
}

Report region_experiment(RegionConfig const& cfg)
{
    TranslationVector const a = translation_from(cfg.a, cfg.d);
    auto const r = region_report(a, cfg.d);

    Report report;
    report.command = "region-report";
    auto& table = report.table("region", {"quantity", "value"});
    table.add_row({"singularity", r.singularity ? "sphere" : "none"});
    if (r.singularity)
    {
        table.add_row({"singular_center", to_json(r.singularity->center)});
        table.add_row({"singular_radius", r.singularity->radius});
        if (r.singularity->tangent_radius)
            table.add_row({"tangent_radius", *r.singularity->tangent_radius});
    }
    table.add_row({"origin_position", to_string(r.origin_position)});
    table.add_row({"degenerate", r.degenerate ? "hyperplane" : "none"});
    bool distance_ok = true;
    if (r.degenerate)
    {
        auto const& h = *r.degenerate;
        double const oracle
            = distance_to_hyperplane(h.hyperplane_normal, h.hyperplane_offset, Point(a.ambient_dim()));
        table.add_row({"cylinder_radius_sq", h.cylinder_radius_sq});
        table.add_row({"hyperplane_normal", to_json(h.hyperplane_normal)});
        table.add_row({"hyperplane_offset", h.hyperplane_offset});
        table.add_row({"canonical_distance", h.canonical_distance});
        table.add_row({"point_to_plane_distance", oracle});
        distance_ok = std::fabs(h.canonical_distance - oracle) <= cfg.tolerance;
    }
    for (auto const& note : r.notes)
        table.add_row({"note", note});
    if (r.degenerate)
        report.check("canonical_distance_matches_oracle", distance_ok);
    return report;
}

Report rotation_experiment(RotationConfig const& cfg)
{
    require_dim(cfg.d, 3);
    require_positive(cfg.translations, "translations");
    require_positive(cfg.points, "points");
    auto const m = static_cast<std::size_t>(cfg.d - 1);

    Report report;
    report.command = "rotation-check";
    auto& table = report.table("rotation", {"index", "abar_sq", "a_d", "max_plane_residual",
                                            "max_rotation_error", "orthogonality_defect",
                                            "determinant"});
    Rng rng(cfg.seed);
    double worst_plane = 0, worst_rot = 0;
    for (int i = 0; i < cfg.translations; ++i)
    {
        TranslationVector const a = draw_until(
            [&] {
                return TranslationVector(uniform_point(rng, m, cfg.range),
                                         rng.uniform(-cfg.range, cfg.range));
            },
            [](TranslationVector const& a) { return a.cylinder_radius_sq() > 0; });
        auto const region = region_report(a, cfg.d);
        auto const& h = *region.degenerate;
        auto const g = rotation_to_canonical(a, cfg.d);
        double const canonical = h.canonical_distance;

        double plane = 0, rot = 0;
        for (int k = 0; k < cfg.points; ++k)
        {
            Point const y = degenerate_region_point(a, unit_vector(rng, m));
            plane = std::max(plane, std::fabs(dot(h.hyperplane_normal, y) - h.hyperplane_offset));
            rot = std::max(rot, std::fabs(g.apply(y)[m] - canonical));

            // A generic point of H, off the degenerate set.
            Point z(a.ambient_dim());
            Point const zbar = uniform_point(rng, m, 2);
            for (std::size_t j = 0; j < m; ++j)
                z[j] = zbar[j];
            z[m] = 2 * h.cylinder_radius_sq - 2 * dot(a.a_bar, zbar);
            rot = std::max(rot, std::fabs(g.apply(z)[m] - canonical));
        }
        table.add_row({i, squared_norm(a.a_bar), a.a_d, plane, rot, g.orthogonality_defect(),
                       g.determinant()});
        worst_plane = std::max(worst_plane, plane);
        worst_rot = std::max(worst_rot, rot);
    }
    report.note("max_plane_residual", worst_plane);
    report.note("max_rotation_error", worst_rot);
    report.check("degenerate_points_on_plane", worst_plane <= cfg.plane_tol);
    report.check("rotation_flattens_plane", worst_rot <= cfg.rotation_tol);
    return report;
}

//---------------------------------------------------------------------------//
Report tube_experiment(TubeConfig const& cfg)
{
    require_positive(cfg.directions, "directions");
    if (cfg.kmax < cfg.kmin)
        throw InvalidArgument("kmax must be at least kmin");
    Point const center(cfg.center);
    PolarSurface surface = [&] {
        if (cfg.surface == "sphere")
            return sphere_around_origin(center, cfg.radius);
        if (cfg.surface == "ellipsoid")
            return axis_ellipsoid(center, Point(cfg.semi_axes));
        if (cfg.surface == "visible-sphere")
            return visible_sphere(center, cfg.radius, cfg.margin);
        throw InvalidArgument("unknown surface '" + cfg.surface + "'");
    }();

    Rng rng(cfg.seed);
    std::vector<Point> dirs;
    for (int i = 0; i < cfg.directions; ++i)
    {
        dirs.push_back(draw_until([&] { return unit_vector(rng, surface.dim()); },
                                  [&](Point const& u) { return surface.in_domain(u); }));
    }

    Report report;
    report.command = "tube-check";
    auto& table = report.table("tube", {"k", "delta", "sup_extent_over_delta", "max_cover_count"});
    double lo = INFINITY, hi = 0;
    for (int k = cfg.kmin; k <= cfg.kmax; ++k)
    {
        double const delta = std::ldexp(1.0, -k);
        double sup = 0;
        int cover = 0;
        for (auto const& e : dirs)
        {
            Tube const tube(e, delta);
            TubeSampleOptions opts;
            opts.resolution = cfg.resolution;
            auto const hits = tube_intersection(surface, tube, opts);
            if (!hits.empty())
            {
                auto const [mn, mx] = std::minmax_element(
                    hits.begin(), hits.end(),
                    [&](Point const& a, Point const& b) { return dot(a, e) < dot(b, e); });
                sup = std::max(sup, (dot(*mx, e) - dot(*mn, e)) / delta);
            }
            cover = std::max(cover, greedy_ball_cover(hits, tube));
        }
        table.add_row({k, delta, sup, cover});
        lo = std::min(lo, sup);
        hi = std::max(hi, sup);
    }
    double const ratio = lo > 0 ? hi / lo : INFINITY;
    report.note("surface", cfg.surface);
    report.note("r_min", surface.r_min());
    report.note("r_max", surface.r_max());
    report.note("max_over_min_ratio", ratio);
    report.check("extent_over_delta_bounded", ratio < cfg.ratio_tol);
    return report;
}

Report tangent_experiment(TangentConfig const& cfg)
{
    if (cfg.kmax - cfg.kmin < 1)
        throw InvalidArgument("need at least two scales");
    if (!(cfg.base > 1))
        throw InvalidArgument("base must exceed 1");
    Point const center(cfg.center);

    Report report;
    report.command = "tangent-check";
    auto& table = report.table("tangent", {"k", "delta", "extent", "chord_oracle", "cover_count"});
    std::vector<double> deltas, extents, covers;
    for (int k = cfg.kmin; k <= cfg.kmax; ++k)
    {
        double const delta = std::pow(cfg.base, -k);
        auto const cap = tangent_cap(center, cfg.radius, delta);
        auto const pts = tangent_cap_samples(center, cfg.radius, delta, cfg.cover_samples);
        int const cover = greedy_ball_cover(pts, Tube(cap.direction, delta));
        double const chord = 2 * std::sqrt(2 * cfg.radius * delta - delta * delta);
        table.add_row({k, delta, cap.extent, chord, cover});
        deltas.push_back(delta);
        extents.push_back(cap.extent);
        covers.push_back(cover);
    }
    double const slope = log_log_slope(deltas, extents);
    double const cover_slope = log_log_slope(deltas, covers);
    report.note("extent_slope", slope);
    report.note("cover_slope", cover_slope);
    report.check("extent_slope_one_half", std::fabs(slope - 0.5) <= cfg.slope_tol);
    report.check("cover_slope_minus_one_half", std::fabs(cover_slope + 0.5) <= cfg.cover_slope_tol);
    return report;
}

//---------------------------------------------------------------------------//
Report fractal_cover_experiment(FractalCoverConfig const& cfg)
{
    bool const lifted = cfg.mode == "paraboloid";
    if (!lifted && cfg.mode != "euclidean")
        throw InvalidArgument("mode must be euclidean or paraboloid");
    if (cfg.qs.size() < 2)
        throw InvalidArgument("need at least two q values");

    Report report;
    report.command = "fractal-cover";
    auto& table = report.table("cover", {"q", "s", "dim", "count", "total_length", "lattice_count",
                                         "lattice_length", "half_width", "count_bound",
                                         "soundness_misses"});
    std::vector<double> qs, measure, merged;
    bool bounds_ok = true;
    int misses = 0;
    for (auto q : cfg.qs)
    {
        CellSet const cells(1, q, cfg.s, cfg.dim);
        auto const cover = lifted ? dot_cover_paraboloid(cells) : dot_cover_euclidean(cells);
        auto const bound = lifted ? paraboloid_count_bound(cfg.dim, q)
                                  : euclidean_count_bound(cfg.dim, q);
        bounds_ok = bounds_ok && cover.lattice_count <= bound && cover.count <= bound;
        Json miss_cell = "skipped";
        if (cfg.seed && cfg.soundness > 0)
        {
            auto const r = check_cover_soundness(cells, cover, lifted, cfg.soundness, *cfg.seed + q);
            misses += r.misses;
            miss_cell = r.misses;
        }
        table.add_row({q, cfg.s, cfg.dim, cover.count, cover.total_length, cover.lattice_count,
                       cover.lattice_length, cover.half_width, bound, miss_cell});
        qs.push_back(static_cast<double>(q));
        measure.push_back(cover.lattice_length);
        merged.push_back(cover.total_length);
    }
    double const expected = (lifted ? 4.0 : 2.0) - 1 / cfg.s;
    double const measure_slope = log_log_slope(qs, measure);
    report.note("expected_slope", expected);
    report.note("cover_measure_slope", measure_slope);
    report.note("merged_length_slope", log_log_slope(qs, merged));
    report.check("cover_measure_slope_within_tolerance",
                 std::fabs(measure_slope - expected) <= cfg.slope_tol);
    report.check("count_bound_holds", bounds_ok);
    if (cfg.seed && cfg.soundness > 0)
    {
        report.note("soundness_samples_per_q", cfg.soundness);
        report.check("soundness", misses == 0);
    }
    return report;
}

Report boxdim_experiment(BoxDimConfig const& cfg)
{
    Report report;
    report.command = "boxdim";
    auto& table = report.table("boxes", {"j", "eps", "boxes_1d", "log2_boxes"});

    std::vector<Interval> factor;
    std::vector<double> scales;
    double target;
    double estimate;
    if (cfg.cube)
    {
        require_positive(cfg.cube_levels, "cube levels");
        factor = {{0.0, 1.0}};
        for (int j = 0; j <= cfg.cube_levels; ++j)
            scales.push_back(std::ldexp(1.0, -j));
        target = cfg.target.value_or(static_cast<double>(cfg.dim));
        estimate = box_dimension_of(factor, cfg.dim, scales);
    }
    else
    {
        LatticeApproxParams const params{cfg.s, cfg.q, cfg.dim, cfg.depth, cfg.q_sequence};
        factor = lattice_factor(params);
        scales = resolved_dyadic_scales(params);
        target = cfg.target.value_or(cfg.s * static_cast<double>(cfg.dim));
        estimate = box_dimension_estimate(params, scales);
        Json seq = Json::array();
        for (auto q : q_sequence(params))
            seq.push_back(q);
        report.note("q_sequence", seq);
        report.note("factor_intervals", factor.size());
    }
    for (std::size_t j = 0; j < scales.size(); ++j)
    {
        auto const n = box_count_1d(factor, scales[j]);
        table.add_row({j, scales[j], n,
                       static_cast<double>(cfg.dim) * std::log2(static_cast<double>(n))});
    }
    report.note("estimate", estimate);
    report.note("target", target);
    report.note("tolerance", cfg.tolerance);
    report.check("estimate_near_target", std::fabs(estimate - target) <= cfg.tolerance);
    return report;
}

Report parabola_experiment(ParabolaConfig const& cfg)
{
    Report report;
    report.command = "parabola-check";
    auto& table = report.table("examples", {"x", "y", "residual"});
    for (auto [x, y] : std::vector<std::pair<double, double>>{{1, 1}, {0, 2.5}, {0.5, -3}, {-1.25, 0.8}})
        table.add_row({x, y, parabola_identity_check(x, y)});

    Rng rng(cfg.seed);
    double worst = 0;
    for (int k = 0; k < cfg.samples; ++k)
    {
        double const x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
        worst = std::max(worst, std::fabs(parabola_identity_check(x, y)));
    }
    int nonzero = 0;
    for (int k = 0; k < cfg.rational_cases; ++k)
    {
        if (parabola_identity_check(small_rational(rng), small_rational(rng)) != 0)
            ++nonzero;
    }
    report.note("samples", cfg.samples);
    report.note("max_residual", worst);
    report.check("residual_within_tolerance", worst < cfg.tolerance);
    report.check("rational_residual_exact", nonzero == 0);
    return report;
}

//---------------------------------------------------------------------------//
Report ff_scan_experiment(FfScanConfig const& cfg)
{
    if (cfg.primes.empty())
        throw InvalidArgument("need at least one prime");
    require_positive(cfg.trials, "trials");

    Report report;
    report.command = "ff-scan";
    auto& samples = report.table("samples", {"p", "d", "size", "trial", "pi_size"});
    auto& stats = report.table("stats", {"p", "d", "size", "normalized", "min_ratio",
                                         "mean_ratio", "max_ratio"});
    int skipped = 0;
    for (auto p : cfg.primes)
    {
        PrimeField const field(p);
        std::uint64_t population = 1;
        for (std::size_t i = 0; i + 1 < cfg.d; ++i)
            population *= p;

        std::set<std::uint64_t> sizes;
        if (cfg.sizes.empty())
        {
            auto const mid = static_cast<std::uint64_t>(
                std::ceil(2 * std::pow(static_cast<double>(p), 1.25)));
            sizes = {1, std::min(mid, population), population};
        }
        for (auto s : cfg.sizes)
        {
            if (s <= population)
                sizes.insert(s);
            else
                ++skipped;
        }
        std::vector<std::uint64_t> const list(sizes.begin(), sizes.end());
        bool const random = std::any_of(list.begin(), list.end(),
                                        [&](auto s) { return s < population; });
        if (random && !cfg.seed)
            throw InvalidArgument("--seed is required when sampling proper subsets");

        auto const scan
            = threshold_scan(field, cfg.d, list, cfg.trials, cfg.seed.value_or(0) + p, cfg.budget);
        for (auto const& s : scan.samples)
            samples.add_row({p, cfg.d, s.size, s.trial, s.pi_size});
        for (auto const& r : scan.rows)
        {
            stats.add_row({p, cfg.d, r.size, r.normalized, r.min_ratio, r.mean_ratio,
                           r.max_ratio});
        }
    }
    report.note("observational", true);
    if (skipped)
        report.note("sizes_skipped_over_population", skipped);
    return report;
}

Report ff_isotropic_experiment(FfIsotropicConfig const& cfg)
{
    Report report;
    report.command = "ff-isotropic";
    auto& table = report.table("isotropic", {"p", "d", "p_mod_4", "count", "example"});
    bool ok = true;
    for (auto p : cfg.primes)
    {
        PrimeField const field(p);
        auto const iso = isotropic_vectors(field, cfg.d, cfg.budget);
        Json example = Json::array();
        if (!iso.empty())
        {
            for (auto c : iso.point(0))
                example.push_back(c);
        }
        table.add_row({p, cfg.d, p % 4, iso.size(), example});
        if (cfg.d == 2 && field.admissible())
            ok = ok && iso.empty();
    }
    if (cfg.d == 2)
        report.check("none_in_plane_for_p_3_mod_4", ok);
    return report;
}

//---------------------------------------------------------------------------//
Report pushforward_experiment(PushforwardConfig const& cfg)
{
    require_positive(cfg.measures, "measures");
    require_positive(cfg.atoms, "atoms");
    if (cfg.t_values < 2)
        throw InvalidArgument("need at least two t values");
    if (cfg.dim < 1)
        throw InvalidArgument("dimension must be positive");

    Report report;
    report.command = "pushforward-check";
    auto& table = report.table("residuals", {"measure", "t", "residual"});
    Rng rng(cfg.seed);
    double worst = 0, worst_zero = 0;
    for (int m = 0; m < cfg.measures; ++m)
    {
        std::vector<Point> pts;
        std::vector<double> weights;
        for (int i = 0; i < cfg.atoms; ++i)
        {
            pts.push_back(uniform_point(rng, cfg.dim, 1));
            weights.push_back(rng.uniform(0.1, 1));
        }
        double const total = exact_sum(weights);
        for (auto& w : weights)
            w /= total;
        AtomicMeasure const mu(pts, weights);
        Point const y = uniform_point(rng, cfg.dim, 2);

        worst_zero = std::max(worst_zero, pushforward_identity_residual(mu, y, 0));
        for (int k = 0; k < cfg.t_values; ++k)
        {
            double const t = -cfg.t_max + 2 * cfg.t_max * k / (cfg.t_values - 1);
            double const r = pushforward_identity_residual(mu, y, t);
            table.add_row({m, t, r});
            worst = std::max(worst, r);
        }
    }
    report.note("max_residual", worst);
    report.note("t0_residual", worst_zero);
    report.check("residual_within_tolerance", worst < cfg.tolerance);
    report.check("t0_residual_exact", worst_zero == 0);
    return report;
}

}  // namespace paradot
