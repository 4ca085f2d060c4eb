#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paradot/finite_field.hpp"
#include "paradot/report.hpp"

namespace paradot
{
//---------------------------------------------------------------------------//
// Paraboloid lift geometry
//---------------------------------------------------------------------------//
struct IdentityConfig
{
    std::vector<int> dims{3};
    //! Fixed translation (a_bar, a_d); random per sample when absent.
    std::optional<std::vector<double>> a;
    int samples = 1000;
    int rational_cases = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    double min_weight = 1e-3;
    double range = 2;
};
Report identity_experiment(IdentityConfig const& cfg);

struct JacobianConfig
{
    std::vector<int> dims{3};
    int samples = 1000;
    int sphere_points = 100;
    std::uint64_t seed = 0;
    double step = 1e-5;
    double rel_tol = 1e-5;
    double abs_tol = 1e-9;
    double min_weight = 0.5;
    double range = 1.5;
};
Report jacobian_experiment(JacobianConfig const& cfg);

struct RegionConfig
{
    std::vector<double> a{1, 0, 0};
    int d = 3;
    double tolerance = 1e-12;
};
Report region_experiment(RegionConfig const& cfg);

struct RotationConfig
{
    int d = 3;
    int translations = 100;
    int points = 20;
    std::uint64_t seed = 0;
    double plane_tol = 1e-12;
    double rotation_tol = 1e-10;
    double range = 1;
};
Report rotation_experiment(RotationConfig const& cfg);

//---------------------------------------------------------------------------//
// Tubes through the origin
//---------------------------------------------------------------------------//
struct TubeConfig
{
    //! sphere, ellipsoid or visible-sphere
    std::string surface = "sphere";
    std::vector<double> center{0.3, -0.2};
    double radius = 1;
    std::vector<double> semi_axes{1, 0.6};
    double margin = 0.05;
    int kmin = 4;
    int kmax = 14;
    int directions = 16;
    int resolution = 4096;
    std::uint64_t seed = 0;
    double ratio_tol = 4;
};
Report tube_experiment(TubeConfig const& cfg);

struct TangentConfig
{
    std::vector<double> center{3, 0};
    double radius = 1;
    double base = 2;
    int kmin = 8;
    int kmax = 13;
    int cover_samples = 20000;
    double slope_tol = 0.05;
    double cover_slope_tol = 0.1;
};
Report tangent_experiment(TangentConfig const& cfg);

//---------------------------------------------------------------------------//
// Lattice-approximation sets
//---------------------------------------------------------------------------//
struct FractalCoverConfig
{
    //! euclidean or paraboloid
    std::string mode = "euclidean";
    double s = 0.4;
    std::vector<std::uint64_t> qs{3, 10, 31, 100};
    std::size_t dim = 2;
    //! Soundness samples per q; skipped when no seed is given.
    int soundness = 10000;
    std::optional<std::uint64_t> seed;
    double slope_tol = 0.1;
};
Report fractal_cover_experiment(FractalCoverConfig const& cfg);

struct BoxDimConfig
{
    double s = 1.0 / 3.0;
    std::uint64_t q = 2;
    std::size_t dim = 2;
    int depth = 2;
    std::optional<std::vector<std::uint64_t>> q_sequence;
    //! Estimate the full cube [0,1]^dim instead of the lattice set.
    bool cube = false;
    int cube_levels = 10;
    std::optional<double> target;
    double tolerance = 0.1;
};
Report boxdim_experiment(BoxDimConfig const& cfg);

struct ParabolaConfig
{
    int samples = 10000;
    int rational_cases = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-12;
};
Report parabola_experiment(ParabolaConfig const& cfg);

//---------------------------------------------------------------------------//
// Finite fields
//---------------------------------------------------------------------------//
struct FfScanConfig
{
    std::vector<std::uint64_t> primes{3, 7, 11, 19};
    std::size_t d = 3;
    //! Subset sizes; default per prime {1, ceil(2 p^{5/4}), p^{d-1}}.
    std::vector<std::uint64_t> sizes;
    int trials = 20;
    std::optional<std::uint64_t> seed;
    FieldBudget budget;
};
Report ff_scan_experiment(FfScanConfig const& cfg);

struct FfIsotropicConfig
{
    std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 17, 19, 23};
    std::size_t d = 2;
    FieldBudget budget;
};
Report ff_isotropic_experiment(FfIsotropicConfig const& cfg);

//---------------------------------------------------------------------------//
// Push-forward measures
//---------------------------------------------------------------------------//
struct PushforwardConfig
{
    int measures = 1;
    int atoms = 50;
    std::size_t dim = 3;
    int t_values = 100;
    double t_max = 10;
    std::uint64_t seed = 0;
    double tolerance = 1e-10;
};
Report pushforward_experiment(PushforwardConfig const& cfg);

}  // namespace paradot
