#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace paradot
{
//! Prime modulus; construction rejects composites.
class PrimeField
{
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    //! p = 3 (mod 4), where -1 is a non-residue.
    bool admissible() const { return p_ % 4 == 3; }

  private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

//! Refusal limits for brute-force enumeration.
struct FieldBudget
{
    std::uint64_t max_points = std::uint64_t{1} << 24;
    std::uint64_t max_pairs = std::uint64_t{1} << 40;
};

//---------------------------------------------------------------------------//
/*!
 * Distinct points of F_p^dim, stored flat in insertion order.
 */
class FpPointSet
{
  public:
    FpPointSet(PrimeField field, std::size_t dim);

    //! Append a point; throws InvalidArgument for out-of-range or duplicate input.
    void insert(std::span<std::uint64_t const> point);
    void reserve(std::size_t count);

    PrimeField const& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return coords_.size() / dim_; }
    bool empty() const { return coords_.empty(); }

    std::span<std::uint64_t const> point(std::size_t i) const
    {
        return {coords_.data() + i * dim_, dim_};
    }

    bool contains(std::span<std::uint64_t const> point) const;

  private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<std::uint64_t> coords_;
    std::unordered_set<std::uint64_t> keys_;

    std::uint64_t encode(std::span<std::uint64_t const> point) const;
};

//! Point i of P_d in lexicographic order of x_bar: (x_bar, |x_bar|^2 mod p).
std::vector<std::uint64_t> paraboloid_point(PrimeField const& field, std::size_t d,
                                            std::uint64_t index);

//! All p^{d-1} points of the paraboloid P_d.
FpPointSet paraboloid_points(PrimeField const& field, std::size_t d,
                             FieldBudget const& budget = {});

/*!
 * Dot-product set {x·y mod p : x, y in E} as sorted residues.
 *
 * Unordered pairs (including x = y) are enumerated in row blocks, optionally
 * across threads, and stop early once every residue appears.
 */
std::vector<std::uint64_t> dot_product_set(FpPointSet const& points, unsigned threads = 1,
                                           FieldBudget const& budget = {});

//---------------------------------------------------------------------------//
struct ScanSample
{
    std::uint64_t size = 0;
    int trial = 0;
    std::uint64_t pi_size = 0;
};

struct ScanRow
{
    std::uint64_t size = 0;
    //! size / p^{d/2 - 1/(2d)}
    double normalized = 0;
    double min_ratio = 0;
    double mean_ratio = 0;
    double max_ratio = 0;
};

struct ScanResult
{
    std::vector<ScanRow> rows;
    std::vector<ScanSample> samples;
};

/*!
 * Sample uniform subsets of P_d without replacement and record |Pi(E)| / p.
 *
 * Exploratory statistics; a single seeded stream drives every trial so the
 * table is reproducible.
 */
ScanResult threshold_scan(PrimeField const& field, std::size_t d,
                          std::span<std::uint64_t const> sizes, int trials,
                          std::uint64_t seed, FieldBudget const& budget = {});

//! Nonzero v in F_p^d with v·v = 0.
FpPointSet isotropic_vectors(PrimeField const& field, std::size_t d,
                             FieldBudget const& budget = {});

}  // namespace paradot
