#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "paradot/errors.hpp"

namespace paradot
{
using Rational = boost::multiprecision::cpp_rational;

//---------------------------------------------------------------------------//
/*!
 * Fixed-length tuple of coordinates.
 *
 * The scalar is either \c double or \c Rational; the exact variant is used to
 * certify identities that should vanish identically.
 */
template<class T>
class BasicPoint
{
  public:
    using value_type = T;

    BasicPoint() = default;
    explicit BasicPoint(std::size_t dim) : coords_(dim, T(0)) {}
    BasicPoint(std::initializer_list<T> init) : coords_(init) {}
    explicit BasicPoint(std::vector<T> coords) : coords_(std::move(coords)) {}

    std::size_t dim() const { return coords_.size(); }

    T& operator[](std::size_t i) { return coords_[i]; }
    T const& operator[](std::size_t i) const { return coords_[i]; }

    auto begin() { return coords_.begin(); }
    auto end() { return coords_.end(); }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    std::span<T const> coords() const { return coords_; }

    bool operator==(BasicPoint const&) const = default;

    BasicPoint& operator+=(BasicPoint const& other)
    {
        require_same_dim(other);
        for (std::size_t i = 0; i < dim(); ++i)
            coords_[i] += other.coords_[i];
        return *this;
    }

    BasicPoint& operator-=(BasicPoint const& other)
    {
        require_same_dim(other);
        for (std::size_t i = 0; i < dim(); ++i)
            coords_[i] -= other.coords_[i];
        return *this;
    }

    BasicPoint& operator*=(T const& factor)
    {
        for (auto& c : coords_)
            c *= factor;
        return *this;
    }

    void require_same_dim(BasicPoint const& other) const
    {
        if (other.dim() != dim())
        {
            throw DimensionMismatch("point dimensions differ: "
                                    + std::to_string(dim()) + " vs "
                                    + std::to_string(other.dim()));
        }
    }

  private:
    std::vector<T> coords_;
};

using Point = BasicPoint<double>;
using RationalPoint = BasicPoint<Rational>;

template<class T>
BasicPoint<T> operator+(BasicPoint<T> lhs, BasicPoint<T> const& rhs)
{
    lhs += rhs;
    return lhs;
}

template<class T>
BasicPoint<T> operator-(BasicPoint<T> lhs, BasicPoint<T> const& rhs)
{
    lhs -= rhs;
    return lhs;
}

template<class T>
BasicPoint<T> operator*(T const& factor, BasicPoint<T> p)
{
    p *= factor;
    return p;
}

template<class T>
T dot(BasicPoint<T> const& a, BasicPoint<T> const& b)
{
    a.require_same_dim(b);
    T result(0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        result += a[i] * b[i];
    return result;
}

template<class T>
T squared_norm(BasicPoint<T> const& a)
{
    return dot(a, a);
}

//! Convert an exact point to floating point.
inline Point to_double(RationalPoint const& p)
{
    Point out(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        out[i] = static_cast<double>(p[i]);
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Translation a = (a_bar, a_d) of the standard paraboloid in R^d.
 */
template<class T>
struct BasicTranslationVector
{
    BasicPoint<T> a_bar;
    T a_d{0};

    BasicTranslationVector() = default;
    BasicTranslationVector(BasicPoint<T> bar, T last)
        : a_bar(std::move(bar)), a_d(std::move(last))
    {
        if (a_bar.dim() < 1)
            throw DimensionMismatch("translation needs ambient dimension >= 2");
    }

    //! Ambient dimension d.
    std::size_t ambient_dim() const { return a_bar.dim() + 1; }

    //! |a_bar|^2 + a_d: squared radius of the degenerate cylinder.
    T cylinder_radius_sq() const { return squared_norm(a_bar) + a_d; }
};

using TranslationVector = BasicTranslationVector<double>;
using RationalTranslationVector = BasicTranslationVector<Rational>;

}  // namespace paradot
