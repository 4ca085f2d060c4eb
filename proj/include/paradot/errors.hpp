#pragma once

#include <stdexcept>
#include <string>

namespace paradot
{
//! Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

#define PARADOT_DEFINE_ERROR(NAME)          \
    class NAME : public Error               \
    {                                       \
      public:                               \
        using Error::Error;                 \
    }

//! Point lies on |x|^2 + a_d = 0 where the transformation map has a pole.
PARADOT_DEFINE_ERROR(SingularInput);
PARADOT_DEFINE_ERROR(DimensionMismatch);
PARADOT_DEFINE_ERROR(NonFiniteResult);
//! Rotation requested for a translation with |a_bar|^2 + a_d <= 0.
PARADOT_DEFINE_ERROR(DegenerateAbsent);
PARADOT_DEFINE_ERROR(EmptyDomain);
PARADOT_DEFINE_ERROR(OriginInside);
PARADOT_DEFINE_ERROR(ScaleOverflow);
PARADOT_DEFINE_ERROR(InsufficientScales);
PARADOT_DEFINE_ERROR(SizeOverflow);
PARADOT_DEFINE_ERROR(InvalidArgument);

#undef PARADOT_DEFINE_ERROR

}  // namespace paradot
