#ifndef CONFSPACE_ERRORS_HPP
#define CONFSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confspace {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

#define CONFSPACE_DEFINE_ERROR(Name)          \
  class Name : public Error                   \
  {                                           \
  public:                                     \
    using Error::Error;                       \
  }

// permgroup
CONFSPACE_DEFINE_ERROR(InvalidPermutation);
CONFSPACE_DEFINE_ERROR(ArityMismatch);
CONFSPACE_DEFINE_ERROR(ClosureExceedsCap);

// metric
CONFSPACE_DEFINE_ERROR(ShapeMismatch);
CONFSPACE_DEFINE_ERROR(TrivialGroup);
CONFSPACE_DEFINE_ERROR(NonFreePoint);

// covering
CONFSPACE_DEFINE_ERROR(BasepointNotInFiber);
CONFSPACE_DEFINE_ERROR(NonFreeSample);
CONFSPACE_DEFINE_ERROR(EndpointMismatch);
CONFSPACE_DEFINE_ERROR(OpenLoop);

/// A lifted step is not shorter than the evenly covered radius at its start,
/// so the next sheet cannot be certified. Resample the path and retry.
class AmbiguousLift : public Error
{
public:
  AmbiguousLift(const std::string& what, std::size_t step, double step_length, double radius)
    : Error(what), step_(step), step_length_(step_length), radius_(radius)
  {}

  std::size_t step() const { return step_; }
  double step_length() const { return step_length_; }
  double radius() const { return radius_; }

  /// Number of equal pieces the offending step should be cut into.
  std::size_t suggested_subdivision() const;

private:
  std::size_t step_;
  double step_length_;
  double radius_;
};

// homotopy
CONFSPACE_DEFINE_ERROR(BadIndices);
CONFSPACE_DEFINE_ERROR(DimensionTooLow);
CONFSPACE_DEFINE_ERROR(DimensionMismatch);
CONFSPACE_DEFINE_ERROR(DegenerateTriangle);
CONFSPACE_DEFINE_ERROR(PerturbationFailed);
CONFSPACE_DEFINE_ERROR(SampleOnCollisionSet);
CONFSPACE_DEFINE_ERROR(NotAClosedLoop);

// vieta
CONFSPACE_DEFINE_ERROR(NoConvergence);

// io
CONFSPACE_DEFINE_ERROR(ParseError);

#undef CONFSPACE_DEFINE_ERROR

} // namespace confspace

#endif // CONFSPACE_ERRORS_HPP
