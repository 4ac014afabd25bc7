#pragma once

#include <stdexcept>
#include <string>

namespace updraw {

/// Base of every error raised by the library. Each failure mode named in the
/// public contracts has its own subclass so callers can catch selectively.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define UPDRAW_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

UPDRAW_DEFINE_ERROR(CycleDetected);
UPDRAW_DEFINE_ERROR(InvalidParams);
UPDRAW_DEFINE_ERROR(DegenerateSegment);
UPDRAW_DEFINE_ERROR(MissingVertexPoint);
UPDRAW_DEFINE_ERROR(EmptyDrawing);
UPDRAW_DEFINE_ERROR(MissingAssignment);
UPDRAW_DEFINE_ERROR(SpanViolation);
UPDRAW_DEFINE_ERROR(InvalidLayout);
UPDRAW_DEFINE_ERROR(NotOneQueue);
UPDRAW_DEFINE_ERROR(InvalidDrawing);
UPDRAW_DEFINE_ERROR(NotStrongStar);
UPDRAW_DEFINE_ERROR(NotATree);
UPDRAW_DEFINE_ERROR(NotACaterpillar);
UPDRAW_DEFINE_ERROR(NotTopological);
UPDRAW_DEFINE_ERROR(NotUpwardPlanar);
UPDRAW_DEFINE_ERROR(BudgetExceeded);

#undef UPDRAW_DEFINE_ERROR

} // namespace updraw
