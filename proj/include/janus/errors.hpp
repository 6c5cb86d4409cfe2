#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace janus {

/// Base class for every computational failure raised by the library.
/// kind() is the stable error name reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string_view kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  std::string_view kind() const noexcept { return kind_; }

 private:
  std::string_view kind_;
};

#define JANUS_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

JANUS_DEFINE_ERROR(DegenerateState)
JANUS_DEFINE_ERROR(NoConvergence)
JANUS_DEFINE_ERROR(OrderTooLarge)
JANUS_DEFINE_ERROR(VacuumState)
JANUS_DEFINE_ERROR(CutoffTooSmall)
JANUS_DEFINE_ERROR(SingularSigma)
JANUS_DEFINE_ERROR(GridTooCoarse)
JANUS_DEFINE_ERROR(StepTooSmall)
JANUS_DEFINE_ERROR(BranchError)
JANUS_DEFINE_ERROR(ConsistencyError)

#undef JANUS_DEFINE_ERROR

}  // namespace janus
