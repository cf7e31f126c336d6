#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace convsec {

enum class ErrorCode {
  InvalidArgument,
  OriginNotInterior,
  NotInterior,
  NotOnBoundary,
  InadmissibleNormal,
  UnboundedSection,
  LevelOutOfRange,
  DegenerateSection,
  DegeneratePointSet,
  ConeSectionUnbounded,
  DegenerateCut,
  OriginInsideBody,
  NotGraphLike,
  NotApexCentered,
  EmptyShellIntersection,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable and is what the
/// CLI reports in per-row diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace convsec
