#include "convsec/error.hpp"

namespace convsec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::InadmissibleNormal: return "InadmissibleNormal";
    case ErrorCode::UnboundedSection: return "UnboundedSection";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::DegeneratePointSet: return "DegeneratePointSet";
    case ErrorCode::ConeSectionUnbounded: return "ConeSectionUnbounded";
    case ErrorCode::DegenerateCut: return "DegenerateCut";
    case ErrorCode::OriginInsideBody: return "OriginInsideBody";
    case ErrorCode::NotGraphLike: return "NotGraphLike";
    case ErrorCode::NotApexCentered: return "NotApexCentered";
    case ErrorCode::EmptyShellIntersection: return "EmptyShellIntersection";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace convsec
