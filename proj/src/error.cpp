#include "cubica/error.hpp"

namespace cubica {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotAPrimePower: return "NotAPrimePower";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::BadModulus: return "BadModulus";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::CoincidentPlanes: return "CoincidentPlanes";
    case Errc::PointOnCubic: return "PointOnCubic";
    case Errc::PolarityUndefined: return "PolarityUndefined";
    case Errc::ActionEscape: return "ActionEscape";
    case Errc::RepresentativeMismatch: return "RepresentativeMismatch";
    case Errc::InvalidSelector: return "InvalidSelector";
    case Errc::NonUniformColumns: return "NonUniformColumns";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace cubica
