#include "tabdyn/error.hpp"

namespace tabdyn {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case Errc::NonPositiveRow: return "NonPositiveRow";
    case Errc::InvalidTableau: return "InvalidTableau";
    case Errc::NotACover: return "NotACover";
    case Errc::DuplicateEntry: return "DuplicateEntry";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::EmptyTableau: return "EmptyTableau";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::DomainError: return "DomainError";
    case Errc::Exhausted: return "Exhausted";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::EmptyTrace: return "EmptyTrace";
    case Errc::EmptySample: return "EmptySample";
    case Errc::IoError: return "IoError";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace tabdyn
