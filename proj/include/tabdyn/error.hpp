#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tabdyn {

enum class Errc {
  NotWeaklyDecreasing,
  NonPositiveRow,
  InvalidTableau,
  NotACover,
  DuplicateEntry,
  EmptyInput,
  EmptyTableau,
  NTooLarge,
  DomainError,
  Exhausted,
  WindowTooSmall,
  EmptyTrace,
  EmptySample,
  IoError,
  UnknownKey,
  MalformedLine,
  Usage,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception type for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tabdyn
