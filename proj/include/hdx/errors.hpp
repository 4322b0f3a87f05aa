#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdx {

enum class ErrorCode {
  MixedFacetSizes,
  EmptyInput,
  InvalidFacet,
  FaceNotPresent,
  VertexNotPresent,
  DimensionOutOfRange,
  WrongDimension,
  SearchSpaceTooLarge,
  TooLarge,
  InvalidSubset,
  NotRegular,
  Disconnected,
  DisconnectedLink,
  BadParams,
  UnsupportedField,
  NonSymmetricGenerators,
  GroupTooLarge,
  UnknownFixture,
  ConfigError,
  ParseError,
  IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hdx
